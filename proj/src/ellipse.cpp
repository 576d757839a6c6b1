#include "trochoid/ellipse.hpp"

#include <cmath>
#include <stdexcept>

namespace trochoid {

EllipseSpec EllipseSpec::from_axes(double semi_major, double semi_minor) {
  if (!(semi_minor > 0.0 && semi_major >= semi_minor && std::isfinite(semi_major))) {
    throw std::invalid_argument("ellipse needs semi_major >= semi_minor > 0");
  }
  const double ratio = semi_minor / semi_major;
  return {semi_major, semi_minor, std::sqrt((1.0 - ratio) * (1.0 + ratio))};
}

EllipseSpec EllipseSpec::from_eccentricity(double semi_major, double eccentricity) {
  if (!(eccentricity >= 0.0 && eccentricity < 1.0)) throw std::invalid_argument("eccentricity must lie in [0, 1)");
  if (!(semi_major > 0.0)) throw std::invalid_argument("semi_major must be positive");
  return {semi_major, semi_major * std::sqrt((1.0 - eccentricity) * (1.0 + eccentricity)), eccentricity};
}

EllipseOutcome ellipse_from_rig(const Rig& rig) {
  validate(rig);
  if (rig.polarization != Polarization::Co) throw std::invalid_argument("ellipses need a co-polarized rig");
  if (rig.small_omega.value() != Rational(2) * rig.big_omega.value()) {
    throw std::invalid_argument("ellipses need omega_pen = 2 * omega_table");
  }
  const double a = rig.a.to_double();
  const double b = rig.b.to_double();
  if (rig.a.is_zero()) return DegenerateCircle{b};
  if (rig.b.is_zero()) return DegenerateCircle{a};
  if (rig.a == rig.b) return DegenerateLineSegment{a + b};
  const double major = a + b;
  const double minor = std::abs(a - b);
  // 1 - B^2/A^2 = 4ab / (a+b)^2
  return EllipseSpec{major, minor, 2.0 * std::sqrt(a * b) / major};
}

double ellipse_polar_focal(const EllipseSpec& spec, double angle) {
  const double e = spec.eccentricity;
  return spec.semi_major * (1.0 - e * e) / (1.0 + e * std::cos(angle));
}

double ellipse_polar_centered(const EllipseSpec& spec, double angle) {
  const double e2 = spec.eccentricity * spec.eccentricity;
  const double c = std::cos(angle);
  return spec.semi_major * std::sqrt((1.0 - e2) / (1.0 - e2 * c * c));
}

double on_ellipse_residual(Point2 p, const EllipseSpec& spec) {
  const double u = p.x / spec.semi_major;
  const double v = p.y / spec.semi_minor;
  return std::abs(u * u + v * v - 1.0);
}

}  // namespace trochoid
