#include "trochoid/kinematics.hpp"

#include <cmath>

namespace trochoid {

Frequency::Frequency(Rational value) : value_(value) {
  if (value_.sign() <= 0) throw InvalidRig("frequency must be positive, got " + value_.to_string());
}

Frequency Frequency::parse(std::string_view text) { return Frequency(Rational::parse_fraction(text)); }

double distance(Point2 lhs, Point2 rhs) { return std::hypot(lhs.x - rhs.x, lhs.y - rhs.y); }

void validate(const Rig& rig) {
  if (rig.a.sign() < 0 || rig.b.sign() < 0) throw InvalidRig("a and b must be non-negative");
  if (rig.a.is_zero() && rig.b.is_zero()) throw InvalidRig("a and b cannot both be zero");
  for (double phase : {rig.phase_table, rig.phase_pen}) {
    if (!(phase >= 0.0 && phase < kTwoPi)) throw InvalidRig("phase must lie in [0, 2pi)");
  }
}

Point2 position_from_angles(double a, double b, int sign, double theta, double phi) {
  const double pen = theta + sign * phi;
  return {a * std::cos(theta) + b * std::cos(pen), a * std::sin(theta) + b * std::sin(pen)};
}

double table_angle(const Rig& rig, double t) { return rig.big_omega.to_double() * t + rig.phase_table; }

namespace {

double pen_angle(const Rig& rig, double t) { return rig.small_omega.to_double() * t + rig.phase_pen; }

}  // namespace

Point2 pen_position_turntable(const Rig& rig, double t) {
  return position_from_angles(rig.a.to_double(), rig.b.to_double(), polarization_sign(rig.polarization),
                              table_angle(rig, t), pen_angle(rig, t));
}

Point2 pen_position_lab(const Rig& rig, double t) {
  const double spin = polarization_sign(rig.polarization) * pen_angle(rig, t);
  const double b = rig.b.to_double();
  return {rig.a.to_double() + b * std::cos(spin), b * std::sin(spin)};
}

Point2 pen_velocity_turntable(const Rig& rig, double t) {
  const int s = polarization_sign(rig.polarization);
  const double big = rig.big_omega.to_double();
  const double combined = big + s * rig.small_omega.to_double();
  const double theta = table_angle(rig, t);
  const double pen = theta + s * pen_angle(rig, t);
  const double a = rig.a.to_double();
  const double b = rig.b.to_double();
  return {-a * big * std::sin(theta) - b * combined * std::sin(pen),
          a * big * std::cos(theta) + b * combined * std::cos(pen)};
}

Point2 lab_to_table(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {p.x * c - p.y * s, p.x * s + p.y * c};
}

Point2 table_to_lab(Point2 p, double angle) { return lab_to_table(p, -angle); }

Rational rolling_residual(const Rig& rig) {
  const Rational& big = rig.big_omega.value();
  const Rational& small = rig.small_omega.value();
  if (rig.polarization == Polarization::Anti) return (rig.a - rig.b) * big - rig.b * small;
  return (rig.a + rig.b) * big - rig.b * small;
}

bool is_pure_rolling(const Rig& rig) { return rolling_residual(rig).is_zero(); }

Rig design_epicycloid(const Rational& a, std::int64_t n_e, const Frequency& omega) {
  if (n_e < 1) throw InvalidRig("epicycloid cusp count must be at least 1");
  if (a.sign() <= 0) throw InvalidRig("epicycloid design needs a > 0");
  Rig rig;
  rig.a = a;
  rig.b = a / Rational(n_e + 1);
  rig.small_omega = omega;
  rig.big_omega = Frequency(omega.value() / Rational(n_e));
  rig.polarization = Polarization::Anti;
  return rig;
}

Rig design_hypocycloid(const Rational& a, std::int64_t n_h, const Frequency& omega) {
  // n_h = 1 would need b = a/0.
  if (n_h < 2) throw InvalidRig("hypocycloid cusp count must be at least 2");
  if (a.sign() <= 0) throw InvalidRig("hypocycloid design needs a > 0");
  Rig rig;
  rig.a = a;
  rig.b = a / Rational(n_h - 1);
  rig.small_omega = omega;
  rig.big_omega = Frequency(omega.value() / Rational(n_h));
  rig.polarization = Polarization::Co;
  return rig;
}

Rational closure_turns(const Rig& rig) {
  const Rational& big = rig.big_omega.value();
  const Rational combined =
      abs(big + Rational(polarization_sign(rig.polarization)) * rig.small_omega.value());
  return Rational(1) / gcd(big, combined);
}

double closure_period(const Rig& rig) { return kTwoPi * closure_turns(rig).to_double(); }

CurveClass classify(const Rig& rig, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("classification tolerance must lie in (0, 1)");
  validate(rig);
  const double a = rig.a.to_double();
  const double b = rig.b.to_double();
  if (rig.a.is_zero()) return curve::Circle{b};
  if (rig.b.is_zero()) return curve::Circle{a};

  const Rational& big = rig.big_omega.value();
  const Rational& small = rig.small_omega.value();
  if (rig.polarization == Polarization::Co && small == Rational(2) * big) {
    if (rig.a == rig.b) return curve::LineSegment{a + b};
    // e = sqrt(A^2 - B^2) / A with A^2 - B^2 = 4ab
    return curve::Ellipse{a + b, std::abs(a - b), 2.0 * std::sqrt(a * b) / (a + b)};
  }

  const Rational residual = rolling_residual(rig);
  if (std::abs(residual.to_double()) <= tol * b * rig.small_omega.to_double()) {
    const Rational ratio = small / big;
    if (rig.polarization == Polarization::Anti) return curve::Epicycloid{ratio};
    return curve::Hypocycloid{ratio};
  }
  const SlideDirection slide = residual.sign() > 0 ? SlideDirection::Forward : SlideDirection::Backward;
  if (rig.polarization == Polarization::Anti) return curve::Epitrochoid{slide};
  return curve::Hypotrochoid{slide};
}

std::string curve_name(const CurveClass& c) {
  struct Namer {
    std::string operator()(const curve::Epicycloid&) const { return "epicycloid"; }
    std::string operator()(const curve::Hypocycloid&) const { return "hypocycloid"; }
    std::string operator()(const curve::Epitrochoid&) const { return "epitrochoid"; }
    std::string operator()(const curve::Hypotrochoid&) const { return "hypotrochoid"; }
    std::string operator()(const curve::Ellipse&) const { return "ellipse"; }
    std::string operator()(const curve::LineSegment&) const { return "line_segment"; }
    std::string operator()(const curve::Circle&) const { return "circle"; }
  };
  return std::visit(Namer{}, c);
}

std::string to_string(Polarization p) { return p == Polarization::Co ? "co" : "anti"; }

std::string to_string(FrameTag f) { return f == FrameTag::Turntable ? "table" : "lab"; }

std::string to_string(SlideDirection d) {
  switch (d) {
    case SlideDirection::Forward:
      return "forward";
    case SlideDirection::Backward:
      return "backward";
    case SlideDirection::None:
      break;
  }
  return "none";
}

Polarization parse_polarization(std::string_view text) {
  if (text == "co") return Polarization::Co;
  if (text == "anti") return Polarization::Anti;
  throw std::invalid_argument("polarization must be 'co' or 'anti', got '" + std::string(text) + "'");
}

FrameTag parse_frame(std::string_view text) {
  if (text == "table" || text == "turntable") return FrameTag::Turntable;
  if (text == "lab" || text == "laboratory") return FrameTag::Laboratory;
  throw std::invalid_argument("frame must be 'table' or 'lab', got '" + std::string(text) + "'");
}

SlideDirection parse_slide_direction(std::string_view text) {
  if (text == "forward") return SlideDirection::Forward;
  if (text == "backward") return SlideDirection::Backward;
  if (text == "none") return SlideDirection::None;
  throw std::invalid_argument("direction must be 'forward' or 'backward', got '" + std::string(text) + "'");
}

}  // namespace trochoid
