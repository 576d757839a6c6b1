#pragma once

#include <variant>

#include "trochoid/kinematics.hpp"

namespace trochoid {

// Not to be confused with the perturbed center distance of STCP; this A is
// the semi-major axis.
struct EllipseSpec {
  double semi_major = 1.0;
  double semi_minor = 1.0;
  double eccentricity = 0.0;

  // Throws std::invalid_argument unless semi_major >= semi_minor > 0.
  static EllipseSpec from_axes(double semi_major, double semi_minor);
  static EllipseSpec from_eccentricity(double semi_major, double eccentricity);
};

// a == b: the pen oscillates along the turntable X axis.
struct DegenerateLineSegment {
  double half_length;
};

// a == 0 (or b == 0): a plain circle.
struct DegenerateCircle {
  double radius;
};

using EllipseOutcome = std::variant<EllipseSpec, DegenerateLineSegment, DegenerateCircle>;

// Requires a Co rig with omega_pen == 2 * omega_table exactly; anything else
// throws std::invalid_argument.
EllipseOutcome ellipse_from_rig(const Rig& rig);

// Radius measured from the focus at (+A e, 0); angle 0 points at the near vertex.
double ellipse_polar_focal(const EllipseSpec& spec, double angle);

// Radius measured from the center.
double ellipse_polar_centered(const EllipseSpec& spec, double angle);

double on_ellipse_residual(Point2 p, const EllipseSpec& spec);

}  // namespace trochoid
