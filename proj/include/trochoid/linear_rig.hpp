#pragma once

// Rolling-with-virtual-sliding along a straight line: a gear of radius r
// drives the board at r*omega while the pen circle of radius R spins at omega.

#include "trochoid/kinematics.hpp"

namespace trochoid {

struct LinearRig {
  Rational r;  // gear radius, sets the translation speed
  Rational R;  // pen radius
  Frequency omega{1};

  // Alternate form with translation speed V = r * omega.
  static LinearRig from_speed(const Rational& speed, const Rational& pen_radius, const Frequency& omega);

  friend bool operator==(const LinearRig&, const LinearRig&) = default;
};

// Throws InvalidRig unless r >= 0 and R > 0.
void validate(const LinearRig& rig);

enum class LinearClass { Cycloid, TrochoidForward, TrochoidBackward };

std::string to_string(LinearClass c);

// (r ω t + R sin ωt, R + R cos ωt)
Point2 linear_pen_position(const LinearRig& rig, double t);
Point2 linear_pen_velocity(const LinearRig& rig, double t);

// (r - R) / r. Undefined for r = 0, which throws InvalidRig.
Rational linear_slide_fraction(const LinearRig& rig);

LinearClass classify_linear(const LinearRig& rig);

}  // namespace trochoid
