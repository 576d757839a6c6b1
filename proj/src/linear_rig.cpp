#include "trochoid/linear_rig.hpp"

#include <cmath>

namespace trochoid {

LinearRig LinearRig::from_speed(const Rational& speed, const Rational& pen_radius, const Frequency& omega) {
  LinearRig rig{speed / omega.value(), pen_radius, omega};
  validate(rig);
  return rig;
}

void validate(const LinearRig& rig) {
  if (rig.r.sign() < 0) throw InvalidRig("gear radius r must be non-negative");
  if (rig.R.sign() <= 0) throw InvalidRig("pen radius R must be positive");
}

std::string to_string(LinearClass c) {
  switch (c) {
    case LinearClass::Cycloid:
      return "cycloid";
    case LinearClass::TrochoidForward:
      return "trochoid_forward";
    case LinearClass::TrochoidBackward:
      break;
  }
  return "trochoid_backward";
}

Point2 linear_pen_position(const LinearRig& rig, double t) {
  const double w = rig.omega.to_double();
  const double big_r = rig.R.to_double();
  return {rig.r.to_double() * w * t + big_r * std::sin(w * t), big_r + big_r * std::cos(w * t)};
}

Point2 linear_pen_velocity(const LinearRig& rig, double t) {
  const double w = rig.omega.to_double();
  const double big_r = rig.R.to_double();
  return {w * (rig.r.to_double() + big_r * std::cos(w * t)), -big_r * w * std::sin(w * t)};
}

Rational linear_slide_fraction(const LinearRig& rig) {
  validate(rig);
  if (rig.r.is_zero()) throw InvalidRig("slide fraction is undefined for r = 0");
  return (rig.r - rig.R) / rig.r;
}

LinearClass classify_linear(const LinearRig& rig) {
  validate(rig);
  if (rig.r == rig.R) return LinearClass::Cycloid;
  return rig.r > rig.R ? LinearClass::TrochoidForward : LinearClass::TrochoidBackward;
}

}  // namespace trochoid
