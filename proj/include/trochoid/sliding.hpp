#pragma once

// Controlled sliding: perturbing the center distance (STCP) or the turntable
// frequency (STCF) of a pure-rolling rig, plus the roll/slide operators.

#include <stdexcept>
#include <utility>

#include "trochoid/kinematics.hpp"

namespace trochoid {

enum class SlideMethod { Stcp, Stcf };

struct SlideError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SlideOp {
  SlideMethod method = SlideMethod::Stcp;
  Rational magnitude;  // Δa (cm) for STCP, ΔΩ (rad/s) for STCF; always > 0
  SlideDirection direction = SlideDirection::Forward;

  static SlideOp stcp(Rational delta_a, SlideDirection direction);
  static SlideOp stcf(Rational delta_omega, SlideDirection direction);

  // +magnitude for Forward, -magnitude for Backward.
  Rational signed_magnitude() const;
};

// Throws SlideError on a non-positive magnitude or a direction of None.
void validate(const SlideOp& op);

struct SlideReport {
  Rational delta_v;          // cm/s
  double delta_s = 0.0;      // cm per turntable revolution, 2*pi * rate_per_radian
  Rational rate_per_radian;  // cm/rad

  SlideDirection direction() const;
};

std::string to_string(SlideMethod m);
SlideMethod parse_slide_method(std::string_view text);

// a -> a + signed_delta. Zero is allowed here (the identity perturbation).
Rig apply_stcp(const Rig& rig, const Rational& signed_delta);
Rig apply_stcp(const Rig& rig, const SlideOp& op);

Rig apply_stcf(const Rig& rig, const Rational& signed_delta);
Rig apply_stcf(const Rig& rig, const SlideOp& op);

Rig apply(const Rig& rig, const SlideOp& op);

SlideReport slide_report_stcp(const Rig& base, const Rig& perturbed);
SlideReport slide_report_stcf(const Rig& base, const Rig& perturbed);

// Roll for time t, then push the tablet-2 center by signed_delta along the
// current center line.
Point2 roll_then_slide_stcp(const Rig& rig, double t, const Rational& signed_delta);
// Move the tablet-2 axis first, then roll for time t.
Point2 slide_then_roll_stcp(const Rig& rig, double t, const Rational& signed_delta);

// STCF: rolling runs both tablets for t1; sliding turns the turntable alone
// through Ω'·t2 with the pen tablet held still.
Point2 roll_then_slide_stcf(const Rig& rig, const Frequency& perturbed_omega, double t1, double t2);
Point2 slide_then_roll_stcf(const Rig& rig, const Frequency& perturbed_omega, double t1, double t2);

// Distance between the two operation orders. STCP ignores t2.
double commutator_residual(const Rig& rig, const SlideOp& op, double t1, double t2);

// First: the perturbed rig evaluated directly. Second: the base curve at t
// rotated by ±ΔΩ·t.
std::pair<Point2, Point2> stcf_rotation_identity(const Rig& rig, const Rational& delta_omega,
                                                 SlideDirection direction, double t);

}  // namespace trochoid
