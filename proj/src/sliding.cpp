#include "trochoid/sliding.hpp"

#include <cmath>

namespace trochoid {

namespace {

Rational signed_of(const Rational& magnitude, SlideDirection direction) {
  return direction == SlideDirection::Backward ? -magnitude : magnitude;
}

bool same_except_a(const Rig& lhs, const Rig& rhs) {
  Rig copy = rhs;
  copy.a = lhs.a;
  return copy == lhs;
}

bool same_except_big_omega(const Rig& lhs, const Rig& rhs) {
  Rig copy = rhs;
  copy.big_omega = lhs.big_omega;
  return copy == lhs;
}

SlideReport make_report(const Rational& delta_v, const Rational& revolution_rate) {
  SlideReport report;
  report.delta_v = delta_v;
  report.rate_per_radian = delta_v / revolution_rate;
  report.delta_s = kTwoPi * report.rate_per_radian.to_double();
  return report;
}

}  // namespace

SlideOp SlideOp::stcp(Rational delta_a, SlideDirection direction) {
  SlideOp op{SlideMethod::Stcp, delta_a, direction};
  validate(op);
  return op;
}

SlideOp SlideOp::stcf(Rational delta_omega, SlideDirection direction) {
  SlideOp op{SlideMethod::Stcf, delta_omega, direction};
  validate(op);
  return op;
}

Rational SlideOp::signed_magnitude() const { return signed_of(magnitude, direction); }

void validate(const SlideOp& op) {
  if (op.magnitude.sign() <= 0) throw SlideError("slide magnitude must be positive");
  if (op.direction == SlideDirection::None) throw SlideError("slide direction must be forward or backward");
}

SlideDirection SlideReport::direction() const {
  if (rate_per_radian.sign() > 0) return SlideDirection::Forward;
  if (rate_per_radian.sign() < 0) return SlideDirection::Backward;
  return SlideDirection::None;
}

std::string to_string(SlideMethod m) { return m == SlideMethod::Stcp ? "stcp" : "stcf"; }

SlideMethod parse_slide_method(std::string_view text) {
  if (text == "stcp") return SlideMethod::Stcp;
  if (text == "stcf") return SlideMethod::Stcf;
  throw std::invalid_argument("method must be 'stcp' or 'stcf', got '" + std::string(text) + "'");
}

Rig apply_stcp(const Rig& rig, const Rational& signed_delta) {
  Rig out = rig;
  out.a = rig.a + signed_delta;
  if (out.a.sign() < 0) throw SlideError("backward STCP would make a negative (a=" + out.a.to_string() + ")");
  validate(out);
  return out;
}

Rig apply_stcp(const Rig& rig, const SlideOp& op) {
  validate(op);
  if (op.method != SlideMethod::Stcp) throw SlideError("expected an STCP operation");
  return apply_stcp(rig, op.signed_magnitude());
}

Rig apply_stcf(const Rig& rig, const Rational& signed_delta) {
  const Rational perturbed = rig.big_omega.value() + signed_delta;
  if (perturbed.sign() <= 0) {
    throw SlideError("STCF would make the turntable frequency non-positive (" + perturbed.to_string() + ")");
  }
  Rig out = rig;
  out.big_omega = Frequency(perturbed);
  return out;
}

Rig apply_stcf(const Rig& rig, const SlideOp& op) {
  validate(op);
  if (op.method != SlideMethod::Stcf) throw SlideError("expected an STCF operation");
  return apply_stcf(rig, op.signed_magnitude());
}

Rig apply(const Rig& rig, const SlideOp& op) {
  return op.method == SlideMethod::Stcp ? apply_stcp(rig, op) : apply_stcf(rig, op);
}

SlideReport slide_report_stcp(const Rig& base, const Rig& perturbed) {
  if (!is_pure_rolling(base)) throw SlideError("STCP report needs a pure-rolling base rig");
  if (!same_except_a(base, perturbed)) throw SlideError("STCP perturbation may change only a");
  // Δv = (A ∓ b)Ω - bω; the revolution is timed by the unchanged Ω.
  return make_report(rolling_residual(perturbed), base.big_omega.value());
}

SlideReport slide_report_stcf(const Rig& base, const Rig& perturbed) {
  if (!is_pure_rolling(base)) throw SlideError("STCF report needs a pure-rolling base rig");
  if (!same_except_big_omega(base, perturbed)) throw SlideError("STCF perturbation may change only omega_table");
  // Δv = Ω'(a ∓ b) - bω; the revolution is timed by the new Ω'.
  return make_report(rolling_residual(perturbed), perturbed.big_omega.value());
}

Point2 roll_then_slide_stcp(const Rig& rig, double t, const Rational& signed_delta) {
  apply_stcp(rig, signed_delta);  // rejects a negative center distance
  const Point2 rolled = pen_position_turntable(rig, t);
  const double theta = table_angle(rig, t);
  const double d = signed_delta.to_double();
  return {rolled.x + d * std::cos(theta), rolled.y + d * std::sin(theta)};
}

Point2 slide_then_roll_stcp(const Rig& rig, double t, const Rational& signed_delta) {
  return pen_position_turntable(apply_stcp(rig, signed_delta), t);
}

Point2 roll_then_slide_stcf(const Rig& rig, const Frequency& perturbed_omega, double t1, double t2) {
  const Point2 rolled = pen_position_turntable(rig, t1);
  return lab_to_table(rolled, perturbed_omega.to_double() * t2);
}

Point2 slide_then_roll_stcf(const Rig& rig, const Frequency& perturbed_omega, double t1, double t2) {
  double theta = rig.phase_table;
  double phi = rig.phase_pen;
  theta += perturbed_omega.to_double() * t2;
  theta += rig.big_omega.to_double() * t1;
  phi += rig.small_omega.to_double() * t1;
  return position_from_angles(rig.a.to_double(), rig.b.to_double(), polarization_sign(rig.polarization),
                              theta, phi);
}

double commutator_residual(const Rig& rig, const SlideOp& op, double t1, double t2) {
  validate(op);
  if (op.method == SlideMethod::Stcp) {
    const Rational delta = op.signed_magnitude();
    return distance(roll_then_slide_stcp(rig, t1, delta), slide_then_roll_stcp(rig, t1, delta));
  }
  const Frequency perturbed = apply_stcf(rig, op).big_omega;
  return distance(roll_then_slide_stcf(rig, perturbed, t1, t2), slide_then_roll_stcf(rig, perturbed, t1, t2));
}

std::pair<Point2, Point2> stcf_rotation_identity(const Rig& rig, const Rational& delta_omega,
                                                 SlideDirection direction, double t) {
  if (delta_omega.sign() <= 0) throw SlideError("ΔΩ must be positive");
  if (direction == SlideDirection::None) throw SlideError("slide direction must be forward or backward");
  const Rational signed_delta = signed_of(delta_omega, direction);
  const Point2 direct = pen_position_turntable(apply_stcf(rig, signed_delta), t);
  const Point2 rotated = lab_to_table(pen_position_turntable(rig, t), signed_delta.to_double() * t);
  return {direct, rotated};
}

}  // namespace trochoid
