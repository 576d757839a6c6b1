#pragma once

// Machine model of the two-tablet drawing rig: a turntable spinning at
// big_omega and a second tablet, its axis a distance `a` away on the lab X*
// axis, spinning at small_omega with the pen at radius `b`.

#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include "trochoid/rational.hpp"

namespace trochoid {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct InvalidRig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Strictly positive angular frequency (rad/s), held exactly.
class Frequency {
 public:
  explicit Frequency(Rational value);
  explicit Frequency(std::int64_t value) : Frequency(Rational(value)) {}

  // Integers or "p/q"; decimals are rejected so commensurability stays explicit.
  static Frequency parse(std::string_view text);

  const Rational& value() const { return value_; }
  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Frequency&, const Frequency&) = default;

 private:
  Rational value_;
};

enum class Polarization { Co, Anti };

// Sign applied to the tablet-2 angle in the position law: +1 Anti, -1 Co.
constexpr int polarization_sign(Polarization p) { return p == Polarization::Anti ? 1 : -1; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 lhs, Point2 rhs);

enum class FrameTag { Turntable, Laboratory };

enum class SlideDirection { Forward, Backward, None };

struct Rig {
  Rational a;
  Rational b;
  Frequency big_omega{1};
  Frequency small_omega{1};
  Polarization polarization = Polarization::Anti;
  double phase_table = 0.0;
  double phase_pen = 0.0;

  friend bool operator==(const Rig&, const Rig&) = default;
};

// Throws InvalidRig when a or b is negative, both are zero, or a phase lies
// outside [0, 2*pi).
void validate(const Rig& rig);

// Position law shared by every evaluator: turntable angle `theta`,
// tablet-2 angle `phi`, both already including phases.
Point2 position_from_angles(double a, double b, int sign, double theta, double phi);

Point2 pen_position_turntable(const Rig& rig, double t);
Point2 pen_position_lab(const Rig& rig, double t);

// Turntable velocity, used by the cusp counter.
Point2 pen_velocity_turntable(const Rig& rig, double t);

// Counter-clockwise rotation of p by `angle`.
Point2 lab_to_table(Point2 p, double angle);
Point2 table_to_lab(Point2 p, double angle);

// Turntable angle at time t (big_omega * t + phase_table).
double table_angle(const Rig& rig, double t);

// (a - b)Ω - bω for Anti, (a + b)Ω - bω for Co. Zero iff pure rolling.
Rational rolling_residual(const Rig& rig);

bool is_pure_rolling(const Rig& rig);

Rig design_epicycloid(const Rational& a, std::int64_t n_e, const Frequency& omega);
Rig design_hypocycloid(const Rational& a, std::int64_t n_h, const Frequency& omega);

// Smallest T > 0 after which both the turntable angle and the combined pen
// angle have advanced by whole turns, expressed as T / 2pi.
Rational closure_turns(const Rig& rig);
double closure_period(const Rig& rig);

namespace curve {

struct Epicycloid {
  Rational n;  // ω/Ω; integral for the textbook case
  bool fractional() const { return !n.is_integer(); }
};
struct Hypocycloid {
  Rational n;
  bool fractional() const { return !n.is_integer(); }
};
struct Epitrochoid {
  SlideDirection slide;
};
struct Hypotrochoid {
  SlideDirection slide;
};
struct Ellipse {
  double semi_major;
  double semi_minor;
  double eccentricity;
};
struct LineSegment {
  double half_length;
};
struct Circle {
  double radius;
};

}  // namespace curve

using CurveClass = std::variant<curve::Epicycloid, curve::Hypocycloid, curve::Epitrochoid,
                                curve::Hypotrochoid, curve::Ellipse, curve::LineSegment,
                                curve::Circle>;

inline constexpr double kDefaultClassifyTolerance = 1e-9;

// `tol` is relative to the tangential speed scale b*ω and must lie in (0, 1).
CurveClass classify(const Rig& rig, double tol = kDefaultClassifyTolerance);

// Lower-case tag: "epicycloid", "line_segment", ...
std::string curve_name(const CurveClass& c);

std::string to_string(Polarization p);
std::string to_string(FrameTag f);
std::string to_string(SlideDirection d);
Polarization parse_polarization(std::string_view text);
FrameTag parse_frame(std::string_view text);
SlideDirection parse_slide_direction(std::string_view text);

}  // namespace trochoid
