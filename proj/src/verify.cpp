#include "trochoid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "trochoid/ellipse.hpp"
#include "trochoid/sliding.hpp"

namespace trochoid {

namespace {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SlideDirection random_direction(std::mt19937_64& rng) {
  return uniform_int(rng, 0, 1) == 0 ? SlideDirection::Forward : SlideDirection::Backward;
}

std::string describe(const Rig& rig) {
  std::ostringstream os;
  os << "rig(a=" << rig.a << ", b=" << rig.b << ", Ω=" << rig.big_omega.value() << ", ω=" << rig.small_omega.value()
     << ", " << to_string(rig.polarization) << ")";
  return os.str();
}

// Folds one observed error into the result; records the first violation.
void observe(SuiteResult& result, double error, const std::string& context) {
  ++result.cases;
  result.worst = std::max(result.worst, error);
  if (!(error < result.tolerance) && result.detail.empty()) {
    result.detail = context + ": error " + std::to_string(error);
  }
}

// Secondary bound with its own tolerance; does not move `worst`.
void bounded(SuiteResult& result, double error, double tolerance, const std::string& context) {
  ++result.cases;
  if (!(error < tolerance) && result.detail.empty()) {
    result.detail = context + ": error " + std::to_string(error);
  }
}

void exact(SuiteResult& result, bool holds, const std::string& context) {
  ++result.cases;
  if (!holds && result.detail.empty()) result.detail = context;
}

SuiteResult frame_equivalence(std::mt19937_64& rng) {
  SuiteResult r{"t1-equivalence", false, 0, 0.0, 1e-9, {}};
  for (int i = 0; i < 100; ++i) {
    const Rig rig = random_rig(rng);
    for (int j = 0; j < 100; ++j) {
      const double t = uniform_real(rng, -20.0, 20.0);
      const Point2 composed = lab_to_table(pen_position_lab(rig, t), table_angle(rig, t));
      observe(r, distance(composed, pen_position_turntable(rig, t)), describe(rig));
    }
  }
  return r;
}

SuiteResult ellipse_genesis(std::mt19937_64& rng) {
  SuiteResult r{"t2-ellipse", false, 0, 0.0, 1e-9, {}};
  for (int i = 0; i < 50; ++i) {
    Rig rig = random_rig(rng);
    rig.phase_table = rig.phase_pen = 0.0;
    rig.polarization = Polarization::Co;
    rig.small_omega = Frequency(Rational(2) * rig.big_omega.value());
    if (rig.a.is_zero()) rig.a = Rational(1);
    if (rig.b.is_zero()) rig.b = Rational(1, 2);
    if (rig.a == rig.b) rig.a += Rational(1);
    const auto spec = std::get<EllipseSpec>(ellipse_from_rig(rig));
    const double period = closure_period(rig);
    for (int k = 0; k < 256; ++k) {
      const double t = period * k / 256.0;
      observe(r, on_ellipse_residual(pen_position_turntable(rig, t), spec), describe(rig));
    }
  }
  // a = b: a line segment of half-length 2b on the turntable X axis.
  for (int i = 0; i < 10; ++i) {
    Rig rig = random_rig(rng);
    rig.phase_table = rig.phase_pen = 0.0;
    rig.polarization = Polarization::Co;
    rig.small_omega = Frequency(Rational(2) * rig.big_omega.value());
    if (rig.b.is_zero()) rig.b = Rational(1);
    rig.a = rig.b;
    double max_y = 0.0;
    double max_x = 0.0;
    const double period = closure_period(rig);
    for (int k = 0; k < 256; ++k) {
      const Point2 p = pen_position_turntable(rig, period * k / 256.0);
      max_y = std::max(max_y, std::abs(p.y));
      max_x = std::max(max_x, std::abs(p.x));
    }
    bounded(r, max_y, 1e-12, describe(rig) + " line segment |y|");
    bounded(r, std::abs(max_x - 2.0 * rig.b.to_double()), 1e-12 * rig.b.to_double(), describe(rig) + " amplitude");
  }
  // a = 0: circle of radius b.
  for (int i = 0; i < 10; ++i) {
    Rig rig = random_rig(rng);
    rig.phase_table = rig.phase_pen = 0.0;
    rig.polarization = Polarization::Co;
    rig.small_omega = Frequency(Rational(2) * rig.big_omega.value());
    if (rig.b.is_zero()) rig.b = Rational(1);
    rig.a = Rational(0);
    const double period = closure_period(rig);
    for (int k = 0; k < 64; ++k) {
      const Point2 p = pen_position_turntable(rig, period * k / 64.0);
      const double off = std::abs(std::hypot(p.x, p.y) - rig.b.to_double());
      bounded(r, off, 1e-12 * rig.b.to_double(), describe(rig) + " circle radius");
    }
  }
  return r;
}

SuiteResult commutator(std::mt19937_64& rng) {
  SuiteResult r{"t3-commutator", false, 0, 0.0, 1e-9, {}};
  for (int i = 0; i < 100; ++i) {
    const Rig rig = random_rig(rng);
    const double t1 = uniform_real(rng, 0.0, 20.0);
    const double t2 = uniform_real(rng, 0.0, 20.0);

    SlideDirection dir = random_direction(rng);
    if (rig.a.is_zero()) dir = SlideDirection::Forward;
    const Rational delta_a =
        rig.a.is_zero() ? Rational(1) : random_rational_below(rng, rig.a);
    observe(r, commutator_residual(rig, SlideOp::stcp(delta_a, dir), t1, t2), describe(rig) + " STCP");

    const Rational delta_omega = random_rational_below(rng, rig.big_omega.value());
    const SlideOp stcf = SlideOp::stcf(delta_omega, random_direction(rng));
    observe(r, commutator_residual(rig, stcf, t1, t2), describe(rig) + " STCF");
  }
  return r;
}

SuiteResult stcp_rate(std::mt19937_64& rng, Polarization polarization, const char* name) {
  SuiteResult r{name, false, 0, 0.0, 0.0, {}};
  for (int i = 0; i < 100; ++i) {
    const Rig base = random_rolling_rig(rng, polarization);
    const Rational delta_a = random_rational_below(rng, base.a);
    const SlideOp op = SlideOp::stcp(delta_a, random_direction(rng));
    const SlideReport report = slide_report_stcp(base, apply_stcp(base, op));
    exact(r, report.rate_per_radian == op.signed_magnitude() && report.direction() == op.direction,
          describe(base) + " Δa=" + op.signed_magnitude().to_string() + " rate=" +
              report.rate_per_radian.to_string());
  }
  return r;
}

SuiteResult stcf_size(std::mt19937_64& rng) {
  SuiteResult r{"t8-stcf-size", false, 0, 0.0, 1e-9, {}};
  std::vector<Rig> rigs;
  Rig example;
  example.a = Rational(12);
  example.b = Rational(2);
  example.big_omega = Frequency(3);
  example.small_omega = Frequency(15);
  example.polarization = Polarization::Anti;
  rigs.push_back(example);
  example.polarization = Polarization::Co;
  rigs.push_back(example);
  for (int i = 0; i < 8; ++i) {
    rigs.push_back(random_rolling_rig(rng, i % 2 == 0 ? Polarization::Anti : Polarization::Co));
  }

  for (const Rig& rig : rigs) {
    for (SlideDirection dir : {SlideDirection::Forward, SlideDirection::Backward}) {
      const Rational delta = rig.big_omega.value() > Rational(1) ? Rational(1)
                                                                 : random_rational_below(rng, rig.big_omega.value());
      for (int k = 0; k < 1000; ++k) {
        const double t = uniform_real(rng, 0.0, 20.0);
        const auto [direct, rotated] = stcf_rotation_identity(rig, delta, dir, t);
        observe(r, distance(direct, rotated), describe(rig) + " ΔΩ=" + delta.to_string());
      }
      if (is_pure_rolling(rig)) {
        const Rig perturbed = apply_stcf(rig, SlideOp::stcf(delta, dir));
        const SlideReport report = slide_report_stcf(rig, perturbed);
        const Rational signed_delta = dir == SlideDirection::Forward ? delta : -delta;
        const Rational expected = rig.b * rig.small_omega.value() * signed_delta /
                                  (rig.big_omega.value() * perturbed.big_omega.value());
        if (report.rate_per_radian != expected && r.detail.empty()) {
          r.detail = describe(rig) + " STCF rate " + report.rate_per_radian.to_string() + " != " +
                     expected.to_string();
        }
      }
    }
  }
  return r;
}

using SuiteFn = std::function<SuiteResult(std::mt19937_64&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"t1-equivalence", frame_equivalence},
      {"t2-ellipse", ellipse_genesis},
      {"t3-commutator", commutator},
      {"t5-stcp-rate", [](std::mt19937_64& rng) { return stcp_rate(rng, Polarization::Anti, "t5-stcp-rate"); }},
      {"t7-stcp-rate-hypo",
       [](std::mt19937_64& rng) { return stcp_rate(rng, Polarization::Co, "t7-stcp-rate-hypo"); }},
      {"t8-stcf-size", stcf_size},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"t1-equivalence", "t2-ellipse",        "t3-commutator",
                                                 "t5-stcp-rate",   "t7-stcp-rate-hypo", "t8-stcf-size"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  // Each suite gets its own stream so --suite selection does not shift results.
  std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(name))};
  std::mt19937_64 rng(seq);
  SuiteResult result = it->second(rng);
  result.passed = result.detail.empty();
  return result;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (const auto& name : suite_names()) results.push_back(run_suite(name, seed));
  return results;
}

Rig random_rig(std::mt19937_64& rng) {
  Rig rig;
  do {
    rig.a = Rational(uniform_int(rng, 0, 60), uniform_int(rng, 1, 4));
    rig.b = Rational(uniform_int(rng, 0, 30), uniform_int(rng, 1, 4));
  } while (rig.a.is_zero() && rig.b.is_zero());
  rig.big_omega = Frequency(Rational(uniform_int(rng, 1, 12), uniform_int(rng, 1, 3)));
  rig.small_omega = Frequency(Rational(uniform_int(rng, 1, 30), uniform_int(rng, 1, 3)));
  rig.polarization = uniform_int(rng, 0, 1) == 0 ? Polarization::Anti : Polarization::Co;
  rig.phase_table = uniform_real(rng, 0.0, kTwoPi);
  rig.phase_pen = uniform_real(rng, 0.0, kTwoPi);
  return rig;
}

Rig random_rolling_rig(std::mt19937_64& rng, Polarization polarization) {
  const Rational a(uniform_int(rng, 1, 60), uniform_int(rng, 1, 4));
  const Frequency omega(Rational(uniform_int(rng, 1, 30), uniform_int(rng, 1, 3)));
  if (polarization == Polarization::Anti) return design_epicycloid(a, uniform_int(rng, 1, 8), omega);
  return design_hypocycloid(a, uniform_int(rng, 2, 8), omega);
}

Rational random_rational_below(std::mt19937_64& rng, const Rational& upper) {
  if (upper.sign() <= 0) throw std::invalid_argument("upper bound must be positive");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::int64_t q = uniform_int(rng, 1, 64);
    // largest p with p/q < upper
    const std::int64_t p_max = (upper.num() * q - 1) / upper.den();
    if (p_max >= 1) return Rational(uniform_int(rng, 1, p_max), q);
  }
  return upper / Rational(2);
}

}  // namespace trochoid
