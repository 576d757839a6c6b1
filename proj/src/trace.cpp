#include "trochoid/trace.hpp"

#include <algorithm>
#include <cmath>

namespace trochoid {

namespace {

Point2 evaluate(const Rig& rig, FrameTag frame, double t) {
  return frame == FrameTag::Turntable ? pen_position_turntable(rig, t) : pen_position_lab(rig, t);
}

struct SpeedModel {
  const Trace& trace;

  double operator()(double t) const {
    if (const auto* linear = std::get_if<LinearRig>(&trace.rig)) {
      const Point2 v = linear_pen_velocity(*linear, t);
      return std::hypot(v.x, v.y);
    }
    const Rig& rig = std::get<Rig>(trace.rig);
    if (trace.frame == FrameTag::Laboratory) return rig.b.to_double() * rig.small_omega.to_double();
    const Point2 v = pen_velocity_turntable(rig, t);
    return std::hypot(v.x, v.y);
  }

  double scale() const {
    if (const auto* linear = std::get_if<LinearRig>(&trace.rig)) {
      return (linear->r + linear->R).to_double() * linear->omega.to_double();
    }
    const Rig& rig = std::get<Rig>(trace.rig);
    return (rig.a + rig.b).to_double() * std::max(rig.big_omega.to_double(), rig.small_omega.to_double());
  }
};

double golden_minimum(const SpeedModel& speed, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = speed(x1);
  double f2 = speed(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = speed(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = speed(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

Trace sample_trace(const Rig& rig, FrameTag frame, std::size_t samples_per_closure) {
  validate(rig);
  if (samples_per_closure < kMinSamplesPerClosure) {
    throw std::invalid_argument("samples_per_closure must be at least 16");
  }
  const double period = closure_period(rig);
  Trace trace{frame, {}, rig, true};
  trace.samples.reserve(samples_per_closure + 1);
  for (std::size_t k = 0; k <= samples_per_closure; ++k) {
    const double t = period * static_cast<double>(k) / static_cast<double>(samples_per_closure);
    trace.samples.push_back({t, evaluate(rig, frame, t)});
  }
  return trace;
}

Trace sample_at(const Rig& rig, FrameTag frame, std::span<const double> times) {
  validate(rig);
  Trace trace{frame, {}, rig, false};
  trace.samples.reserve(times.size());
  for (double t : times) {
    if (!trace.samples.empty() && !(t > trace.samples.back().t)) {
      throw std::invalid_argument("sample times must be strictly increasing");
    }
    trace.samples.push_back({t, evaluate(rig, frame, t)});
  }
  return trace;
}

Trace sample_linear(const LinearRig& rig, double t_end, std::size_t n) {
  validate(rig);
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (n < 2) throw std::invalid_argument("need at least two samples");
  Trace trace{FrameTag::Turntable, {}, rig, false};
  trace.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t_end * static_cast<double>(k) / static_cast<double>(n - 1);
    trace.samples.push_back({t, linear_pen_position(rig, t)});
  }
  return trace;
}

CuspReport count_cusps(const Trace& trace) {
  const SpeedModel speed{trace};
  CuspReport report;
  report.threshold = 1e-6 * speed.scale();

  // A closed trace repeats its first sample at the end; walk it as a ring.
  const std::size_t n = trace.closed ? trace.samples.size() - 1 : trace.samples.size();
  if (n < 3) return report;
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = speed(trace.samples[i].t);

  const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
  if (*hi_it - *lo_it <= 1e-12 * std::max(*hi_it, speed.scale())) return report;

  const double period = trace.closed ? trace.samples.back().t - trace.samples.front().t : 0.0;
  const std::size_t first = trace.closed ? 0 : 1;
  const std::size_t last = trace.closed ? n : n - 1;
  for (std::size_t j = first; j < last; ++j) {
    const std::size_t prev = (j + n - 1) % n;
    const std::size_t next = (j + 1) % n;
    if (!(s[j] < s[prev] && s[j] <= s[next])) continue;
    ++report.speed_minima;

    double lo = trace.samples[prev].t;
    double hi = trace.samples[next].t;
    if (j == 0) lo -= period;
    if (next == 0) hi += period;
    const double refined = golden_minimum(speed, lo, hi);
    if (refined < report.threshold) ++report.cusps;
    if (refined > report.threshold / 10.0 && refined < report.threshold * 10.0) report.ambiguous = true;
  }
  return report;
}

std::vector<Rig> family_rigs(const FamilySpec& spec) {
  if (spec.steps.empty()) throw std::invalid_argument("family needs at least one step");
  std::vector<Rig> rigs;
  rigs.reserve(spec.steps.size());
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const Rational& step = spec.steps[i];
    try {
      if (step.is_zero()) {
        validate(spec.base);
        rigs.push_back(spec.base);
      } else if (spec.method == SlideMethod::Stcp) {
        rigs.push_back(apply_stcp(spec.base, step));
      } else {
        rigs.push_back(apply_stcf(spec.base, step));
      }
    } catch (const std::invalid_argument& e) {
      throw FamilyError(i, e.what());
    }
  }
  return rigs;
}

std::vector<Trace> sweep_family(const FamilySpec& spec, FrameTag frame, std::size_t samples_per_closure) {
  std::vector<Trace> traces;
  for (const Rig& rig : family_rigs(spec)) traces.push_back(sample_trace(rig, frame, samples_per_closure));
  return traces;
}

}  // namespace trochoid
