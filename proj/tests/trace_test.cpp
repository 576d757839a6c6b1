#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trochoid/trace.hpp"
#include "trochoid/verify.hpp"

using namespace trochoid;

namespace {

Rig example() {
  Rig rig;
  rig.a = Rational(12);
  rig.b = Rational(2);
  rig.big_omega = Frequency(3);
  rig.small_omega = Frequency(15);
  return rig;
}

// Independent tooth counter: strict minima of finite-difference speed over
// one closure, sampled densely and walked as a ring.
std::size_t fd_speed_minima(const Rig& rig, std::size_t n) {
  const double period = closure_period(rig);
  std::vector<Point2> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = pen_position_turntable(rig, period * static_cast<double>(k) / n);
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = distance(p[(k + 1) % n], p[(k + n - 1) % n]);
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k] < s[(k + n - 1) % n] && s[k] <= s[(k + 1) % n]) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("closed trace layout") {
  const Trace trace = sample_trace(example(), FrameTag::Turntable, 64);
  REQUIRE(trace.samples.size() == 65);
  CHECK(trace.closed);
  CHECK(trace.frame == FrameTag::Turntable);
  CHECK(trace.samples.front().t == 0.0);
  CHECK(trace.samples.back().t == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK(distance(trace.samples.front().p, trace.samples.back().p) < 1e-9);
  CHECK(std::get<Rig>(trace.rig) == example());
  for (std::size_t i = 1; i < trace.samples.size(); ++i) CHECK(trace.samples[i].t > trace.samples[i - 1].t);

  CHECK_THROWS(sample_trace(example(), FrameTag::Turntable, 15));
  CHECK_NOTHROW(sample_trace(example(), FrameTag::Turntable, 16));
}

TEST_CASE("traces match the evaluators at their sample times") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const Rig rig = random_rig(rng);
    for (FrameTag frame : {FrameTag::Turntable, FrameTag::Laboratory}) {
      const Trace trace = sample_trace(rig, frame, 128);
      for (const Sample& s : trace.samples) {
        const Point2 expected = frame == FrameTag::Turntable ? pen_position_turntable(rig, s.t) : pen_position_lab(rig, s.t);
        CHECK(s.p == expected);
      }
      CHECK(distance(trace.samples.front().p, trace.samples.back().p) < 1e-9);
    }
  }
}

TEST_CASE("sample_at") {
  const std::vector<double> times{0.0, 0.5, 0.75, 2.0};
  const Trace trace = sample_at(example(), FrameTag::Laboratory, times);
  CHECK_FALSE(trace.closed);
  REQUIRE(trace.samples.size() == 4);
  CHECK(trace.samples[2].p == pen_position_lab(example(), 0.75));
  const std::vector<double> bad{0.0, 1.0, 1.0};
  CHECK_THROWS(sample_at(example(), FrameTag::Laboratory, bad));
}

TEST_CASE("epicycloid and hypocycloid with n = 5 have five cusps") {
  const CuspReport epi = count_cusps(sample_trace(example(), FrameTag::Turntable));
  CHECK(epi.cusps == 5);
  CHECK(epi.count() == 5);
  CHECK_FALSE(epi.ambiguous);

  const CuspReport hypo = count_cusps(sample_trace(design_hypocycloid(Rational(12), 5, Frequency(15)), FrameTag::Turntable));
  CHECK(hypo.cusps == 5);
  CHECK_FALSE(hypo.ambiguous);
}

TEST_CASE("designed cycloids have n cusps") {
  for (std::int64_t n = 1; n <= 9; ++n) {
    const Rig epi = design_epicycloid(Rational(7), n, Frequency(Rational(n * 2)));
    CHECK(count_cusps(sample_trace(epi, FrameTag::Turntable, 1024)).cusps == static_cast<std::size_t>(n));
  }
  for (std::int64_t n = 2; n <= 9; ++n) {
    const Rig hypo = design_hypocycloid(Rational(5, 2), n, Frequency(Rational(n * 3)));
    CHECK(count_cusps(sample_trace(hypo, FrameTag::Turntable, 1024)).cusps == static_cast<std::size_t>(n));
  }
}

TEST_CASE("epitrochoids have teeth, not cusps") {
  Rig up = example();
  up.big_omega = Frequency(4);
  const CuspReport report = count_cusps(sample_trace(up, FrameTag::Turntable));
  CHECK(report.cusps == 0);
  CHECK(report.speed_minima == fd_speed_minima(up, 1 << 16));
  CHECK(report.count() == 15);

  Rig down = example();
  down.big_omega = Frequency(2);
  const CuspReport back = count_cusps(sample_trace(down, FrameTag::Turntable));
  CHECK(back.cusps == 0);
  CHECK(back.count() == fd_speed_minima(down, 1 << 16));

  Rig stcp = example();
  stcp.a = Rational(13);
  const CuspReport forward = count_cusps(sample_trace(stcp, FrameTag::Turntable));
  CHECK(forward.cusps == 0);
  CHECK(forward.count() == 5);
}

TEST_CASE("lab-frame circle has no cusps or teeth") {
  const CuspReport report = count_cusps(sample_trace(example(), FrameTag::Laboratory));
  CHECK(report.cusps == 0);
  CHECK(report.speed_minima == 0);
}

TEST_CASE("family sweep") {
  FamilySpec spec{example(), SlideMethod::Stcf, {Rational(0), Rational(1), Rational(-1)}};
  const auto rigs = family_rigs(spec);
  REQUIRE(rigs.size() == 3);
  CHECK(rigs[0] == example());
  CHECK(rigs[1].big_omega.value() == Rational(4));
  CHECK(rigs[2].big_omega.value() == Rational(2));

  const auto traces = sweep_family(spec, FrameTag::Laboratory, 32);
  REQUIRE(traces.size() == 3);
  for (const auto& t : traces) {
    CHECK(t.frame == FrameTag::Laboratory);
    CHECK(t.samples.size() == 33);
  }

  spec.method = SlideMethod::Stcp;
  spec.steps = {Rational(1), Rational(-1), Rational(-20)};
  try {
    family_rigs(spec);
    FAIL("expected FamilyError");
  } catch (const FamilyError& e) {
    CHECK(e.step_index == 2);
  }
  spec.steps.clear();
  CHECK_THROWS_AS(family_rigs(spec), std::invalid_argument);
}
