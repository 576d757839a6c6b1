#pragma once

// Randomized property checks bundled for the `verify` command.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trochoid/kinematics.hpp"

namespace trochoid {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  double worst = 0.0;      // largest observed error (0 for exact suites)
  double tolerance = 0.0;  // bound the worst case is held to
  std::string detail;      // first failure, if any
};

// Names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument on an unknown name. Same seed, same result.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

// Random rig with small-denominator rational lengths and frequencies.
Rig random_rig(std::mt19937_64& rng);

// Random pure-rolling rig, epicycloid or hypocycloid by `polarization`.
Rig random_rolling_rig(std::mt19937_64& rng, Polarization polarization);

// Uniform rational in the open interval (0, upper) with denominator <= 64.
Rational random_rational_below(std::mt19937_64& rng, const Rational& upper);

}  // namespace trochoid
