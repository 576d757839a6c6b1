#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "trochoid/kinematics.hpp"
#include "trochoid/linear_rig.hpp"
#include "trochoid/sliding.hpp"

namespace trochoid {

struct Sample {
  double t = 0.0;
  Point2 p;

  friend bool operator==(const Sample&, const Sample&) = default;
};

using RigSnapshot = std::variant<Rig, LinearRig>;

struct Trace {
  FrameTag frame = FrameTag::Turntable;
  std::vector<Sample> samples;
  RigSnapshot rig;
  bool closed = false;
};

inline constexpr std::size_t kDefaultSamplesPerClosure = 4096;
inline constexpr std::size_t kMinSamplesPerClosure = 16;

// Uniform-in-t samples over one closure period; samples_per_closure + 1
// points, the last one repeating the first.
Trace sample_trace(const Rig& rig, FrameTag frame, std::size_t samples_per_closure = kDefaultSamplesPerClosure);

// Open trace of the rig at the given (strictly increasing) times.
Trace sample_at(const Rig& rig, FrameTag frame, std::span<const double> times);

// n uniform samples on [0, t_end] of the linear rig; never closed.
Trace sample_linear(const LinearRig& rig, double t_end, std::size_t n);

struct CuspReport {
  std::size_t cusps = 0;         // speed minima under the threshold
  std::size_t speed_minima = 0;  // all strict speed minima ("teeth")
  bool ambiguous = false;        // some minimum sat within 10x of the threshold
  double threshold = 0.0;

  // Cusps when there are any, otherwise teeth.
  std::size_t count() const { return cusps > 0 ? cusps : speed_minima; }
};

// Speed is taken from the trace's rig snapshot at sample times; every
// discrete minimum is then refined by golden-section search between its
// neighbours before being compared with 1e-6 * (a+b) * max(Ω, ω).
CuspReport count_cusps(const Trace& trace);

struct FamilySpec {
  Rig base;
  SlideMethod method = SlideMethod::Stcp;
  std::vector<Rational> steps;  // signed Δa or ΔΩ per curve; 0 keeps the base rig
};

struct FamilyError : std::invalid_argument {
  FamilyError(std::size_t step, const std::string& what)
      : std::invalid_argument("family step " + std::to_string(step) + ": " + what), step_index(step) {}
  std::size_t step_index;
};

std::vector<Rig> family_rigs(const FamilySpec& spec);

std::vector<Trace> sweep_family(const FamilySpec& spec, FrameTag frame,
                                std::size_t samples_per_closure = kDefaultSamplesPerClosure);

}  // namespace trochoid
