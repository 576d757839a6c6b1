#pragma once

// Live virtual machine: accumulated tablet angles advanced in simulated time,
// steered by control messages applied between ticks.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trochoid/kinematics.hpp"
#include "trochoid/serialize.hpp"
#include "trochoid/trace.hpp"

namespace trochoid {

inline constexpr double kDefaultTickRate = 240.0;

struct MachineState {
  Rig rig;
  double theta = 0.0;  // accumulated turntable angle, phase excluded
  double phi = 0.0;    // accumulated tablet-2 angle, phase excluded
  double t_sim = 0.0;
  bool running = false;
  bool pen_down = false;
  double tick_rate = kDefaultTickRate;
  std::uint64_t rig_revision = 0;

  // Angles are anchor + rate * (t_sim - anchor_t); knob changes re-anchor.
  double anchor_t = 0.0;
  double anchor_theta = 0.0;
  double anchor_phi = 0.0;
};

struct SampleEvent {
  double t_sim = 0.0;
  Point2 table_point;
  Point2 lab_point;
  bool pen_down = false;
  std::uint64_t rig_revision = 0;

  friend bool operator==(const SampleEvent&, const SampleEvent&) = default;
};

enum class Param { A, B, OmegaTable, OmegaPen };

namespace msg {
struct SetParam {
  Param name;
  Rational value;
};
struct SetPolarization {
  Polarization polarization;
};
struct Start {};
struct Pause {};
struct Reset {};
struct PenUp {};
struct PenDown {};
struct Snapshot {};
}  // namespace msg

using ControlMessage = std::variant<msg::SetParam, msg::SetPolarization, msg::Start, msg::Pause, msg::Reset,
                                    msg::PenUp, msg::PenDown, msg::Snapshot>;

enum class MachineErrorCode { InvalidValue, PolarizationWhileRunning };

struct Reply {
  bool ok = true;
  std::string of;  // message type being answered
  std::optional<MachineErrorCode> error;
  std::string detail;
};

struct MachineError : std::logic_error {
  using std::logic_error::logic_error;
};

// Precondition: state.running and dt > 0, otherwise MachineError.
std::pair<MachineState, SampleEvent> step(const MachineState& state, double dt);

std::pair<MachineState, Reply> handle(const MachineState& state, const ControlMessage& message);

std::string message_type(const ControlMessage& message);
std::string to_string(Param p);
std::string to_string(MachineErrorCode code);

// Wire format: {"type":"set_param","name":"a","value":13}, {"type":"start"}, ...
// Frequencies take integers or "p/q" strings. Throws std::invalid_argument.
ControlMessage message_from_json(const Json& doc);
Json to_json(const ControlMessage& message);

Json to_json(const MachineState& state);
Json to_json(const SampleEvent& event);
Json to_json(const Reply& reply);

struct LoggedMessage {
  std::uint64_t step = 0;  // number of ticks taken before the message applied
  ControlMessage message;
};

Json to_json(const LoggedMessage& entry);
LoggedMessage logged_message_from_json(const Json& doc);

// One session: state, message log and the pen-down trace it has drawn.
class Machine {
 public:
  explicit Machine(const Rig& rig, double tick_rate = kDefaultTickRate);

  // Applied immediately, i.e. between ticks; always logged.
  Reply submit(const ControlMessage& message);

  // Advances one tick of 1/tick_rate when running.
  std::optional<SampleEvent> tick();

  const MachineState& state() const { return state_; }
  std::uint64_t steps() const { return steps_; }
  const std::vector<LoggedMessage>& log() const { return log_; }

  // Pen-down polylines, split at revision changes, pen lifts and resets.
  std::vector<Trace> pen_traces() const;

 private:
  struct Segment {
    Rig rig;
    std::vector<Sample> samples;
  };

  MachineState state_;
  std::uint64_t steps_ = 0;
  std::vector<LoggedMessage> log_;
  std::vector<Segment> segments_;
  bool segment_open_ = false;
};

// Re-runs a recorded log from a fresh machine for `steps` ticks and returns
// every emitted event.
std::vector<SampleEvent> replay(const Rig& rig, double tick_rate, const std::vector<LoggedMessage>& log,
                                std::uint64_t steps);

}  // namespace trochoid
