#include "trochoid/machine.hpp"

namespace trochoid {

namespace {

void reanchor(MachineState& s) {
  s.anchor_t = s.t_sim;
  s.anchor_theta = s.theta;
  s.anchor_phi = s.phi;
}

Reply ack(const ControlMessage& message) { return Reply{true, message_type(message), std::nullopt, {}}; }

Reply reject(const ControlMessage& message, MachineErrorCode code, std::string detail) {
  return Reply{false, message_type(message), code, std::move(detail)};
}

Param parse_param(std::string_view name) {
  if (name == "a") return Param::A;
  if (name == "b") return Param::B;
  if (name == "omega_table") return Param::OmegaTable;
  if (name == "omega_pen") return Param::OmegaPen;
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

Rational fraction_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return Rational::parse_fraction(value.get<std::string>());
  throw std::invalid_argument("frequency must be an integer or a \"p/q\" string");
}

Json point_json(Point2 p) { return Json::array({p.x, p.y}); }

}  // namespace

std::pair<MachineState, SampleEvent> step(const MachineState& state, double dt) {
  if (!state.running) throw MachineError("cannot step a paused machine");
  if (!(dt > 0.0)) throw MachineError("dt must be positive");
  MachineState next = state;
  next.t_sim = state.t_sim + dt;
  const double elapsed = next.t_sim - next.anchor_t;
  next.theta = next.anchor_theta + next.rig.big_omega.to_double() * elapsed;
  next.phi = next.anchor_phi + next.rig.small_omega.to_double() * elapsed;

  const double table_angle = next.theta + next.rig.phase_table;
  SampleEvent event;
  event.t_sim = next.t_sim;
  event.table_point = position_from_angles(next.rig.a.to_double(), next.rig.b.to_double(),
                                           polarization_sign(next.rig.polarization), table_angle,
                                           next.phi + next.rig.phase_pen);
  event.lab_point = table_to_lab(event.table_point, table_angle);
  event.pen_down = next.pen_down;
  event.rig_revision = next.rig_revision;
  return {next, event};
}

std::pair<MachineState, Reply> handle(const MachineState& state, const ControlMessage& message) {
  MachineState next = state;
  Reply reply = ack(message);

  if (const auto* set = std::get_if<msg::SetParam>(&message)) {
    Rig rig = next.rig;
    switch (set->name) {
      case Param::A:
        rig.a = set->value;
        break;
      case Param::B:
        rig.b = set->value;
        break;
      case Param::OmegaTable:
      case Param::OmegaPen:
        if (set->value.sign() <= 0) {
          return {state, reject(message, MachineErrorCode::InvalidValue, "frequency must be positive")};
        }
        (set->name == Param::OmegaTable ? rig.big_omega : rig.small_omega) = Frequency(set->value);
        break;
    }
    try {
      validate(rig);
    } catch (const InvalidRig& e) {
      return {state, reject(message, MachineErrorCode::InvalidValue, e.what())};
    }
    // Rates change from here on; angles already swept stay put.
    reanchor(next);
    next.rig = rig;
    ++next.rig_revision;
  } else if (const auto* pol = std::get_if<msg::SetPolarization>(&message)) {
    if (state.running) {
      return {state, reject(message, MachineErrorCode::PolarizationWhileRunning, "pause before changing polarization")};
    }
    reanchor(next);
    next.rig.polarization = pol->polarization;
    ++next.rig_revision;
  } else if (std::holds_alternative<msg::Start>(message)) {
    next.running = true;
  } else if (std::holds_alternative<msg::Pause>(message)) {
    next.running = false;
  } else if (std::holds_alternative<msg::Reset>(message)) {
    next.theta = next.phi = next.t_sim = 0.0;
    reanchor(next);
    next.pen_down = false;
  } else if (std::holds_alternative<msg::PenUp>(message)) {
    next.pen_down = false;
  } else if (std::holds_alternative<msg::PenDown>(message)) {
    next.pen_down = true;
  }
  return {next, reply};
}

std::string message_type(const ControlMessage& message) {
  struct Namer {
    std::string operator()(const msg::SetParam&) const { return "set_param"; }
    std::string operator()(const msg::SetPolarization&) const { return "set_polarization"; }
    std::string operator()(const msg::Start&) const { return "start"; }
    std::string operator()(const msg::Pause&) const { return "pause"; }
    std::string operator()(const msg::Reset&) const { return "reset"; }
    std::string operator()(const msg::PenUp&) const { return "pen_up"; }
    std::string operator()(const msg::PenDown&) const { return "pen_down"; }
    std::string operator()(const msg::Snapshot&) const { return "snapshot"; }
  };
  return std::visit(Namer{}, message);
}

std::string to_string(Param p) {
  switch (p) {
    case Param::A:
      return "a";
    case Param::B:
      return "b";
    case Param::OmegaTable:
      return "omega_table";
    case Param::OmegaPen:
      break;
  }
  return "omega_pen";
}

std::string to_string(MachineErrorCode code) {
  return code == MachineErrorCode::InvalidValue ? "InvalidValue" : "PolarizationWhileRunning";
}

ControlMessage message_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    throw std::invalid_argument("control message must be an object with a string 'type'");
  }
  const std::string type = doc["type"].get<std::string>();
  if (type == "set_param") {
    if (!doc.contains("name") || !doc["name"].is_string() || !doc.contains("value")) {
      throw std::invalid_argument("set_param needs 'name' and 'value'");
    }
    const Param name = parse_param(doc["name"].get<std::string>());
    const Json& value = doc["value"];
    if (name == Param::A || name == Param::B) return msg::SetParam{name, length_from_json(value)};
    return msg::SetParam{name, fraction_from_json(value)};
  }
  if (type == "set_polarization") {
    if (!doc.contains("polarization") || !doc["polarization"].is_string()) {
      throw std::invalid_argument("set_polarization needs 'polarization'");
    }
    return msg::SetPolarization{parse_polarization(doc["polarization"].get<std::string>())};
  }
  if (type == "start") return msg::Start{};
  if (type == "pause") return msg::Pause{};
  if (type == "reset") return msg::Reset{};
  if (type == "pen_up") return msg::PenUp{};
  if (type == "pen_down") return msg::PenDown{};
  if (type == "snapshot") return msg::Snapshot{};
  throw std::invalid_argument("unknown message type '" + type + "'");
}

Json to_json(const ControlMessage& message) {
  Json doc;
  doc["type"] = message_type(message);
  if (const auto* set = std::get_if<msg::SetParam>(&message)) {
    doc["name"] = to_string(set->name);
    doc["value"] = set->value.to_string();
  } else if (const auto* pol = std::get_if<msg::SetPolarization>(&message)) {
    doc["polarization"] = to_string(pol->polarization);
  }
  return doc;
}

Json to_json(const MachineState& state) {
  Json doc;
  doc["rig"] = to_json(state.rig);
  doc["theta"] = state.theta;
  doc["phi"] = state.phi;
  doc["t_sim"] = state.t_sim;
  doc["running"] = state.running;
  doc["pen_down"] = state.pen_down;
  doc["tick_rate"] = state.tick_rate;
  doc["rig_revision"] = state.rig_revision;
  return doc;
}

Json to_json(const SampleEvent& event) {
  Json doc;
  doc["type"] = "sample";
  doc["t"] = event.t_sim;
  doc["table"] = point_json(event.table_point);
  doc["lab"] = point_json(event.lab_point);
  doc["pen_down"] = event.pen_down;
  doc["rev"] = event.rig_revision;
  return doc;
}

Json to_json(const Reply& reply) {
  Json doc;
  doc["type"] = reply.ok ? "ack" : "error";
  doc["of"] = reply.of;
  if (reply.error) doc["code"] = to_string(*reply.error);
  if (!reply.detail.empty()) doc["message"] = reply.detail;
  return doc;
}

Json to_json(const LoggedMessage& entry) {
  Json doc;
  doc["step"] = entry.step;
  doc["message"] = to_json(entry.message);
  return doc;
}

LoggedMessage logged_message_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("step") || !doc.contains("message")) {
    throw std::invalid_argument("log entry needs 'step' and 'message'");
  }
  return {doc["step"].get<std::uint64_t>(), message_from_json(doc["message"])};
}

Machine::Machine(const Rig& rig, double tick_rate) {
  validate(rig);
  if (!(tick_rate > 0.0)) throw std::invalid_argument("tick_rate must be positive");
  state_.rig = rig;
  state_.tick_rate = tick_rate;
}

Reply Machine::submit(const ControlMessage& message) {
  log_.push_back({steps_, message});
  auto [next, reply] = handle(state_, message);
  if (reply.ok && !std::holds_alternative<msg::Start>(message) && !std::holds_alternative<msg::Pause>(message) &&
      !std::holds_alternative<msg::PenDown>(message) && !std::holds_alternative<msg::Snapshot>(message)) {
    segment_open_ = false;
  }
  state_ = next;
  return reply;
}

std::optional<SampleEvent> Machine::tick() {
  if (!state_.running) return std::nullopt;
  auto [next, event] = step(state_, 1.0 / state_.tick_rate);
  state_ = next;
  ++steps_;
  if (event.pen_down) {
    if (!segment_open_) {
      segments_.push_back({state_.rig, {}});
      segment_open_ = true;
    }
    segments_.back().samples.push_back({event.t_sim, event.table_point});
  } else {
    segment_open_ = false;
  }
  return event;
}

std::vector<Trace> Machine::pen_traces() const {
  std::vector<Trace> traces;
  for (const Segment& segment : segments_) {
    if (segment.samples.empty()) continue;
    traces.push_back(Trace{FrameTag::Turntable, segment.samples, segment.rig, false});
  }
  return traces;
}

std::vector<SampleEvent> replay(const Rig& rig, double tick_rate, const std::vector<LoggedMessage>& log,
                                std::uint64_t steps) {
  Machine machine(rig, tick_rate);
  std::vector<SampleEvent> events;
  std::size_t next = 0;
  while (machine.steps() < steps) {
    while (next < log.size() && log[next].step == machine.steps()) machine.submit(log[next++].message);
    if (auto event = machine.tick()) {
      events.push_back(*event);
    } else if (next >= log.size() || log[next].step != machine.steps()) {
      break;  // paused with nothing left that could restart it
    }
  }
  return events;
}

}  // namespace trochoid
