#include "trochoid/serialize.hpp"

#include <stdexcept>

namespace trochoid {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) throw std::invalid_argument("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw std::invalid_argument(std::string("missing key '") + key + "'");
  return *it;
}

double phase_from_json(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) return 0.0;
  if (it->is_number()) return it->get<double>();
  if (it->is_string()) return Rational::parse(it->get<std::string>()).to_double();
  throw std::invalid_argument(std::string("'") + key + "' must be a number");
}

Json n_json(const Rational& n) {
  if (n.is_integer()) return n.num();
  return n.to_string();
}

}  // namespace

Rational length_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) return Rational::from_double(value.get<double>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  throw std::invalid_argument("length must be a number or a decimal/fraction string");
}

Frequency frequency_from_json(const Json& value) {
  if (value.is_number_integer()) return Frequency(value.get<std::int64_t>());
  if (value.is_string()) return Frequency::parse(value.get<std::string>());
  throw std::invalid_argument("frequency must be an integer or a \"p/q\" string");
}

Json to_json(const Rig& rig) {
  Json doc;
  doc["a"] = rig.a.to_string();
  doc["b"] = rig.b.to_string();
  doc["omega_table"] = rig.big_omega.to_string();
  doc["omega_pen"] = rig.small_omega.to_string();
  doc["polarization"] = to_string(rig.polarization);
  doc["phase_table"] = rig.phase_table;
  doc["phase_pen"] = rig.phase_pen;
  return doc;
}

Rig rig_from_json(const Json& doc) {
  Rig rig;
  rig.a = length_from_json(require(doc, "a"));
  rig.b = length_from_json(require(doc, "b"));
  rig.big_omega = frequency_from_json(require(doc, "omega_table"));
  rig.small_omega = frequency_from_json(require(doc, "omega_pen"));
  rig.polarization = parse_polarization(require(doc, "polarization").get<std::string>());
  rig.phase_table = phase_from_json(doc, "phase_table");
  rig.phase_pen = phase_from_json(doc, "phase_pen");
  validate(rig);
  return rig;
}

Json to_json(const SlideOp& op) {
  Json doc;
  doc["method"] = to_string(op.method);
  doc["magnitude"] = op.magnitude.to_string();
  doc["direction"] = to_string(op.direction);
  return doc;
}

SlideOp slide_op_from_json(const Json& doc) {
  SlideOp op;
  op.method = parse_slide_method(require(doc, "method").get<std::string>());
  op.magnitude = length_from_json(require(doc, "magnitude"));
  op.direction = parse_slide_direction(require(doc, "direction").get<std::string>());
  validate(op);
  return op;
}

Json to_json(const LinearRig& rig) {
  Json doc;
  doc["r"] = rig.r.to_string();
  doc["R"] = rig.R.to_string();
  doc["omega"] = rig.omega.to_string();
  return doc;
}

LinearRig linear_rig_from_json(const Json& doc) {
  LinearRig rig{length_from_json(require(doc, "r")), length_from_json(require(doc, "R")),
                frequency_from_json(require(doc, "omega"))};
  validate(rig);
  return rig;
}

Json to_json(const EllipseSpec& spec) {
  Json doc;
  doc["A"] = spec.semi_major;
  doc["B"] = spec.semi_minor;
  doc["e"] = spec.eccentricity;
  return doc;
}

Json to_json(const CurveClass& c) {
  Json doc;
  doc["class"] = curve_name(c);
  std::visit(
      [&doc](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, curve::Epicycloid> || std::is_same_v<T, curve::Hypocycloid>) {
          doc["n"] = n_json(v.n);
          if (v.fractional()) doc["fractional"] = true;
        } else if constexpr (std::is_same_v<T, curve::Epitrochoid> || std::is_same_v<T, curve::Hypotrochoid>) {
          doc["slide"] = to_string(v.slide);
        } else if constexpr (std::is_same_v<T, curve::Ellipse>) {
          doc["semi_major"] = v.semi_major;
          doc["semi_minor"] = v.semi_minor;
          doc["eccentricity"] = v.eccentricity;
        } else if constexpr (std::is_same_v<T, curve::LineSegment>) {
          doc["half_length"] = v.half_length;
        } else {
          doc["radius"] = v.radius;
        }
      },
      c);
  return doc;
}

Json trace_metadata(const Trace& trace) {
  Json doc;
  doc["frame"] = to_string(trace.frame);
  doc["closed"] = trace.closed;
  doc["samples"] = trace.samples.size();
  if (const auto* rig = std::get_if<Rig>(&trace.rig)) {
    doc["rig"] = to_json(*rig);
  } else {
    doc["linear_rig"] = to_json(std::get<LinearRig>(trace.rig));
  }
  return doc;
}

}  // namespace trochoid
