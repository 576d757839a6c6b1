#pragma once

// Flat JSON documents for rigs, slide operations and classification results.
// Frequencies always travel as fraction strings ("15", "5/2"), never floats.

#include <json.hpp>

#include "trochoid/ellipse.hpp"
#include "trochoid/kinematics.hpp"
#include "trochoid/linear_rig.hpp"
#include "trochoid/sliding.hpp"
#include "trochoid/trace.hpp"

namespace trochoid {

using Json = nlohmann::ordered_json;

// Lengths accept JSON numbers or decimal/fraction strings. Throws
// std::invalid_argument on malformed values.
Rational length_from_json(const Json& value);
Frequency frequency_from_json(const Json& value);

Json to_json(const Rig& rig);
Rig rig_from_json(const Json& doc);

Json to_json(const SlideOp& op);
SlideOp slide_op_from_json(const Json& doc);

Json to_json(const LinearRig& rig);
LinearRig linear_rig_from_json(const Json& doc);

Json to_json(const EllipseSpec& spec);

// {"class":"epicycloid","n":5} and friends, keys in a fixed order.
Json to_json(const CurveClass& c);

// Metadata sidecar for a CSV trace: frame, closed flag and rig.
Json trace_metadata(const Trace& trace);

}  // namespace trochoid
