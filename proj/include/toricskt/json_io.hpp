#pragma once

#include "toricskt/bott.hpp"
#include "toricskt/fan.hpp"
#include "toricskt/skt.hpp"
#include "toricskt/wedge.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace toricskt {

// Keys are emitted in the documented schema order, so canonical output is a
// plain dump of these objects.
using Json = nlohmann::ordered_json;

// Integers are numbers while they fit in int64 and decimal strings beyond.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& where);
Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j, const std::string& where);

// Fan schema: {"n", "rays", "max_cones"[, "labels"]}; max cones sorted
// ascending, cone list sorted lexicographically. parse_fan throws ParseError
// with field diagnostics; serialize_fan emits the canonical document.
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);
std::string serialize_fan(const Fan& fan);  // canonical text + trailing newline
Fan parse_fan(const std::string& text);

// Content hash of the canonical serialization (compact dump, no newline).
std::string canonical_fan_bytes(const Fan& fan);
std::string fan_hash(const Fan& fan);

// BottSpec schema: {"k": int, "c": [{"i", "j", "value"}, ...]}.
BottSpec bott_spec_from_json(const Json& j);
BottSpec parse_bott_spec(const std::string& text);
Json bott_spec_to_json(const BottSpec& spec);

// Trace file: array of {"step", "wedged_index", "new_index"}.
Json trace_to_json(const WedgeTrace& trace);

// Classes file: array of integer vectors.
std::vector<CohomologyClass> classes_from_json(const Json& j, int expected_len);
std::vector<CohomologyClass> parse_classes(const std::string& text, int expected_len);

Json report_to_json(const ValidationReport& report);

// Certificate schema: {"fan_hash", "classes", "squares", "sum", "verified",
// "base_assumptions"}.
Json certificate_to_json(const SktCertificate& cert);
SktCertificate certificate_from_json(const Json& j);
SktCertificate parse_certificate(const std::string& text);

Json witness_to_json(const IsolationWitness& witness);

// Wraps nlohmann parse failures into ParseError.
Json parse_json(const std::string& text, const std::string& what);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace toricskt
