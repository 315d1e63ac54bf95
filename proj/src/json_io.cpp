#include "toricskt/json_io.hpp"

#include "toricskt/errors.hpp"
#include "toricskt/hash.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace toricskt {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError(where + ": '" + j.get<std::string>() + "' is not an integer");
    }
  }
  throw ParseError(where + ": expected an integer, got " + std::string(j.type_name()));
}

Json intvec_to_json(const IntVec& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

IntVec intvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  IntVec out;
  for (std::size_t t = 0; t < j.size(); ++t)
    out.push_back(int_from_json(j[t], where + "[" + std::to_string(t + 1) + "]"));
  return out;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << bytes;
}

Json fan_to_json(const Fan& fan) {
  Fan canonical = fan;
  canonical.canonicalize_cones();
  Json j;
  j["n"] = canonical.n;
  Json rays = Json::array();
  for (const auto& ray : canonical.rays) {
    Json r = Json::array();
    for (std::int64_t v : ray) r.push_back(v);
    rays.push_back(std::move(r));
  }
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const auto& cone : canonical.max_cones) cones.push_back(cone);
  j["max_cones"] = std::move(cones);
  if (!canonical.labels.empty()) j["labels"] = canonical.labels;
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("fan: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("fan.n: expected an integer");
  Fan fan;
  fan.n = j["n"].get<int>();
  if (fan.n < 1) throw ParseError("fan.n: must be >= 1, got " + std::to_string(fan.n));

  if (!j.contains("rays") || !j["rays"].is_array())
    throw ParseError("fan.rays: expected an array of integer arrays");
  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    const Json& rj = j["rays"][i];
    const std::string where = "fan.rays[" + std::to_string(i + 1) + "]";
    if (!rj.is_array()) throw ParseError(where + ": expected an array");
    if (static_cast<int>(rj.size()) != fan.n)
      throw ParseError(where + ": has " + std::to_string(rj.size()) + " entries, expected n=" +
                       std::to_string(fan.n));
    RayVector ray;
    for (std::size_t c = 0; c < rj.size(); ++c) {
      if (!rj[c].is_number_integer())
        throw ParseError(where + "[" + std::to_string(c + 1) + "]: expected an integer, got " +
                         std::string(rj[c].type_name()));
      ray.push_back(rj[c].get<std::int64_t>());
    }
    for (std::size_t prev = 0; prev < fan.rays.size(); ++prev) {
      if (fan.rays[prev] == ray)
        throw ParseError(where + ": duplicate of ray " + std::to_string(prev + 1));
    }
    fan.rays.push_back(std::move(ray));
  }
  if (fan.rays.empty()) throw ParseError("fan.rays: must be nonempty");

  if (!j.contains("max_cones") || !j["max_cones"].is_array())
    throw ParseError("fan.max_cones: expected an array of index arrays");
  for (std::size_t i = 0; i < j["max_cones"].size(); ++i) {
    const Json& cj = j["max_cones"][i];
    const std::string where = "fan.max_cones[" + std::to_string(i + 1) + "]";
    if (!cj.is_array()) throw ParseError(where + ": expected an array");
    std::vector<int> cone;
    for (std::size_t c = 0; c < cj.size(); ++c) {
      if (!cj[c].is_number_integer())
        throw ParseError(where + "[" + std::to_string(c + 1) + "]: expected an integer");
      int idx = cj[c].get<int>();
      if (idx < 1 || idx > fan.m())
        throw ParseError(where + ": ray index " + std::to_string(idx) + " outside 1.." +
                         std::to_string(fan.m()));
      cone.push_back(idx);
    }
    std::sort(cone.begin(), cone.end());
    for (std::size_t c = 1; c < cone.size(); ++c) {
      if (cone[c] == cone[c - 1])
        throw ParseError(where + ": repeats ray index " + std::to_string(cone[c]));
    }
    for (const auto& prev : fan.max_cones) {
      if (prev == cone) throw ParseError(where + ": duplicate max cone");
    }
    fan.max_cones.push_back(std::move(cone));
  }
  if (fan.max_cones.empty()) throw ParseError("fan.max_cones: must be nonempty");

  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw ParseError("fan.labels: expected an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("fan.labels: expected an array of strings");
      fan.labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(fan.labels.size()) != fan.m())
      throw ParseError("fan.labels: has " + std::to_string(fan.labels.size()) +
                       " entries, expected m=" + std::to_string(fan.m()));
  }
  fan.canonicalize_cones();
  return fan;
}

std::string canonical_fan_bytes(const Fan& fan) { return fan_to_json(fan).dump(); }

std::string serialize_fan(const Fan& fan) { return canonical_fan_bytes(fan) + "\n"; }

Fan parse_fan(const std::string& text) { return fan_from_json(parse_json(text, "fan")); }

std::string fan_hash(const Fan& fan) { return sha256_hex(canonical_fan_bytes(fan)); }

BottSpec bott_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("bott spec: expected a JSON object");
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw ParseError("bott spec.k: expected an integer");
  BottSpec spec;
  spec.k = j["k"].get<int>();
  if (j.contains("c")) {
    if (!j["c"].is_array()) throw ParseError("bott spec.c: expected an array");
    for (std::size_t t = 0; t < j["c"].size(); ++t) {
      const Json& e = j["c"][t];
      const std::string where = "bott spec.c[" + std::to_string(t + 1) + "]";
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("value"))
        throw ParseError(where + ": expected an object with fields i, j, value");
      if (!e["i"].is_number_integer() || !e["j"].is_number_integer() ||
          !e["value"].is_number_integer())
        throw ParseError(where + ": fields i, j, value must be integers");
      auto key = std::make_pair(e["i"].get<int>(), e["j"].get<int>());
      if (spec.c.count(key))
        throw ParseError(where + ": duplicate constant for (i,j)=(" + std::to_string(key.first) +
                         "," + std::to_string(key.second) + ")");
      spec.c[key] = e["value"].get<std::int64_t>();
    }
  }
  return spec;
}

BottSpec parse_bott_spec(const std::string& text) {
  return bott_spec_from_json(parse_json(text, "bott spec"));
}

Json bott_spec_to_json(const BottSpec& spec) {
  Json j;
  j["k"] = spec.k;
  Json c = Json::array();
  for (const auto& [key, value] : spec.c) {
    Json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["value"] = value;
    c.push_back(std::move(e));
  }
  j["c"] = std::move(c);
  return j;
}

Json trace_to_json(const WedgeTrace& trace) {
  Json arr = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["step"] = step.step;
    s["wedged_index"] = step.wedged_index;
    s["new_index"] = step.new_index;
    arr.push_back(std::move(s));
  }
  return arr;
}

std::vector<CohomologyClass> classes_from_json(const Json& j, int expected_len) {
  if (!j.is_array()) throw ParseError("classes: expected an array of integer vectors");
  std::vector<CohomologyClass> out;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string where = "classes[" + std::to_string(t + 1) + "]";
    IntVec v = intvec_from_json(j[t], where);
    if (expected_len >= 0 && static_cast<int>(v.size()) != expected_len)
      throw ParseError(where + ": has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(expected_len));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CohomologyClass> parse_classes(const std::string& text, int expected_len) {
  return classes_from_json(parse_json(text, "classes"), expected_len);
}

Json report_to_json(const ValidationReport& report) {
  Json j;
  j["smooth"] = report.smooth;
  j["facet_balanced"] = report.facet_balanced;
  j["ray_primitivity"] = report.ray_primitivity;
  j["valid"] = report.ok();
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json e;
    e["kind"] = f.kind;
    if (f.kind == "nonunimodular_cone") {
      e["cone_index"] = f.cone_index;
      e["determinant"] = int_to_json(f.determinant);
    } else if (f.kind == "facet_imbalance") {
      e["facet"] = f.facet;
      e["count"] = f.count;
    } else if (f.kind == "nonprimitive_ray") {
      e["ray_index"] = f.ray_index;
    }
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j;
}

Json certificate_to_json(const SktCertificate& cert) {
  Json j;
  j["fan_hash"] = cert.fan_hash;
  Json classes = Json::array();
  for (const auto& cls : cert.classes) classes.push_back(intvec_to_json(cls));
  j["classes"] = std::move(classes);
  Json squares = Json::array();
  for (const auto& sq : cert.squares) squares.push_back(intvec_to_json(sq));
  j["squares"] = std::move(squares);
  j["sum"] = intvec_to_json(cert.sum);
  j["verified"] = cert.verified;
  j["base_assumptions"] = cert.base_assumptions;
  return j;
}

SktCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("certificate: expected a JSON object");
  for (const char* field : {"fan_hash", "classes", "squares", "sum", "verified"}) {
    if (!j.contains(field))
      throw ParseError(std::string("certificate.") + field + ": missing");
  }
  SktCertificate cert;
  if (!j["fan_hash"].is_string()) throw ParseError("certificate.fan_hash: expected a string");
  cert.fan_hash = j["fan_hash"].get<std::string>();
  if (!j["classes"].is_array()) throw ParseError("certificate.classes: expected an array");
  for (std::size_t t = 0; t < j["classes"].size(); ++t)
    cert.classes.push_back(
        intvec_from_json(j["classes"][t], "certificate.classes[" + std::to_string(t + 1) + "]"));
  if (!j["squares"].is_array()) throw ParseError("certificate.squares: expected an array");
  for (std::size_t t = 0; t < j["squares"].size(); ++t)
    cert.squares.push_back(
        intvec_from_json(j["squares"][t], "certificate.squares[" + std::to_string(t + 1) + "]"));
  cert.sum = intvec_from_json(j["sum"], "certificate.sum");
  if (!j["verified"].is_boolean()) throw ParseError("certificate.verified: expected a boolean");
  cert.verified = j["verified"].get<bool>();
  if (j.contains("base_assumptions")) {
    if (!j["base_assumptions"].is_array())
      throw ParseError("certificate.base_assumptions: expected an array of strings");
    for (const auto& s : j["base_assumptions"]) {
      if (!s.is_string())
        throw ParseError("certificate.base_assumptions: expected an array of strings");
      cert.base_assumptions.push_back(s.get<std::string>());
    }
  }
  return cert;
}

SktCertificate parse_certificate(const std::string& text) {
  return certificate_from_json(parse_json(text, "certificate"));
}

Json witness_to_json(const IsolationWitness& witness) {
  Json j;
  j["p"] = witness.p;
  j["support"] = witness.support;
  j["coefficients"] = intvec_to_json(witness.coefficients);
  j["fan_hash"] = witness.fan_hash;
  return j;
}

}  // namespace toricskt
