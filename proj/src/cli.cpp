#include "toricskt/cli.hpp"

#include "toricskt/errors.hpp"
#include "toricskt/json_io.hpp"
#include "toricskt/skt.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

namespace toricskt::cli {

namespace {

constexpr int kExitVerifyFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitMath = 4;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t to_i64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SpecError(what + ": '" + s + "' is not an integer");
  }
}

// --c accepts comma-separated "i,j=v" tuples, e.g. "1,2=3" or "1,2=3,1,3=-2".
void apply_c_assignments(const std::string& text, BottSpec& spec) {
  std::vector<std::string> parts = split(text, '=');
  if (parts.size() < 2) throw SpecError("--c: expected \"i,j=v\" tuples, got '" + text + "'");
  const std::size_t tuples = parts.size() - 1;
  std::vector<std::int64_t> i_of(tuples), j_of(tuples), v_of(tuples);
  for (std::size_t t = 0; t < parts.size(); ++t) {
    std::vector<std::string> nums = split(parts[t], ',');
    std::size_t expect = (t == 0) ? 2 : (t == tuples ? 1 : 3);
    if (nums.size() != expect)
      throw SpecError("--c: malformed tuple list near '" + parts[t] + "'");
    if (t == 0) {
      i_of[0] = to_i64(nums[0], "--c");
      j_of[0] = to_i64(nums[1], "--c");
    } else if (t == tuples) {
      v_of[t - 1] = to_i64(nums[0], "--c");
    } else {
      v_of[t - 1] = to_i64(nums[0], "--c");
      i_of[t] = to_i64(nums[1], "--c");
      j_of[t] = to_i64(nums[2], "--c");
    }
  }
  for (std::size_t t = 0; t < tuples; ++t) {
    auto key = std::make_pair(static_cast<int>(i_of[t]), static_cast<int>(j_of[t]));
    if (spec.c.count(key))
      throw SpecError("--c: constant (" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + ") given twice");
    spec.c[key] = v_of[t];
  }
}

std::vector<int> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const std::string& s : split(text, ','))
    out.push_back(static_cast<int>(to_i64(s, what)));
  return out;
}

IntVec parse_class_string(const std::string& text, int expected_len) {
  IntVec out;
  for (const std::string& s : split(text, ',')) {
    try {
      out.push_back(Int(s));
    } catch (const std::invalid_argument&) {
      throw ParseError("--class: '" + s + "' is not an integer");
    }
  }
  if (expected_len >= 0 && static_cast<int>(out.size()) != expected_len)
    throw DimensionMismatch("--class: has " + std::to_string(out.size()) +
                            " coefficients, fan has m=" + std::to_string(expected_len));
  return out;
}

Fan load_fan(const std::string& path) { return parse_fan(read_file(path)); }

void require_valid_fan(const Fan& fan, const char* op) {
  ValidationReport report = validate_fan(fan);
  if (!report.ok())
    throw InvalidFan(std::string(op) + " requires a fan passing validation; run `validate` " +
                     "for the failure list");
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
  } else {
    write_file(out_path, payload);
  }
}

struct Args {
  std::string fan_path, spec_path, out_path, trace_path, classes_path, cert_path;
  std::string j_text, class_text, span_text;
  std::vector<std::string> c_texts;
  int k = 0;
  int p = 0;
  int rank = 0;
  std::int64_t bound = 10;
  std::uint64_t limit = 64;
};

int dispatch(const std::string& sub, const Args& a, std::ostream& out) {
  if (sub == "bott") {
    BottSpec spec;
    if (!a.spec_path.empty()) {
      if (a.k != 0 || !a.c_texts.empty())
        throw SpecError("--spec excludes inline --k/--c");
      spec = parse_bott_spec(read_file(a.spec_path));
    } else {
      if (a.k == 0) throw SpecError("either --spec or --k is required");
      spec.k = a.k;
      for (const std::string& text : a.c_texts) apply_c_assignments(text, spec);
    }
    Fan fan = build_bott(spec);
    emit(serialize_fan(fan), a.out_path, out);
    return 0;
  }

  if (sub == "wedge") {
    Fan fan = load_fan(a.fan_path);
    JVector j;
    for (int e : parse_index_list(a.j_text, "--J")) j.entries.push_back(e);
    auto [wedged, trace] = wedge_J(fan, j);
    if (!a.trace_path.empty()) write_file(a.trace_path, dump(trace_to_json(trace)));
    emit(serialize_fan(wedged), a.out_path, out);
    return 0;
  }

  if (sub == "validate") {
    Fan fan = load_fan(a.fan_path);
    ValidationReport report = validate_fan(fan);
    emit(dump(report_to_json(report)), a.out_path, out);
    return 0;
  }

  if (sub == "cohomology") {
    Fan fan = load_fan(a.fan_path);
    Cohomology ring = compute_cohomology(fan);
    Json j;
    j["fan_hash"] = ring.hash;
    j["m"] = ring.m();
    j["n"] = ring.fan.n;
    Json h2;
    h2["rank"] = ring.h2.rank;
    h2["subset_basis"] = ring.h2.q.subset_basis;
    if (ring.h2.q.subset_basis) h2["basis_generators"] = ring.h2.basis_generators();
    Json basis_classes = Json::array();
    for (int b = 0; b < ring.h2.rank; ++b)
      basis_classes.push_back(intvec_to_json(ring.h2.q.basis_lift.row(b)));
    h2["basis_classes"] = std::move(basis_classes);
    j["h2"] = std::move(h2);
    Json h4;
    h4["rank"] = ring.h4.rank;
    h4["subset_basis"] = ring.h4.q.subset_basis;
    if (ring.h4.q.subset_basis) {
      Json monos = Json::array();
      for (auto [mi, mj] : ring.h4.basis_monomials()) monos.push_back(Json::array({mi, mj}));
      h4["basis_monomials"] = std::move(monos);
    }
    j["h4"] = std::move(h4);
    if (!a.class_text.empty()) {
      CohomologyClass cls = parse_class_string(a.class_text, ring.m());
      H4Element sq = square(ring, cls);
      j["class"] = intvec_to_json(cls);
      j["square"] = intvec_to_json(sq);
      j["square_is_zero"] = is_zero(sq);
    }
    emit(dump(j), a.out_path, out);
    return 0;
  }

  if (sub == "isolate") {
    Fan fan = load_fan(a.fan_path);
    require_valid_fan(fan, "isolate");
    Cohomology ring = compute_cohomology(fan);
    auto witness = isolation_decompose(ring, a.p);
    Json j;
    j["fan_hash"] = ring.hash;
    j["p"] = a.p;
    if (witness) {
      j["witness"] = witness_to_json(*witness);
      j["square_zero"] = check_isolation_implies_square_zero(ring, *witness);
    } else {
      j["witness"] = nullptr;
      j["square_zero"] = nullptr;
    }
    emit(dump(j), a.out_path, out);
    return 0;
  }

  if (sub == "square-zero") {
    Fan fan = load_fan(a.fan_path);
    require_valid_fan(fan, "square-zero");
    Cohomology ring = compute_cohomology(fan);
    std::vector<int> span;
    const std::vector<int>* restrict_ptr = nullptr;
    if (!a.span_text.empty()) {
      span = parse_index_list(a.span_text, "--span");
      restrict_ptr = &span;
    }
    auto classes = square_zero_search(ring, a.bound, restrict_ptr);
    Json j;
    j["fan_hash"] = ring.hash;
    j["bound"] = a.bound;
    if (restrict_ptr) j["span_generators"] = span;
    j["h2_rank"] = ring.h2.rank;
    j["count"] = classes.size();
    Json arr = Json::array();
    for (const auto& c : classes) {
      Json e;
      e["class"] = intvec_to_json(c.cls);
      e["span_coords"] = intvec_to_json(c.span_coords);
      arr.push_back(std::move(e));
    }
    j["classes"] = std::move(arr);
    emit(dump(j), a.out_path, out);
    return 0;
  }

  if (sub == "certify") {
    Fan fan = load_fan(a.fan_path);
    require_valid_fan(fan, "certify");
    Cohomology ring = compute_cohomology(fan);
    auto classes = parse_classes(read_file(a.classes_path), ring.m());
    SktCertificate cert = certify_skt(ring, classes);
    emit(dump(certificate_to_json(cert)), a.out_path, out);
    return 0;
  }

  if (sub == "find-bundle") {
    Fan fan = load_fan(a.fan_path);
    require_valid_fan(fan, "find-bundle");
    Cohomology ring = compute_cohomology(fan);
    auto certs = find_skt_bundle(ring, a.rank, a.bound, a.limit);
    Json j;
    j["fan_hash"] = ring.hash;
    j["rank"] = a.rank;
    j["bound"] = a.bound;
    j["limit"] = a.limit;
    j["count"] = certs.size();
    Json arr = Json::array();
    for (const auto& cert : certs) {
      Json e;
      e["construction"] = cert.construction;
      e["certificate"] = certificate_to_json(cert);
      arr.push_back(std::move(e));
    }
    j["certificates"] = std::move(arr);
    emit(dump(j), a.out_path, out);
    return 0;
  }

  if (sub == "verify-certificate") {
    Fan fan = load_fan(a.fan_path);
    Cohomology ring = compute_cohomology(fan);
    SktCertificate cert = parse_certificate(read_file(a.cert_path));
    std::vector<std::string> failures = verify_certificate(ring, cert);
    Json j;
    j["verified"] = failures.empty();
    j["failures"] = failures;
    emit(dump(j), a.out_path, out);
    return failures.empty() ? 0 : kExitVerifyFalse;
  }

  throw SpecError("unknown subcommand '" + sub + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-integer toolkit for Bott-tower fans, simplicial wedges, and "
               "sum-of-squares certificates in degree-4 cohomology"};
  app.name("sktcert");
  app.require_subcommand(1);

  Args a;

  CLI::App* bott = app.add_subcommand("bott", "build the fan of a Bott tower");
  bott->add_option("--spec", a.spec_path, "BottSpec JSON file");
  bott->add_option("--k", a.k, "tower height (inline spec)");
  bott->add_option("--c", a.c_texts, "constants as \"i,j=v\" tuples (repeatable)");
  bott->add_option("--out", a.out_path, "write the fan here instead of stdout");

  CLI::App* wedge = app.add_subcommand("wedge", "apply a J-vector of simplicial wedges");
  wedge->add_option("--fan", a.fan_path, "fan JSON file")->required();
  wedge->add_option("--J", a.j_text, "comma-separated J entries, one per ray")->required();
  wedge->add_option("--out", a.out_path, "write the wedged fan here instead of stdout");
  wedge->add_option("--trace", a.trace_path, "write the step trace here");

  CLI::App* validate = app.add_subcommand("validate", "smoothness / facet balance report");
  validate->add_option("--fan", a.fan_path, "fan JSON file")->required();
  validate->add_option("--out", a.out_path, "write the report here instead of stdout");

  CLI::App* cohomology = app.add_subcommand("cohomology", "H^2 / H^4 presentation and squares");
  cohomology->add_option("--fan", a.fan_path, "fan JSON file")->required();
  cohomology->add_option("--class", a.class_text, "degree-2 class as comma-separated coefficients");
  cohomology->add_option("--out", a.out_path, "write the output here instead of stdout");

  CLI::App* isolate = app.add_subcommand("isolate", "decide the isolation property of w_p");
  isolate->add_option("--fan", a.fan_path, "fan JSON file")->required();
  isolate->add_option("--p", a.p, "1-based generator index")->required();
  isolate->add_option("--out", a.out_path, "write the output here instead of stdout");

  CLI::App* square_zero = app.add_subcommand("square-zero", "enumerate square-zero classes");
  square_zero->add_option("--fan", a.fan_path, "fan JSON file")->required();
  square_zero->add_option("--bound", a.bound, "coefficient box bound (default 10)");
  square_zero->add_option("--span", a.span_text, "restrict to these 1-based generators");
  square_zero->add_option("--out", a.out_path, "write the output here instead of stdout");

  CLI::App* certify = app.add_subcommand("certify", "certify a list of classes");
  certify->add_option("--fan", a.fan_path, "fan JSON file")->required();
  certify->add_option("--classes", a.classes_path, "JSON array of classes")->required();
  certify->add_option("--out", a.out_path, "write the certificate here instead of stdout");

  CLI::App* find_bundle = app.add_subcommand("find-bundle", "search for verified certificates");
  find_bundle->add_option("--fan", a.fan_path, "fan JSON file")->required();
  find_bundle->add_option("--rank", a.rank, "even torus rank 2k")->required();
  find_bundle->add_option("--bound", a.bound, "coefficient box bound (default 10)");
  find_bundle->add_option("--limit", a.limit, "maximum number of certificates (default 64)");
  find_bundle->add_option("--out", a.out_path, "write the output here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify-certificate", "re-verify a stored certificate");
  verify->add_option("--fan", a.fan_path, "fan JSON file")->required();
  verify->add_option("--certificate", a.cert_path, "certificate JSON file")->required();
  verify->add_option("--out", a.out_path, "write the verdict here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Usage:
        return kExitUsage;
      case ErrorKind::Parse:
        return kExitParse;
      case ErrorKind::Math:
        return kExitMath;
    }
    return kExitMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMath;
  }
}

}  // namespace toricskt::cli
