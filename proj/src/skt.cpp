#include "toricskt/skt.hpp"

#include "toricskt/errors.hpp"
#include "toricskt/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace toricskt {

namespace {

Int max_norm(const IntVec& v) {
  Int best = 0;
  for (const Int& x : v) {
    Int a = abs(x);
    if (a > best) best = a;
  }
  return best;
}

bool tuple_less(const IntVec& a, const IntVec& b) {
  Int na = max_norm(a), nb = max_norm(b);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::optional<IsolationWitness> isolation_decompose(const Cohomology& ring, int p) {
  const int m = ring.m();
  if (p < 1 || p > m)
    throw IndexOutOfRange("generator index " + std::to_string(p) + " outside 1.." +
                          std::to_string(m));

  std::vector<int> allowed;
  for (int k = 1; k <= m; ++k) {
    if (k != p && !ring.pair_table[p - 1][k - 1]) allowed.push_back(k);
  }
  if (allowed.empty()) return std::nullopt;

  // Solve sum_k a_k [w_k] = [w_p] in H^2; exactness of the coordinate map
  // makes this equivalent to e_p - a lying in the row space of Lambda.
  const int rank = ring.h2.rank;
  IntMatrix coords(allowed.size(), rank);
  for (std::size_t t = 0; t < allowed.size(); ++t) {
    IntVec row = ring.h2.coords(generator_class(m, allowed[t]));
    for (int r = 0; r < rank; ++r) coords(t, r) = row[r];
  }
  IntVec target = ring.h2.coords(generator_class(m, p));

  auto particular = solve_left(coords, target);
  if (!particular) return std::nullopt;

  // Canonical representative: greedy descent over single steps of the
  // solution lattice basis, minimizing (max-norm, lex).
  IntMatrix kernel = left_kernel(coords);
  IntVec a = *particular;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      for (int sign : {1, -1}) {
        IntVec cand = a;
        for (std::size_t c = 0; c < cand.size(); ++c) cand[c] += sign * kernel(r, c);
        if (tuple_less(cand, a)) {
          a = std::move(cand);
          improved = true;
        }
      }
    }
  }

  IsolationWitness w;
  w.p = p;
  w.fan_hash = ring.hash;
  for (std::size_t t = 0; t < allowed.size(); ++t) {
    if (a[t] == 0) continue;
    w.support.push_back(allowed[t]);
    w.coefficients.push_back(a[t]);
  }
  return w;
}

bool check_isolation_implies_square_zero(const Cohomology& ring,
                                         const IsolationWitness& witness) {
  const int m = ring.m();
  if (witness.p < 1 || witness.p > m)
    throw InvalidWitness("generator index " + std::to_string(witness.p) + " out of range");
  if (witness.support.size() != witness.coefficients.size())
    throw InvalidWitness("support and coefficient lists differ in length");
  if (!witness.fan_hash.empty() && witness.fan_hash != ring.hash)
    throw InvalidWitness("witness was recorded over a different fan");

  std::set<int> seen;
  CohomologyClass decomposition(m, Int(0));
  for (std::size_t t = 0; t < witness.support.size(); ++t) {
    int k = witness.support[t];
    if (k < 1 || k > m) throw InvalidWitness("support index " + std::to_string(k) + " out of range");
    if (k == witness.p) throw InvalidWitness("support contains p itself");
    if (!seen.insert(k).second)
      throw InvalidWitness("support repeats index " + std::to_string(k));
    if (ring.pair_table[witness.p - 1][k - 1])
      throw InvalidWitness("rays " + std::to_string(witness.p) + " and " + std::to_string(k) +
                           " form a cone; the decomposition is not isolating");
    decomposition[k - 1] = witness.coefficients[t];
  }

  // Membership: w_p - sum a_k w_k must vanish in H^2.
  IntVec diff = ring.h2.coords(generator_class(m, witness.p));
  IntVec dec = ring.h2.coords(decomposition);
  for (int r = 0; r < ring.h2.rank; ++r) {
    if (diff[r] != dec[r])
      throw InvalidWitness("w_" + std::to_string(witness.p) +
                           " minus the decomposition is nonzero in H^2");
  }

  return is_zero(square(ring, generator_class(m, witness.p)));
}

IsolationWitness transport_witness(const IsolationWitness& witness, const WedgeTrace& trace) {
  if (witness.fan_hash != trace.base_hash)
    throw TraceMismatch("witness fan hash " + witness.fan_hash.substr(0, 12) +
                        "... does not match trace base hash " + trace.base_hash.substr(0, 12) +
                        "...");
  IsolationWitness out;
  out.p = trace.generator_map.empty() ? witness.p : trace.generator_map[witness.p - 1];
  out.fan_hash = trace.final_hash;
  out.coefficients = witness.coefficients;
  for (int k : witness.support)
    out.support.push_back(trace.generator_map.empty() ? k : trace.generator_map[k - 1]);
  return out;
}

namespace {

std::vector<CohomologyClass> span_classes(const Cohomology& ring,
                                          const std::vector<int>* restrict_generators) {
  const int m = ring.m();
  std::vector<CohomologyClass> span;
  if (restrict_generators) {
    std::set<int> seen;
    for (int g : *restrict_generators) {
      if (g < 1 || g > m)
        throw IndexOutOfRange("span generator " + std::to_string(g) + " outside 1.." +
                              std::to_string(m));
      if (!seen.insert(g).second)
        throw SpecError("span generator " + std::to_string(g) + " repeated");
      span.push_back(generator_class(m, g));
    }
    if (span.empty()) throw SpecError("restricted span is empty");
  } else {
    for (int b = 0; b < ring.h2.rank; ++b) {
      CohomologyClass cls(m, Int(0));
      for (int a = 0; a < m; ++a) cls[a] = ring.h2.q.basis_lift(b, a);
      span.push_back(std::move(cls));
    }
  }

  // The enumeration coordinates must be faithful, so the span has to be
  // independent in H^2.
  IntMatrix coords(span.size(), ring.h2.rank);
  for (std::size_t t = 0; t < span.size(); ++t) {
    IntVec row = ring.h2.coords(span[t]);
    for (int r = 0; r < ring.h2.rank; ++r) coords(t, r) = row[r];
  }
  if (left_kernel(coords).rows() != 0)
    throw SpecError("restricted span generators are dependent in H^2");
  return span;
}

GramForm gram_form(const Cohomology& ring, const std::vector<CohomologyClass>& span) {
  GramForm form;
  form.vars = static_cast<int>(span.size());
  form.out_dim = ring.h4.rank;
  for (int t = 0; t < form.vars; ++t)
    for (int s = t; s < form.vars; ++s) form.gram.push_back(product(ring, span[t], span[s]));
  return form;
}

}  // namespace

std::vector<SquareZeroClass> square_zero_search(const Cohomology& ring, std::int64_t bound,
                                                const std::vector<int>* restrict_generators) {
  if (bound < 1) throw BoundError("bound must be >= 1, got " + std::to_string(bound));
  std::vector<CohomologyClass> span = span_classes(ring, restrict_generators);
  GramForm form = gram_form(ring, span);

  auto hits = enumerate_square_zero_parallel(form, bound);

  std::vector<SquareZeroClass> out;
  out.reserve(hits.size());
  for (const auto& x : hits) {
    SquareZeroClass c;
    c.span_coords.assign(x.begin(), x.end());
    c.cls.assign(ring.m(), Int(0));
    for (int t = 0; t < form.vars; ++t) {
      if (x[t] == 0) continue;
      for (int a = 0; a < ring.m(); ++a) c.cls[a] += Int(x[t]) * span[t][a];
    }
    out.push_back(std::move(c));
  }
  return out;
}

SktCertificate certify_skt(const Cohomology& ring, const std::vector<CohomologyClass>& classes) {
  if (classes.empty() || classes.size() % 2 != 0)
    throw OddRankError("certificate needs an even, nonzero number of classes; got " +
                       std::to_string(classes.size()));
  SktCertificate cert;
  cert.fan_hash = ring.hash;
  cert.classes = classes;
  cert.sum.assign(ring.h4.rank, Int(0));
  for (const auto& cls : classes) {
    H4Element sq = square(ring, cls);
    for (int d = 0; d < ring.h4.rank; ++d) cert.sum[d] += sq[d];
    cert.squares.push_back(std::move(sq));
  }
  cert.verified = is_zero(cert.sum);
  cert.base_assumptions = {"projective"};
  cert.construction = "direct";
  return cert;
}

namespace {

// Multisets of size `count` over indices [0, pool), lexicographic order.
void for_each_multiset(int pool, int count, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> pick(count, 0);
  if (pool == 0) return;
  for (;;) {
    if (!f(pick)) return;
    int t = count - 1;
    while (t >= 0 && pick[t] == pool - 1) --t;
    if (t < 0) return;
    int v = pick[t] + 1;
    for (int s = t; s < count; ++s) pick[s] = v;
  }
}

std::string key_of(const IntVec& v) {
  std::ostringstream os;
  for (const Int& x : v) os << x.get_str() << ',';
  return os.str();
}

}  // namespace

std::vector<SktCertificate> find_skt_bundle(const Cohomology& ring, int rank2k,
                                            std::int64_t bound, std::size_t limit) {
  if (rank2k < 2 || rank2k % 2 != 0)
    throw OddRankError("bundle rank must be even and positive, got " + std::to_string(rank2k));
  if (bound < 1) throw BoundError("bound must be >= 1, got " + std::to_string(bound));

  std::vector<SquareZeroClass> zeros = square_zero_search(ring, bound);
  std::vector<SktCertificate> out;

  // Primary construction: direct sums of individually square-zero classes.
  for_each_multiset(static_cast<int>(zeros.size()), rank2k, [&](const std::vector<int>& pick) {
    std::vector<CohomologyClass> classes;
    for (int idx : pick) classes.push_back(zeros[idx].cls);
    SktCertificate cert = certify_skt(ring, classes);
    cert.construction = "square_zero_multiset";
    out.push_back(std::move(cert));
    return out.size() < limit;
  });
  if (out.size() >= limit) return out;

  // Secondary search: one pair of classes with opposite nonzero squares,
  // padded with square-zero classes when rank2k > 2. This is bounded: the
  // pool is the same coefficient box the primary search used.
  std::vector<CohomologyClass> span = span_classes(ring, nullptr);
  std::vector<std::pair<CohomologyClass, H4Element>> pool;
  {
    const int vars = static_cast<int>(span.size());
    std::vector<std::int64_t> x(vars, -bound);
    bool done = vars == 0;
    while (!done) {
      std::int64_t g = 0, lead = 0;
      for (std::int64_t v : x) {
        if (lead == 0) lead = v;
        g = std::gcd(g, v < 0 ? -v : v);
      }
      if (lead > 0 && g == 1) {
        CohomologyClass cls(ring.m(), Int(0));
        for (int t = 0; t < vars; ++t)
          for (int a = 0; a < ring.m(); ++a) cls[a] += Int(x[t]) * span[t][a];
        H4Element sq = square(ring, cls);
        if (!is_zero(sq)) pool.emplace_back(std::move(cls), std::move(sq));
      }
      int t = vars - 1;
      while (t >= 0 && x[t] == bound) { x[t] = -bound; --t; }
      if (t < 0) done = true; else ++x[t];
    }
  }

  std::map<std::string, std::vector<std::size_t>> by_square;
  for (std::size_t i = 0; i < pool.size(); ++i) by_square[key_of(pool[i].second)].push_back(i);

  for (std::size_t i = 0; i < pool.size() && out.size() < limit; ++i) {
    IntVec negated = pool[i].second;
    for (Int& v : negated) v = -v;
    auto it = by_square.find(key_of(negated));
    if (it == by_square.end()) continue;
    for (std::size_t j : it->second) {
      if (j < i) continue;  // unordered pair, emit once
      if (out.size() >= limit) break;
      std::vector<CohomologyClass> base = {pool[i].first, pool[j].first};
      if (rank2k == 2) {
        SktCertificate cert = certify_skt(ring, base);
        cert.construction = "cancellation_pair";
        if (cert.verified) out.push_back(std::move(cert));
      } else {
        for_each_multiset(static_cast<int>(zeros.size()), rank2k - 2,
                          [&](const std::vector<int>& pick) {
                            std::vector<CohomologyClass> classes = base;
                            for (int idx : pick) classes.push_back(zeros[idx].cls);
                            SktCertificate cert = certify_skt(ring, classes);
                            cert.construction = "cancellation_pair";
                            if (cert.verified) out.push_back(std::move(cert));
                            return out.size() < limit;
                          });
      }
    }
  }
  return out;
}

std::vector<std::string> verify_certificate(const Cohomology& ring, const SktCertificate& cert) {
  std::vector<std::string> failures;
  if (cert.fan_hash != ring.hash)
    failures.push_back("fan hash mismatch: certificate names " + cert.fan_hash.substr(0, 12) +
                       "..., fan is " + ring.hash.substr(0, 12) + "...");
  if (cert.classes.empty() || cert.classes.size() % 2 != 0)
    failures.push_back("class count " + std::to_string(cert.classes.size()) +
                       " is not even and positive");
  if (cert.squares.size() != cert.classes.size())
    failures.push_back("squares list length differs from classes list length");

  H4Element total(ring.h4.rank, Int(0));
  for (std::size_t t = 0; t < cert.classes.size(); ++t) {
    if (static_cast<int>(cert.classes[t].size()) != ring.m()) {
      failures.push_back("class " + std::to_string(t + 1) + " has wrong length");
      continue;
    }
    H4Element sq = square(ring, cert.classes[t]);
    if (t < cert.squares.size() && sq != cert.squares[t])
      failures.push_back("stored square of class " + std::to_string(t + 1) +
                         " differs from the recomputed one");
    for (int d = 0; d < ring.h4.rank; ++d) total[d] += sq[d];
  }
  if (total != cert.sum) failures.push_back("stored sum differs from the recomputed one");
  bool recomputed = is_zero(total);
  if (cert.verified != recomputed)
    failures.push_back(std::string("stored verified flag is ") +
                       (cert.verified ? "true" : "false") + " but recomputation says " +
                       (recomputed ? "true" : "false"));
  if (failures.empty() && !cert.verified)
    failures.push_back("certificate is consistent but does not certify (sum of squares nonzero)");
  return failures;
}

}  // namespace toricskt
