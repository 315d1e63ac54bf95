#pragma once

#include "toricskt/cohomology.hpp"
#include "toricskt/wedge.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricskt {

// Decomposition w_p = sum_{k in I} a_k w_k with every (p, k) a non-cone pair;
// existence forces w_p^2 = 0.
struct IsolationWitness {
  int p = 0;
  std::vector<int> support;  // I, 1-based, ascending, p excluded
  IntVec coefficients;       // aligned with support
  std::string fan_hash;
};

// Exact decision by integer linear solving over the allowed index set; the
// returned representative is canonical (greedy max-norm reduction against the
// solution lattice, lexicographic tie-break).
std::optional<IsolationWitness> isolation_decompose(const Cohomology& ring, int p);

// Re-validates the witness (InvalidWitness on any broken invariant), then
// reports whether square(w_p) vanishes. True for every valid witness; exposed
// as a checkable implication rather than assumed.
bool check_isolation_implies_square_zero(const Cohomology& ring, const IsolationWitness& witness);

// Same coefficients on the images of the old generators, zero on new ones.
// Throws TraceMismatch when the trace was recorded over a different fan.
IsolationWitness transport_witness(const IsolationWitness& witness, const WedgeTrace& trace);

struct SquareZeroClass {
  CohomologyClass cls;   // primitive, first nonzero coefficient positive
  IntVec span_coords;    // coordinates over the search span
};

// Exhaustive search for square-zero classes with span coordinates in
// [-bound, bound]. The span defaults to the H^2 basis; restrict_generators
// (1-based ray indices, independent in H^2) narrows it. Results are complete
// within the box, deduplicated up to sign, sorted lexicographically.
std::vector<SquareZeroClass> square_zero_search(
    const Cohomology& ring, std::int64_t bound,
    const std::vector<int>* restrict_generators = nullptr);

struct SktCertificate {
  std::string fan_hash;
  std::vector<CohomologyClass> classes;  // even, nonzero count
  std::vector<H4Element> squares;
  H4Element sum;
  bool verified = false;
  std::vector<std::string> base_assumptions;  // {"projective"}
  std::string construction;  // "direct", "square_zero_multiset", "cancellation_pair"
};

SktCertificate certify_skt(const Cohomology& ring, const std::vector<CohomologyClass>& classes);

// Certificates of size rank2k: multisets of square-zero classes first, then
// tuples built from one canceling pair of nonzero squares padded with
// square-zero classes. Deterministic order; at most `limit` results.
std::vector<SktCertificate> find_skt_bundle(const Cohomology& ring, int rank2k,
                                            std::int64_t bound, std::size_t limit = 64);

// Independent re-check of a certificate against a fan: content hash, squares,
// sum, and flag are all recomputed. Returns the list of discrepancies (empty
// means the certificate is internally consistent AND verified).
std::vector<std::string> verify_certificate(const Cohomology& ring, const SktCertificate& cert);

}  // namespace toricskt
