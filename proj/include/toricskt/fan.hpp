#pragma once

#include "toricskt/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toricskt {

// Primitive lattice generator of a ray, as a column of the characteristic
// matrix. Coordinates stay in int64; all derived arithmetic is done in Int.
using RayVector = std::vector<std::int64_t>;

// Complete simplicial fan given by its maximal cones over an ordered ray list.
// Ray and cone indices are 1-based everywhere, matching the external JSON
// format. max_cones is kept canonical: each cone sorted ascending, the list
// sorted lexicographically.
struct Fan {
  int n = 0;
  std::vector<RayVector> rays;
  std::vector<std::vector<int>> max_cones;
  std::vector<std::string> labels;  // optional, cosmetic

  int m() const { return static_cast<int>(rays.size()); }

  void canonicalize_cones();

  bool operator==(const Fan& other) const = default;
};

struct ValidationFailure {
  std::string kind;        // "nonunimodular_cone" | "facet_imbalance" | "nonprimitive_ray"
  int cone_index = 0;      // 1-based position in max_cones, when applicable
  int ray_index = 0;       // 1-based, when applicable
  Int determinant = 0;     // for nonunimodular_cone
  std::vector<int> facet;  // for facet_imbalance
  int count = 0;           // facet incidence count
};

struct ValidationReport {
  bool smooth = false;
  bool facet_balanced = false;
  bool ray_primitivity = false;
  std::vector<ValidationFailure> failures;

  bool ok() const { return smooth && facet_balanced && ray_primitivity; }
};

// Throws MalformedFan on structural violations (cone cardinality, index
// range, duplicate rays/cones, unused rays); mathematical defects are
// reported as flags. Cone determinants are evaluated in parallel.
ValidationReport validate_fan(const Fan& fan);

// Single-threaded reference for validate_fan; must agree exactly.
ValidationReport validate_fan_serial(const Fan& fan);

// True iff rays i and j (1-based, distinct) lie in a common max cone.
bool is_cone_pair(const Fan& fan, int i, int j);

// Symmetric m x m lookup table of is_cone_pair; diagonal is true.
std::vector<std::vector<bool>> cone_pair_table(const Fan& fan);

// n x m matrix with the rays as columns.
IntMatrix characteristic_matrix(const Fan& fan);

}  // namespace toricskt
