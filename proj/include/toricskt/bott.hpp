#pragma once

#include "toricskt/fan.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace toricskt {

// Defining data of a height-k Bott tower: one integer constant per pair
// (i, j) with 1 <= i < j <= k. Absent pairs default to 0, so an empty map
// gives the product of projective lines.
struct BottSpec {
  int k = 1;
  std::map<std::pair<int, int>, std::int64_t> c;

  std::int64_t constant(int i, int j) const {
    auto it = c.find({i, j});
    return it == c.end() ? 0 : it->second;
  }
};

// Throws SpecError on k < 1 or constants outside 1 <= i < j <= k.
void check_bott_spec(const BottSpec& spec);

// Fan of the Bott manifold: n = k, rays lambda_1..lambda_2k with matrix
// [I_k | C] where column k+i is -e_i + sum_{j>i} c_{i,j} e_j, and the 2^k max
// cones produced by the inductive lift (one ray per level, sign choice free).
Fan build_bott(const BottSpec& spec);

// w_{k+j} = w_j + sum_{i<j} c_{i,j} w_{k+i}, one relation per level.
struct LinearRelation {
  int lhs;     // 1-based index of the generator being expressed
  IntVec rhs;  // length 2k over w_1..w_2k
};

struct LinearRelations {
  int k = 0;
  std::vector<LinearRelation> relations;
};

LinearRelations bott_linear_relations(const BottSpec& spec);

}  // namespace toricskt
