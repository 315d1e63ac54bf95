#pragma once

#include "toricskt/matrix.hpp"

#include <cstdint>
#include <vector>

namespace toricskt {

// Vector-valued quadratic form q(x) = sum_t x_t^2 G_tt + sum_{t<s} 2 x_t x_s G_ts
// with coefficients in the coordinates of an H4 basis. gram is packed by pairs
// t <= s in lex order. A checked int64 fast path is used when every
// coefficient fits; otherwise evaluation stays in arbitrary precision.
struct GramForm {
  int vars = 0;
  int out_dim = 0;
  std::vector<IntVec> gram;  // vars*(vars+1)/2 entries, each of length out_dim

  bool fits_int64() const;
};

// All x in [-bound, bound]^vars with first nonzero entry positive, gcd 1, and
// q(x) = 0, in lexicographic order. The parallel kernel must produce exactly
// the serial reference's output for any thread count.
std::vector<std::vector<std::int64_t>> enumerate_square_zero_serial(const GramForm& form,
                                                                    std::int64_t bound);
std::vector<std::vector<std::int64_t>> enumerate_square_zero_parallel(const GramForm& form,
                                                                      std::int64_t bound);

}  // namespace toricskt
