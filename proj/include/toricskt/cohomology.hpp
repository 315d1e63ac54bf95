#pragma once

#include "toricskt/fan.hpp"
#include "toricskt/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricskt {

// Degree-2 class as an integer vector over the divisor generators w_1..w_m.
using CohomologyClass = IntVec;

// Degree-4 class in the coordinates of an H4Presentation basis.
using H4Element = IntVec;

// Free presentation of the quotient of Z^ambient by an integer row lattice.
// When a coordinate-subset basis exists it is chosen greedily from the left
// (columns are eliminated right-to-left); otherwise the basis comes from the
// Smith transform. Construction throws TorsionError if the quotient has
// torsion, which for our inputs signals a non-smooth or malformed fan.
struct QuotientPresentation {
  int ambient = 0;
  int rank = 0;
  bool subset_basis = false;
  std::vector<std::size_t> basis_cols;  // 0-based ambient coordinates kept
  IntMatrix coordinate_map;             // ambient x rank
  IntMatrix basis_lift;                 // rank x ambient, representative rows

  IntVec coords_of(const IntVec& ambient_vec) const;
};

QuotientPresentation quotient_by_rows(const IntMatrix& relations);

struct H2Presentation {
  int m = 0;
  int n = 0;
  int rank = 0;
  IntMatrix relation_rows;  // the n rows of the characteristic matrix
  QuotientPresentation q;

  std::vector<int> basis_generators() const;  // 1-based, subset basis only
  IntVec coords(const CohomologyClass& cls) const { return q.coords_of(cls); }
};

struct H4Presentation {
  int m = 0;
  int rank = 0;
  std::vector<std::pair<int, int>> monomials;  // 1-based (i, j), i <= j, lex
  IntMatrix relation_matrix;
  QuotientPresentation q;

  std::vector<std::pair<int, int>> basis_monomials() const;  // subset basis only
};

H2Presentation h2_presentation(const Fan& fan);
H4Presentation h4_presentation(const Fan& fan);

// Presentations plus lookup tables, computed once per fan and then immutable.
struct Cohomology {
  Fan fan;
  std::string hash;  // canonical content hash of the fan
  std::vector<std::vector<bool>> pair_table;
  H2Presentation h2;
  H4Presentation h4;

  int m() const { return fan.m(); }
};

Cohomology compute_cohomology(const Fan& fan);

H4Element product(const Cohomology& ring, const CohomologyClass& u, const CohomologyClass& v);
H4Element square(const Cohomology& ring, const CohomologyClass& u);
bool is_zero(const H4Element& elem);

// Generator class w_i as a coefficient vector.
CohomologyClass generator_class(int m, int i);

}  // namespace toricskt
