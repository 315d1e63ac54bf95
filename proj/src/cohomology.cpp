#include "toricskt/cohomology.hpp"

#include "toricskt/errors.hpp"
#include "toricskt/json_io.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <string>

namespace toricskt {

IntVec QuotientPresentation::coords_of(const IntVec& ambient_vec) const {
  assert(static_cast<int>(ambient_vec.size()) == ambient);
  IntVec out(rank, Int(0));
  for (int a = 0; a < ambient; ++a) {
    if (ambient_vec[a] == 0) continue;
    for (int r = 0; r < rank; ++r) out[r] += ambient_vec[a] * coordinate_map(a, r);
  }
  return out;
}

QuotientPresentation quotient_by_rows(const IntMatrix& relations) {
  QuotientPresentation p;
  p.ambient = static_cast<int>(relations.cols());

  // Eliminate columns right-to-left so the surviving free coordinates are the
  // earliest ones; on Bott-style matrices this keeps w_1..w_k as the basis.
  std::vector<std::size_t> order(relations.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::reverse(order.begin(), order.end());
  Echelon e = echelon_form(relations, order);

  if (e.unit_pivots) {
    p.subset_basis = true;
    std::vector<bool> is_pivot(relations.cols(), false);
    for (auto [col, row] : e.pivots) is_pivot[col] = true;
    for (std::size_t c = 0; c < relations.cols(); ++c)
      if (!is_pivot[c]) p.basis_cols.push_back(c);
    p.rank = static_cast<int>(p.basis_cols.size());

    p.coordinate_map = IntMatrix(p.ambient, p.rank);
    for (int b = 0; b < p.rank; ++b) p.coordinate_map(p.basis_cols[b], b) = 1;
    for (auto [col, row] : e.pivots) {
      // Pivot row reads w_col + sum_b h(row, basis_b) w_basis_b = 0.
      for (int b = 0; b < p.rank; ++b)
        p.coordinate_map(col, b) = -e.h(row, p.basis_cols[b]);
    }

    p.basis_lift = IntMatrix(p.rank, p.ambient);
    for (int b = 0; b < p.rank; ++b) p.basis_lift(b, p.basis_cols[b]) = 1;
    return p;
  }

  Smith s = smith_form(relations);
  for (const Int& d : s.invariants) {
    if (d != 1)
      throw TorsionError(
          "quotient lattice has torsion (invariant factor " + d.get_str() +
          "); smooth compact toric varieties have torsion-free cohomology, so this "
          "indicates an invalid fan");
  }
  const int r = static_cast<int>(s.invariants.size());
  p.subset_basis = false;
  p.rank = p.ambient - r;
  p.coordinate_map = IntMatrix(p.ambient, p.rank);
  for (int a = 0; a < p.ambient; ++a)
    for (int b = 0; b < p.rank; ++b) p.coordinate_map(a, b) = s.v(a, r + b);
  p.basis_lift = IntMatrix(p.rank, p.ambient);
  for (int b = 0; b < p.rank; ++b)
    for (int a = 0; a < p.ambient; ++a) p.basis_lift(b, a) = s.v_inv(r + b, a);
  return p;
}

namespace {

void check_structural(const Fan& fan) {
  // Reuse the structural part of validation; full geometric validity is not
  // required here (torsion reports the failure if the quotient is bad).
  validate_fan_serial(fan);  // throws MalformedFan on structural problems
}

}  // namespace

H2Presentation h2_presentation(const Fan& fan) {
  check_structural(fan);
  H2Presentation h2;
  h2.m = fan.m();
  h2.n = fan.n;
  h2.relation_rows = characteristic_matrix(fan);
  h2.q = quotient_by_rows(h2.relation_rows);
  h2.rank = h2.q.rank;
  return h2;
}

std::vector<int> H2Presentation::basis_generators() const {
  std::vector<int> out;
  if (!q.subset_basis) return out;
  for (std::size_t c : q.basis_cols) out.push_back(static_cast<int>(c) + 1);
  return out;
}

std::vector<std::pair<int, int>> H4Presentation::basis_monomials() const {
  std::vector<std::pair<int, int>> out;
  if (!q.subset_basis) return out;
  for (std::size_t c : q.basis_cols) out.push_back(monomials[c]);
  return out;
}

namespace {

int monomial_index(int m, int i, int j) {
  // 1-based pair (i, j) with i <= j into the lex position among all such pairs.
  assert(1 <= i && i <= j && j <= m);
  int skipped = (i - 1) * m - (i - 1) * (i - 2) / 2;
  return skipped + (j - i);
}

}  // namespace

H4Presentation h4_presentation(const Fan& fan) {
  check_structural(fan);
  const int m = fan.m();
  const int n = fan.n;

  H4Presentation h4;
  h4.m = m;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) h4.monomials.emplace_back(i, j);
  const int num_monomials = static_cast<int>(h4.monomials.size());

  auto pairs = cone_pair_table(fan);
  IntMatrix rel(0, num_monomials);

  // Quadratic Stanley-Reisner generators: w_i w_j = 0 for non-cone pairs.
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (pairs[i - 1][j - 1]) continue;
      IntVec row(num_monomials, Int(0));
      row[monomial_index(m, i, j) ] = 1;
      rel.append_row(row);
    }
  }

  // Each generator times each linear relation row.
  IntMatrix lambda = characteristic_matrix(fan);
  for (int g = 1; g <= m; ++g) {
    for (int r = 0; r < n; ++r) {
      IntVec row(num_monomials, Int(0));
      bool nonzero = false;
      for (int t = 1; t <= m; ++t) {
        const Int& coeff = lambda(r, t - 1);
        if (coeff == 0) continue;
        row[monomial_index(m, std::min(g, t), std::max(g, t))] += coeff;
        nonzero = true;
      }
      if (nonzero) rel.append_row(row);
    }
  }
  if (rel.rows() == 0) rel = IntMatrix(0, num_monomials);

  h4.relation_matrix = rel;
  h4.q = quotient_by_rows(rel);
  h4.rank = h4.q.rank;
  return h4;
}

Cohomology compute_cohomology(const Fan& fan) {
  Cohomology ring;
  ring.fan = fan;
  ring.fan.canonicalize_cones();
  ring.hash = fan_hash(ring.fan);
  ring.pair_table = cone_pair_table(ring.fan);
  ring.h2 = h2_presentation(ring.fan);
  ring.h4 = h4_presentation(ring.fan);
  return ring;
}

H4Element product(const Cohomology& ring, const CohomologyClass& u, const CohomologyClass& v) {
  const int m = ring.m();
  if (static_cast<int>(u.size()) != m || static_cast<int>(v.size()) != m)
    throw DimensionMismatch("class length must be " + std::to_string(m) + ", got " +
                            std::to_string(u.size()) + " and " + std::to_string(v.size()));

  IntVec mono(ring.h4.monomials.size(), Int(0));
  for (int i = 1; i <= m; ++i) {
    if (u[i - 1] == 0) continue;
    for (int j = 1; j <= m; ++j) {
      if (v[j - 1] == 0) continue;
      mono[monomial_index(m, std::min(i, j), std::max(i, j))] += u[i - 1] * v[j - 1];
    }
  }
  return ring.h4.q.coords_of(mono);
}

H4Element square(const Cohomology& ring, const CohomologyClass& u) { return product(ring, u, u); }

bool is_zero(const H4Element& elem) { return is_zero_vec(elem); }

CohomologyClass generator_class(int m, int i) {
  if (i < 1 || i > m)
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(m));
  CohomologyClass cls(m, Int(0));
  cls[i - 1] = 1;
  return cls;
}

}  // namespace toricskt
