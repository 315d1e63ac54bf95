#include "toricskt/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace toricskt {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void IntMatrix::append_row(const IntVec& v) {
  assert(cols_ == 0 || v.size() == cols_);
  if (cols_ == 0) cols_ = v.size();
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

IntVec operator*(const IntVec& y, const IntMatrix& a) {
  assert(y.size() == a.rows());
  IntVec out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (y[r] == 0) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += y[r] * a(r, c);
  }
  return out;
}

bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int det(IntMatrix a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { swap_row = i; break; }
      if (swap_row == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign == 1 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// row_i of (h|u) += q * row_j
void add_row_multiple(IntMatrix& h, IntMatrix& u, std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < h.cols(); ++c) h(i, c) += q * h(j, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += q * u(j, c);
}

void negate_row(IntMatrix& h, IntMatrix& u, std::size_t i) {
  for (std::size_t c = 0; c < h.cols(); ++c) h(i, c) = -h(i, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
}

}  // namespace

Echelon echelon_form(const IntMatrix& a, const std::vector<std::size_t>& column_order) {
  Echelon e;
  e.h = a;
  e.transform = IntMatrix::identity(a.rows());
  std::vector<bool> used(a.rows(), false);

  for (std::size_t col : column_order) {
    assert(col < a.cols());
    // Accumulate the gcd of the unused rows' entries in this column into one
    // pivot row; the paired 2x2 transforms are unimodular.
    std::size_t pivot_row = a.rows();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (used[r] || e.h(r, col) == 0) continue;
      if (pivot_row == a.rows()) { pivot_row = r; continue; }
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 e.h(pivot_row, col).get_mpz_t(), e.h(r, col).get_mpz_t());
      Int a_over_g = e.h(pivot_row, col) / g;
      Int b_over_g = e.h(r, col) / g;
      for (std::size_t c = 0; c < e.h.cols(); ++c) {
        Int top = p * e.h(pivot_row, c) + q * e.h(r, c);
        Int bot = a_over_g * e.h(r, c) - b_over_g * e.h(pivot_row, c);
        e.h(pivot_row, c) = top;
        e.h(r, c) = bot;
      }
      for (std::size_t c = 0; c < e.transform.cols(); ++c) {
        Int top = p * e.transform(pivot_row, c) + q * e.transform(r, c);
        Int bot = a_over_g * e.transform(r, c) - b_over_g * e.transform(pivot_row, c);
        e.transform(pivot_row, c) = top;
        e.transform(r, c) = bot;
      }
    }
    if (pivot_row == a.rows()) continue;  // column already zero; stays free

    if (e.h(pivot_row, col) < 0) negate_row(e.h, e.transform, pivot_row);
    const Int g = e.h(pivot_row, col);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || e.h(r, col) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), e.h(r, col).get_mpz_t(), g.get_mpz_t());
      add_row_multiple(e.h, e.transform, r, pivot_row, Int(-q));
    }
    used[pivot_row] = true;
    e.pivots.emplace_back(col, pivot_row);
    if (g != 1) e.unit_pivots = false;
  }
  return e;
}

Echelon echelon_form(const IntMatrix& a) {
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return echelon_form(a, order);
}

bool solve_in_lattice(const Echelon& e, IntVec v, IntVec* coeffs) {
  assert(v.size() == e.h.cols());
  if (coeffs) coeffs->assign(e.h.rows(), Int(0));
  for (auto [col, row] : e.pivots) {
    const Int& g = e.h(row, col);
    if (v[col] == 0) continue;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[col].get_mpz_t(), g.get_mpz_t());
    if (rem != 0) return false;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * e.h(row, c);
    if (coeffs) (*coeffs)[row] = q;
  }
  return is_zero_vec(v);
}

std::optional<IntVec> solve_left(const IntMatrix& a, const IntVec& b) {
  Echelon e = echelon_form(a);
  IntVec t;
  if (!solve_in_lattice(e, b, &t)) return std::nullopt;
  return t * e.transform;
}

IntMatrix left_kernel(const IntMatrix& a) {
  Echelon e = echelon_form(a);
  IntMatrix k;
  for (std::size_t r = 0; r < e.h.rows(); ++r) {
    if (is_zero_vec(e.h.row(r))) k.append_row(e.transform.row(r));
  }
  if (k.rows() == 0) k = IntMatrix(0, a.rows());
  return k;
}

namespace {

struct SmithOps {
  IntMatrix& d;
  IntMatrix& u;
  IntMatrix& v;
  IntMatrix& v_inv;

  void row_add(std::size_t i, std::size_t j, const Int& q) {  // row_i += q * row_j
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += q * d(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += q * u(j, c);
  }
  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
  void col_add(std::size_t j, std::size_t i, const Int& q) {  // col_j += q * col_i
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, j) += q * d(r, i);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) += q * v(r, i);
    // inverse op on v_inv: row_i -= q * row_j
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(i, c) -= q * v_inv(j, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
  }
  void col_negate(std::size_t j) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, j) = -d(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) = -v(r, j);
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(j, c) = -v_inv(j, c);
  }
};

}  // namespace

Smith smith_form(const IntMatrix& a) {
  Smith s;
  s.d = a;
  s.u = IntMatrix::identity(a.rows());
  s.v = IntMatrix::identity(a.cols());
  s.v_inv = IntMatrix::identity(a.cols());
  SmithOps ops{s.d, s.u, s.v, s.v_inv};

  const std::size_t nmin = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < nmin; ++t) {
    // Locate the nonzero entry of minimal absolute value in the trailing block.
    std::size_t pi = a.rows(), pj = a.cols();
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (s.d(i, j) == 0) continue;
        Int mag = abs(s.d(i, j));
        if (pi == a.rows() || mag < best) { best = mag; pi = i; pj = j; }
      }
    }
    if (pi == a.rows()) break;  // trailing block is zero
    if (pi != t) ops.row_swap(t, pi);
    if (pj != t) ops.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (s.d(i, t) == 0) continue;
        Int q = s.d(i, t) / s.d(t, t);
        ops.row_add(i, t, Int(-q));
        if (s.d(i, t) != 0) { ops.row_swap(t, i); clean = false; }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (s.d(t, j) == 0) continue;
        Int q = s.d(t, j) / s.d(t, t);
        ops.col_add(j, t, Int(-q));
        if (s.d(t, j) != 0) { ops.col_swap(t, j); clean = false; }
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (s.d(i, j) % s.d(t, t) != 0) {
            ops.row_add(t, i, Int(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (s.d(t, t) < 0) ops.row_negate(t);
  }

  for (std::size_t t = 0; t < nmin; ++t) {
    if (s.d(t, t) != 0) s.invariants.push_back(s.d(t, t));
  }
  return s;
}

}  // namespace toricskt
