#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricskt {

// All exact arithmetic in the library runs over arbitrary-precision integers.
using Int = mpz_class;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  void append_row(const IntVec& v);

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  IntVec data_;
};

IntVec operator*(const IntVec& y, const IntMatrix& a);  // row vector times matrix

bool is_zero_vec(const IntVec& v);
Int gcd_of(const IntVec& v);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(IntMatrix a);

// Hermite-style row echelon computed by processing columns in a caller-chosen
// order. transform is unimodular with h = transform * input. At the t-th pivot
// column, rows other than the first t pivot rows are exactly zero, and earlier
// pivot rows carry residues in [0, pivot). Rows never chosen as pivots end up
// identically zero, so their transform rows span the left kernel.
struct Echelon {
  IntMatrix h;
  IntMatrix transform;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row), in order
  bool unit_pivots = true;
};

Echelon echelon_form(const IntMatrix& a, const std::vector<std::size_t>& column_order);

// Convenience: natural left-to-right column order.
Echelon echelon_form(const IntMatrix& a);

// Decide v in the row lattice of e's input; on success and coeffs != nullptr,
// fill coefficients y (over the echelon rows) with v = y * e.h.
bool solve_in_lattice(const Echelon& e, IntVec v, IntVec* coeffs = nullptr);

// Solve y * a = b over the integers.
std::optional<IntVec> solve_left(const IntMatrix& a, const IntVec& b);

// Rows form a basis of { y : y * a = 0 }.
IntMatrix left_kernel(const IntMatrix& a);

// Smith normal form u * a * v = d with unimodular u, v; v_inv = v^{-1}.
struct Smith {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inv;
  IntVec invariants;  // nonzero diagonal entries, each dividing the next
};

Smith smith_form(const IntMatrix& a);

}  // namespace toricskt
