#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zpi/error.hpp"
#include "zpi/ints.hpp"

namespace zpi {

// Dense arbitrary-precision integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

struct SmithResult {
  // Nonzero invariant factors d1 | d2 | ..., all positive. Their count is
  // the rank; trailing zero diagonal entries are not listed.
  std::vector<Int> factors;
  // Unimodular U (rows x rows) and V (cols x cols) with U*M*V diagonal,
  // present when requested. Checked by replay before returning.
  std::optional<IntMatrix> U, V;
};

SmithResult smith_normal_form(const IntMatrix& M, bool want_transforms = false);

// Rank over Q by fraction-free (Bareiss) elimination.
int rational_rank(const IntMatrix& M);

// Determinant of a square matrix, fraction-free.
Int determinant(const IntMatrix& M);

// Sparse row: (column, value) pairs, sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Int>>;

// Invariant factors of the lattice spanned by the given rows inside Z^ncols.
// Unit entries are eliminated sparsely first; the dense core only sees the
// small residue where nontrivial factors can live.
std::vector<Int> smith_factors_sparse(std::vector<SparseRow> rows, int ncols);

// Triangular generating set of an integer row lattice, with exact
// membership tests. Rows are combined by extended gcd on their leading
// column, so the stored rows always span the same lattice as everything
// added so far.
class LatticeReducer {
public:
  void add(SparseRow row);
  bool contains(SparseRow row) const;
  const std::vector<SparseRow>& basis() const { return rows_; }

private:
  std::vector<SparseRow> rows_;  // sorted by leading column, one per column
};

}  // namespace zpi
