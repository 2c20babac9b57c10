#include "zpi/intlinalg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace zpi {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("IntMatrix multiply: size mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

namespace {

// Classical Smith reduction with minimal-absolute-value pivoting. The
// divisibility fix (add an offending row into the pivot row and restart the
// step) guarantees d_t divides the whole remaining submatrix, so the chain
// condition comes out automatically.
struct SmithWorker {
  IntMatrix A;
  bool track;
  IntMatrix U, V;

  explicit SmithWorker(const IntMatrix& M, bool want_transforms)
      : A(M), track(want_transforms) {
    if (track) {
      U = IntMatrix::identity(M.rows());
      V = IntMatrix::identity(M.cols());
    }
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
    if (track)
      for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < A.rows(); ++i) std::swap(A.at(i, a), A.at(i, b));
    if (track)
      for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  void row_axpy(int dst, int src, const Int& c) {  // row dst += c * row src
    for (int j = 0; j < A.cols(); ++j) A.at(dst, j) += c * A.at(src, j);
    if (track)
      for (int j = 0; j < U.cols(); ++j) U.at(dst, j) += c * U.at(src, j);
  }
  void col_axpy(int dst, int src, const Int& c) {
    for (int i = 0; i < A.rows(); ++i) A.at(i, dst) += c * A.at(i, src);
    if (track)
      for (int i = 0; i < V.rows(); ++i) V.at(i, dst) += c * V.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < A.cols(); ++j) A.at(r, j) = -A.at(r, j);
    if (track)
      for (int j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
  }

  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int i = t; i < A.rows(); ++i)
      for (int j = t; j < A.cols(); ++j) {
        const Int& v = A.at(i, j);
        if (v == 0) continue;
        Int a = int_abs(v);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  std::vector<Int> run() {
    const int n = std::min(A.rows(), A.cols());
    std::vector<Int> factors;
    for (int t = 0; t < n; ++t) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        bool residue = false;
        for (int i = t + 1; i < A.rows(); ++i) {
          if (A.at(i, t) == 0) continue;
          Int q = A.at(i, t) / A.at(t, t);
          if (q != 0) row_axpy(i, t, -q);
          if (A.at(i, t) != 0) residue = true;
        }
        for (int j = t + 1; j < A.cols(); ++j) {
          if (A.at(t, j) == 0) continue;
          Int q = A.at(t, j) / A.at(t, t);
          if (q != 0) col_axpy(j, t, -q);
          if (A.at(t, j) != 0) residue = true;
        }
        if (residue) {
          // a remainder smaller than the pivot appeared; re-pivot on it
          if (!find_pivot(t, pr, pc)) break;
          swap_rows(t, pr);
          swap_cols(t, pc);
          continue;
        }
        // column and row are clear; enforce pivot | submatrix
        int bi = -1;
        for (int i = t + 1; i < A.rows() && bi < 0; ++i)
          for (int j = t + 1; j < A.cols(); ++j)
            if (A.at(i, j) % A.at(t, t) != 0) {
              bi = i;
              break;
            }
        if (bi < 0) break;
        row_axpy(t, bi, Int(1));
      }
      if (A.at(t, t) < 0) negate_row(t);
      factors.push_back(A.at(t, t));
    }
    return factors;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M, bool want_transforms) {
  SmithWorker w(M, want_transforms);
  SmithResult res;
  res.factors = w.run();
  if (want_transforms) {
    IntMatrix D = w.U * M * w.V;
    for (int i = 0; i < D.rows(); ++i)
      for (int j = 0; j < D.cols(); ++j) {
        Int expect = 0;
        if (i == j && i < static_cast<int>(res.factors.size())) expect = res.factors[i];
        if (D.at(i, j) != expect)
          throw Error("smith_normal_form: transform replay failed");
      }
    res.U = std::move(w.U);
    res.V = std::move(w.V);
  }
  return res;
}

namespace {

// Fraction-free elimination (Bareiss). Returns the rank; if det != nullptr
// and the matrix is square, stores the determinant.
int bareiss(IntMatrix A, Int* det) {
  const int rows = A.rows(), cols = A.cols();
  Int prev = 1;
  int rank = 0;
  int sign = 1;
  for (int t = 0; rank < rows && t < cols; ++t) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (A.at(i, t) != 0) {
        if (piv < 0 || int_abs(A.at(i, t)) < int_abs(A.at(piv, t))) piv = i;
      }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
      sign = -sign;
    }
    const Int p = A.at(rank, t);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = t + 1; j < cols; ++j)
        A.at(i, j) = (A.at(i, j) * p - A.at(i, t) * A.at(rank, j)) / prev;
      A.at(i, t) = 0;
    }
    prev = p;
    ++rank;
  }
  if (det) {
    if (rows != cols) throw DomainError("determinant: matrix not square");
    *det = (rank == rows) ? Int(sign * prev) : Int(0);
  }
  return rank;
}

}  // namespace

int rational_rank(const IntMatrix& M) { return bareiss(M, nullptr); }

Int determinant(const IntMatrix& M) {
  Int d;
  bareiss(M, &d);
  return d;
}

namespace {

void sparse_axpy(SparseRow& dst, const SparseRow& src, const Int& c) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Int v = c * src[j].second;
      if (v != 0) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Int v = dst[i].second + c * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

std::vector<Int> smith_factors_sparse(std::vector<SparseRow> rows, int ncols) {
  // Dedup and drop empties.
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });

  std::vector<char> alive_row(rows.size(), 1);
  std::vector<char> alive_col(static_cast<std::size_t>(ncols), 1);
  std::size_t unit_pivots = 0;

  // Column -> candidate rows (lazily maintained).
  std::unordered_map<int, std::vector<int>> by_col;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) by_col[c].push_back(static_cast<int>(r));

  // Sweep for +-1 pivots, short rows first to limit fill-in. One unit pivot
  // clears its column everywhere and contributes an invariant factor 1.
  auto pivot_on = [&](int pr, int pc, const Int& pval) {
    auto& cands = by_col[pc];
    for (int r : cands) {
      if (r == pr || !alive_row[r]) continue;
      Int v = 0;
      for (const auto& [c, val] : rows[r])
        if (c == pc) {
          v = val;
          break;
        }
      if (v == 0) continue;
      sparse_axpy(rows[r], rows[pr], -v * pval);  // pval^-1 == pval for +-1
      for (const auto& [c, val] : rows[r])
        if (c != pc) by_col[c].push_back(r);
      if (rows[r].empty()) alive_row[r] = 0;
    }
    alive_row[pr] = 0;
    alive_col[pc] = 0;
    ++unit_pivots;
  };
  const std::size_t thresholds[] = {2, 4, static_cast<std::size_t>(-1)};
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t cap : thresholds)
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!alive_row[r] || rows[r].size() > cap) continue;
        for (const auto& [c, v] : rows[r])
          if (int_abs(v) == 1) {
            pivot_on(static_cast<int>(r), c, v);
            progress = true;
            break;
          }
      }
  }

  // Compact the residue and finish densely.
  std::vector<int> col_map(static_cast<std::size_t>(ncols), -1);
  int live_cols = 0;
  std::vector<int> live_rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive_row[r]) {
      live_rows.push_back(static_cast<int>(r));
      for (const auto& [c, v] : rows[r])
        if (alive_col[c] && col_map[c] < 0) col_map[c] = live_cols++;
    }
  std::vector<Int> factors(unit_pivots, Int(1));
  if (!live_rows.empty()) {
    IntMatrix dense(static_cast<int>(live_rows.size()), live_cols);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]])
        dense.at(static_cast<int>(i), col_map[c]) = v;
    auto tail = smith_normal_form(dense).factors;
    factors.insert(factors.end(), tail.begin(), tail.end());
  }
  return factors;
}

void LatticeReducer::add(SparseRow row) {
  while (!row.empty()) {
    int lead = row[0].first;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const SparseRow& r, int c) { return r[0].first < c; });
    if (it == rows_.end() || (*it)[0].first != lead) {
      if (row[0].second < 0)
        for (auto& [c, v] : row) v = -v;
      rows_.insert(it, std::move(row));
      return;
    }
    SparseRow& b = *it;
    const Int p = b[0].second, v = row[0].second;
    if (v % p == 0) {
      sparse_axpy(row, b, -(v / p));
      continue;
    }
    // Unimodular 2x2 combine: new pivot u*b + w*row has leading coeff
    // gcd(p,v); the remainder (p/g)*row - (v/g)*b loses the lead entirely.
    auto [g, u, w] = ext_gcd(p, v);
    SparseRow pivot = b;
    for (auto& [c, val] : pivot) val *= u;
    sparse_axpy(pivot, row, w);
    SparseRow rem = std::move(row);
    for (auto& [c, val] : rem) val *= (p / g);
    sparse_axpy(rem, b, -(v / g));
    b = std::move(pivot);
    row = std::move(rem);
  }
}

bool LatticeReducer::contains(SparseRow row) const {
  while (!row.empty()) {
    int lead = row[0].first;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const SparseRow& r, int c) { return r[0].first < c; });
    if (it == rows_.end() || (*it)[0].first != lead) return false;
    const Int& p = (*it)[0].second;
    const Int& v = row[0].second;
    if (v % p != 0) return false;
    sparse_axpy(row, *it, -(v / p));
  }
  return true;
}

}  // namespace zpi
