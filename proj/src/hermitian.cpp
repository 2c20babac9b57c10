#include "zpi/hermitian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace zpi {

RingMatrix::RingMatrix(GroupPtr g, int rows, int cols)
    : g_(std::move(g)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("RingMatrix: negative size");
  e_.assign(static_cast<std::size_t>(rows) * cols, GroupRingElement::zero(g_));
}

RingMatrix RingMatrix::identity(GroupPtr g, int n) {
  RingMatrix m(g, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GroupRingElement::one(g);
  return m;
}

RingMatrix RingMatrix::from_ints(GroupPtr g,
                                 const std::vector<std::vector<long long>>& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  RingMatrix m(g, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(a[i].size()) != cols)
      throw DomainError("from_ints: ragged rows");
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = GroupRingElement::from_int(g, Int(a[i][j]));
  }
  return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  require_same_group(*g_, *o.g_, "matrix multiply");
  if (cols_ != o.rows_) throw DomainError("matrix multiply: size mismatch");
  RingMatrix r(g_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const GroupRingElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const GroupRingElement& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  require_same_group(*g_, *o.g_, "matrix add");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("matrix add: size mismatch");
  RingMatrix r(g_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

RingMatrix RingMatrix::operator-() const {
  RingMatrix r(g_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  if (!g_->same(*o.g_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

RingMatrix RingMatrix::conj_transpose() const {
  RingMatrix r(g_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).involute();
  return r;
}

RingMatrix RingMatrix::block_sum(const RingMatrix& o) const {
  require_same_group(*g_, *o.g_, "block sum");
  RingMatrix r(g_, rows_ + o.rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
  return r;
}

bool RingMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).involute()) return false;
  return true;
}

std::string RingMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " | ";
      os << at(i, j).to_string();
    }
    os << " ]\n";
  }
  return os.str();
}

HermitianMatrix::HermitianMatrix(RingMatrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian())
    throw DomainError("HermitianMatrix: matrix is not Hermitian");
}

HermitianMatrix HermitianMatrix::zero(GroupPtr g, int n) {
  return HermitianMatrix(RingMatrix(std::move(g), n, n));
}

HermitianMatrix HermitianMatrix::unidiagonal(GroupPtr g, const std::vector<int>& signs) {
  RingMatrix m(g, static_cast<int>(signs.size()), static_cast<int>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw DomainError("unidiagonal: signs must be +-1");
    m.at(static_cast<int>(i), static_cast<int>(i)) =
        GroupRingElement::from_int(g, Int(signs[i]));
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_ints(
    GroupPtr g, const std::vector<std::vector<long long>>& a) {
  return HermitianMatrix(RingMatrix::from_ints(std::move(g), a));
}

HermitianMatrix HermitianMatrix::negated() const { return HermitianMatrix(-m_); }

bool is_almost_even(const HermitianMatrix& a) {
  for (int i = 0; i < a.size(); ++i)
    if (!a.at(i, i).is_self_conjugate_almost_even()) return false;
  return true;
}

HermitianMatrix block_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.matrix().block_sum(b.matrix()));
}

HermitianMatrix apply_congruence(const HermitianMatrix& a, const RingMatrix& p) {
  require_same_group(*a.group(), *p.group(), "apply_congruence");
  if (p.cols() != a.size()) throw DomainError("apply_congruence: size mismatch");
  return HermitianMatrix(p * a.matrix() * p.conj_transpose());
}

namespace {

// +-1 times a single group element, or nothing.
std::optional<std::pair<int, GroupElement>> unit_monomial(const GroupRingElement& x) {
  if (x.support_size() != 1) return std::nullopt;
  const auto& [el, c] = x.terms()[0];
  if (c == 1) return std::make_pair(1, el);
  if (c == -1) return std::make_pair(-1, el);
  return std::nullopt;
}

bool is_pm_one(const GroupRingElement& x) {
  auto u = unit_monomial(x);
  return u && x.group()->is_identity(u->second);
}

}  // namespace

bool is_unidiagonal(const HermitianMatrix& a) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      if (i == j) {
        if (!is_pm_one(a.at(i, i))) return false;
      } else if (!a.at(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

std::vector<int> unidiagonal_signs(const HermitianMatrix& a) {
  if (!is_unidiagonal(a)) throw DomainError("unidiagonal_signs: matrix not unidiagonal");
  std::vector<int> s;
  for (int i = 0; i < a.size(); ++i)
    s.push_back(a.at(i, i).terms()[0].second > 0 ? 1 : -1);
  return s;
}

bool is_metabolic_form(const HermitianMatrix& a) {
  if (a.size() % 2 != 0) throw DomainError("is_metabolic_form: odd size");
  const int k = a.size() / 2;
  auto one = GroupRingElement::one(a.group());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!a.at(i, j).is_zero()) return false;
      const GroupRingElement& ur = a.at(i, k + j);
      if (i == j ? ur != one : !ur.is_zero()) return false;
    }
  return true;
}

Verdict is_elementary(const RingMatrix& p, int move_bound) {
  const int n = p.rows();
  if (n != p.cols()) return Verdict::No;
  if (move_bound <= 0) move_bound = 10 * n * n;
  const auto& g = p.group();

  // Sound negative: the augmentation image of an elementary matrix is a
  // product of integer elementary matrices, hence has determinant +-1.
  {
    IntMatrix e(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e.at(i, j) = p.at(i, j).augmentation();
    if (int_abs(determinant(e)) != 1) return Verdict::No;
  }

  // Greedy left-reduction to the identity: each applied move is the inverse
  // of one generator. Cycle-guarded, bounded, otherwise inconclusive.
  RingMatrix m = p;
  const RingMatrix id = RingMatrix::identity(g, n);
  auto metric = [&](const RingMatrix& x) {
    std::size_t s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += (x.at(i, j) - id.at(i, j)).support_size();
    return s;
  };
  auto scale_row = [&](RingMatrix& x, int i, const GroupRingElement& c) {
    for (int j = 0; j < n; ++j) x.at(i, j) = c * x.at(i, j);
  };
  auto row_axpy = [&](RingMatrix& x, int dst, int src, const GroupRingElement& c) {
    for (int j = 0; j < n; ++j) x.at(dst, j) = x.at(dst, j) + c * x.at(src, j);
  };
  std::set<std::string> seen;
  for (int moves = 0; moves < move_bound; ++moves) {
    if (m == id) return Verdict::Yes;
    if (!seen.insert(m.to_string()).second) return Verdict::Unknown;
    struct Move {
      int kind, i, j;
      GroupRingElement c;
    };
    std::vector<Move> cands;
    const auto ring_one = GroupRingElement::one(g);
    for (int i = 0; i < n; ++i) {
      auto u = unit_monomial(m.at(i, i));
      if (u && m.at(i, i) != ring_one) {
        // undo a +-g diagonal substitution
        auto inv_el = g->inv(u->second);
        cands.push_back({0, i, i,
                         GroupRingElement::monomial(g, inv_el, Int(u->first))});
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || m.at(i, j).is_zero()) continue;
        auto u = unit_monomial(m.at(j, j));
        if (u) {
          auto inv_el = g->inv(u->second);
          auto inv = GroupRingElement::monomial(g, inv_el, Int(u->first));
          cands.push_back({1, i, j, -(m.at(i, j) * inv)});
        }
      }
    for (int i = 0; i < n; ++i) {
      if (!m.at(i, i).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (i != j && unit_monomial(m.at(j, i)))
          cands.push_back({2, i, j, GroupRingElement::one(g)});
    }
    if (cands.empty()) return Verdict::Unknown;
    std::size_t best = static_cast<std::size_t>(-1);
    std::optional<RingMatrix> next;
    for (const auto& mv : cands) {
      RingMatrix trial = m;
      if (mv.kind == 0)
        scale_row(trial, mv.i, mv.c);
      else
        row_axpy(trial, mv.i, mv.j, mv.c);
      std::size_t s = metric(trial);
      if (s < best && !seen.contains(trial.to_string())) {
        best = s;
        next = std::move(trial);
      }
    }
    if (!next) return Verdict::Unknown;
    m = std::move(*next);
  }
  return Verdict::Unknown;
}

namespace {

RingMatrix invert_finite(const HermitianMatrix& a) {
  const auto& g = a.group();
  const int n = a.size();
  const auto els = g->elements();
  const int s = static_cast<int>(els.size());
  std::map<std::vector<std::int64_t>, int> index;
  for (int i = 0; i < s; ++i) index[els[i].payload()] = i;
  int id_idx = index.at(g->identity().payload());

  // Left regular representation: block (p,q) of the lift is the matrix of
  // multiplication by A[p][q] in the basis `els`.
  const int N = n * s;
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(2 * N));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (const auto& [el, c] : a.at(p, q).terms())
        for (int j = 0; j < s; ++j) {
          int i = index.at(g->mul(el, els[j]).payload());
          M[p * s + i][q * s + j] += Rat(c);
        }
  for (int i = 0; i < N; ++i) M[i][N + i] = 1;

  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0)
      throw SingularError("invert: singular over the rational group algebra");
    std::swap(M[piv], M[col]);
    Rat d = M[col][col];
    for (int j = col; j < 2 * N; ++j) M[col][j] /= d;
    for (int r = 0; r < N; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (int j = col; j < 2 * N; ++j) M[r][j] -= f * M[col][j];
    }
  }

  RingMatrix y(g, n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::vector<GroupRingElement::Term> terms;
      for (int i = 0; i < s; ++i) {
        const Rat& v = M[p * s + i][N + q * s + id_idx];
        if (v == 0) continue;
        if (boost::multiprecision::denominator(v) != 1)
          throw SingularError("invert: inverse exists over Q[pi] but not Z[pi]");
        terms.emplace_back(els[i], Int(boost::multiprecision::numerator(v)));
      }
      y.at(p, q) = GroupRingElement(g, std::move(terms));
    }
  return y;
}

GroupRingElement laurent_det(const RingMatrix& m, std::vector<int> cols, int row) {
  const auto& g = m.group();
  if (cols.empty()) return GroupRingElement::one(g);
  GroupRingElement acc = GroupRingElement::zero(g);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const GroupRingElement& e = m.at(row, cols[k]);
    if (e.is_zero()) continue;
    std::vector<int> rest;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    GroupRingElement sub = laurent_det(m, rest, row + 1);
    GroupRingElement term = e * sub;
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RingMatrix invert_laurent(const HermitianMatrix& a) {
  const auto& g = a.group();
  const int n = a.size();
  if (n > 8)
    throw ResourceBoundError("invert: Laurent path limited to size <= 8");
  std::vector<int> all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  GroupRingElement det = laurent_det(a.matrix(), all, 0);
  auto u = unit_monomial(det);
  if (!u)
    throw SingularError("invert: determinant is not a unit of the Laurent ring");
  // det^-1 = sign * g^-1; multiply into the adjugate.
  GroupRingElement det_inv =
      GroupRingElement::monomial(g, g->inv(u->second), Int(u->first));
  RingMatrix y(g, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> cols;
      for (int c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      // minor of (j,i) for the adjugate
      RingMatrix sub(g, n - 1, n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c : cols) sub.at(rr, cc++) = a.at(r, c);
        ++rr;
      }
      std::vector<int> subcols;
      for (int c = 0; c < n - 1; ++c) subcols.push_back(c);
      GroupRingElement mnr = laurent_det(sub, subcols, 0);
      if ((i + j) % 2 == 1) mnr = -mnr;
      y.at(i, j) = det_inv * mnr;
    }
  return y;
}

}  // namespace

RingMatrix invert(const HermitianMatrix& a) {
  const auto& g = a.group();
  RingMatrix y = [&] {
    if (g->finite()) return invert_finite(a);
    if (g->kind() == GroupKind::FreeAbelian) return invert_laurent(a);
    throw UnsupportedGroupError("invert: only finite and free abelian groups supported");
  }();
  const RingMatrix id = RingMatrix::identity(g, a.size());
  if (!(a.matrix() * y == id) || !(y * a.matrix() == id))
    throw SingularError("invert: candidate inverse failed the exact product check");
  if (is_almost_even(a)) {
    HermitianMatrix hy{y};
    if (!is_almost_even(hy))
      throw Error("invert: inverse of an almost even matrix must be almost even");
  }
  return y;
}

namespace {

RingMatrix apply_step(const RingMatrix& m, const CertificateStep& step) {
  if (const auto* c = std::get_if<CongruenceStep>(&step)) {
    if (c->P.rows() != c->P.cols() || c->P.cols() != m.rows())
      throw DomainError("certificate: congruence transform has wrong size");
    return c->P * m * c->P.conj_transpose();
  }
  if (const auto* s = std::get_if<StabilizeStep>(&step)) {
    if (s->sign != 1 && s->sign != -1)
      throw DomainError("certificate: stabilize sign must be +-1");
    RingMatrix one(m.group(), 1, 1);
    one.at(0, 0) = GroupRingElement::from_int(m.group(), Int(s->sign));
    return m.block_sum(one);
  }
  const auto& perm = std::get<PermuteStep>(step).perm;
  const int n = m.rows();
  if (static_cast<int>(perm.size()) != n)
    throw DomainError("certificate: permutation has wrong size");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("certificate: not a permutation");
    seen[v] = 1;
  }
  RingMatrix r(m.group(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = m.at(perm[i], perm[j]);
  return r;
}

}  // namespace

StableCongruenceCertificate metabolize(const HermitianMatrix& a) {
  if (!is_almost_even(a)) throw DomainError("metabolize: matrix is not almost even");
  const auto& g = a.group();
  const int n = a.size();
  RingMatrix a_inv = invert(a);  // SingularError / UnsupportedGroupError pass through

  StableCongruenceCertificate cert{block_sum(a, a.negated()),
                                   block_sum(a, a.negated()),
                                   {},
                                   false};
  RingMatrix m = cert.start.matrix();
  auto push = [&](CertificateStep step) {
    m = apply_step(m, step);
    cert.steps.push_back(std::move(step));
  };
  if (n > 0) {
    const auto one = GroupRingElement::one(g);
    // (A 0; 0 -A) -> (0 A; A A)
    RingMatrix p1(g, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      p1.at(i, i) = one;
      p1.at(i, n + i) = one;
      p1.at(n + i, i) = one;
    }
    push(CongruenceStep{p1});
    // -> (0 I; I A^-1)
    RingMatrix p2(g, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i) p2.at(i, i) = one;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p2.at(n + i, n + j) = a_inv.at(i, j);
    push(CongruenceStep{p2});
    // -> (0 I; I D): conjugating by (I 0; W I) sends the lower-right block X
    // to X + W + conj(W)^t. Choosing W_ij = -X_ij above the diagonal and
    // W_ii = -y_i from the split X_ii = d_i + y_i + conj(y_i) leaves the
    // diagonal parity matrix D, entries 0 or 1.
    std::vector<int> d(n);
    RingMatrix p3 = RingMatrix::identity(g, 2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const GroupRingElement& x = m.at(n + i, n + j);
        if (i < j) {
          p3.at(n + i, j) = -x;
        } else if (i == j) {
          auto [di, y] = x.split_self_conjugate();
          d[i] = di;
          if (!y.is_zero()) p3.at(n + i, i) = -y;
        }
      }
    push(CongruenceStep{p3});
    // Interleave into 2x2 blocks (0 1; 1 d_i).
    std::vector<int> sigma(2 * n);
    for (int i = 0; i < n; ++i) {
      sigma[2 * i] = i;
      sigma[2 * i + 1] = n + i;
    }
    push(PermuteStep{sigma});
    // Stabilize each hyperbolic block by <+1>.
    int stabs = 0;
    for (int i = 0; i < n; ++i)
      if (d[i] == 0) {
        push(StabilizeStep{+1});
        ++stabs;
      }
    // Bring each stabilizer next to its block.
    std::vector<int> tau;
    int used = 0;
    for (int i = 0; i < n; ++i) {
      tau.push_back(2 * i);
      tau.push_back(2 * i + 1);
      if (d[i] == 0) tau.push_back(2 * n + used++);
    }
    if (stabs > 0) push(PermuteStep{tau});
    // Per-block diagonalization: (0 1; 1 1) ~ diag(1,-1) and
    // (0 1; 1 0) (+) <1> ~ diag(1,1,-1).
    RingMatrix p4(g, 2 * n + stabs, 2 * n + stabs);
    auto set_int = [&](int r, int c, long long v) {
      p4.at(r, c) = GroupRingElement::from_int(g, Int(v));
    };
    int off = 0;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 1) {
        set_int(off, off + 1, 1);
        set_int(off + 1, off, 1);
        set_int(off + 1, off + 1, -1);
        off += 2;
      } else {
        set_int(off, off, 1);
        set_int(off, off + 2, 1);
        set_int(off + 1, off + 1, 1);
        set_int(off + 1, off + 2, -1);
        set_int(off + 2, off, 1);
        set_int(off + 2, off + 1, -1);
        set_int(off + 2, off + 2, 1);
        off += 3;
      }
    }
    push(CongruenceStep{p4});
  }
  cert.end = HermitianMatrix(m);
  if (!is_unidiagonal(cert.end))
    throw Error("metabolize: reduction did not reach a unidiagonal matrix");
  return cert;
}

bool verify_certificate(const StableCongruenceCertificate& cert, int elementary_bound) {
  std::string reason;
  return verify_certificate(cert, reason, elementary_bound);
}

bool verify_certificate(const StableCongruenceCertificate& cert, std::string& reason,
                        int elementary_bound) {
  try {
    RingMatrix m = cert.start.matrix();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      if (cert.simple) {
        if (const auto* c = std::get_if<CongruenceStep>(&cert.steps[i])) {
          if (is_elementary(c->P, elementary_bound) != Verdict::Yes) {
            reason = "step " + std::to_string(i) + ": transform not verified elementary";
            return false;
          }
        }
      }
      m = apply_step(m, cert.steps[i]);
    }
    if (!(m == cert.end.matrix())) {
      reason = "replay does not reproduce the declared end matrix";
      return false;
    }
    return true;
  } catch (const Error& e) {
    reason = e.what();
    return false;
  }
}

MultisignatureProfile multisignature(const HermitianMatrix& a, double tau) {
  const auto& g = a.group();
  std::int64_t m = 1;
  if (g->kind() == GroupKind::Cyclic)
    m = g->modulus();
  else if (g->kind() != GroupKind::Trivial)
    throw UnsupportedGroupError("multisignature: group must be cyclic");
  if (tau <= 0) throw DomainError("multisignature: tolerance must be positive");

  const int n = a.size();
  MultisignatureProfile prof;
  for (std::int64_t j = 0; j < m; ++j) {
    Eigen::MatrixXcd mat(n, n);
    double maxabs = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        std::complex<double> v(0, 0);
        for (const auto& [el, coef] : a.at(r, c).terms()) {
          std::int64_t k = el.payload().empty() ? 0 : el.payload()[0];
          double ang = 2.0 * M_PI * static_cast<double>(j) * static_cast<double>(k) /
                       static_cast<double>(m);
          v += coef.convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        mat(r, c) = v;
        maxabs = std::max(maxabs, std::abs(v));
      }
    int sig = 0;
    if (n > 0) {
      if (maxabs == 0.0)
        throw NumericalDegeneracyError("multisignature: character image is the zero matrix");
      mat /= maxabs;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
      if (solver.info() != Eigen::Success)
        throw NumericalDegeneracyError("multisignature: eigensolver failed");
      for (int t = 0; t < n; ++t) {
        double lam = solver.eigenvalues()[t];
        if (std::abs(lam) < tau)
          throw NumericalDegeneracyError(
              "multisignature: eigenvalue within tolerance of zero");
        sig += lam > 0 ? 1 : -1;
      }
    }
    prof.sigma.push_back(sig);
  }
  for (std::size_t j = 1; j < prof.sigma.size(); ++j)
    prof.reduced.push_back(prof.sigma[j] - prof.sigma[0]);
  return prof;
}

}  // namespace zpi
