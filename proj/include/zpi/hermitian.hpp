#pragma once

#include <string>
#include <variant>
#include <vector>

#include "zpi/group_ring.hpp"
#include "zpi/intlinalg.hpp"

namespace zpi {

// Rectangular matrix over Z[pi]. Used both for Hermitian forms and for the
// transforms P of a congruence B = P A conj(P)^t.
class RingMatrix {
public:
  RingMatrix(GroupPtr g, int rows, int cols);
  static RingMatrix identity(GroupPtr g, int n);
  static RingMatrix from_ints(GroupPtr g, const std::vector<std::vector<long long>>& a);

  const GroupPtr& group() const { return g_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GroupRingElement& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const GroupRingElement& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }

  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-() const;
  bool operator==(const RingMatrix& o) const;

  RingMatrix conj_transpose() const;
  RingMatrix block_sum(const RingMatrix& o) const;
  bool is_hermitian() const;

  std::string to_string() const;

private:
  GroupPtr g_;
  int rows_, cols_;
  std::vector<GroupRingElement> e_;
};

// Square matrix A with conj(A)^t = A, checked at construction.
class HermitianMatrix {
public:
  explicit HermitianMatrix(RingMatrix m);
  static HermitianMatrix zero(GroupPtr g, int n);
  static HermitianMatrix unidiagonal(GroupPtr g, const std::vector<int>& signs);
  static HermitianMatrix from_ints(GroupPtr g, const std::vector<std::vector<long long>>& a);

  const RingMatrix& matrix() const { return m_; }
  const GroupPtr& group() const { return m_.group(); }
  int size() const { return m_.rows(); }
  const GroupRingElement& at(int r, int c) const { return m_.at(r, c); }

  HermitianMatrix negated() const;
  bool operator==(const HermitianMatrix& o) const { return m_ == o.m_; }

private:
  RingMatrix m_;
};

bool is_almost_even(const HermitianMatrix& a);
HermitianMatrix block_sum(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix apply_congruence(const HermitianMatrix& a, const RingMatrix& p);

// Diagonal with every entry +-1 (coefficient on the group identity).
bool is_unidiagonal(const HermitianMatrix& a);
// Literal block shape (0 I; I X); even size required.
bool is_metabolic_form(const HermitianMatrix& a);
// Diagonal signs of a unidiagonal matrix.
std::vector<int> unidiagonal_signs(const HermitianMatrix& a);

enum class Verdict { Yes, No, Unknown };

// Bounded greedy recognition of elementary matrices (products of
// identity-plus-one-off-diagonal-entry matrices and +-g diagonal
// substitutions). move_bound <= 0 means the default 10*n*n.
Verdict is_elementary(const RingMatrix& p, int move_bound = 0);

// Exact inverse over Z[pi]. Finite groups go through the rational regular
// representation; free abelian groups through Laurent determinant/adjugate.
// Throws SingularError when no inverse exists over Z[pi] and
// UnsupportedGroupError for other group kinds.
RingMatrix invert(const HermitianMatrix& a);

struct CongruenceStep {
  RingMatrix P;
};
struct StabilizeStep {
  int sign;  // appends a 1x1 block (+-1)
};
struct PermuteStep {
  std::vector<int> perm;  // replayed as M'[r][c] = M[perm[r]][perm[c]]
};
using CertificateStep = std::variant<CongruenceStep, StabilizeStep, PermuteStep>;

// Replayable witness that `start` and `end` are stably congruent; when
// tagged simple every congruence transform must verify as elementary.
struct StableCongruenceCertificate {
  HermitianMatrix start;
  HermitianMatrix end;
  std::vector<CertificateStep> steps;
  bool simple = false;
};

// The constructive reduction behind the inverse in the Witt semigroup:
// produces a verified certificate from A (+) (-A) to a unidiagonal matrix
// via (0 A; A A) -> (0 I; I A^-1) -> (0 I; I D) -> per-block diagonalization,
// stabilizing hyperbolic blocks by <+1>.
StableCongruenceCertificate metabolize(const HermitianMatrix& a);

// elementary_bound feeds the is_elementary search for simple-tagged
// certificates; <= 0 uses the 10*n*n default.
bool verify_certificate(const StableCongruenceCertificate& cert, int elementary_bound = 0);
bool verify_certificate(const StableCongruenceCertificate& cert, std::string& reason,
                        int elementary_bound = 0);

struct MultisignatureProfile {
  std::vector<int> sigma;    // one signature per character of Z/m
  std::vector<int> reduced;  // sigma_j - sigma_0 for j >= 1
};

// Character-wise signatures of a nonsingular Hermitian matrix over a cyclic
// group: entry g |-> exp(2*pi*i*j/m) per character j, then signed eigenvalue
// count with tolerance tau after scaling to unit max-norm. The reduced
// profile is a stable-congruence invariant.
MultisignatureProfile multisignature(const HermitianMatrix& a, double tau = 1e-9);

}  // namespace zpi
