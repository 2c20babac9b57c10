#pragma once

#include <vector>

#include "zpi/hermitian.hpp"

namespace zpi {

// Elementary linking-matrix moves. An off-diagonal move adds s*g to a_ij
// and s*g^-1 to a_ji. On the diagonal (i == j, g != 1) the same move adds
// s*(g + g^-1) when g^2 != 1 and s*2g when g is an involution; the identity
// contribution of a diagonal entry is adjusted only by diagonal twists,
// which add s*1 to a_ii.
struct RealizationMove {
  enum class Kind { OffDiagonal, DiagonalTwist };
  Kind kind;
  int i = 0, j = 0;  // 0-based
  int sign = 1;
  GroupElement g;    // OffDiagonal only
};

// Move sequence carrying the zero matrix to A. Requires A almost even;
// otherwise throws DomainError naming the offending diagonal entry and
// group element.
std::vector<RealizationMove> realization_moves(const HermitianMatrix& a);

HermitianMatrix apply_moves(const HermitianMatrix& start,
                            const std::vector<RealizationMove>& moves);

// sign * ( g1 (h-1) g2 + conj(g2) (h^-1 - 1) conj(g1) ) with h in ker q.
struct NormLikeTerm {
  int sign = 1;
  GroupElement g1, g2, h;
};

GroupRingElement eval_normlike_term(const NormLikeTerm& t, const GroupPtr& g);
GroupRingElement eval_normlike(const std::vector<NormLikeTerm>& terms, const GroupPtr& g);

// Decomposition of a self-conjugate almost even member of the ideal
// ker(Z[source] -> Z[target]) into norm-like terms, following the coset
// splitting of the source over a section of the target: pair the g and
// g^-1 cosets, double the self-paired entries of order-2 cosets, and
// subtract the telescoping sum of lifts.
std::vector<NormLikeTerm> normlike_decompose(const GroupRingElement& lambda,
                                             const QuotientMap& q);

}  // namespace zpi
