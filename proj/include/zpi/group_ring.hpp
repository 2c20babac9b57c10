#pragma once

#include <utility>
#include <vector>

#include "zpi/group.hpp"
#include "zpi/ints.hpp"

namespace zpi {

// An element of the integral group ring Z[pi]: a finite integer combination
// of group elements, stored with nonzero coefficients in the group's total
// element order. The involution sends a term n*g to n*g^-1.
class GroupRingElement {
public:
  using Term = std::pair<GroupElement, Int>;

  explicit GroupRingElement(GroupPtr g) : g_(std::move(g)) {}
  GroupRingElement(GroupPtr g, std::vector<Term> terms);

  static GroupRingElement zero(GroupPtr g) { return GroupRingElement(std::move(g)); }
  static GroupRingElement one(GroupPtr g);
  static GroupRingElement from_int(GroupPtr g, const Int& n);
  static GroupRingElement monomial(GroupPtr g, const GroupElement& x, const Int& c);

  const GroupPtr& group() const { return g_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Int coeff(const GroupElement& x) const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement scaled(const Int& c) const;

  bool operator==(const GroupRingElement& o) const;
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  GroupRingElement involute() const;
  Int augmentation() const;

  bool is_self_conjugate() const { return *this == involute(); }

  // Self-conjugate, and the coefficient of every order-2 element g != 1 is
  // even. These are exactly the values that can appear on the diagonal of
  // an almost even Hermitian matrix.
  bool is_self_conjugate_almost_even() const;

  // Writes x = d*1 + y + involute(y) with d in {0,1}. Deterministic choice:
  // each pair {g, g^-1} with g^2 != 1 puts its full coefficient on the
  // smaller of the two; an order-2 element contributes half its (even)
  // coefficient; the identity contributes its parity to d and the rest,
  // halved, to y. Throws DomainError unless is_self_conjugate_almost_even.
  std::pair<int, GroupRingElement> split_self_conjugate() const;

  // Total order compatible with the canonical term order; used for stable
  // encodings of labeled graphs.
  bool less(const GroupRingElement& o) const;

  std::string to_string() const;

private:
  GroupPtr g_;
  std::vector<Term> terms_;

  void normalize();
};

// Image of x under the ring map Z[source] -> Z[target] induced by q.
GroupRingElement map_through(const GroupRingElement& x, const QuotientMap& q);

// x lies in the two-sided ideal generated by {h - 1 : h in ker q}; since
// ker q is normal this is exactly the kernel of the induced ring map.
bool ideal_member(const GroupRingElement& x, const QuotientMap& q);

inline GroupRingElement involute(const GroupRingElement& x) { return x.involute(); }
inline GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y) {
  return x * y;
}
inline Int augmentation(const GroupRingElement& x) { return x.augmentation(); }

}  // namespace zpi
