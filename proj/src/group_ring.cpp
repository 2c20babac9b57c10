#include "zpi/group_ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zpi {

GroupRingElement::GroupRingElement(GroupPtr g, std::vector<Term> terms)
    : g_(std::move(g)), terms_(std::move(terms)) {
  for (const auto& [el, c] : terms_) g_->require(el, "group ring term");
  normalize();
}

GroupRingElement GroupRingElement::one(GroupPtr g) {
  auto e = g->identity();
  return GroupRingElement(std::move(g), {{e, Int(1)}});
}

GroupRingElement GroupRingElement::from_int(GroupPtr g, const Int& n) {
  auto e = g->identity();
  return GroupRingElement(std::move(g), {{e, n}});
}

GroupRingElement GroupRingElement::monomial(GroupPtr g, const GroupElement& x,
                                            const Int& c) {
  return GroupRingElement(std::move(g), {{x, c}});
}

void GroupRingElement::normalize() {
  std::map<GroupElement, Int, GroupElementLess> acc{GroupElementLess{g_.get()}};
  for (auto& [el, c] : terms_) acc[el] += c;
  terms_.clear();
  for (auto& [el, c] : acc)
    if (c != 0) terms_.emplace_back(el, std::move(c));
}

Int GroupRingElement::coeff(const GroupElement& x) const {
  for (const auto& [el, c] : terms_)
    if (el == x) return c;
  return Int(0);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_same_group(*g_, *o.g_, "add");
  std::vector<Term> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return GroupRingElement(g_, std::move(t));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  return *this + (-o);
}

GroupRingElement GroupRingElement::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& [el, c] : t) c = -c;
  GroupRingElement r(g_);
  r.terms_ = std::move(t);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same_group(*g_, *o.g_, "mul");
  std::vector<Term> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) t.emplace_back(g_->mul(a, b), ca * cb);
  return GroupRingElement(g_, std::move(t));
}

GroupRingElement GroupRingElement::scaled(const Int& c) const {
  std::vector<Term> t = terms_;
  for (auto& [el, k] : t) k *= c;
  return GroupRingElement(g_, std::move(t));
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return g_->same(*o.g_) && terms_ == o.terms_;
}

GroupRingElement GroupRingElement::involute() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [el, c] : terms_) t.emplace_back(g_->inv(el), c);
  return GroupRingElement(g_, std::move(t));
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (const auto& [el, c] : terms_) s += c;
  return s;
}

bool GroupRingElement::is_self_conjugate_almost_even() const {
  if (!is_self_conjugate()) return false;
  for (const auto& [el, c] : terms_)
    if (g_->is_involution(el) && c % 2 != 0) return false;
  return true;
}

std::pair<int, GroupRingElement> GroupRingElement::split_self_conjugate() const {
  if (!is_self_conjugate_almost_even())
    throw DomainError("split_self_conjugate: element is not self-conjugate almost even");
  GroupRingElement y(g_);
  std::vector<Term> yt;
  int d = 0;
  for (const auto& [el, c] : terms_) {
    if (g_->is_identity(el)) {
      Int parity = ((c % 2) + 2) % 2;
      d = static_cast<int>(parity);
      Int half = (c - parity) / 2;
      if (half != 0) yt.emplace_back(el, half);
    } else if (g_->is_involution(el)) {
      yt.emplace_back(el, c / 2);
    } else {
      auto iel = g_->inv(el);
      if (g_->less(el, iel)) yt.emplace_back(el, c);  // conjugate pair: keep the smaller
    }
  }
  y = GroupRingElement(g_, std::move(yt));
  return {d, y};
}

bool GroupRingElement::less(const GroupRingElement& o) const {
  const auto& a = terms_;
  const auto& b = o.terms_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (!(a[i].first == b[i].first))
      return g_->less(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [el, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int a = int_abs(c);
    if (g_->is_identity(el)) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "[" << g_->to_string(el) << "]";
    }
  }
  return os.str();
}

GroupRingElement map_through(const GroupRingElement& x, const QuotientMap& q) {
  require_same_group(*x.group(), *q.source(), "map_through");
  std::vector<GroupRingElement::Term> t;
  t.reserve(x.terms().size());
  for (const auto& [el, c] : x.terms()) t.emplace_back(q.image(el), c);
  return GroupRingElement(q.target(), std::move(t));
}

bool ideal_member(const GroupRingElement& x, const QuotientMap& q) {
  return map_through(x, q).is_zero();
}

}  // namespace zpi
