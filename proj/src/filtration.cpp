#include "zpi/filtration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zpi {

void FormalSum::add(const SurgerySymbol& s, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
  FormalSum r = *this;
  for (const auto& [s, c] : o.terms_) r.add(s, c);
  return r;
}

FormalSum FormalSum::operator-(const FormalSum& o) const {
  FormalSum r = *this;
  for (const auto& [s, c] : o.terms_) r.add(s, -c);
  return r;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int a = int_abs(c);
    if (a != 1) os << a << "*";
    os << "N{";
    bool f2 = true;
    for (int i : s) {
      if (!f2) os << ",";
      f2 = false;
      os << i;
    }
    os << "}";
  }
  return os.str();
}

namespace {

void for_each_subset(const std::vector<int>& items,
                     const std::function<void(const SurgerySymbol&, int)>& fn) {
  const std::size_t n = items.size();
  if (n > 20) throw ResourceBoundError("bracket: too many components");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    SurgerySymbol s;
    int parity = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        s.insert(items[i]);
        parity = -parity;
      }
    fn(s, parity);
  }
}

}  // namespace

FormalSum bracket(const std::set<int>& L, const std::set<int>& extras) {
  for (int i : L)
    if (extras.count(i)) throw DomainError("bracket: surgered set overlaps extras");
  std::vector<int> items(L.begin(), L.end());
  FormalSum out;
  for_each_subset(items, [&](const SurgerySymbol& sub, int parity) {
    SurgerySymbol s = extras;
    s.insert(sub.begin(), sub.end());
    out.add(s, Int(parity));
  });
  return out;
}

std::pair<FormalSum, FormalSum> pushforward_expand(const std::set<int>& L,
                                                   const std::set<int>& K) {
  for (int i : L)
    if (K.count(i)) throw DomainError("pushforward_expand: L and K overlap");
  // lhs: [N_L, K] written out over sublinks of K, all on top of L.
  FormalSum lhs = bracket(K, L);
  // rhs: sum over L' of (-1)^|L'| [N, K union L'].
  FormalSum rhs;
  std::vector<int> items(L.begin(), L.end());
  for_each_subset(items, [&](const SurgerySymbol& lsub, int parity) {
    std::set<int> kl = K;
    kl.insert(lsub.begin(), lsub.end());
    FormalSum b = bracket(kl, {});
    if (parity > 0)
      rhs = rhs + b;
    else
      rhs = rhs - b;
  });
  return {lhs, rhs};
}

}  // namespace zpi
