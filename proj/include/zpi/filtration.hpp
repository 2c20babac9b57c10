#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zpi/error.hpp"
#include "zpi/ints.hpp"

namespace zpi {

// Purely formal surgery symbols: the subset of component indices surgered.
using SurgerySymbol = std::set<int>;

// Finite integer combination of surgery symbols.
class FormalSum {
public:
  FormalSum() = default;

  void add(const SurgerySymbol& s, const Int& c);
  const std::map<SurgerySymbol, Int>& terms() const { return terms_; }
  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  FormalSum operator+(const FormalSum& o) const;
  FormalSum operator-(const FormalSum& o) const;
  std::string to_string() const;

private:
  std::map<SurgerySymbol, Int> terms_;
};

// [N,L] relative to already-surgered extras: the alternating sum over
// sublinks, sum_{L' subset L} (-1)^|L'| * Symbol(extras union L').
FormalSum bracket(const std::set<int>& L, const std::set<int>& extras = {});

// Both sides of the pushforward expansion: lhs expands [N_L, K] directly,
// rhs expands it through brackets of K union L'. They are equal; returning
// both lets callers check the cancellation.
std::pair<FormalSum, FormalSum> pushforward_expand(const std::set<int>& L,
                                                   const std::set<int>& K);

}  // namespace zpi
