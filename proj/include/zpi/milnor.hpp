#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zpi/group_ring.hpp"

namespace zpi {

// Index-and-decoration key of one equivariant triple invariant entry:
// mu^{g,h}_{ijk}, indices 1-based.
struct MuKey {
  int i, j, k;
  GroupElement g, h;
  bool operator==(const MuKey&) const = default;
};

// The two symmetry generators of relations (1):
//   rotate:   (i,j,k,g,h) -> (j,k,i, g^-1 h, g^-1)     sign +1
//   transpose:(i,j,k,g,h) -> (i,k,j, h, g)             sign -1
// They generate an S3 action on the three slots (i,1),(j,g),(k,h); an entry
// is undefined exactly when two slots coincide, since an odd permutation
// then fixes it.
struct MuSym {
  MuKey key;
  int sign;
};
MuSym mu_rotate(const Group& g, const MuKey& k);
MuSym mu_transpose(const Group& g, const MuKey& k);
bool mu_defined(const Group& g, const MuKey& k);

// A valid collection of equivariant Milnor triple invariants: finite
// support, closed under relations (1), every key defined.
class MuCollection {
public:
  MuCollection(int q, GroupPtr g) : q_(q), group_(std::move(g)) {
    if (q_ < 0) throw DomainError("MuCollection: negative component count");
  }

  int q() const { return q_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<std::pair<MuKey, Int>>& entries() const { return entries_; }
  Int value(const MuKey& k) const;
  bool operator==(const MuCollection& o) const;

  // Orbit representatives: minimal key per orbit under (index-lex, then
  // group order on g, then h).
  std::vector<std::pair<MuKey, Int>> canonical_entries() const;

  bool key_less(const MuKey& a, const MuKey& b) const;

  // Used internally and by symmetry_closure; adds a full signed orbit.
  void add_orbit(const MuKey& seed, const Int& v);

private:
  int q_;
  GroupPtr group_;
  std::vector<std::pair<MuKey, Int>> entries_;  // sorted by key_less

  friend MuCollection symmetry_closure(int q, GroupPtr g,
                                       const std::vector<std::pair<MuKey, Int>>& seeds);
  friend MuCollection lift_change(const MuCollection& c,
                                  const std::vector<GroupElement>& u);
};

// Saturates the seeds under relations (1). Throws DomainError on an
// undefined key and ConflictError when two orbit paths force different
// values at the same key.
MuCollection symmetry_closure(int q, GroupPtr g,
                              const std::vector<std::pair<MuKey, Int>>& seeds);

// Change of lifts by u = (g_1..g_q): the new value at (i,j,k,g,h) is the
// old value at (i,j,k, g_i^-1 g g_j, g_i^-1 h g_k).
MuCollection lift_change(const MuCollection& c, const std::vector<GroupElement>& u);

// Effect of one Delta-move on three distinct components: adds sign to the
// orbit seeded at (i,j,k,g,h). With repeated indices the move does nothing;
// *changed reports which.
MuCollection delta_move(const MuCollection& c, int i, int j, int k,
                        const GroupElement& g, const GroupElement& h, int sign,
                        bool* changed = nullptr);

enum class EquivVerdict { Equivalent, Inequivalent, Unknown };

// Decides whether some lift change maps c1 to c2. Exhaustive over pi^q for
// finite pi; for infinite pi the search runs over the radius-r ball and
// only sound action invariants may certify inequivalence (per-triple
// support sizes; exact iii entries when pi is abelian).
EquivVerdict surgery_equivalent(const MuCollection& c1, const MuCollection& c2,
                                int ball_radius = 3);

// mu_{ijk} packaged as an element of Z[pi x pi].
struct PairRingElement {
  GroupPtr group;
  std::vector<std::pair<std::pair<GroupElement, GroupElement>, Int>> terms;
  bool operator==(const PairRingElement& o) const;
};
PairRingElement package_group_ring(const MuCollection& c, int i, int j, int k);

}  // namespace zpi
