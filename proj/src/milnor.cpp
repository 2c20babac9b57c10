#include "zpi/milnor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace zpi {

MuSym mu_rotate(const Group& g, const MuKey& k) {
  auto gi = g.inv(k.g);
  return {{k.j, k.k, k.i, g.mul(gi, k.h), gi}, +1};
}

MuSym mu_transpose(const Group&, const MuKey& k) {
  return {{k.i, k.k, k.j, k.h, k.g}, -1};
}

bool mu_defined(const Group& g, const MuKey& k) {
  if (k.i == k.j && g.is_identity(k.g)) return false;
  if (k.i == k.k && g.is_identity(k.h)) return false;
  if (k.j == k.k && k.g == k.h) return false;
  return true;
}

namespace {

std::string key_str(const Group& g, const MuKey& k) {
  std::ostringstream os;
  os << "(" << k.i << "," << k.j << "," << k.k << "; " << g.to_string(k.g) << ", "
     << g.to_string(k.h) << ")";
  return os.str();
}

void check_key(const Group& g, int q, const MuKey& k) {
  if (k.i < 1 || k.i > q || k.j < 1 || k.j > q || k.k < 1 || k.k > q)
    throw DomainError("mu entry: component index out of range");
  g.require(k.g, "mu entry");
  g.require(k.h, "mu entry");
  if (!mu_defined(g, k))
    throw DomainError("mu entry undefined at " + key_str(g, k) +
                      ": two slots coincide");
}

// Full signed orbit of a seed under the two generators. Conflicting signs
// at the same key mean the seed violates relations (1).
std::vector<std::pair<MuKey, int>> orbit_of(const Group& g, const MuKey& seed) {
  std::vector<std::pair<MuKey, int>> out{{seed, +1}};
  for (std::size_t t = 0; t < out.size(); ++t) {
    for (auto step : {mu_rotate(g, out[t].first), mu_transpose(g, out[t].first)}) {
      int sign = out[t].second * step.sign;
      bool found = false;
      for (auto& [k, s] : out)
        if (k == step.key) {
          found = true;
          if (s != sign)
            throw ConflictError("mu orbit of " + key_str(g, seed) +
                                " forces value = -value at " + key_str(g, step.key));
          break;
        }
      if (!found) out.emplace_back(step.key, sign);
    }
  }
  return out;
}

}  // namespace

bool MuCollection::key_less(const MuKey& a, const MuKey& b) const {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  if (a.k != b.k) return a.k < b.k;
  if (!(a.g == b.g)) return group_->less(a.g, b.g);
  if (!(a.h == b.h)) return group_->less(a.h, b.h);
  return false;
}

Int MuCollection::value(const MuKey& k) const {
  for (const auto& [key, v] : entries_)
    if (key == k) return v;
  return Int(0);
}

bool MuCollection::operator==(const MuCollection& o) const {
  return q_ == o.q_ && group_->same(*o.group_) && entries_ == o.entries_;
}

void MuCollection::add_orbit(const MuKey& seed, const Int& v) {
  check_key(*group_, q_, seed);
  if (v == 0) return;
  for (const auto& [k, s] : orbit_of(*group_, seed)) {
    check_key(*group_, q_, k);
    Int nv = v * s;
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), k,
        [&](const std::pair<MuKey, Int>& e, const MuKey& key) { return key_less(e.first, key); });
    if (it != entries_.end() && it->first == k) {
      it->second += nv;
      if (it->second == 0) entries_.erase(it);
    } else {
      entries_.insert(it, {k, nv});
    }
  }
}

std::vector<std::pair<MuKey, Int>> MuCollection::canonical_entries() const {
  std::vector<std::pair<MuKey, Int>> out;
  for (const auto& [k, v] : entries_) {
    bool minimal = true;
    for (const auto& [ok, os] : orbit_of(*group_, k))
      if (key_less(ok, k)) {
        minimal = false;
        break;
      }
    if (minimal) out.emplace_back(k, v);
  }
  return out;
}

MuCollection symmetry_closure(int q, GroupPtr g,
                              const std::vector<std::pair<MuKey, Int>>& seeds) {
  MuCollection c(q, std::move(g));
  // Saturate each seed's orbit, then check that overlapping orbits agreed
  // rather than summing: two paths to one key must force the same value.
  std::vector<std::pair<MuKey, Int>> want;
  for (const auto& [seed, v] : seeds) {
    if (v == 0) continue;
    check_key(*c.group(), q, seed);
    for (const auto& [k, s] : orbit_of(*c.group(), seed)) {
      Int nv = v * s;
      bool found = false;
      for (auto& [wk, wv] : want)
        if (wk == k) {
          found = true;
          if (wv != nv)
            throw ConflictError("symmetry_closure: orbit paths force " +
                                wv.str() + " and " + nv.str() + " at " +
                                key_str(*c.group(), k));
          break;
        }
      if (!found) want.emplace_back(k, nv);
    }
  }
  for (const auto& [k, v] : want) {
    // insert directly, preserving sort order
    auto it = std::lower_bound(c.entries_.begin(), c.entries_.end(), k,
                               [&](const std::pair<MuKey, Int>& e, const MuKey& key) {
                                 return c.key_less(e.first, key);
                               });
    c.entries_.insert(it, {k, v});
  }
  return c;
}

MuCollection lift_change(const MuCollection& c, const std::vector<GroupElement>& u) {
  const auto& g = c.group();
  if (static_cast<int>(u.size()) != c.q())
    throw DomainError("lift_change: tuple length must equal component count");
  for (const auto& x : u) g->require(x, "lift_change");
  MuCollection out(c.q(), g);
  std::vector<std::pair<MuKey, Int>> moved;
  for (const auto& [k, v] : c.entries()) {
    // old key (a,b) shows up at the new key (g_i a g_j^-1, g_i b g_k^-1)
    const auto& gi = u[static_cast<std::size_t>(k.i - 1)];
    const auto& gj = u[static_cast<std::size_t>(k.j - 1)];
    const auto& gk = u[static_cast<std::size_t>(k.k - 1)];
    MuKey nk{k.i, k.j, k.k, g->mul(g->mul(gi, k.g), g->inv(gj)),
             g->mul(g->mul(gi, k.h), g->inv(gk))};
    moved.emplace_back(nk, v);
  }
  std::sort(moved.begin(), moved.end(),
            [&](const auto& a, const auto& b) { return out.key_less(a.first, b.first); });
  for (auto& e : moved) out.entries_.push_back(std::move(e));
  return out;
}

MuCollection delta_move(const MuCollection& c, int i, int j, int k,
                        const GroupElement& g, const GroupElement& h, int sign,
                        bool* changed) {
  if (sign != 1 && sign != -1) throw DomainError("delta_move: sign must be +-1");
  if (i == j || i == k || j == k) {
    if (changed) *changed = false;  // repeated components: no effect
    return c;
  }
  MuCollection out = c;
  out.add_orbit(MuKey{i, j, k, g, h}, Int(sign));
  if (changed) *changed = true;
  return out;
}

namespace {

// Sound lift-change invariants: per-(i,j,k) support size always, and exact
// iii entries when pi is abelian (conjugation acts trivially there).
bool invariants_separate(const MuCollection& a, const MuCollection& b) {
  std::map<std::array<int, 3>, int> sa, sb;
  for (const auto& [k, v] : a.entries()) sa[{k.i, k.j, k.k}]++;
  for (const auto& [k, v] : b.entries()) sb[{k.i, k.j, k.k}]++;
  if (sa != sb) return true;
  const auto& g = a.group();
  bool abelian = g->kind() != GroupKind::Table && g->kind() != GroupKind::Free;
  if (abelian) {
    auto iii = [](const MuCollection& c) {
      std::vector<std::pair<MuKey, Int>> out;
      for (const auto& [k, v] : c.entries())
        if (k.i == k.j && k.j == k.k) out.emplace_back(k, v);
      return out;
    };
    if (iii(a) != iii(b)) return true;
  }
  return false;
}

bool try_tuples(const MuCollection& c1, const MuCollection& c2,
                const std::vector<GroupElement>& pool) {
  std::vector<GroupElement> u(static_cast<std::size_t>(c1.q()), c1.group()->identity());
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == c1.q()) return lift_change(c1, u) == c2;
    for (const auto& g : pool) {
      u[static_cast<std::size_t>(pos)] = g;
      if (rec(pos + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

EquivVerdict surgery_equivalent(const MuCollection& c1, const MuCollection& c2,
                                int ball_radius) {
  if (c1.q() != c2.q()) throw DomainError("surgery_equivalent: component counts differ");
  require_same_group(*c1.group(), *c2.group(), "surgery_equivalent");
  const auto& g = c1.group();
  if (invariants_separate(c1, c2)) return EquivVerdict::Inequivalent;
  if (g->finite()) {
    return try_tuples(c1, c2, g->elements()) ? EquivVerdict::Equivalent
                                             : EquivVerdict::Inequivalent;
  }
  if (try_tuples(c1, c2, g->ball(ball_radius))) return EquivVerdict::Equivalent;
  return EquivVerdict::Unknown;
}

bool PairRingElement::operator==(const PairRingElement& o) const {
  return group->same(*o.group) && terms == o.terms;
}

PairRingElement package_group_ring(const MuCollection& c, int i, int j, int k) {
  PairRingElement out{c.group(), {}};
  for (const auto& [key, v] : c.entries())
    if (key.i == i && key.j == j && key.k == k)
      out.terms.push_back({{key.g, key.h}, v});
  // entries() is already sorted by (g,h) within a fixed index triple
  return out;
}

}  // namespace zpi
