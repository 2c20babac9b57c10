#pragma once

// Seeded generators for property tests. Everything draws from a caller-owned
// std::mt19937_64 so failures reproduce from the printed seed.

#include <random>
#include <vector>

#include "zpi/graph_space.hpp"
#include "zpi/hermitian.hpp"
#include "zpi/milnor.hpp"

namespace zpi::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline GroupElement random_element(Rng& rng, const GroupPtr& g, int radius = 2) {
  auto pool = g->finite() ? g->elements() : g->ball(radius);
  return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
}

inline GroupRingElement random_ring(Rng& rng, const GroupPtr& g, int max_support = 3,
                                    int coeff_bound = 3, int radius = 2) {
  GroupRingElement x = GroupRingElement::zero(g);
  int terms = uniform(rng, 0, max_support);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(rng, -coeff_bound, coeff_bound);
    if (c == 0) continue;
    x = x + GroupRingElement::monomial(g, random_element(rng, g, radius), Int(c));
  }
  return x;
}

inline GroupRingElement random_self_conjugate_almost_even(Rng& rng, const GroupPtr& g,
                                                          int max_support = 2,
                                                          int coeff_bound = 2,
                                                          int radius = 2) {
  GroupRingElement y = random_ring(rng, g, max_support, coeff_bound, radius);
  GroupRingElement x = y + y.involute();
  int c = uniform(rng, -coeff_bound, coeff_bound);
  if (c != 0) x = x + GroupRingElement::from_int(g, Int(c));
  return x;
}

inline HermitianMatrix random_almost_even(Rng& rng, const GroupPtr& g, int n,
                                          int max_support = 3, int radius = 2) {
  RingMatrix m(g, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = random_ring(rng, g, max_support, 2, radius);
      m.at(j, i) = m.at(i, j).involute();
    }
    m.at(i, i) = random_self_conjugate_almost_even(rng, g, 2, 2, radius);
  }
  return HermitianMatrix(std::move(m));
}

// Product of elementary generators: invertible by construction.
inline RingMatrix random_elementary(Rng& rng, const GroupPtr& g, int n, int moves = 4,
                                    int radius = 2) {
  RingMatrix p = RingMatrix::identity(g, n);
  for (int t = 0; t < moves && n > 0; ++t) {
    if (n > 1 && uniform(rng, 0, 2) != 0) {
      int i = uniform(rng, 0, n - 1);
      int j = uniform(rng, 0, n - 1);
      if (i == j) continue;
      GroupRingElement c = random_ring(rng, g, 2, 1, radius);
      if (c.is_zero()) continue;
      for (int k = 0; k < n; ++k) p.at(i, k) = p.at(i, k) + c * p.at(j, k);
    } else {
      int i = uniform(rng, 0, n - 1);
      GroupRingElement u = GroupRingElement::monomial(
          g, random_element(rng, g, radius), Int(uniform(rng, 0, 1) ? 1 : -1));
      for (int k = 0; k < n; ++k) p.at(i, k) = u * p.at(i, k);
    }
  }
  return p;
}

// Congruence image of a random unidiagonal matrix: invertible over Z[pi],
// almost even, and already reduced in the Witt semigroup.
inline HermitianMatrix random_invertible_almost_even(Rng& rng, const GroupPtr& g, int n,
                                                     int moves = 4, int radius = 2) {
  std::vector<int> signs;
  for (int i = 0; i < n; ++i) signs.push_back(uniform(rng, 0, 1) ? 1 : -1);
  HermitianMatrix d = HermitianMatrix::unidiagonal(g, signs);
  return apply_congruence(d, random_elementary(rng, g, n, moves, radius));
}

inline MuCollection random_mu(Rng& rng, int q, const GroupPtr& g, int orbit_seeds = 3,
                              int radius = 2) {
  MuCollection c(q, g);
  for (int t = 0; t < orbit_seeds; ++t) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      MuKey k{uniform(rng, 1, q), uniform(rng, 1, q), uniform(rng, 1, q),
              random_element(rng, g, radius), random_element(rng, g, radius)};
      if (!mu_defined(*g, k)) continue;
      c.add_orbit(k, Int(uniform(rng, 0, 1) ? 1 : -1));
      break;
    }
  }
  return c;
}

// Random trivalent graph, labels all 1 (shapes for decoration tests).
inline DecoratedGraph random_shape(Rng& rng, const GroupPtr& g, int degree) {
  std::vector<std::array<int, 3>> verts(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) verts[v] = {3 * v, 3 * v + 1, 3 * v + 2};
  std::vector<int> ids(static_cast<std::size_t>(3 * degree));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i + 1 < ids.size(); i += 2)
    edges.push_back({ids[i], ids[i + 1], GroupRingElement::one(g)});
  return DecoratedGraph(g, std::move(verts), std::move(edges));
}

inline Pi1Decoration random_decoration(Rng& rng, const GroupPtr& g, int degree) {
  Pi1Decoration d = edge_to_pi1(random_shape(rng, g, degree));
  for (auto& im : d.images) im = random_element(rng, g);
  return d;
}

}  // namespace zpi::testgen
