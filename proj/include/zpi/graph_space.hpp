#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zpi/group_ring.hpp"
#include "zpi/intlinalg.hpp"

namespace zpi {

// One oriented, labeled edge: half-edge ids a -> b with a nonzero label.
struct GraphEdge {
  int a, b;
  GroupRingElement label;
};

// Vertex-oriented, edge-oriented trivalent graph with Z[pi] edge labels.
// Half-edges carry global ids 0..3n-1; each vertex owns an ordered triple
// (its cyclic orientation), each edge pairs two distinct half-edges. Loops
// and parallel edges are allowed; a nonempty graph of degree n has n
// vertices and 3n/2 edges.
class DecoratedGraph {
public:
  DecoratedGraph(GroupPtr g, std::vector<std::array<int, 3>> vertices,
                 std::vector<GraphEdge> edges);
  static DecoratedGraph empty(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  int degree() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::array<int, 3>>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int vertex_of(int half) const;

  bool operator==(const DecoratedGraph& o) const;

private:
  GroupPtr group_;
  std::vector<std::array<int, 3>> vertices_;
  std::vector<GraphEdge> edges_;
};

// Total encoding order used for canonical forms and deterministic listings.
bool graph_less(const DecoratedGraph& a, const DecoratedGraph& b);

// Canonical representative under vertex relabeling, cyclic rotations and
// vertex-orientation transpositions (AS, one -1 each), and edge reversal
// with label involution (R1, free). sign relates the input to the
// canonical graph (input = sign * canonical); it is 0 when some symmetry
// realizes graph = -graph, i.e. the class is 2-torsion. sign_det is the
// sign of the first minimal transform in scan order and is what relation
// assembly uses, so rows stay deterministic even for torsion classes.
struct CanonicalForm {
  DecoratedGraph graph;
  int sign;
  int sign_det;
};
CanonicalForm canonical_form(const DecoratedGraph& g);

class FormalGraphSum {
public:
  void add(const DecoratedGraph& g, const Int& c);
  const std::vector<std::pair<DecoratedGraph, Int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const FormalGraphSum& o) const;

private:
  std::vector<std::pair<DecoratedGraph, Int>> terms_;  // sorted by graph_less
};

struct GraphEnumLimits {
  int max_degree = 4;
  long long max_group_size = 6;
  // raw representations x canonicalization transforms
  long long work_limit = 500'000'000;
};

// Local moves used to generate relations (exported for tests).
DecoratedGraph as_flip(const DecoratedGraph& g, int vertex);
DecoratedGraph r1_reverse(const DecoratedGraph& g, int edge);
DecoratedGraph r3_transport(const DecoratedGraph& g, int vertex, const GroupElement& x);
// I, H, X local reconnections at a non-loop edge labeled by the identity;
// nullopt when the edge is not eligible. The relation is I - H - X = 0.
std::optional<std::array<DecoratedGraph, 3>> ihx_terms(const DecoratedGraph& g, int edge);

// Isomorphism-class representatives of degree-n graphs with single group
// element labels (R2 reduces general labels to these), sorted by encoding.
std::vector<DecoratedGraph> enumerate_graphs(int degree, const GroupPtr& pi,
                                             const GraphEnumLimits& lim = {});

// AS, R1, R3, IHX instances over every basis graph and applicable site,
// plus the 2*b rows for self-negating basis classes.
std::vector<FormalGraphSum> relation_generators(int degree, const GroupPtr& pi,
                                                const GraphEnumLimits& lim = {});

struct GradedGroupReport {
  int degree = 0;
  GroupPtr group;
  long long basis_size = 0;
  long long relation_rows = 0;
  long long rank = 0;                 // free rank of the quotient
  std::vector<Int> invariant_factors; // nontrivial torsion factors (> 1)
  long long two_torsion_rank = 0;     // number of even invariant factors
};

GradedGroupReport graded_group(int degree, const GroupPtr& pi,
                               const GraphEnumLimits& lim = {});

// A graph decoration presented on fundamental-group level: the deterministic
// maximal forest, the non-forest (basis) edges, and one image in pi per
// basis loop, taken up to inner automorphisms independently per component.
struct Pi1Decoration {
  DecoratedGraph graph;
  std::vector<int> forest;             // edge indices
  std::vector<int> basis;              // edge indices, ascending
  std::vector<GroupElement> images;    // parallel to basis
  std::vector<int> component_of_basis; // parallel to basis
  int components = 0;
};

Pi1Decoration edge_to_pi1(const DecoratedGraph& g);
DecoratedGraph pi1_to_edge(const Pi1Decoration& d);

// Same structure and, per component, a conjugator in pi matching all basis
// images. Finite pi only.
bool out_equivalent(const Pi1Decoration& a, const Pi1Decoration& b);

// Relabels every graph in the sum through a group homomorphism given by a
// quotient map (functoriality at the generator level).
FormalGraphSum map_labels(const FormalGraphSum& s, const QuotientMap& q);

}  // namespace zpi
