#include "zpi/graph_space.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace zpi {

DecoratedGraph::DecoratedGraph(GroupPtr g, std::vector<std::array<int, 3>> vertices,
                               std::vector<GraphEdge> edges)
    : group_(std::move(g)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = static_cast<int>(vertices_.size());
  if (n % 2 != 0) throw DomainError("graph: degree must be even");
  if (static_cast<int>(edges_.size()) * 2 != 3 * n)
    throw DomainError("graph: edge count must be 3n/2");
  std::vector<int> seen_v(3 * n, 0), seen_e(3 * n, 0);
  for (const auto& t : vertices_)
    for (int h : t) {
      if (h < 0 || h >= 3 * n) throw DomainError("graph: half-edge id out of range");
      if (seen_v[h]++) throw DomainError("graph: half-edge id repeated in vertices");
    }
  for (const auto& e : edges_) {
    if (e.a < 0 || e.a >= 3 * n || e.b < 0 || e.b >= 3 * n || e.a == e.b)
      throw DomainError("graph: bad edge endpoints");
    if (seen_e[e.a]++ || seen_e[e.b]++)
      throw DomainError("graph: half-edge id repeated in edges");
    if (e.label.is_zero()) throw DomainError("graph: zero edge label");
    require_same_group(*group_, *e.label.group(), "graph label");
  }
}

DecoratedGraph DecoratedGraph::empty(GroupPtr g) {
  return DecoratedGraph(std::move(g), {}, {});
}

int DecoratedGraph::vertex_of(int half) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (int h : vertices_[v])
      if (h == half) return static_cast<int>(v);
  throw DomainError("graph: unknown half-edge id");
}

bool DecoratedGraph::operator==(const DecoratedGraph& o) const {
  if (!group_->same(*o.group_) || vertices_ != o.vertices_ ||
      edges_.size() != o.edges_.size())
    return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].a != o.edges_[i].a || edges_[i].b != o.edges_[i].b ||
        edges_[i].label != o.edges_[i].label)
      return false;
  return true;
}

bool graph_less(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ea = a.edges();
  const auto& eb = b.edges();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].a != eb[i].a) return ea[i].a < eb[i].a;
    if (ea[i].b != eb[i].b) return ea[i].b < eb[i].b;
    if (ea[i].label != eb[i].label) return ea[i].label.less(eb[i].label);
  }
  if (a.vertices() != b.vertices()) return a.vertices() < b.vertices();
  return false;
}

namespace {

// The six slot permutations with their AS signs.
constexpr int kSlotPerm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                 {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
constexpr int kSlotSign[6] = {1, 1, 1, -1, -1, -1};

struct EncodedEdge {
  int a, b, lkey;
  bool operator<(const EncodedEdge& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return lkey < o.lkey;
  }
  bool operator==(const EncodedEdge& o) const = default;
};

}  // namespace

CanonicalForm canonical_form(const DecoratedGraph& g) {
  const int n = g.degree();
  if (n == 0) return {g, 1, 1};

  // Label table: every label together with its involute, globally ordered,
  // so reorientation is a key swap and comparisons are integer compares.
  std::vector<GroupRingElement> table;
  for (const auto& e : g.edges()) {
    table.push_back(e.label);
    table.push_back(e.label.involute());
  }
  std::sort(table.begin(), table.end(),
            [](const GroupRingElement& x, const GroupRingElement& y) { return x.less(y); });
  table.erase(std::unique(table.begin(), table.end()), table.end());
  auto key_of = [&](const GroupRingElement& l) {
    auto it = std::lower_bound(table.begin(), table.end(), l,
                               [](const GroupRingElement& x, const GroupRingElement& y) {
                                 return x.less(y);
                               });
    return static_cast<int>(it - table.begin());
  };
  struct RawEdge {
    int a, b, lk, lki;
  };
  std::vector<RawEdge> raw;
  for (const auto& e : g.edges())
    raw.push_back({e.a, e.b, key_of(e.label), key_of(e.label.involute())});

  std::vector<int> half_vertex(3 * n), half_slot(3 * n);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 3; ++s) {
      half_vertex[g.vertices()[v][s]] = v;
      half_slot[g.vertices()[v][s]] = s;
    }

  std::vector<int> vperm(n);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::vector<EncodedEdge> best, cur(raw.size());
  bool have_best = false;
  bool seen_plus = false, seen_minus = false;
  int first_sign = 1;
  std::vector<int> slot_combo(n, 0);
  std::vector<int> newid(3 * n);
  do {
    std::fill(slot_combo.begin(), slot_combo.end(), 0);
    for (;;) {
      int sign = 1;
      for (int v = 0; v < n; ++v) sign *= kSlotSign[slot_combo[v]];
      for (int v = 0; v < n; ++v) {
        const auto& t = g.vertices()[v];
        const int* sp = kSlotPerm[slot_combo[v]];
        for (int k = 0; k < 3; ++k) newid[t[sp[k]]] = 3 * vperm[v] + k;
      }
      for (std::size_t i = 0; i < raw.size(); ++i) {
        int a = newid[raw[i].a], b = newid[raw[i].b];
        if (a < b)
          cur[i] = {a, b, raw[i].lk};
        else
          cur[i] = {b, a, raw[i].lki};
      }
      std::sort(cur.begin(), cur.end());
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
        seen_plus = sign > 0;
        seen_minus = sign < 0;
        first_sign = sign;
      } else if (cur == best) {
        (sign > 0 ? seen_plus : seen_minus) = true;
      }
      // odometer over per-vertex slot permutations
      int v = 0;
      while (v < n && ++slot_combo[v] == 6) slot_combo[v++] = 0;
      if (v == n) break;
    }
  } while (std::next_permutation(vperm.begin(), vperm.end()));

  std::vector<std::array<int, 3>> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = {3 * v, 3 * v + 1, 3 * v + 2};
  std::vector<GraphEdge> edges;
  for (const auto& e : best) edges.push_back({e.a, e.b, table[e.lkey]});
  DecoratedGraph canon(g.group(), std::move(verts), std::move(edges));
  int sign = (seen_plus && seen_minus) ? 0 : first_sign;
  return {std::move(canon), sign, first_sign};
}

void FormalGraphSum::add(const DecoratedGraph& g, const Int& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const std::pair<DecoratedGraph, Int>& t,
                                const DecoratedGraph& x) { return graph_less(t.first, x); });
  if (it != terms_.end() && it->first == g) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {g, c});
  }
}

bool FormalGraphSum::operator==(const FormalGraphSum& o) const {
  return terms_ == o.terms_;
}

DecoratedGraph as_flip(const DecoratedGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.degree()) throw DomainError("as_flip: bad vertex");
  auto verts = g.vertices();
  std::swap(verts[vertex][0], verts[vertex][1]);
  return DecoratedGraph(g.group(), std::move(verts), g.edges());
}

DecoratedGraph r1_reverse(const DecoratedGraph& g, int edge) {
  if (edge < 0 || edge >= static_cast<int>(g.edges().size()))
    throw DomainError("r1_reverse: bad edge");
  auto edges = g.edges();
  std::swap(edges[edge].a, edges[edge].b);
  edges[edge].label = edges[edge].label.involute();
  return DecoratedGraph(g.group(), g.vertices(), std::move(edges));
}

DecoratedGraph r3_transport(const DecoratedGraph& g, int vertex, const GroupElement& x) {
  if (vertex < 0 || vertex >= g.degree()) throw DomainError("r3_transport: bad vertex");
  const auto& gr = g.group();
  gr->require(x, "r3_transport");
  auto xin = GroupRingElement::monomial(gr, x, Int(1));
  auto xout = GroupRingElement::monomial(gr, gr->inv(x), Int(1));
  auto edges = g.edges();
  for (auto& e : edges) {
    // oriented toward the vertex: label * g; away from it: g^-1 * label
    if (g.vertex_of(e.b) == vertex) e.label = e.label * xin;
    if (g.vertex_of(e.a) == vertex) e.label = xout * e.label;
  }
  return DecoratedGraph(gr, g.vertices(), std::move(edges));
}

namespace {

std::array<int, 3> rotate_to_last(const std::array<int, 3>& t, int h) {
  for (int p = 0; p < 3; ++p)
    if (t[p] == h) return {t[(p + 1) % 3], t[(p + 2) % 3], h};
  throw DomainError("ihx: half-edge not at vertex");
}

std::array<int, 3> rotate_to_first(const std::array<int, 3>& t, int h) {
  for (int p = 0; p < 3; ++p)
    if (t[p] == h) return {h, t[(p + 1) % 3], t[(p + 2) % 3]};
  throw DomainError("ihx: half-edge not at vertex");
}

}  // namespace

std::optional<std::array<DecoratedGraph, 3>> ihx_terms(const DecoratedGraph& g, int edge) {
  if (edge < 0 || edge >= static_cast<int>(g.edges().size()))
    throw DomainError("ihx_terms: bad edge");
  const auto& e = g.edges()[edge];
  if (e.label != GroupRingElement::one(g.group())) return std::nullopt;
  const int u = g.vertex_of(e.a), v = g.vertex_of(e.b);
  if (u == v) return std::nullopt;
  // Local picture with the inner edge last at u and first at v:
  // u = (a, b, e.a), v = (e.b, c, d). The three reconnections are
  //   I: (a,b | c,d)   H: (a,c | b,d)   X: (b,c | d,a)
  // and the relation in the graph group is I - H - X = 0.
  const auto tu = rotate_to_last(g.vertices()[u], e.a);
  const auto tv = rotate_to_first(g.vertices()[v], e.b);
  const int a = tu[0], b = tu[1], c = tv[1], d = tv[2];
  auto build = [&](std::array<int, 3> nu, std::array<int, 3> nv) {
    auto verts = g.vertices();
    verts[u] = nu;
    verts[v] = nv;
    return DecoratedGraph(g.group(), std::move(verts), g.edges());
  };
  DecoratedGraph gi = build({a, b, e.a}, {e.b, c, d});
  DecoratedGraph gh = build({a, c, e.a}, {e.b, b, d});
  DecoratedGraph gx = build({b, c, e.a}, {e.b, d, a});
  return std::array<DecoratedGraph, 3>{std::move(gi), std::move(gh), std::move(gx)};
}

namespace {

long long double_factorial_odd(int m) {  // (m-1)!! for even m
  long long r = 1;
  for (int k = m - 1; k > 1; k -= 2) r *= k;
  return r;
}

long long int_pow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_limits(int degree, const GroupPtr& pi, const GraphEnumLimits& lim) {
  if (degree < 0 || degree % 2 != 0)
    throw DomainError("enumerate_graphs: degree must be even and nonnegative");
  if (!pi->finite())
    throw DomainError("enumerate_graphs: decorating group must be finite");
  if (degree > lim.max_degree)
    throw ResourceBoundError("enumerate_graphs: degree exceeds configured bound");
  if (pi->size() > lim.max_group_size)
    throw ResourceBoundError("enumerate_graphs: group size exceeds configured bound");
  if (degree == 0) return;
  long long fact = 1;
  for (int k = 2; k <= degree; ++k) fact *= k;
  long long reps = double_factorial_odd(3 * degree) *
                   int_pow(pi->size(), 3 * degree / 2);
  long long transforms = fact * int_pow(6, degree);
  if (reps > lim.work_limit / transforms)
    throw ResourceBoundError("enumerate_graphs: estimated work exceeds configured bound");
}

void for_each_matching(int m, std::vector<int>& free_ids,
                       std::vector<std::pair<int, int>>& acc,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (free_ids.empty()) {
    fn(acc);
    return;
  }
  int a = free_ids[0];
  for (std::size_t t = 1; t < free_ids.size(); ++t) {
    int b = free_ids[t];
    std::vector<int> rest;
    for (std::size_t s = 1; s < free_ids.size(); ++s)
      if (s != t) rest.push_back(free_ids[s]);
    acc.emplace_back(a, b);
    for_each_matching(m, rest, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

std::vector<DecoratedGraph> enumerate_graphs(int degree, const GroupPtr& pi,
                                             const GraphEnumLimits& lim) {
  check_limits(degree, pi, lim);
  if (degree == 0) return {DecoratedGraph::empty(pi)};
  const int n = degree, ne = 3 * n / 2;
  const auto els = pi->elements();

  std::vector<std::array<int, 3>> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = {3 * v, 3 * v + 1, 3 * v + 2};

  auto cmp = [](const DecoratedGraph& x, const DecoratedGraph& y) {
    return graph_less(x, y);
  };
  std::set<DecoratedGraph, decltype(cmp)> out(cmp);

  std::vector<int> ids(3 * n);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::pair<int, int>> acc;
  for_each_matching(3 * n, ids, acc, [&](const std::vector<std::pair<int, int>>& match) {
    std::vector<int> digits(ne, 0);
    for (;;) {
      std::vector<GraphEdge> edges;
      edges.reserve(ne);
      for (int i = 0; i < ne; ++i)
        edges.push_back({match[i].first, match[i].second,
                         GroupRingElement::monomial(pi, els[digits[i]], Int(1))});
      DecoratedGraph g(pi, verts, std::move(edges));
      out.insert(canonical_form(g).graph);
      int i = 0;
      while (i < ne && ++digits[i] == static_cast<int>(els.size())) digits[i++] = 0;
      if (i == ne) break;
    }
  });
  return {out.begin(), out.end()};
}

std::vector<FormalGraphSum> relation_generators(int degree, const GroupPtr& pi,
                                                const GraphEnumLimits& lim) {
  auto basis = enumerate_graphs(degree, pi, lim);
  const auto els = pi->elements();
  std::vector<FormalGraphSum> rows;
  auto signed_canon = [](const DecoratedGraph& g, FormalGraphSum& row, const Int& c) {
    CanonicalForm cf = canonical_form(g);
    row.add(cf.graph, c * cf.sign_det);
  };
  for (const auto& b : basis) {
    CanonicalForm self = canonical_form(b);
    if (self.sign == 0) {
      FormalGraphSum row;
      row.add(b, Int(2));  // b = -b via an odd self-symmetry
      rows.push_back(std::move(row));
    }
    for (int v = 0; v < b.degree(); ++v) {
      FormalGraphSum row;
      row.add(b, Int(1));
      signed_canon(as_flip(b, v), row, Int(1));  // AS: b + flip(b) = 0
      rows.push_back(std::move(row));
    }
    for (int e = 0; e < static_cast<int>(b.edges().size()); ++e) {
      FormalGraphSum row;
      row.add(b, Int(1));
      signed_canon(r1_reverse(b, e), row, Int(-1));  // R1: b = reversed
      rows.push_back(std::move(row));
    }
    for (int v = 0; v < b.degree(); ++v)
      for (const auto& x : els) {
        FormalGraphSum row;
        row.add(b, Int(1));
        signed_canon(r3_transport(b, v, x), row, Int(-1));
        rows.push_back(std::move(row));
      }
    for (int e = 0; e < static_cast<int>(b.edges().size()); ++e) {
      auto terms = ihx_terms(b, e);
      if (!terms) continue;
      FormalGraphSum row;
      row.add(b, Int(1));  // the I term is b itself up to rotations
      signed_canon((*terms)[1], row, Int(-1));
      signed_canon((*terms)[2], row, Int(-1));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GradedGroupReport graded_group(int degree, const GroupPtr& pi,
                               const GraphEnumLimits& lim) {
  auto basis = enumerate_graphs(degree, pi, lim);
  auto cmp = [](const DecoratedGraph& x, const DecoratedGraph& y) {
    return graph_less(x, y);
  };
  std::map<DecoratedGraph, int, decltype(cmp)> index(cmp);
  for (std::size_t i = 0; i < basis.size(); ++i)
    index.emplace(basis[i], static_cast<int>(i));

  std::vector<SparseRow> rows;
  for (const auto& sum : relation_generators(degree, pi, lim)) {
    if (sum.is_zero()) continue;
    SparseRow row;
    for (const auto& [g, c] : sum.terms()) {
      auto it = index.find(g);
      if (it == index.end())
        throw Error("graded_group: relation term escapes the enumerated basis");
      row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }

  GradedGroupReport rep;
  rep.degree = degree;
  rep.group = pi;
  rep.basis_size = static_cast<long long>(basis.size());
  rep.relation_rows = static_cast<long long>(rows.size());
  auto factors = smith_factors_sparse(std::move(rows), static_cast<int>(basis.size()));
  rep.rank = rep.basis_size - static_cast<long long>(factors.size());
  for (const auto& d : factors) {
    if (d > 1) rep.invariant_factors.push_back(d);
    if (d % 2 == 0) ++rep.two_torsion_rank;
  }
  return rep;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

GroupElement monomial_element(const GraphEdge& e) {
  if (e.label.support_size() != 1 || e.label.terms()[0].second != 1)
    throw DomainError("edge_to_pi1: edge label is not a single group element");
  return e.label.terms()[0].first;
}

}  // namespace

Pi1Decoration edge_to_pi1(const DecoratedGraph& g) {
  const auto& gr = g.group();
  const int n = g.degree();
  const int ne = static_cast<int>(g.edges().size());
  std::vector<GroupElement> labels;
  for (const auto& e : g.edges()) labels.push_back(monomial_element(e));

  // Lexicographically first spanning forest: edges keyed by their unordered
  // vertex pair, then index, taken greedily.
  std::vector<int> order(ne);
  std::iota(order.begin(), order.end(), 0);
  auto vkey = [&](int e) {
    int u = g.vertex_of(g.edges()[e].a), v = g.vertex_of(g.edges()[e].b);
    return std::array<int, 3>{std::min(u, v), std::max(u, v), e};
  };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return vkey(x) < vkey(y); });
  UnionFind uf(std::max(n, 1));
  std::vector<char> in_forest(ne, 0);
  for (int e : order) {
    int u = g.vertex_of(g.edges()[e].a), v = g.vertex_of(g.edges()[e].b);
    if (u != v && uf.unite(u, v)) in_forest[e] = 1;
  }

  Pi1Decoration d{g, {}, {}, {}, {}, 0};
  for (int e = 0; e < ne; ++e)
    (in_forest[e] ? d.forest : d.basis).push_back(e);

  // Root each component at its smallest vertex and record parent edges.
  std::vector<int> comp(n, -1), parent_edge(n, -1), parent_vertex(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (int e : d.forest) {
    adj[g.vertex_of(g.edges()[e].a)].push_back(e);
    adj[g.vertex_of(g.edges()[e].b)].push_back(e);
  }
  int ncomp = 0;
  for (int r = 0; r < n; ++r) {
    if (comp[r] >= 0) continue;
    int cid = ncomp++;
    std::vector<int> stack{r};
    comp[r] = cid;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : adj[x]) {
        int u = g.vertex_of(g.edges()[e].a), v = g.vertex_of(g.edges()[e].b);
        int y = (u == x) ? v : u;
        if (comp[y] >= 0) continue;
        comp[y] = cid;
        parent_edge[y] = e;
        parent_vertex[y] = x;
        stack.push_back(y);
      }
    }
  }
  d.components = ncomp;

  // alpha of the tree path from the root down to x (products read root->x).
  auto path_word = [&](int x) {
    std::vector<GroupElement> w;
    int cur = x;
    while (parent_edge[cur] >= 0) {
      int e = parent_edge[cur];
      int from = parent_vertex[cur];
      bool forward = g.vertex_of(g.edges()[e].a) == from &&
                     g.vertex_of(g.edges()[e].b) == cur;
      w.push_back(forward ? labels[e] : gr->inv(labels[e]));
      cur = from;
    }
    std::reverse(w.begin(), w.end());
    GroupElement acc = gr->identity();
    for (const auto& l : w) acc = gr->mul(acc, l);
    return acc;
  };
  for (int e : d.basis) {
    int u = g.vertex_of(g.edges()[e].a), v = g.vertex_of(g.edges()[e].b);
    GroupElement w = gr->mul(gr->mul(path_word(u), labels[e]), gr->inv(path_word(v)));
    d.images.push_back(w);
    d.component_of_basis.push_back(comp[u]);
  }
  return d;
}

DecoratedGraph pi1_to_edge(const Pi1Decoration& d) {
  const auto& g = d.graph;
  const auto& gr = g.group();
  if (d.forest.size() + d.basis.size() != g.edges().size())
    throw DomainError("pi1_to_edge: forest and basis do not partition the edges");
  if (d.images.size() != d.basis.size())
    throw DomainError("pi1_to_edge: one image per basis edge required");
  auto edges = g.edges();
  for (int e : d.forest) edges[e].label = GroupRingElement::one(gr);
  for (std::size_t i = 0; i < d.basis.size(); ++i) {
    gr->require(d.images[i], "pi1_to_edge");
    edges[d.basis[i]].label = GroupRingElement::monomial(gr, d.images[i], Int(1));
  }
  return DecoratedGraph(gr, g.vertices(), std::move(edges));
}

bool out_equivalent(const Pi1Decoration& a, const Pi1Decoration& b) {
  const auto& g = a.graph.group();
  require_same_group(*g, *b.graph.group(), "out_equivalent");
  if (!g->finite())
    throw UnsupportedGroupError("out_equivalent: group must be finite");
  if (a.graph.vertices() != b.graph.vertices() ||
      a.graph.edges().size() != b.graph.edges().size())
    throw DomainError("out_equivalent: graphs differ");
  for (std::size_t i = 0; i < a.graph.edges().size(); ++i)
    if (a.graph.edges()[i].a != b.graph.edges()[i].a ||
        a.graph.edges()[i].b != b.graph.edges()[i].b)
      throw DomainError("out_equivalent: graphs differ");
  if (a.forest != b.forest || a.basis != b.basis)
    throw DomainError("out_equivalent: decorations use different forests");

  const auto els = g->elements();
  for (int comp = 0; comp < std::max(a.components, 1); ++comp) {
    bool found = false;
    for (const auto& c : els) {
      bool ok = true;
      for (std::size_t p = 0; p < a.basis.size() && ok; ++p) {
        if (a.component_of_basis[p] != comp) continue;
        ok = b.images[p] == g->mul(g->mul(c, a.images[p]), g->inv(c));
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

FormalGraphSum map_labels(const FormalGraphSum& s, const QuotientMap& q) {
  FormalGraphSum out;
  for (const auto& [g, c] : s.terms()) {
    require_same_group(*g.group(), *q.source(), "map_labels");
    auto edges = g.edges();
    for (auto& e : edges) {
      e.label = map_through(e.label, q);
      if (e.label.is_zero())
        throw DomainError("map_labels: label maps to zero");
    }
    DecoratedGraph mapped(q.target(), g.vertices(), std::move(edges));
    CanonicalForm cf = canonical_form(mapped);
    out.add(cf.graph, c * cf.sign_det);
  }
  return out;
}

}  // namespace zpi
