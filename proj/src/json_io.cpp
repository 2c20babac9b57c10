#include "zpi/json_io.hpp"

#include <sstream>

namespace zpi::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("json: " + what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json group_to_json(const GroupPtr& g) {
  json j;
  switch (g->kind()) {
    case GroupKind::Trivial:
      j["kind"] = "trivial";
      break;
    case GroupKind::Cyclic:
      j["kind"] = "cyclic";
      j["m"] = g->modulus();
      break;
    case GroupKind::Table:
      j["kind"] = "table";
      j["table"] = g->mul_table();
      break;
    case GroupKind::FreeAbelian:
      j["kind"] = "free_abelian";
      j["rank"] = g->rank();
      break;
    case GroupKind::Free:
      j["kind"] = "free";
      j["rank"] = g->rank();
      break;
  }
  return j;
}

GroupPtr group_from_json(const json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "trivial") return Group::trivial();
  if (kind == "cyclic") return Group::cyclic(field(j, "m").get<std::int64_t>());
  if (kind == "free_abelian")
    return Group::free_abelian(as_int(field(j, "rank"), "rank"));
  if (kind == "free") return Group::free(as_int(field(j, "rank"), "rank"));
  if (kind == "table")
    return Group::table(field(j, "table").get<std::vector<std::vector<int>>>());
  bad("unknown group kind '" + kind + "'");
}

json element_to_json(const Group& g, const GroupElement& x) {
  g.require(x, "element_to_json");
  switch (g.kind()) {
    case GroupKind::Trivial:
      return json(0);
    case GroupKind::Cyclic:
    case GroupKind::Table:
      return json(x.payload()[0]);
    case GroupKind::FreeAbelian:
      return json(x.payload());
    case GroupKind::Free:
      return json(g.to_string(x));
  }
  return json();
}

GroupElement element_from_json(const Group& g, const json& j) {
  switch (g.kind()) {
    case GroupKind::Trivial:
      return g.identity();
    case GroupKind::Cyclic:
    case GroupKind::Table: {
      if (!j.is_number_integer()) bad("element must be an integer");
      GroupElement e({j.get<std::int64_t>()});
      g.require(e, "element_from_json");
      return e;
    }
    case GroupKind::FreeAbelian: {
      if (!j.is_array()) bad("element must be an integer vector");
      GroupElement e(j.get<std::vector<std::int64_t>>());
      g.require(e, "element_from_json");
      return e;
    }
    case GroupKind::Free: {
      if (!j.is_string()) bad("element must be a word string");
      return g.parse(j.get<std::string>());
    }
  }
  bad("unsupported group kind");
}

json int_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad("bad integer string '" + j.get<std::string>() + "'");
    }
  }
  bad("expected an integer (number or decimal string)");
}

json ring_terms_to_json(const GroupRingElement& x) {
  json arr = json::array();
  for (const auto& [el, c] : x.terms()) {
    json t;
    t["g"] = element_to_json(*x.group(), el);
    t["c"] = int_to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

GroupRingElement ring_terms_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_array()) bad("ring element terms must be an array");
  std::vector<GroupRingElement::Term> terms;
  for (const auto& t : j)
    terms.emplace_back(element_from_json(*g, field(t, "g")),
                       int_from_json(field(t, "c")));
  return GroupRingElement(g, std::move(terms));
}

json ring_to_json(const GroupRingElement& x) {
  json j;
  j["group"] = group_to_json(x.group());
  j["terms"] = ring_terms_to_json(x);
  return j;
}

GroupRingElement ring_from_json(const json& j) {
  GroupPtr g = group_from_json(field(j, "group"));
  return ring_terms_from_json(g, field(j, "terms"));
}

json quotient_to_json(const QuotientMap& q) {
  json j;
  j["source"] = group_to_json(q.source());
  j["target"] = group_to_json(q.target());
  json arr = json::array();
  for (const auto& im : q.generator_images())
    arr.push_back(element_to_json(*q.target(), im));
  j[q.is_element_map() ? "element_map" : "images"] = std::move(arr);
  return j;
}

QuotientMap quotient_from_json(const json& j) {
  GroupPtr src = group_from_json(field(j, "source"));
  GroupPtr dst = group_from_json(field(j, "target"));
  auto read = [&](const json& arr) {
    std::vector<GroupElement> v;
    for (const auto& e : arr) v.push_back(element_from_json(*dst, e));
    return v;
  };
  if (j.contains("element_map"))
    return QuotientMap::from_element_map(src, dst, read(j.at("element_map")));
  return QuotientMap::from_generator_images(src, dst, read(field(j, "images")));
}

json matrix_to_json(const RingMatrix& m) {
  json j;
  j["group"] = group_to_json(m.group());
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ring_terms_to_json(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

namespace {

RingMatrix matrix_entries_from_json(const GroupPtr& g, const json& rows) {
  if (!rows.is_array()) bad("matrix entries must be an array of rows");
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.at(0).size());
  RingMatrix m(g, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows.at(i).size()) != c) bad("matrix rows have unequal length");
    for (int k = 0; k < c; ++k) m.at(i, k) = ring_terms_from_json(g, rows.at(i).at(k));
  }
  return m;
}

}  // namespace

RingMatrix matrix_from_json(const json& j) {
  GroupPtr g = group_from_json(field(j, "group"));
  return matrix_entries_from_json(g, field(j, "entries"));
}

json hermitian_to_json(const HermitianMatrix& m) { return matrix_to_json(m.matrix()); }

HermitianMatrix hermitian_from_json(const json& j) {
  return HermitianMatrix(matrix_from_json(j));
}

json certificate_to_json(const StableCongruenceCertificate& c) {
  json j;
  j["start"] = hermitian_to_json(c.start);
  json steps = json::array();
  for (const auto& s : c.steps) {
    json st;
    if (const auto* congr = std::get_if<CongruenceStep>(&s)) {
      json rows = json::array();
      for (int i = 0; i < congr->P.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < congr->P.cols(); ++k)
          row.push_back(ring_terms_to_json(congr->P.at(i, k)));
        rows.push_back(std::move(row));
      }
      st["congr"] = std::move(rows);
    } else if (const auto* stab = std::get_if<StabilizeStep>(&s)) {
      st["stab"] = stab->sign;
    } else {
      st["perm"] = std::get<PermuteStep>(s).perm;
    }
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  j["end"] = hermitian_to_json(c.end);
  j["simple"] = c.simple;
  return j;
}

StableCongruenceCertificate certificate_from_json(const json& j) {
  HermitianMatrix start = hermitian_from_json(field(j, "start"));
  HermitianMatrix end = hermitian_from_json(field(j, "end"));
  StableCongruenceCertificate cert{start, end, {}, false};
  if (j.contains("simple")) cert.simple = field(j, "simple").get<bool>();
  for (const auto& s : field(j, "steps")) {
    if (s.contains("congr")) {
      cert.steps.push_back(
          CongruenceStep{matrix_entries_from_json(start.group(), s.at("congr"))});
    } else if (s.contains("stab")) {
      cert.steps.push_back(StabilizeStep{as_int(s.at("stab"), "stab")});
    } else if (s.contains("perm")) {
      cert.steps.push_back(PermuteStep{s.at("perm").get<std::vector<int>>()});
    } else {
      bad("certificate step must be one of congr/stab/perm");
    }
  }
  return cert;
}

json profile_to_json(const MultisignatureProfile& p) {
  json j;
  j["sigma"] = p.sigma;
  j["reduced"] = p.reduced;
  return j;
}

json moves_to_json(const Group& g, const std::vector<RealizationMove>& moves) {
  json arr = json::array();
  for (const auto& m : moves) {
    json j;
    if (m.kind == RealizationMove::Kind::OffDiagonal) {
      j["kind"] = "off_diagonal";
      j["i"] = m.i + 1;
      j["j"] = m.j + 1;
      j["sign"] = m.sign;
      j["g"] = element_to_json(g, m.g);
    } else {
      j["kind"] = "diagonal_twist";
      j["i"] = m.i + 1;
      j["sign"] = m.sign;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<RealizationMove> moves_from_json(const Group& g, const json& j) {
  if (!j.is_array()) bad("moves must be an array");
  std::vector<RealizationMove> out;
  for (const auto& m : j) {
    std::string kind = field(m, "kind").get<std::string>();
    RealizationMove mv;
    mv.i = as_int(field(m, "i"), "i") - 1;
    mv.sign = as_int(field(m, "sign"), "sign");
    if (kind == "off_diagonal") {
      mv.kind = RealizationMove::Kind::OffDiagonal;
      mv.j = as_int(field(m, "j"), "j") - 1;
      mv.g = element_from_json(g, field(m, "g"));
    } else if (kind == "diagonal_twist") {
      mv.kind = RealizationMove::Kind::DiagonalTwist;
      mv.j = mv.i;
      mv.g = g.identity();
    } else {
      bad("unknown move kind '" + kind + "'");
    }
    out.push_back(std::move(mv));
  }
  return out;
}

json normlike_to_json(const Group& g, const std::vector<NormLikeTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    json j;
    j["sign"] = t.sign;
    j["g1"] = element_to_json(g, t.g1);
    j["h"] = element_to_json(g, t.h);
    j["g2"] = element_to_json(g, t.g2);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<NormLikeTerm> normlike_from_json(const Group& g, const json& j) {
  if (!j.is_array()) bad("norm-like terms must be an array");
  std::vector<NormLikeTerm> out;
  for (const auto& t : j)
    out.push_back({as_int(field(t, "sign"), "sign"),
                   element_from_json(g, field(t, "g1")),
                   element_from_json(g, field(t, "g2")),
                   element_from_json(g, field(t, "h"))});
  return out;
}

json graph_to_json(const DecoratedGraph& g) {
  json j;
  j["group"] = group_to_json(g.group());
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json je;
    je["halves"] = std::vector<int>{e.a, e.b};
    je["label"] = ring_terms_to_json(e.label);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

DecoratedGraph graph_from_json(const json& j) {
  GroupPtr g = group_from_json(field(j, "group"));
  auto verts = field(j, "vertices").get<std::vector<std::array<int, 3>>>();
  std::vector<GraphEdge> edges;
  for (const auto& e : field(j, "edges")) {
    auto halves = field(e, "halves").get<std::vector<int>>();
    if (halves.size() != 2) bad("edge halves must be a pair");
    edges.push_back({halves[0], halves[1], ring_terms_from_json(g, field(e, "label"))});
  }
  return DecoratedGraph(g, std::move(verts), std::move(edges));
}

json decoration_to_json(const Pi1Decoration& d) {
  json j;
  j["graph"] = graph_to_json(d.graph);
  j["forest"] = d.forest;
  j["basis"] = d.basis;
  json images = json::array();
  for (const auto& im : d.images) images.push_back(element_to_json(*d.graph.group(), im));
  j["images"] = std::move(images);
  j["component_of_basis"] = d.component_of_basis;
  j["components"] = d.components;
  return j;
}

Pi1Decoration decoration_from_json(const json& j) {
  Pi1Decoration d{graph_from_json(field(j, "graph")), {}, {}, {}, {}, 0};
  d.forest = field(j, "forest").get<std::vector<int>>();
  d.basis = field(j, "basis").get<std::vector<int>>();
  for (const auto& im : field(j, "images"))
    d.images.push_back(element_from_json(*d.graph.group(), im));
  d.component_of_basis = field(j, "component_of_basis").get<std::vector<int>>();
  d.components = as_int(field(j, "components"), "components");
  return d;
}

json report_to_json(const GradedGroupReport& r) {
  json j;
  j["degree"] = r.degree;
  j["group"] = group_to_json(r.group);
  j["basis_size"] = r.basis_size;
  j["relation_rows"] = r.relation_rows;
  j["rank"] = r.rank;
  json factors = json::array();
  for (const auto& d : r.invariant_factors) factors.push_back(int_to_json(d));
  j["invariant_factors"] = std::move(factors);
  j["two_torsion_rank"] = r.two_torsion_rank;
  return j;
}

json mu_to_json(const MuCollection& c) {
  json j;
  j["q"] = c.q();
  j["group"] = group_to_json(c.group());
  json entries = json::array();
  for (const auto& [k, v] : c.canonical_entries()) {
    json e;
    e["ijk"] = std::vector<int>{k.i, k.j, k.k};
    e["g"] = element_to_json(*c.group(), k.g);
    e["h"] = element_to_json(*c.group(), k.h);
    e["v"] = int_to_json(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

MuCollection mu_from_json(const json& j) {
  int q = as_int(field(j, "q"), "q");
  GroupPtr g = group_from_json(field(j, "group"));
  std::vector<std::pair<MuKey, Int>> seeds;
  for (const auto& e : field(j, "entries")) {
    auto ijk = field(e, "ijk").get<std::vector<int>>();
    if (ijk.size() != 3) bad("mu entry ijk must have three indices");
    seeds.push_back({MuKey{ijk[0], ijk[1], ijk[2],
                           element_from_json(*g, field(e, "g")),
                           element_from_json(*g, field(e, "h"))},
                     int_from_json(field(e, "v"))});
  }
  return symmetry_closure(q, g, seeds);
}

json formal_sum_to_json(const FormalSum& s) {
  json arr = json::array();
  for (const auto& [sym, c] : s.terms()) {
    json t;
    t["subset"] = std::vector<int>(sym.begin(), sym.end());
    t["c"] = int_to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

FormalSum formal_sum_from_json(const json& j) {
  if (!j.is_array()) bad("formal sum must be an array");
  FormalSum s;
  for (const auto& t : j) {
    auto subset = field(t, "subset").get<std::vector<int>>();
    s.add(SurgerySymbol(subset.begin(), subset.end()), int_from_json(field(t, "c")));
  }
  return s;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("json: parse error: ") + e.what());
  }
}

}  // namespace zpi::io
