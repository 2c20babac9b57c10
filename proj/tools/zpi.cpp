// zpi: exact computations in group rings Z[pi] and their Hermitian-matrix,
// trivalent-graph and triple-invariant calculus. JSON in, JSON (or text)
// out, deterministic for fixed inputs and configuration.
//
// Exit codes: 0 success, 1 negative verdict, 2 invalid input, 3 resource
// bound exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "zpi/json_io.hpp"

namespace {

using zpi::io::json;

struct Config {
  int elementary_bound = 0;  // 0 = default 10*n^2
  int ball_radius = 3;
  int degree_bound = 4;
  long long group_size_bound = 6;
  long long work_limit = 500'000'000;
  double tolerance = 1e-9;
  std::string format = "json";
};

// Minimal key = value config file; '#' comments and [sections] are ignored.
void load_config_file(const std::string& path, Config& cfg,
                      const std::set<std::string>& flag_set) {
  std::ifstream in(path);
  if (!in) throw zpi::DomainError("config: cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || key.front() == '[') continue;
    if (flag_set.contains(key)) continue;  // flags win
    try {
      if (key == "elementary_bound") cfg.elementary_bound = std::stoi(val);
      else if (key == "ball_radius") cfg.ball_radius = std::stoi(val);
      else if (key == "degree_bound") cfg.degree_bound = std::stoi(val);
      else if (key == "group_size_bound") cfg.group_size_bound = std::stoll(val);
      else if (key == "work_limit") cfg.work_limit = std::stoll(val);
      else if (key == "tolerance") cfg.tolerance = std::stod(val);
      else if (key == "format") cfg.format = val;
      else throw zpi::DomainError("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw zpi::DomainError("config: bad value for '" + key + "'");
    }
  }
}

json read_json_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw zpi::DomainError("cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return zpi::io::parse_text(buf.str());
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

zpi::GroupPtr group_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "trivial") return zpi::Group::trivial();
  if (kind == "cyclic") return zpi::Group::cyclic(std::stoll(arg));
  if (kind == "free") return zpi::Group::free(std::stoi(arg));
  if (kind == "free_abelian") return zpi::Group::free_abelian(std::stoi(arg));
  if (kind == "table") {
    std::ifstream in(arg);
    if (!in) throw zpi::DomainError("cannot open table file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return zpi::io::group_from_json(zpi::io::parse_text(buf.str()));
  }
  throw zpi::DomainError("bad group spec '" + spec +
                         "' (use trivial, cyclic:M, free:R, free_abelian:R, table:FILE)");
}

zpi::GraphEnumLimits limits_of(const Config& cfg) {
  return {cfg.degree_bound, cfg.group_size_bound, cfg.work_limit};
}

std::set<int> parse_index_set(const std::string& s) {
  std::set<int> out;
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream is(t);
  int v;
  while (is >> v) out.insert(v);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact Z[pi] matrix, graph and Milnor-invariant computations"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--elementary-bound", cfg.elementary_bound,
                 "move bound for elementary-matrix recognition (0 = 10*n^2)");
  app.add_option("--ball-radius", cfg.ball_radius, "search ball radius for infinite groups");
  app.add_option("--degree-bound", cfg.degree_bound, "maximum graph degree");
  app.add_option("--group-size-bound", cfg.group_size_bound,
                 "maximum decorating group size");
  app.add_option("--work-limit", cfg.work_limit, "graph enumeration work limit");
  app.add_option("--tolerance", cfg.tolerance, "eigenvalue tolerance");
  app.add_option("--format", cfg.format, "output format: json or text");

  std::string input, right_input, group_spec, g_str, h_str, mode;
  int degree = 2, idx_i = 1, idx_j = 2, idx_k = 3, sign = 1, max_size = 4;

  auto* metab = app.add_subcommand("witt-metabolize",
                                   "certificate from A (+) (-A) to a unidiagonal matrix");
  metab->add_option("--input", input, "Hermitian matrix JSON (default: stdin)");

  auto* verify = app.add_subcommand("witt-verify", "replay a stable-congruence certificate");
  verify->add_option("--input", input, "certificate JSON");

  auto* multisig = app.add_subcommand("witt-multisig",
                                      "character signatures over a cyclic group");
  multisig->add_option("--input", input, "Hermitian matrix JSON");

  auto* realize = app.add_subcommand("realize", "linking-matrix realization moves");
  realize->add_option("--input", input, "Hermitian matrix JSON");

  auto* normlike = app.add_subcommand("normlike",
                                      "decompose an ideal element into norm-like terms");
  normlike->add_option("--input", input, "JSON {\"quotient\":..., \"lambda\":[terms]}");

  auto* genum = app.add_subcommand("graphs-enumerate", "decorated trivalent graph basis");
  genum->add_option("--degree", degree, "graph degree (number of vertices)");
  genum->add_option("--group", group_spec, "decorating group spec")->required();

  auto* grank = app.add_subcommand("graphs-rank", "graded group of decorated graphs");
  grank->add_option("--degree", degree, "graph degree");
  grank->add_option("--group", group_spec, "decorating group spec")->required();

  auto* gconv = app.add_subcommand("graphs-convert",
                                   "convert between edge labels and pi1 decorations");
  gconv->add_option("--mode", mode, "to-pi1 or to-edge")->required();
  gconv->add_option("--input", input, "graph or decoration JSON");

  auto* muval = app.add_subcommand("mu-validate", "closure/consistency of a mu collection");
  muval->add_option("--input", input, "mu collection JSON");

  auto* muequiv = app.add_subcommand("mu-equiv", "decide surgery equivalence");
  muequiv->add_option("--left", input, "first mu collection JSON")->required();
  muequiv->add_option("--right", right_input, "second mu collection JSON")->required();

  auto* mudelta = app.add_subcommand("mu-delta", "apply a Delta-move to a mu collection");
  mudelta->add_option("--input", input, "mu collection JSON");
  mudelta->add_option("--i", idx_i, "first component");
  mudelta->add_option("--j", idx_j, "second component");
  mudelta->add_option("--k", idx_k, "third component");
  mudelta->add_option("--dg", g_str, "decoration g (element text form)");
  mudelta->add_option("--dh", h_str, "decoration h (element text form)");
  mudelta->add_option("--sign", sign, "+1 or -1");

  auto* bracket_check = app.add_subcommand("bracket-check",
                                           "pushforward bracket expansion identity");
  bracket_check->add_option("--max", max_size, "check all |L|,|K| <= max");
  std::string l_str, k_str;
  bracket_check->add_option("--l", l_str, "explicit L, e.g. 1,2");
  bracket_check->add_option("--k", k_str, "explicit K, e.g. 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::set<std::string> flag_set;
  for (const auto* opt : app.get_options())
    if (opt->count() > 0) {
      std::string n = opt->get_single_name();
      std::replace(n.begin(), n.end(), '-', '_');
      flag_set.insert(n);
    }
  if (!config_path.empty()) load_config_file(config_path, cfg, flag_set);

  if (metab->parsed()) {
    auto a = zpi::io::hermitian_from_json(read_json_input(input));
    auto cert = zpi::metabolize(a);
    emit(zpi::io::certificate_to_json(cert));
    return 0;
  }
  if (verify->parsed()) {
    auto cert = zpi::io::certificate_from_json(read_json_input(input));
    std::string reason;
    if (zpi::verify_certificate(cert, reason, cfg.elementary_bound)) {
      std::cout << "verified\n";
      return 0;
    }
    std::cout << "verification failed: " << reason << "\n";
    return 1;
  }
  if (multisig->parsed()) {
    auto a = zpi::io::hermitian_from_json(read_json_input(input));
    auto prof = zpi::multisignature(a, cfg.tolerance);
    if (cfg.format == "text") {
      std::cout << "sigma:";
      for (int s : prof.sigma) std::cout << " " << s;
      std::cout << "\nreduced:";
      for (int s : prof.reduced) std::cout << " " << s;
      std::cout << "\n";
    } else {
      emit(zpi::io::profile_to_json(prof));
    }
    return 0;
  }
  if (realize->parsed()) {
    auto a = zpi::io::hermitian_from_json(read_json_input(input));
    auto moves = zpi::realization_moves(a);
    emit(zpi::io::moves_to_json(*a.group(), moves));
    return 0;
  }
  if (normlike->parsed()) {
    json j = read_json_input(input);
    auto q = zpi::io::quotient_from_json(j.at("quotient"));
    auto lambda = zpi::io::ring_terms_from_json(q.source(), j.at("lambda"));
    auto terms = zpi::normlike_decompose(lambda, q);
    emit(zpi::io::normlike_to_json(*q.source(), terms));
    return 0;
  }
  if (genum->parsed()) {
    auto pi = group_from_spec(group_spec);
    auto basis = zpi::enumerate_graphs(degree, pi, limits_of(cfg));
    json arr = json::array();
    for (const auto& g : basis) arr.push_back(zpi::io::graph_to_json(g));
    emit(arr);
    return 0;
  }
  if (grank->parsed()) {
    auto pi = group_from_spec(group_spec);
    auto rep = zpi::graded_group(degree, pi, limits_of(cfg));
    if (cfg.format == "text") {
      std::cout << "degree " << rep.degree << " over " << pi->describe()
                << ": basis " << rep.basis_size << ", rank " << rep.rank
                << ", invariant factors [";
      for (std::size_t i = 0; i < rep.invariant_factors.size(); ++i)
        std::cout << (i ? " " : "") << rep.invariant_factors[i].str();
      std::cout << "], 2-torsion rank " << rep.two_torsion_rank << "\n";
    } else {
      emit(zpi::io::report_to_json(rep));
    }
    return 0;
  }
  if (gconv->parsed()) {
    json j = read_json_input(input);
    if (mode == "to-pi1") {
      emit(zpi::io::decoration_to_json(zpi::edge_to_pi1(zpi::io::graph_from_json(j))));
    } else if (mode == "to-edge") {
      emit(zpi::io::graph_to_json(zpi::pi1_to_edge(zpi::io::decoration_from_json(j))));
    } else {
      throw zpi::DomainError("graphs-convert: mode must be to-pi1 or to-edge");
    }
    return 0;
  }
  if (muval->parsed()) {
    try {
      auto c = zpi::io::mu_from_json(read_json_input(input));
      std::cout << "valid: " << c.entries().size() << " entries in "
                << c.canonical_entries().size() << " orbits\n";
      return 0;
    } catch (const zpi::ConflictError& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return 1;
    }
  }
  if (muequiv->parsed()) {
    auto c1 = zpi::io::mu_from_json(read_json_input(input));
    auto c2 = zpi::io::mu_from_json(read_json_input(right_input));
    switch (zpi::surgery_equivalent(c1, c2, cfg.ball_radius)) {
      case zpi::EquivVerdict::Equivalent:
        std::cout << "equivalent\n";
        return 0;
      case zpi::EquivVerdict::Inequivalent:
        std::cout << "inequivalent\n";
        return 1;
      case zpi::EquivVerdict::Unknown:
        std::cout << "unknown (search bound reached)\n";
        return 3;
    }
    return 3;
  }
  if (mudelta->parsed()) {
    auto c = zpi::io::mu_from_json(read_json_input(input));
    auto g = c.group()->parse(g_str.empty() ? "1" : g_str);
    auto h = c.group()->parse(h_str.empty() ? "1" : h_str);
    bool changed = false;
    auto out = zpi::delta_move(c, idx_i, idx_j, idx_k, g, h, sign, &changed);
    if (!changed) std::cerr << "warning: repeated components, move has no effect\n";
    emit(zpi::io::mu_to_json(out));
    return 0;
  }
  if (bracket_check->parsed()) {
    if (!l_str.empty() || !k_str.empty()) {
      auto [lhs, rhs] = zpi::pushforward_expand(parse_index_set(l_str),
                                                parse_index_set(k_str));
      std::cout << "lhs: " << lhs.to_string() << "\nrhs: " << rhs.to_string() << "\n";
      return lhs == rhs ? 0 : 1;
    }
    long long checked = 0;
    for (int ln = 0; ln <= max_size; ++ln)
      for (int kn = 0; kn <= max_size; ++kn) {
        std::set<int> L, K;
        for (int i = 1; i <= ln; ++i) L.insert(i);
        for (int i = 1; i <= kn; ++i) K.insert(ln + i);
        auto [lhs, rhs] = zpi::pushforward_expand(L, K);
        if (!(lhs == rhs)) {
          std::cout << "identity fails at |L|=" << ln << " |K|=" << kn << "\n";
          return 1;
        }
        ++checked;
      }
    std::cout << "pushforward identity holds for all |L|,|K| <= " << max_size << " ("
              << checked << " cases)\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const zpi::ResourceBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const zpi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
