// Exercises the CLI's exit-code contract: 0 success, 1 negative verdict,
// 2 invalid input, 3 resource bound. The binary path arrives via --cli
// (see tests/CMakeLists.txt); doctest args follow after --.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support/random_gen.hpp"
#include "zpi/json_io.hpp"

namespace fs = std::filesystem;
using namespace zpi;

namespace {

std::string g_cli;
fs::path g_dir;

struct RunResult {
  int code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string full = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string put(const std::string& name, const std::string& text) {
  fs::path p = g_dir / name;
  std::ofstream f(p);
  f << text;
  return p.string();
}

}  // namespace

TEST_CASE("verification verdicts") {
  testgen::Rng rng(4242);
  auto z3 = Group::cyclic(3);
  auto a = testgen::random_invertible_almost_even(rng, z3, 2);
  auto cert = metabolize(a);
  auto good = put("cert_good.json", io::certificate_to_json(cert).dump());
  CHECK(run("witt-verify --input " + good).code == 0);

  auto bad_cert = cert;
  std::vector<int> signs = unidiagonal_signs(bad_cert.end);
  signs[0] = -signs[0];
  bad_cert.end = HermitianMatrix::unidiagonal(z3, signs);
  auto bad = put("cert_bad.json", io::certificate_to_json(bad_cert).dump());
  auto r = run("witt-verify --input " + bad);
  CHECK(r.code == 1);
  CHECK(r.output.find("verification failed") != std::string::npos);
}

TEST_CASE("invalid input exits 2 with diagnostics") {
  auto mangled = put("mangled.json", "{\"group\": {\"kind\":");
  auto r = run("witt-metabolize --input " + mangled);
  CHECK(r.code == 2);
  CHECK(r.output.find("parse error") != std::string::npos);

  // structurally fine JSON, semantically singular matrix
  auto triv = Group::trivial();
  auto singular = put("singular.json",
                      io::hermitian_to_json(HermitianMatrix::from_ints(triv, {{2}})).dump());
  CHECK(run("witt-metabolize --input " + singular).code == 2);
}

TEST_CASE("equivalence verdicts") {
  testgen::Rng rng(777);
  auto z2 = Group::cyclic(2);
  auto c1 = symmetry_closure(
      2, z2, {{MuKey{1, 2, 2, z2->parse("0"), z2->parse("1")}, Int(1)}});
  auto c2 = symmetry_closure(
      2, z2, {{MuKey{1, 2, 2, z2->parse("0"), z2->parse("1")}, Int(2)}});
  auto f1 = put("mu_a.json", io::mu_to_json(c1).dump());
  auto f2 = put("mu_b.json", io::mu_to_json(c2).dump());
  CHECK(run("mu-equiv --left " + f1 + " --right " + f1).code == 0);
  auto r = run("mu-equiv --left " + f1 + " --right " + f2);
  CHECK(r.code == 1);
  CHECK(r.output.find("inequivalent") != std::string::npos);
}

TEST_CASE("unknown equivalence verdicts exit 3") {
  auto z = Group::free_abelian(1);
  auto p1 = symmetry_closure(
      2, z, {{MuKey{1, 2, 2, z->parse("(1)"), z->parse("(2)")}, Int(1)}});
  auto p2 = symmetry_closure(
      2, z, {{MuKey{1, 2, 2, z->parse("(1)"), z->parse("(3)")}, Int(1)}});
  auto f1 = put("mu_inf_a.json", io::mu_to_json(p1).dump());
  auto f2 = put("mu_inf_b.json", io::mu_to_json(p2).dump());
  auto r = run("mu-equiv --left " + f1 + " --right " + f2 + " --ball-radius 2");
  CHECK(r.code == 3);
  CHECK(r.output.find("unknown") != std::string::npos);
}

TEST_CASE("resource bounds exit 3") {
  CHECK(run("graphs-rank --degree 6 --group trivial").code == 3);
  CHECK(run("graphs-enumerate --degree 4 --group cyclic:2").code == 3);
}

TEST_CASE("config file with flag precedence") {
  auto cfg = put("bounds.cfg", "# limits\ndegree_bound = 1\nball_radius = 5\n");
  // the file's bound blocks a degree-2 run
  CHECK(run("--config " + cfg + " graphs-rank --degree 2 --group trivial").code == 3);
  // an explicit flag wins over the file
  CHECK(run("--config " + cfg + " --degree-bound 2 graphs-rank --degree 2 --group trivial")
            .code == 0);
  // flags may also follow the subcommand
  CHECK(run("graphs-rank --degree 2 --group trivial --format text --config " + cfg)
            .code == 3);
}

TEST_CASE("mu validation verdicts") {
  auto z2 = Group::cyclic(2);
  io::json j;
  j["q"] = 3;
  j["group"] = io::group_to_json(z2);
  io::json e1, e2;
  e1["ijk"] = std::vector<int>{1, 2, 3};
  e1["g"] = 0;
  e1["h"] = 0;
  e1["v"] = 1;
  e2["ijk"] = std::vector<int>{2, 1, 3};
  e2["g"] = 0;
  e2["h"] = 0;
  e2["v"] = 1;  // should be -1: conflict
  j["entries"] = io::json::array({e1});
  auto ok = put("mu_ok.json", j.dump());
  CHECK(run("mu-validate --input " + ok).code == 0);
  j["entries"] = io::json::array({e1, e2});
  auto clash = put("mu_clash.json", j.dump());
  auto r = run("mu-validate --input " + clash);
  CHECK(r.code == 1);
  CHECK(r.output.find("invalid") != std::string::npos);
}

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli <path-to-zpi>\n");
    return 1;
  }
  g_dir = fs::temp_directory_path() / "zpi-cli-tests";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);
  doctest::Context ctx;
  return ctx.run();
}
