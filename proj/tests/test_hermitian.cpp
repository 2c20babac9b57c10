#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "zpi/hermitian.hpp"

using namespace zpi;

namespace {

constexpr unsigned kSeed = 246801u;

GroupRingElement mono(const GroupPtr& g, const std::string& el, long long c) {
  return GroupRingElement::monomial(g, g->parse(el), Int(c));
}

}  // namespace

TEST_CASE("almost even predicate on matrices") {
  auto z2 = Group::cyclic(2);
  RingMatrix a(z2, 1, 1);
  a.at(0, 0) = GroupRingElement::one(z2) + mono(z2, "1", 2);
  CHECK(is_almost_even(HermitianMatrix(a)));
  a.at(0, 0) = mono(z2, "1", 1);
  CHECK_FALSE(is_almost_even(HermitianMatrix(a)));
  auto triv = Group::trivial();
  CHECK(is_almost_even(HermitianMatrix::from_ints(triv, {{5, 2}, {2, -3}})));
}

TEST_CASE("apply_congruence examples") {
  auto triv = Group::trivial();
  auto a = HermitianMatrix::from_ints(triv, {{0, 1}, {1, 1}});
  CHECK(apply_congruence(a, RingMatrix::identity(triv, 2)) == a);
  auto p = RingMatrix::from_ints(triv, {{0, 1}, {1, -1}});
  CHECK(apply_congruence(a, p) == HermitianMatrix::from_ints(triv, {{1, 0}, {0, -1}}));

  auto z2 = Group::cyclic(2);
  RingMatrix m(z2, 1, 1);
  m.at(0, 0) = GroupRingElement::from_int(z2, 2) + mono(z2, "1", 2);
  HermitianMatrix h(m);
  RingMatrix t(z2, 1, 1);
  t.at(0, 0) = mono(z2, "1", 1);
  CHECK(apply_congruence(h, t) == h);  // central conjugation
}

TEST_CASE("block sum") {
  auto triv = Group::trivial();
  auto a = HermitianMatrix::from_ints(triv, {{3}});
  auto empty = HermitianMatrix::zero(triv, 0);
  CHECK(block_sum(a, empty) == a);
  auto d = block_sum(HermitianMatrix::from_ints(triv, {{1}}),
                     HermitianMatrix::from_ints(triv, {{-1}}));
  CHECK(d == HermitianMatrix::unidiagonal(triv, {1, -1}));

  testgen::Rng rng(kSeed);
  auto z3 = Group::cyclic(3);
  for (int t = 0; t < 30; ++t) {
    auto x = testgen::random_almost_even(rng, z3, 1);
    auto y = testgen::random_almost_even(rng, z3, 2);
    auto z = testgen::random_almost_even(rng, z3, 1);
    CHECK(block_sum(block_sum(x, y), z) == block_sum(x, block_sum(y, z)));
  }
}

TEST_CASE("unidiagonal and metabolic form predicates") {
  auto triv = Group::trivial();
  CHECK(is_unidiagonal(HermitianMatrix::unidiagonal(triv, {1, -1, 1})));
  CHECK_FALSE(is_unidiagonal(HermitianMatrix::from_ints(triv, {{2}})));
  CHECK(unidiagonal_signs(HermitianMatrix::unidiagonal(triv, {1, -1})) ==
        std::vector<int>{1, -1});

  CHECK(is_metabolic_form(HermitianMatrix::from_ints(triv, {{0, 1}, {1, 7}})));
  CHECK_FALSE(is_metabolic_form(HermitianMatrix::unidiagonal(triv, {1, -1})));
  CHECK(is_metabolic_form(HermitianMatrix::from_ints(
      triv, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 2, 3}, {0, 1, 3, -1}})));
  CHECK_THROWS_AS(is_metabolic_form(HermitianMatrix::from_ints(triv, {{1}})), DomainError);
}

TEST_CASE("elementary recognition") {
  auto z3 = Group::cyclic(3);
  auto p = RingMatrix::identity(z3, 2);
  p.at(0, 1) = GroupRingElement::from_int(z3, 3) + mono(z3, "1", 1);
  CHECK(is_elementary(p) == Verdict::Yes);

  RingMatrix d = RingMatrix::identity(z3, 2);
  d.at(0, 0) = mono(z3, "1", 1);
  CHECK(is_elementary(d) == Verdict::Yes);

  auto triv = Group::trivial();
  CHECK(is_elementary(RingMatrix::from_ints(triv, {{0, 1}, {1, 0}})) == Verdict::Yes);
  CHECK(is_elementary(RingMatrix::from_ints(triv, {{2, 0}, {0, 1}})) == Verdict::No);
  CHECK(is_elementary(RingMatrix::from_ints(triv, {{1, 0, 0}, {0, 1, 0}})) == Verdict::No);

  testgen::Rng rng(kSeed + 1);
  for (int t = 0; t < 40; ++t) {
    auto e = testgen::random_elementary(rng, z3, 3, 3);
    CHECK(is_elementary(e) != Verdict::No);
  }
}

TEST_CASE("invert examples") {
  auto triv = Group::trivial();
  CHECK(invert(HermitianMatrix::from_ints(triv, {{1, 0}, {0, 1}})) ==
        RingMatrix::identity(triv, 2));
  CHECK(invert(HermitianMatrix::from_ints(triv, {{0, 1}, {1, 1}})) ==
        RingMatrix::from_ints(triv, {{-1, 1}, {1, 0}}));

  auto z2 = Group::cyclic(2);
  RingMatrix tm(z2, 1, 1);
  tm.at(0, 0) = mono(z2, "1", 1);
  CHECK(invert(HermitianMatrix(tm)) == tm);

  CHECK_THROWS_AS(invert(HermitianMatrix::from_ints(triv, {{2}})), SingularError);
  CHECK_THROWS_AS(invert(HermitianMatrix::from_ints(triv, {{0, 2}, {2, 0}})),
                  SingularError);
  auto f2 = Group::free(2);
  CHECK_THROWS_AS(invert(HermitianMatrix::zero(f2, 0)), UnsupportedGroupError);
}

TEST_CASE("invert over a Laurent ring") {
  auto z = Group::free_abelian(1);
  RingMatrix m(z, 2, 2);
  m.at(0, 0) = GroupRingElement::from_int(z, 1);
  m.at(0, 1) = mono(z, "(1)", 1);
  m.at(1, 0) = mono(z, "(-1)", 1);
  m.at(1, 1) = GroupRingElement::zero(z);
  HermitianMatrix h(m);
  auto inv = invert(h);
  CHECK(h.matrix() * inv == RingMatrix::identity(z, 2));
  // t + t^-1 is not a unit
  RingMatrix s(z, 1, 1);
  s.at(0, 0) = mono(z, "(1)", 1) + mono(z, "(-1)", 1);
  CHECK_THROWS_AS(invert(HermitianMatrix(s)), SingularError);

  // two Laurent variables
  auto zz = Group::free_abelian(2);
  RingMatrix m2(zz, 2, 2);
  m2.at(0, 1) = mono(zz, "(1,1)", 1);
  m2.at(1, 0) = mono(zz, "(-1,-1)", 1);
  m2.at(1, 1) = GroupRingElement::one(zz);
  HermitianMatrix h2(m2);
  CHECK(h2.matrix() * invert(h2) == RingMatrix::identity(zz, 2));
}

TEST_CASE("invert properties on random matrices") {
  testgen::Rng rng(kSeed + 2);
  for (const auto& g : {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4)}) {
    for (int t = 0; t < 25; ++t) {
      int n = testgen::uniform(rng, 1, 3);
      auto a = testgen::random_invertible_almost_even(rng, g, n);
      auto inv = invert(a);
      CHECK(a.matrix() * inv == RingMatrix::identity(g, n));
      CHECK(inv * a.matrix() == RingMatrix::identity(g, n));
      CHECK(invert(HermitianMatrix(inv)) == a.matrix());
      CHECK(is_almost_even(HermitianMatrix(inv)));
    }
  }
}

TEST_CASE("metabolize examples") {
  auto triv = Group::trivial();
  {
    auto cert = metabolize(HermitianMatrix::from_ints(triv, {{1}}));
    CHECK(cert.start == block_sum(HermitianMatrix::from_ints(triv, {{1}}),
                                  HermitianMatrix::from_ints(triv, {{-1}})));
    CHECK(is_unidiagonal(cert.end));
    CHECK((cert.end.size() == 2 || cert.end.size() == 3));
    CHECK(verify_certificate(cert));
  }
  {
    auto cert = metabolize(HermitianMatrix::from_ints(triv, {{0, 1}, {1, 0}}));
    CHECK(cert.start.size() == 4);
    CHECK(is_unidiagonal(cert.end));
    CHECK(verify_certificate(cert));
  }
  {
    auto z2 = Group::cyclic(2);
    auto cert = metabolize(HermitianMatrix::from_ints(z2, {{1}}));
    CHECK(verify_certificate(cert));
    CHECK(is_unidiagonal(cert.end));
  }
  CHECK_THROWS_AS(metabolize(HermitianMatrix::from_ints(triv, {{2}})), SingularError);
  auto z2 = Group::cyclic(2);
  RingMatrix odd(z2, 1, 1);
  odd.at(0, 0) = mono(z2, "1", 1);
  CHECK_THROWS_AS(metabolize(HermitianMatrix(odd)), DomainError);
}

TEST_CASE("metabolize over a noncommutative table group") {
  testgen::Rng rng(kSeed + 7);
  auto s3 = Group::table(oracles::s3_table());
  for (int t = 0; t < 8; ++t) {
    int n = testgen::uniform(rng, 1, 2);
    auto a = testgen::random_invertible_almost_even(rng, s3, n, 3);
    auto inv = invert(a);
    CHECK(a.matrix() * inv == RingMatrix::identity(GroupPtr(s3), n));
    auto cert = metabolize(a);
    CHECK(verify_certificate(cert));
    CHECK(is_unidiagonal(cert.end));
  }
}

TEST_CASE("verify_certificate") {
  auto triv = Group::trivial();
  auto a = HermitianMatrix::from_ints(triv, {{1, 2}, {2, 1}});
  StableCongruenceCertificate cert{a, a, {}, false};
  CHECK(verify_certificate(cert));

  testgen::Rng rng(kSeed + 3);
  auto z3 = Group::cyclic(3);
  for (int t = 0; t < 15; ++t) {
    auto m = testgen::random_invertible_almost_even(rng, z3, 2);
    auto c = metabolize(m);
    CHECK(verify_certificate(c));
    // corrupt one entry of the declared end matrix
    auto bad = c;
    std::vector<int> signs = unidiagonal_signs(bad.end);
    signs[0] = -signs[0];
    bad.end = HermitianMatrix::unidiagonal(z3, signs);
    std::string reason;
    CHECK_FALSE(verify_certificate(bad, reason));
    CHECK_FALSE(reason.empty());
  }
}

TEST_CASE("congruence preserves hermitian and almost even") {
  testgen::Rng rng(kSeed + 4);
  for (const auto& g : {Group::cyclic(2), Group::cyclic(3), Group::free_abelian(1)}) {
    for (int t = 0; t < 40; ++t) {
      int n = testgen::uniform(rng, 1, 4);
      auto a = testgen::random_almost_even(rng, g, n);
      auto p = testgen::random_elementary(rng, g, n, 3);
      auto b = apply_congruence(a, p);  // constructor checks Hermitian
      CHECK(is_almost_even(b));
    }
  }
}

TEST_CASE("multisignature examples") {
  auto z2 = Group::cyclic(2);
  {
    auto prof = multisignature(HermitianMatrix::from_ints(z2, {{1}}));
    CHECK(prof.sigma == std::vector<int>{1, 1});
    CHECK(prof.reduced == std::vector<int>{0});
  }
  {
    RingMatrix m(z2, 1, 1);
    m.at(0, 0) = GroupRingElement::from_int(z2, 3) + mono(z2, "1", 2);
    auto prof = multisignature(HermitianMatrix(m));  // 5 at t=1, 1 at t=-1
    CHECK(prof.sigma == std::vector<int>{1, 1});
    CHECK(prof.reduced == std::vector<int>{0});
  }
  {
    RingMatrix m(z2, 2, 2);
    m.at(0, 0) = GroupRingElement::one(z2);
    m.at(0, 1) = mono(z2, "1", 1);
    m.at(1, 0) = mono(z2, "1", 1);
    m.at(1, 1) = -GroupRingElement::one(z2);
    auto prof = multisignature(HermitianMatrix(m));
    CHECK(prof.sigma == std::vector<int>{0, 0});
    CHECK(prof.reduced == std::vector<int>{0});
  }
  // singular input trips the tolerance guard
  CHECK_THROWS_AS(multisignature(HermitianMatrix::from_ints(z2, {{0}})),
                  NumericalDegeneracyError);
  CHECK_THROWS_AS(multisignature(HermitianMatrix::zero(Group::free(1), 0)),
                  UnsupportedGroupError);
}

TEST_CASE("certificate replay preserves the reduced multisignature") {
  testgen::Rng rng(kSeed + 8);
  for (std::int64_t m : {2, 3}) {
    auto g = Group::cyclic(m);
    auto a = testgen::random_invertible_almost_even(rng, g, 2);
    auto cert = metabolize(a);
    auto base = multisignature(cert.start).reduced;
    RingMatrix cur = cert.start.matrix();
    for (const auto& step : cert.steps) {
      if (const auto* c = std::get_if<CongruenceStep>(&step)) {
        cur = apply_congruence(HermitianMatrix(cur), c->P).matrix();
      } else if (const auto* s = std::get_if<StabilizeStep>(&step)) {
        RingMatrix one(g, 1, 1);
        one.at(0, 0) = GroupRingElement::from_int(g, Int(s->sign));
        cur = cur.block_sum(one);
      } else {
        const auto& p = std::get<PermuteStep>(step).perm;
        RingMatrix next(g, cur.rows(), cur.cols());
        for (int i = 0; i < cur.rows(); ++i)
          for (int j = 0; j < cur.cols(); ++j) next.at(i, j) = cur.at(p[i], p[j]);
        cur = next;
      }
      CHECK(multisignature(HermitianMatrix(cur)).reduced == base);
    }
    CHECK(HermitianMatrix(cur) == cert.end);
  }
}

TEST_CASE("multisignature parity and bound") {
  testgen::Rng rng(kSeed + 6);
  for (std::int64_t m : {2, 3, 4}) {
    auto g = Group::cyclic(m);
    for (int t = 0; t < 10; ++t) {
      int n = testgen::uniform(rng, 1, 3);
      auto a = testgen::random_invertible_almost_even(rng, g, n);
      auto prof = multisignature(a);
      for (int s : prof.sigma) {
        CHECK(std::abs(s) <= n);
        CHECK((s - n) % 2 == 0);  // nonsingular character image: no zero eigenvalues
      }
    }
  }
}

TEST_CASE("reduced multisignature is a stable congruence invariant") {
  testgen::Rng rng(kSeed + 5);
  for (std::int64_t m : {2, 3, 4}) {
    auto g = Group::cyclic(m);
    auto a = testgen::random_invertible_almost_even(rng, g, 2);
    auto base = multisignature(a).reduced;
    HermitianMatrix cur = a;
    for (int t = 0; t < 40; ++t) {
      if (testgen::uniform(rng, 0, 2) == 0) {
        cur = block_sum(cur, HermitianMatrix::unidiagonal(
                                 g, {testgen::uniform(rng, 0, 1) ? 1 : -1}));
      } else {
        cur = apply_congruence(cur, testgen::random_elementary(rng, g, cur.size(), 2));
      }
      CHECK(multisignature(cur).reduced == base);
    }
  }
}
