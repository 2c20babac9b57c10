#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "zpi/group_ring.hpp"

using namespace zpi;

namespace {

constexpr unsigned kSeed = 97531u;

GroupRingElement mono(const GroupPtr& g, const std::string& el, long long c) {
  return GroupRingElement::monomial(g, g->parse(el), Int(c));
}

}  // namespace

TEST_CASE("involution examples") {
  auto z3 = Group::cyclic(3);
  auto x = GroupRingElement::from_int(z3, 2) + mono(z3, "1", 1);
  CHECK(involute(x) == GroupRingElement::from_int(z3, 2) + mono(z3, "2", 1));

  auto z = Group::free_abelian(1);
  auto y = GroupRingElement::from_int(z, 1) + mono(z, "(1)", 3) - mono(z, "(2)", 1);
  CHECK(involute(y) ==
        GroupRingElement::from_int(z, 1) + mono(z, "(-1)", 3) - mono(z, "(-2)", 1));
  CHECK(involute(involute(y)) == y);
}

TEST_CASE("multiplication examples") {
  auto z2 = Group::cyclic(2);
  auto one = GroupRingElement::one(z2);
  auto t = mono(z2, "1", 1);
  CHECK(((one + t) * (one - t)).is_zero());

  auto z = Group::free_abelian(1);
  auto u = mono(z, "(1)", 1);
  CHECK((GroupRingElement::one(z) + u) * u == u + mono(z, "(2)", 1));

  auto f2 = Group::free(2);
  auto a = mono(f2, "a", 1);
  auto b = mono(f2, "b", 1);
  CHECK(a * b == mono(f2, "a b", 1));
  CHECK_FALSE(a * b == b * a);
}

TEST_CASE("self-conjugate almost even predicate") {
  auto z2 = Group::cyclic(2);
  CHECK_FALSE((GroupRingElement::one(z2) + mono(z2, "1", 1))
                  .is_self_conjugate_almost_even());
  CHECK((GroupRingElement::from_int(z2, 3) + mono(z2, "1", 2))
            .is_self_conjugate_almost_even());
  auto z3 = Group::cyclic(3);
  CHECK((GroupRingElement::one(z3) + mono(z3, "1", 1) + mono(z3, "2", 1))
            .is_self_conjugate_almost_even());
  // self-conjugacy can fail without order-2 elements
  CHECK_FALSE(mono(z3, "1", 1).is_self_conjugate_almost_even());
}

TEST_CASE("split_self_conjugate examples") {
  auto z2 = Group::cyclic(2);
  auto zero = GroupRingElement::zero(z2);
  auto [d0, y0] = zero.split_self_conjugate();
  CHECK(d0 == 0);
  CHECK(y0.is_zero());

  auto x = GroupRingElement::from_int(z2, 3) + mono(z2, "1", 2);
  auto [d, y] = x.split_self_conjugate();
  CHECK(d == 1);
  CHECK(y == GroupRingElement::one(z2) + mono(z2, "1", 1));
  CHECK(GroupRingElement::from_int(z2, d) + y + y.involute() == x);

  auto z = Group::free_abelian(1);
  auto w = mono(z, "(1)", 1) + mono(z, "(-1)", 1);
  auto [d2, y2] = w.split_self_conjugate();
  CHECK(d2 == 0);
  CHECK(y2 == mono(z, "(-1)", 1));  // the smaller of t, t^-1 in lex order

  CHECK_THROWS_AS(mono(z2, "1", 1).split_self_conjugate(), DomainError);
}

TEST_CASE("ideal membership examples") {
  auto z = Group::free_abelian(1);
  auto z2 = Group::cyclic(2);
  auto q = QuotientMap::from_generator_images(z, z2, {z2->parse("1")});
  CHECK(ideal_member(mono(z, "(2)", 1) - GroupRingElement::one(z), q));
  CHECK_FALSE(ideal_member(mono(z, "(1)", 1) - GroupRingElement::from_int(z, 2), q));

  auto zz = Group::free_abelian(2);
  auto proj = QuotientMap::from_generator_images(
      zz, z, {z->parse("(1)"), z->parse("(0)")});
  CHECK(ideal_member(mono(zz, "(1,1)", 1) - mono(zz, "(1,0)", 1), proj));
}

TEST_CASE("involution is a ring anti-automorphism") {
  testgen::Rng rng(kSeed);
  for (const auto& g : {Group::cyclic(4), GroupPtr(Group::table(oracles::s3_table())),
                        Group::free(2)}) {
    for (int t = 0; t < 200; ++t) {
      auto x = testgen::random_ring(rng, g, 5);
      auto y = testgen::random_ring(rng, g, 5);
      CHECK(involute(x + y) == involute(x) + involute(y));
      CHECK(involute(x * y) == involute(y) * involute(x));
      CHECK(augmentation(involute(x)) == augmentation(x));
      CHECK(augmentation(x * y) == augmentation(x) * augmentation(y));
      CHECK(augmentation(x + y) == augmentation(x) + augmentation(y));
    }
  }
}

TEST_CASE("split_self_conjugate round trip on random elements") {
  testgen::Rng rng(kSeed + 1);
  std::vector<GroupPtr> groups = {Group::cyclic(2), Group::cyclic(4),
                                  Group::table(oracles::klein_table()),
                                  Group::free_abelian(1)};
  for (const auto& g : groups) {
    for (int t = 0; t < 250; ++t) {
      auto x = testgen::random_self_conjugate_almost_even(rng, g, 3, 3);
      REQUIRE(x.is_self_conjugate_almost_even());
      auto [d, y] = x.split_self_conjugate();
      CHECK((d == 0 || d == 1));
      CHECK(GroupRingElement::from_int(g, d) + y + y.involute() == x);
    }
  }
}

TEST_CASE("ideal membership is closed under the ring operations") {
  testgen::Rng rng(kSeed + 2);
  auto z4 = Group::cyclic(4);
  auto z2 = Group::cyclic(2);
  auto q = QuotientMap::from_generator_images(z4, z2, {z2->parse("1")});
  auto h = mono(z4, "2", 1) - GroupRingElement::one(z4);  // generator of the ideal
  for (int t = 0; t < 200; ++t) {
    auto r = testgen::random_ring(rng, z4);
    auto s = testgen::random_ring(rng, z4);
    auto x = r * h * s;
    auto y = h.scaled(Int(testgen::uniform(rng, -2, 2)));
    CHECK(ideal_member(x, q));
    CHECK(ideal_member(y, q));
    CHECK(ideal_member(x + y, q));
    CHECK(ideal_member(x - y, q));
    CHECK(ideal_member(r * x * s, q));
  }
}

TEST_CASE("group mismatch raises") {
  auto z2 = Group::cyclic(2);
  auto z3 = Group::cyclic(3);
  CHECK_THROWS_AS(GroupRingElement::one(z2) * GroupRingElement::one(z3), DomainError);
  CHECK_THROWS_AS(GroupRingElement::one(z2) + GroupRingElement::one(z3), DomainError);
}

TEST_CASE("canonical term order and serialization stability") {
  auto z5 = Group::cyclic(5);
  auto x = mono(z5, "3", 2) + mono(z5, "1", 1) - mono(z5, "4", 7);
  auto y = mono(z5, "1", 1) - mono(z5, "4", 7) + mono(z5, "3", 2);
  CHECK(x == y);
  CHECK(x.to_string() == y.to_string());
  CHECK(x.terms().size() == 3);
  CHECK(x.terms()[0].first == z5->parse("1"));
}
