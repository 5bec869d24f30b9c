#include <doctest.h>

#include <random>

#include "kleinvcy/group.hpp"

using namespace kleinvcy;

namespace {

GroupElement random_element(std::mt19937_64& rng, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  return {d(rng), d(rng)};
}

// Product written directly from the semidirect-product definition, with the
// sign computed as an actual power of -1.
GroupElement reference_mul(const GroupElement& g, const GroupElement& h) {
  Integer sign = 1;
  Integer e = abs(g.m);
  while (e > 0) {
    sign = -sign;
    --e;
  }
  return {Integer(g.n + sign * h.n), Integer(g.m + h.m)};
}

}  // namespace

TEST_CASE("mul examples") {
  CHECK(mul({0, 0}, {5, 7}) == GroupElement(5, 7));
  CHECK(mul({1, 1}, {2, 0}) == GroupElement(-1, 1));
  CHECK(mul({1, 2}, {2, 0}) == GroupElement(3, 2));
  CHECK(mul({0, 1}, {0, 1}) == GroupElement(0, 2));
}

TEST_CASE("inv and pow closed forms") {
  CHECK(inv({3, 1}) == GroupElement(3, -1));
  CHECK(inv({3, 2}) == GroupElement(-3, -2));
  CHECK(pow({3, 1}, 2) == GroupElement(0, 2));
  CHECK(pow({3, 1}, 3) == GroupElement(3, 3));
  CHECK(pow({3, 1}, -1) == inv({3, 1}));
  CHECK(pow({2, 4}, 5) == GroupElement(10, 20));
  CHECK(pow({2, 4}, 0).is_identity());
}

TEST_CASE("conj examples") {
  for (long t1 = -3; t1 <= 3; ++t1) {
    for (long t2 = -3; t2 <= 3; ++t2) {
      const long s = (t2 % 2 == 0) ? 1 : -1;
      CHECK(conj({t1, t2}, {1, 0}) == GroupElement(s, 0));
      CHECK(conj({t1, t2}, {5, 4}) == GroupElement(5 * s, 4));
    }
  }
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const GroupElement g = random_element(rng, 1000), h = random_element(rng, 1000), k = random_element(rng, 1000);
    CHECK(mul(g, h) == reference_mul(g, h));
    CHECK(mul(mul(g, h), k) == mul(g, mul(h, k)));
    CHECK(mul(g, inv(g)).is_identity());
    CHECK(conj(h, g) == mul(mul(h, g), inv(h)));
    GroupElement into;
    mul_into(into, g, h);
    CHECK(into == mul(g, h));
  }
}

TEST_CASE("arbitrary precision coordinates") {
  const Integer big("123456789012345678901234567890");
  const GroupElement g(big, Integer(1));
  CHECK(mul(g, g) == GroupElement(Integer(0), Integer(2)));
  CHECK(pow(GroupElement(big, Integer(2)), big) == GroupElement(Integer(big * big), Integer(2 * big)));
}

TEST_CASE("as_affine is a faithful homomorphism") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const GroupElement g = random_element(rng, 50), h = random_element(rng, 50);
    CHECK(as_affine(mul(g, h)) == as_affine(g).compose(as_affine(h)));
    const PlanePoint p{make_rational(i, 7), make_rational(-i, 3)};
    CHECK(as_affine(g)(as_affine(h)(p)) == as_affine(mul(g, h))(p));
  }
  CHECK(as_affine({0, 0}).is_identity());
  CHECK_FALSE(as_affine({1, 0}).is_identity());
  CHECK_FALSE(as_affine({0, 1}).is_identity());
}

TEST_CASE("affine sign is validated") {
  CHECK_THROWS_AS(AffineMap(2, Rational(0), Rational(0)), PreconditionError);
}
