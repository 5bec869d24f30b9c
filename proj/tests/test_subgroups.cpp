#include <doctest.h>

#include "kleinvcy/subgroups.hpp"

using namespace kleinvcy;

namespace {

CyclicSubgroup sub(long n, long m) { return canonicalize({n, m}); }

}  // namespace

TEST_CASE("canonical generators") {
  CHECK(sub(-1, -2).generator() == GroupElement(1, 2));
  CHECK(sub(-3, 0).generator() == GroupElement(3, 0));
  // The inverse of an odd element keeps n.
  CHECK(sub(3, -1).generator() == GroupElement(3, 1));
  CHECK_THROWS_AS(sub(0, 0), PreconditionError);
}

TEST_CASE("membership") {
  CHECK(contains(sub(3, 1), {0, 2}));
  CHECK(contains(sub(3, 1), {3, -1}));
  CHECK_FALSE(contains(sub(3, 1), {3, 2}));
  CHECK(contains(sub(1, 2), {3, 6}));
  CHECK_FALSE(contains(sub(1, 2), {1, 4}));
  CHECK(contains(sub(1, 2), {0, 0}));
}

TEST_CASE("commensurability classes") {
  CHECK(commensurable(sub(5, 0), sub(1, 0)));
  CHECK(commensurable(sub(4, 3), sub(0, 2)));
  CHECK(commensurable(sub(7, 1), sub(-2, 5)));
  CHECK_FALSE(commensurable(sub(1, 2), sub(-1, 2)));
  CHECK(commensurable(sub(2, 4), sub(3, 6)));
  CHECK(comm_class(sub(5, 0)) == CommClass::h());
  CHECK(comm_class(sub(7, 3)) == CommClass::k());
  CHECK(comm_class(sub(0, 4)) == CommClass::k());
  const CommClass r = comm_class(sub(3, 6));
  REQUIRE(r.tag == ClassTag::R);
  CHECK(*r.rep == sub(1, 2));
  CHECK(*maximal_r_subgroup(sub(-2, 4)) == sub(-1, 2));
  CHECK_THROWS_AS(r_class(sub(1, 0)), PreconditionError);
}

TEST_CASE("commensurators and families") {
  CHECK(commensurator(CommClass::h()) == SubgroupDescriptor::WholeGroup);
  CHECK(commensurator(CommClass::k()) == SubgroupDescriptor::WholeGroup);
  CHECK(commensurator(comm_class(sub(1, 2))) == SubgroupDescriptor::EvenVertical);
  CHECK(descriptor_contains(SubgroupDescriptor::EvenVertical, {5, -4}));
  CHECK_FALSE(descriptor_contains(SubgroupDescriptor::EvenVertical, {5, 1}));
  const SubgroupFamily f = class_family(comm_class(sub(1, 2)));
  CHECK(family_contains(f, sub(3, 6)));
  CHECK_FALSE(family_contains(f, sub(1, 4)));
  CHECK(family_contains(class_family(CommClass::k()), sub(0, 6)));
  CHECK(family_contains(class_family(CommClass::k()), sub(3, 1)));
  CHECK_FALSE(family_contains(class_family(CommClass::h()), sub(0, 2)));
}

TEST_CASE("conjugating R-subgroups flips the sign of n for odd t2") {
  CHECK(conj_subgroup({0, 1}, sub(1, 2)) == sub(-1, 2));
  CHECK(conj_subgroup({5, 2}, sub(1, 2)) == sub(1, 2));
  for (long t1 = -4; t1 <= 4; ++t1) {
    for (long t2 = -4; t2 <= 4; ++t2) {
      const CyclicSubgroup c = conj_subgroup({t1, t2}, sub(2, 6));
      CHECK(comm_class(c).tag == ClassTag::R);
      CHECK(c == sub(t2 % 2 == 0 ? 2 : -2, 6));
    }
  }
}
