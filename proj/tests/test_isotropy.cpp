#include <doctest.h>

#include "kleinvcy/isotropy.hpp"

using namespace kleinvcy;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
CyclicSubgroup sub(long n, long m) { return canonicalize({n, m}); }

}  // namespace

TEST_CASE("isotropy cases") {
  CHECK(isotropy(Line::finite(q(2, 3), q(7))).group == sub(3, 2));
  CHECK(isotropy(Line::finite(q(2, 3), q(7))).rule == IsotropyRule::SlopeEvenNumerator);
  CHECK(isotropy(Line::finite(q(1, 2), q(0))).group == sub(4, 2));
  CHECK(isotropy(Line::finite(q(1, 2), q(0))).rule == IsotropyRule::SlopeOddNumerator);
  CHECK(isotropy(Line::finite(q(-3, 5), q(0))).group == sub(-10, 6));
  CHECK(isotropy(Line::finite(q(0), q(1, 3))).group == sub(1, 0));
  CHECK(isotropy(Line::vertical(q(3, 2))).group == sub(3, 1));
  CHECK(isotropy(Line::vertical(q(3, 2))).rule == IsotropyRule::VerticalHalfInteger);
  CHECK(isotropy(Line::vertical(q(1, 4))).group == sub(0, 2));
  CHECK(isotropy(Line::vertical(q(1, 4))).rule == IsotropyRule::VerticalGeneric);
}

TEST_CASE("isotropy equals the brute-force stabilizer on a small grid") {
  for (const Line& l : line_grid(3)) {
    const CyclicSubgroup iso = isotropy_group(l);
    CHECK(stabilizes(iso.generator(), l));
    for (long n = -6; n <= 6; ++n) {
      for (long m = -6; m <= 6; ++m) CHECK(stabilizes({n, m}, l) == contains(iso, {n, m}));
    }
  }
}

TEST_CASE("fixed sets") {
  CHECK(fixed_set(sub(1, 2)) == FixedSet::slope_family(q(2)));
  CHECK(fixed_set(sub(0, 2)) == FixedSet::vertical_family());
  CHECK(fixed_set(sub(3, 1)) == FixedSet::single_point(Line::vertical(q(3, 2))));
  CHECK(fixed_set(sub(4, 0)) == FixedSet::slope_family(q(0)));
  CHECK(fixed_set_with_rule(sub(3, 1)).rule == FixedSetRule::OddVertical);
  CHECK(fixed_set(sub(1, 2)).contractible());
  CHECK_FALSE(FixedSet::empty().contractible());
}

TEST_CASE("fixed set membership matches stabilization") {
  for (long n = -4; n <= 4; ++n) {
    for (long m = -4; m <= 4; ++m) {
      if (n == 0 && m == 0) continue;
      const CyclicSubgroup s = sub(n, m);
      const FixedSet f = fixed_set(s);
      for (const Line& l : line_grid(3)) CHECK(f.contains(l) == stabilizes(s.generator(), l));
    }
  }
}

TEST_CASE("line grid is duplicate free") {
  const std::vector<Line> grid = line_grid(2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) CHECK_FALSE(grid[i] == grid[j]);
  }
}

TEST_CASE("i-complex verification passes and catches a broken fixed-set rule") {
  const IComplexReport good = verify_i_complex(4);
  CHECK(good.passed);
  CHECK(good.counterexamples.empty());
  CHECK(good.lines_checked > 0);
  CHECK(good.subgroups_checked > 0);

  const FixedSetFn broken = [](const CyclicSubgroup& s) {
    return is_odd(s.generator().m) ? FixedSet::empty() : fixed_set(s);
  };
  const IComplexReport bad = verify_i_complex(4, broken);
  CHECK_FALSE(bad.passed);
  bool mentions = false;
  for (const auto& c : bad.counterexamples) mentions = mentions || c.find("<(1,1)>") != std::string::npos;
  CHECK(mentions);

  const IsotropyFn wrong_iso = [](const Line&) { return canonicalize({1, 0}); };
  CHECK_FALSE(verify_i_complex(3, fixed_set, wrong_iso).passed);
}
