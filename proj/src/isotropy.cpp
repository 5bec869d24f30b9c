#include "kleinvcy/isotropy.hpp"

#include <ostream>
#include <set>
#include <sstream>

namespace kleinvcy {

std::string describe(IsotropyRule rule) {
  switch (rule) {
    case IsotropyRule::SlopeEvenNumerator: return "finite nonzero slope a1/a2 with a1 even: <(a2,a1)>";
    case IsotropyRule::SlopeOddNumerator: return "finite nonzero slope a1/a2 with a1 odd: <(2a2,2a1)>";
    case IsotropyRule::ZeroSlope: return "slope 0: <(1,0)>";
    case IsotropyRule::VerticalHalfInteger: return "vertical line with 2b integral: <(2b,1)>";
    case IsotropyRule::VerticalGeneric: return "vertical line with 2b not integral: <(0,2)>";
  }
  return "?";
}

Isotropy isotropy(const Line& l) {
  if (l.is_vertical()) {
    const Rational twice_b = 2 * l.intercept();
    if (is_integral(twice_b)) {
      return {CyclicSubgroup::generated_by({twice_b.get_num(), Integer(1)}), IsotropyRule::VerticalHalfInteger};
    }
    return {CyclicSubgroup::generated_by({0, 2}), IsotropyRule::VerticalGeneric};
  }
  const Rational& a = l.slope();
  if (a == 0) return {CyclicSubgroup::generated_by({1, 0}), IsotropyRule::ZeroSlope};
  // mpq keeps a canonical: gcd(a1, a2) = 1, a2 > 0.
  const Integer& a1 = a.get_num();
  const Integer& a2 = a.get_den();
  if (is_even(a1)) return {CyclicSubgroup::generated_by({a2, a1}), IsotropyRule::SlopeEvenNumerator};
  return {CyclicSubgroup::generated_by({Integer(2 * a2), Integer(2 * a1)}), IsotropyRule::SlopeOddNumerator};
}

bool FixedSet::contains(const Line& l) const {
  switch (kind_) {
    case Kind::SlopeFamily: return !l.is_vertical() && l.slope() == slope_;
    case Kind::VerticalFamily: return l.is_vertical();
    case Kind::SinglePoint: return l == *line_;
    case Kind::Empty: return false;
  }
  return false;
}

std::string to_string(FixedSet::Kind k) {
  switch (k) {
    case FixedSet::Kind::SlopeFamily: return "SlopeFamily";
    case FixedSet::Kind::VerticalFamily: return "VerticalFamily";
    case FixedSet::Kind::SinglePoint: return "SinglePoint";
    case FixedSet::Kind::Empty: return "Empty";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const FixedSet& f) {
  os << to_string(f.kind());
  if (f.kind() == FixedSet::Kind::SlopeFamily) os << '(' << to_string(f.slope()) << ')';
  if (f.kind() == FixedSet::Kind::SinglePoint) os << '(' << *f.line() << ')';
  return os;
}

std::string describe(FixedSetRule rule) {
  switch (rule) {
    case FixedSetRule::EvenVerticalNonzeroHorizontal: return "generator (n,m), m even, n != 0: all lines of slope m/n";
    case FixedSetRule::PureVertical: return "generator (0,m), m even: all vertical lines";
    case FixedSetRule::OddVertical: return "generator (n,m), m odd: the single line l(inf,n/2)";
  }
  return "?";
}

FixedSetResult fixed_set_with_rule(const CyclicSubgroup& s) {
  const GroupElement& g = s.generator();
  if (is_odd(g.m)) {
    return {FixedSet::single_point(Line::vertical(make_rational(g.n, 2))), FixedSetRule::OddVertical};
  }
  if (g.n == 0) return {FixedSet::vertical_family(), FixedSetRule::PureVertical};
  // Includes m = 0, where the only fixed slope is 0.
  return {FixedSet::slope_family(make_rational(g.m, g.n)), FixedSetRule::EvenVerticalNonzeroHorizontal};
}

std::vector<Line> line_grid(long bound) {
  std::set<std::pair<Integer, Integer>> seen;
  std::vector<Rational> values;
  for (long q = 1; q <= bound; ++q) {
    for (long p = -bound; p <= bound; ++p) {
      Rational v = make_rational(p, q);
      if (seen.emplace(v.get_num(), v.get_den()).second) values.push_back(v);
    }
  }
  std::vector<Line> lines;
  lines.reserve(values.size() * (values.size() + 1));
  for (const auto& b : values) {
    lines.push_back(Line::vertical(b));
    for (const auto& a : values) lines.push_back(Line::finite(a, b));
  }
  return lines;
}

IComplexReport verify_i_complex(long bound, const FixedSetFn& fixed, const IsotropyFn& iso) {
  if (bound < 1) throw PreconditionError("sample bound must be at least 1");
  IComplexReport report;
  const std::vector<Line> grid = line_grid(bound);
  for (const Line& l : grid) {
    ++report.lines_checked;
    std::ostringstream why;
    try {
      const CyclicSubgroup s = iso(l);
      if (!stabilizes(s.generator(), l)) why << "isotropy generator " << s << " does not fix " << l;
    } catch (const PreconditionError& e) {
      why << "isotropy of " << l << " is not infinite cyclic: " << e.what();
    }
    if (!why.str().empty()) report.counterexamples.push_back(why.str());
  }
  std::set<std::pair<Integer, Integer>> seen;
  for (long n = -bound; n <= bound; ++n) {
    for (long m = -bound; m <= bound; ++m) {
      if (n == 0 && m == 0) continue;
      const CyclicSubgroup s = canonicalize({n, m});
      if (!seen.emplace(s.generator().n, s.generator().m).second) continue;
      ++report.subgroups_checked;
      const FixedSet f = fixed(s);
      if (!f.contractible()) {
        std::ostringstream why;
        why << "fixed set of " << s << " is " << f;
        report.counterexamples.push_back(why.str());
        continue;
      }
      for (const Line& l : grid) {
        if (f.contains(l) != stabilizes(s.generator(), l)) {
          std::ostringstream why;
          why << "fixed set " << f << " of " << s << " disagrees with stabilization of " << l;
          report.counterexamples.push_back(why.str());
          break;
        }
      }
    }
  }
  report.passed = report.counterexamples.empty();
  return report;
}

}  // namespace kleinvcy
