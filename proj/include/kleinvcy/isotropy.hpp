#pragma once

// Isotropy groups of axes and fixed-line sets of infinite cyclic subgroups.
// Together these show the axis space is a complex whose isotropy lies in
// VCY - {1} and whose fixed sets under VCY - {1} are contractible.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kleinvcy/plane_action.hpp"
#include "kleinvcy/subgroups.hpp"

namespace kleinvcy {

/// Which closed-form case produced an isotropy group.
enum class IsotropyRule {
  SlopeEvenNumerator,   // a = a1/a2 ≠ 0, a1 even:  <(a2, a1)>
  SlopeOddNumerator,    // a = a1/a2 ≠ 0, a1 odd:   <(2 a2, 2 a1)>
  ZeroSlope,            // a = 0:                   <(1, 0)>
  VerticalHalfInteger,  // a = ∞, 2b ∈ Z:           <(2b, 1)>
  VerticalGeneric,      // a = ∞, 2b ∉ Z:           <(0, 2)>
};

std::string describe(IsotropyRule rule);

struct Isotropy {
  CyclicSubgroup group;
  IsotropyRule rule;
};

Isotropy isotropy(const Line& l);
inline CyclicSubgroup isotropy_group(const Line& l) { return isotropy(l).group; }

class FixedSet {
 public:
  enum class Kind { SlopeFamily, VerticalFamily, SinglePoint, Empty };

  static FixedSet slope_family(Rational slope) { return {Kind::SlopeFamily, std::move(slope), std::nullopt}; }
  static FixedSet vertical_family() { return {Kind::VerticalFamily, Rational(0), std::nullopt}; }
  static FixedSet single_point(Line l) { return {Kind::SinglePoint, Rational(0), std::move(l)}; }
  static FixedSet empty() { return {Kind::Empty, Rational(0), std::nullopt}; }

  Kind kind() const { return kind_; }
  /// Slope of a SlopeFamily.
  const Rational& slope() const { return slope_; }
  /// The line of a SinglePoint.
  const std::optional<Line>& line() const { return line_; }

  bool contains(const Line& l) const;
  /// Families of parallel lines are intervals; a point is contractible; the
  /// empty set is not.
  bool contractible() const { return kind_ != Kind::Empty; }

  friend bool operator==(const FixedSet& a, const FixedSet& b) {
    return a.kind_ == b.kind_ && a.slope_ == b.slope_ && a.line_ == b.line_;
  }

 private:
  FixedSet(Kind kind, Rational slope, std::optional<Line> line)
      : kind_(kind), slope_(std::move(slope)), line_(std::move(line)) {}
  Kind kind_;
  Rational slope_;
  std::optional<Line> line_;
};

std::ostream& operator<<(std::ostream& os, const FixedSet& f);
std::string to_string(FixedSet::Kind k);

enum class FixedSetRule {
  EvenVerticalNonzeroHorizontal,  // (n, m), m even, n ≠ 0: all lines of slope m/n
  PureVertical,                   // (0, m), m even: all vertical lines
  OddVertical,                    // (n, m), m odd: the single line ℓ(∞, n/2)
};

std::string describe(FixedSetRule rule);

struct FixedSetResult {
  FixedSet set;
  FixedSetRule rule;
};

FixedSetResult fixed_set_with_rule(const CyclicSubgroup& s);
inline FixedSet fixed_set(const CyclicSubgroup& s) { return fixed_set_with_rule(s).set; }

using FixedSetFn = std::function<FixedSet(const CyclicSubgroup&)>;
using IsotropyFn = std::function<CyclicSubgroup(const Line&)>;

struct IComplexReport {
  bool passed = true;
  std::size_t lines_checked = 0;
  std::size_t subgroups_checked = 0;
  std::vector<std::string> counterexamples;
};

/// Enumerates the lines whose slope and intercept have numerator and
/// denominator bounded by `bound` (plus every vertical such line).
std::vector<Line> line_grid(long bound);

/// Checks the two testable halves of the I-complex property within `bound`:
/// every isotropy group of a grid line is a nontrivial infinite cyclic group
/// fixing that line, and no subgroup <g> with |g coords| ≤ bound has an empty
/// (non-contractible) fixed set. Fixed-set membership is also compared with
/// stabilization across the grid. The hooks allow fault injection in tests.
IComplexReport verify_i_complex(long bound, const FixedSetFn& fixed = fixed_set,
                                const IsotropyFn& iso = isotropy_group);

}  // namespace kleinvcy
