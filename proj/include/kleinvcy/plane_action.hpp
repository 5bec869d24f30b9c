#pragma once

// Action of Z⋊Z on the plane and on the space of lines.

#include <iosfwd>
#include <optional>

#include "kleinvcy/group.hpp"

namespace kleinvcy {

/// ℓ(a, b) = {(x, a x + b)} for finite slope a, or the vertical line
/// ℓ(∞, b) = {(b, y)}. Slope and intercept are exact rationals.
class Line {
 public:
  static Line finite(Rational slope, Rational intercept) {
    return Line(false, std::move(slope), std::move(intercept));
  }
  static Line vertical(Rational intercept) { return Line(true, Rational(0), std::move(intercept)); }

  bool is_vertical() const { return vertical_; }
  /// Meaningless (0) for vertical lines.
  const Rational& slope() const { return slope_; }
  const Rational& intercept() const { return intercept_; }

  /// Whether the (exact) point lies on the line.
  bool passes_through(const PlanePoint& p) const;

  friend bool operator==(const Line& a, const Line& b) {
    return a.vertical_ == b.vertical_ && a.slope_ == b.slope_ && a.intercept_ == b.intercept_;
  }

 private:
  Line(bool vertical, Rational slope, Rational intercept)
      : vertical_(vertical), slope_(std::move(slope)), intercept_(std::move(intercept)) {}
  bool vertical_;
  Rational slope_;
  Rational intercept_;
};

std::ostream& operator<<(std::ostream& os, const Line& l);

/// (n + (-1)^m t, m + r).
PlanePoint act_point(const GroupElement& g, const PlanePoint& p);

/// (n,m) ℓ(a,b) = ℓ((-1)^m a, b + m - (-1)^m a n) and
/// (n,m) ℓ(∞,b) = ℓ(∞, n + (-1)^m b).
Line act_line(const GroupElement& g, const Line& l);

struct LineDistance {
  bool parallel = false;
  /// Squared strip width; present only for parallel lines.
  std::optional<Rational> width_sq;
  /// k / (1 + k) for a strip of width k, and 1 for crossing lines.
  double distance = 1.0;
};

LineDistance line_distance(const Line& l1, const Line& l2);

/// Whether g ℓ = ℓ, by the closed criterion: for finite slope, m even and
/// m = a n; for vertical lines, n = (1 - (-1)^m) b. The identity fixes every line.
bool stabilizes(const GroupElement& g, const Line& l);

/// Every representable line has rational or infinite slope, hence is an axis.
bool is_axis(const Line& l);

}  // namespace kleinvcy
