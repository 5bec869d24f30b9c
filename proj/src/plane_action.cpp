#include "kleinvcy/plane_action.hpp"

#include <cmath>
#include <ostream>

namespace kleinvcy {

bool Line::passes_through(const PlanePoint& p) const {
  if (vertical_) return p.t == intercept_;
  return p.r == slope_ * p.t + intercept_;
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
  os << "l(";
  if (l.is_vertical()) os << "inf";
  else os << to_string(l.slope());
  return os << ',' << to_string(l.intercept()) << ')';
}

PlanePoint act_point(const GroupElement& g, const PlanePoint& p) { return as_affine(g)(p); }

Line act_line(const GroupElement& g, const Line& l) {
  const int s = sign_power(g.m);
  if (l.is_vertical()) {
    Rational b = s == 1 ? Rational(g.n + l.intercept()) : Rational(g.n - l.intercept());
    return Line::vertical(std::move(b));
  }
  Rational a = s * l.slope();
  Rational b = l.intercept() + g.m - a * g.n;
  return Line::finite(std::move(a), std::move(b));
}

LineDistance line_distance(const Line& l1, const Line& l2) {
  const bool parallel =
      l1.is_vertical() == l2.is_vertical() && (l1.is_vertical() || l1.slope() == l2.slope());
  if (!parallel) return {};
  const Rational db = l1.intercept() - l2.intercept();
  Rational width_sq = db * db;
  if (!l1.is_vertical()) width_sq /= Rational(1 + l1.slope() * l1.slope());
  const double k = std::sqrt(width_sq.get_d());
  return {true, std::move(width_sq), k / (1.0 + k)};
}

bool stabilizes(const GroupElement& g, const Line& l) {
  if (g.is_identity()) return true;
  if (l.is_vertical()) {
    // n = (1 - (-1)^m) b: n = 0 for even m, n = 2b for odd m.
    if (is_even(g.m)) return g.n == 0;
    return Rational(g.n) == 2 * l.intercept();
  }
  return is_even(g.m) && Rational(g.m) == l.slope() * g.n;
}

bool is_axis(const Line&) { return true; }

}  // namespace kleinvcy
