#include "kleinvcy/group.hpp"

#include <ostream>

namespace kleinvcy {

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << '(' << g.n << ',' << g.m << ')';
}

std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
  return os << '(' << to_string(p.t) << ',' << to_string(p.r) << ')';
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  Integer n = is_even(g.m) ? Integer(g.n + h.n) : Integer(g.n - h.n);
  return {std::move(n), Integer(g.m + h.m)};
}

void mul_into(GroupElement& out, const GroupElement& g, const GroupElement& h) {
  if (is_even(g.m)) mpz_add(out.n.get_mpz_t(), g.n.get_mpz_t(), h.n.get_mpz_t());
  else mpz_sub(out.n.get_mpz_t(), g.n.get_mpz_t(), h.n.get_mpz_t());
  mpz_add(out.m.get_mpz_t(), g.m.get_mpz_t(), h.m.get_mpz_t());
}

GroupElement inv(const GroupElement& g) {
  // (-1)^(1-m) is -1 for even m and +1 for odd m.
  Integer n = is_even(g.m) ? Integer(-g.n) : g.n;
  return {std::move(n), Integer(-g.m)};
}

GroupElement pow(const GroupElement& g, const Integer& k) {
  Integer m = g.m * k;
  if (is_even(g.m)) return {Integer(g.n * k), std::move(m)};
  if (is_even(k)) return {Integer(0), std::move(m)};
  return {g.n, std::move(m)};
}

GroupElement conj(const GroupElement& t, const GroupElement& g) {
  Integer n = is_even(t.m) ? g.n : Integer(-g.n);
  // t1 + (-1)^(m+1) t1 is 0 for even m and 2 t1 for odd m.
  if (is_odd(g.m)) n += 2 * t.n;
  return {std::move(n), g.m};
}

AffineMap::AffineMap(int sign, Rational shift_x, Rational shift_y)
    : sign_(sign), shift_x_(std::move(shift_x)), shift_y_(std::move(shift_y)) {
  if (sign_ != 1 && sign_ != -1) throw PreconditionError("affine sign must be +1 or -1");
}

PlanePoint AffineMap::operator()(const PlanePoint& p) const {
  Rational t = sign_ == 1 ? Rational(shift_x_ + p.t) : Rational(shift_x_ - p.t);
  return {std::move(t), Rational(shift_y_ + p.r)};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  Rational x = sign_ == 1 ? Rational(shift_x_ + inner.shift_x_) : Rational(shift_x_ - inner.shift_x_);
  return {sign_ * inner.sign_, std::move(x), Rational(shift_y_ + inner.shift_y_)};
}

AffineMap as_affine(const GroupElement& g) {
  return {sign_power(g.m), Rational(g.n), Rational(g.m)};
}

}  // namespace kleinvcy
