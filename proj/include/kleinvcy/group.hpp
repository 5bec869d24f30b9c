#pragma once

// The Klein bottle group Z⋊Z: pairs (n, m) with the twisted product
//   (n1, m1)(n2, m2) = (n1 + (-1)^m1 n2, m1 + m2),
// and its faithful representation as deck transformations of the plane.

#include <iosfwd>

#include "kleinvcy/numeric.hpp"

namespace kleinvcy {

struct GroupElement {
  Integer n;  // horizontal coordinate
  Integer m;  // vertical coordinate

  GroupElement() = default;
  GroupElement(Integer n_, Integer m_) : n(std::move(n_)), m(std::move(m_)) {}
  GroupElement(long n_, long m_) : n(n_), m(m_) {}

  static GroupElement identity() { return {}; }
  bool is_identity() const { return n == 0 && m == 0; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.n == b.n && a.m == b.m;
  }
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

GroupElement mul(const GroupElement& g, const GroupElement& h);
/// mul() writing into existing storage; `out` must not alias g or h.
void mul_into(GroupElement& out, const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupElement& g);

/// g^k via the parity closed forms:
///   m even: (k n, k m);  m odd: (0, k m) for even k, (n, k m) for odd k.
GroupElement pow(const GroupElement& g, const Integer& k);

/// t g t^{-1} = ((-1)^t2 n + t1 + (-1)^(m+1) t1, m).
GroupElement conj(const GroupElement& t, const GroupElement& g);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return mul(g, h); }

struct PlanePoint {
  Rational t;
  Rational r;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.t == b.t && a.r == b.r;
  }
};

std::ostream& operator<<(std::ostream& os, const PlanePoint& p);

/// (t, r) ↦ (shift_x + sign·t, shift_y + r), sign ∈ {+1, -1}.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(int sign, Rational shift_x, Rational shift_y);

  static AffineMap identity() { return {}; }

  int sign() const { return sign_; }
  const Rational& shift_x() const { return shift_x_; }
  const Rational& shift_y() const { return shift_y_; }

  PlanePoint operator()(const PlanePoint& p) const;

  /// (*this) ∘ inner.
  AffineMap compose(const AffineMap& inner) const;

  bool is_identity() const { return sign_ == 1 && shift_x_ == 0 && shift_y_ == 0; }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.sign_ == b.sign_ && a.shift_x_ == b.shift_x_ && a.shift_y_ == b.shift_y_;
  }

 private:
  int sign_ = 1;
  Rational shift_x_;
  Rational shift_y_;
};

/// The deck transformation (t, r) ↦ (n + (-1)^m t, m + r).
AffineMap as_affine(const GroupElement& g);

}  // namespace kleinvcy
