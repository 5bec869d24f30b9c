#pragma once

// Arbitrary-precision integer and rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kleinvcy {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is handed an input outside its domain
/// (e.g. the identity where an infinite cyclic generator is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed textual input (integers, `p/q` rationals, `inf`).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
inline bool is_odd(const Integer& x) { return !is_even(x); }

/// (-1)^m, decided by parity.
inline int sign_power(const Integer& m) { return is_even(m) ? 1 : -1; }

inline Integer abs_int(const Integer& x) { return Integer(abs(x)); }

/// gcd of absolute values; gcd(0, 0) = 0.
Integer gcd_abs(const Integer& a, const Integer& b);

/// Canonical p/q with q > 0 and gcd(p, q) = 1. Throws PreconditionError on q = 0.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& x);
/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Decimal integer with optional sign. Throws ParseError.
Integer parse_integer(std::string_view text);
/// Accepts "p", "p/q" with q > 0. The result is reduced. Throws ParseError.
Rational parse_rational(std::string_view text);

/// The value as int64 when it fits.
std::optional<std::int64_t> to_int64(const Integer& x);

}  // namespace kleinvcy
