#include "kleinvcy/numeric.hpp"

#include <cctype>

namespace kleinvcy {

Integer gcd_abs(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text, true)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false)) {
    throw ParseError("not a rational p/q: '" + std::string(text) + "'");
  }
  const Integer q = parse_integer(den);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), q);
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

}  // namespace kleinvcy
