#include "kleinvcy/abelian.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kleinvcy {

AbelianGroup AbelianGroup::from_cyclic(std::size_t rank, std::vector<Integer> orders) {
  AbelianGroup g;
  g.rank_ = rank;
  std::vector<Integer> d;
  for (auto& o : orders) {
    Integer a = abs_int(o);
    if (a == 0) ++g.rank_;
    else if (a != 1) d.push_back(std::move(a));
  }
  // Pairwise (gcd, lcm) sweep: afterwards d[i] divides every later entry.
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer gg = gcd_abs(d[i], d[j]);
      const Integer l = d[i] / gg * d[j];
      d[i] = gg;
      d[j] = l;
    }
  }
  for (auto& x : d) {
    if (x != 1) g.torsion_.push_back(std::move(x));
  }
  return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> t = a.torsion();
  t.insert(t.end(), b.torsion().begin(), b.torsion().end());
  return AbelianGroup::from_cyclic(a.rank() + b.rank(), std::move(t));
}

AbelianGroup power(const AbelianGroup& a, std::size_t k) {
  std::vector<Integer> t;
  for (std::size_t i = 0; i < k; ++i) t.insert(t.end(), a.torsion().begin(), a.torsion().end());
  return AbelianGroup::from_cyclic(a.rank() * k, std::move(t));
}

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> t;
  for (std::size_t i = 0; i < a.rank(); ++i) t.insert(t.end(), b.torsion().begin(), b.torsion().end());
  for (std::size_t i = 0; i < b.rank(); ++i) t.insert(t.end(), a.torsion().begin(), a.torsion().end());
  for (const auto& d : a.torsion()) {
    for (const auto& e : b.torsion()) t.push_back(gcd_abs(d, e));
  }
  return AbelianGroup::from_cyclic(a.rank() * b.rank(), std::move(t));
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> t;
  for (const auto& d : a.torsion()) {
    for (const auto& e : b.torsion()) t.push_back(gcd_abs(d, e));
  }
  return AbelianGroup::from_cyclic(0, std::move(t));
}

std::vector<Integer> elementary_divisors(const AbelianGroup& a) {
  std::vector<Integer> out;
  for (Integer d : a.torsion()) {
    for (Integer p = 2; p * p <= d; ++p) {
      if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) == 0) continue;
      Integer q = 1;
      while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0) {
        d /= p;
        q *= p;
      }
      out.push_back(q);
    }
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const AbelianGroup& a) {
  if (a.is_zero()) return "0";
  std::vector<std::string> terms;
  if (a.rank() == 1) terms.emplace_back("Z");
  else if (a.rank() > 1) terms.push_back("Z^" + std::to_string(a.rank()));
  // Invariant factors are sorted, so equal orders are adjacent.
  const auto& t = a.torsion();
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    std::string term = "Z_" + to_string(t[i]);
    if (j - i > 1) term += "^" + std::to_string(j - i);
    terms.push_back(std::move(term));
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& a) { return os << to_string(a); }

const AbelianGroup& GradedGroups::at(std::size_t degree) const {
  static const AbelianGroup kZero;
  return degree < groups.size() ? groups[degree] : kZero;
}

void GradedGroups::set(std::size_t degree, AbelianGroup g) {
  if (degree >= groups.size()) groups.resize(degree + 1);
  groups[degree] = std::move(g);
}

std::size_t GradedGroups::length() const {
  std::size_t n = groups.size();
  while (n > 0 && groups[n - 1].is_zero()) --n;
  return n;
}

bool operator==(const GradedGroups& a, const GradedGroups& b) {
  if (a.reduced != b.reduced) return false;
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.at(i) == b.at(i))) return false;
  }
  return true;
}

GradedGroups to_reduced(const GradedGroups& h) {
  if (h.reduced) return h;
  if (h.at(0).rank() == 0) throw PreconditionError("reduced homology of the empty space is undefined");
  GradedGroups out = h;
  out.reduced = true;
  out.set(0, AbelianGroup::from_cyclic(h.at(0).rank() - 1, h.at(0).torsion()));
  return out;
}

GradedGroups to_unreduced(const GradedGroups& h) {
  if (!h.reduced) return h;
  GradedGroups out = h;
  out.reduced = false;
  out.set(0, direct_sum(h.at(0), AbelianGroup::free(1)));
  return out;
}

std::string to_string(const GradedGroups& h) {
  const std::size_t n = std::max<std::size_t>(h.length(), 1);
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << ", ";
    os << (h.reduced ? "~H_" : "H_") << i << " = " << to_string(h.at(i));
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedGroups& h) { return os << to_string(h); }

}  // namespace kleinvcy
