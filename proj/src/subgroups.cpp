#include "kleinvcy/subgroups.hpp"

#include <ostream>

namespace kleinvcy {

CyclicSubgroup CyclicSubgroup::generated_by(const GroupElement& g) {
  if (g.is_identity()) {
    throw PreconditionError("the identity generates the trivial subgroup, not an infinite cyclic one");
  }
  if (g.m > 0 || (g.m == 0 && g.n > 0)) return CyclicSubgroup(g);
  return CyclicSubgroup(inv(g));
}

std::ostream& operator<<(std::ostream& os, const CyclicSubgroup& s) {
  return os << '<' << s.generator() << '>';
}

bool contains(const CyclicSubgroup& s, const GroupElement& g) {
  const GroupElement& gen = s.generator();
  if (gen.m == 0) {
    return g.m == 0 && mpz_divisible_p(g.n.get_mpz_t(), gen.n.get_mpz_t()) != 0;
  }
  if (mpz_divisible_p(g.m.get_mpz_t(), gen.m.get_mpz_t()) == 0) return false;
  const Integer k = g.m / gen.m;
  if (is_even(gen.m)) return g.n == k * gen.n;
  return is_even(k) ? g.n == 0 : g.n == gen.n;
}

ClassTag class_tag(const CyclicSubgroup& s) {
  const GroupElement& g = s.generator();
  if (g.m == 0) return ClassTag::H;
  if (is_odd(g.m) || g.n == 0) return ClassTag::K;
  return ClassTag::R;
}

bool commensurable(const CyclicSubgroup& s, const CyclicSubgroup& t) {
  const ClassTag a = class_tag(s);
  if (a != class_tag(t)) return false;
  if (a != ClassTag::R) return true;
  // Powers of (n, 2m) with m even are the lattice points k(n, 2m); two such
  // rays meet away from the origin iff the generators are parallel.
  const GroupElement& g = s.generator();
  const GroupElement& h = t.generator();
  return g.n * h.m == h.n * g.m;
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::H: return "H";
    case ClassTag::K: return "K";
    case ClassTag::R: return "R";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const CommClass& c) {
  os << to_string(c.tag);
  if (c.rep) os << '[' << *c.rep << ']';
  return os;
}

std::optional<CyclicSubgroup> maximal_r_subgroup(const CyclicSubgroup& s) {
  if (class_tag(s) != ClassTag::R) return std::nullopt;
  const GroupElement& g = s.generator();
  const Integer half = g.m / 2;
  const Integer d = gcd_abs(g.n, half);
  return CyclicSubgroup::generated_by({Integer(g.n / d), Integer(g.m / d)});
}

CommClass r_class(const CyclicSubgroup& s) {
  auto root = maximal_r_subgroup(s);
  if (!root) throw PreconditionError("subgroup is not of the form <(n,2m)> with n, m nonzero");
  const GroupElement& g = root->generator();
  return {ClassTag::R, CyclicSubgroup::generated_by({abs_int(g.n), g.m})};
}

CommClass comm_class(const CyclicSubgroup& s) {
  switch (class_tag(s)) {
    case ClassTag::H: return CommClass::h();
    case ClassTag::K: return CommClass::k();
    case ClassTag::R: return r_class(s);
  }
  return CommClass::h();
}

std::string to_string(SubgroupDescriptor d) {
  return d == SubgroupDescriptor::WholeGroup ? "WholeGroup" : "EvenVertical";
}

bool descriptor_contains(SubgroupDescriptor d, const GroupElement& g) {
  return d == SubgroupDescriptor::WholeGroup || is_even(g.m);
}

SubgroupDescriptor commensurator(const CommClass& c) {
  return c.tag == ClassTag::R ? SubgroupDescriptor::EvenVertical : SubgroupDescriptor::WholeGroup;
}

bool SubgroupFamily::contains(const CyclicSubgroup& s) const {
  switch (kind_) {
    case Kind::VcyOf: return kleinvcy::contains(*ambient_, s.generator());
    case Kind::GOfK: return class_tag(s) == ClassTag::K;
    case Kind::Trivial: return false;
    case Kind::All: return true;
  }
  return false;
}

std::string to_string(SubgroupFamily::Kind k) {
  switch (k) {
    case SubgroupFamily::Kind::VcyOf: return "VCY_of";
    case SubgroupFamily::Kind::GOfK: return "G_of_K";
    case SubgroupFamily::Kind::Trivial: return "Trivial";
    case SubgroupFamily::Kind::All: return "All";
  }
  return "?";
}

SubgroupFamily class_family(const CommClass& c) {
  switch (c.tag) {
    case ClassTag::H: return SubgroupFamily::vcy_of(CyclicSubgroup::generated_by({1, 0}));
    case ClassTag::K: return SubgroupFamily::g_of_k();
    case ClassTag::R: return SubgroupFamily::vcy_of(*c.rep);
  }
  return SubgroupFamily::trivial();
}

CyclicSubgroup conj_subgroup(const GroupElement& t, const CyclicSubgroup& s) {
  return CyclicSubgroup::generated_by(conj(t, s.generator()));
}

}  // namespace kleinvcy
