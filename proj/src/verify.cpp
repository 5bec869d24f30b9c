#include "kleinvcy/verify.hpp"

#include <random>
#include <sstream>

#include "kleinvcy/homology.hpp"
#include "kleinvcy/isotropy.hpp"
#include "kleinvcy/models.hpp"

namespace kleinvcy {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  passed = false;
  if (failures.size() < 10) failures.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {"group-law", "representation", "isotropy", "i-complex",
                                                  "classes",   "kn-action",      "equivariance", "homology"};
  return kNames;
}

namespace {

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::vector<GroupElement> box(long bound) {
  std::vector<GroupElement> out;
  for (long n = -bound; n <= bound; ++n) {
    for (long m = -bound; m <= bound; ++m) out.emplace_back(n, m);
  }
  return out;
}

GroupElement iterated_pow(const GroupElement& g, long k) {
  GroupElement acc;
  const GroupElement step = k >= 0 ? g : inv(g);
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) acc = mul(acc, step);
  return acc;
}

Integer random_integer(std::mt19937_64& rng) {
  // Two to four 64-bit limbs, random sign.
  const int limbs = 2 + static_cast<int>(rng() % 3);
  Integer x = 0;
  for (int i = 0; i < limbs; ++i) {
    x <<= 64;
    x += Integer(std::to_string(rng()));
  }
  return (rng() & 1) ? Integer(-x) : x;
}

void group_law(SuiteReport& r, const VerifyOptions& o) {
  const std::vector<GroupElement> elems = box(o.bound);
  const std::size_t count = elems.size();
  std::vector<GroupElement> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) table[i * count + j] = mul(elems[i], elems[j]);
  }
  GroupElement left, right;
  std::size_t bad = 0;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const GroupElement& ab = table[a * count + b];
      for (std::size_t c = 0; c < count; ++c) {
        mul_into(left, ab, elems[c]);
        mul_into(right, elems[a], table[b * count + c]);
        if (!(left == right) && bad++ < 3) {
          r.expect(false, cat("associativity fails at ", elems[a], elems[b], elems[c]));
        }
      }
    }
  }
  r.expect(bad == 0, cat(bad, " associativity failures"));
  for (const auto& g : elems) {
    r.expect(mul(g, inv(g)).is_identity() && mul(inv(g), g).is_identity(), cat("inverse law at ", g));
    for (long k = -12; k <= 12; ++k) {
      r.expect(pow(g, Integer(k)) == iterated_pow(g, k), cat("pow(", g, ",", k, ")"));
    }
    for (const auto& t : elems) {
      if (!(conj(t, g) == mul(mul(t, g), inv(t)))) r.expect(false, cat("conj(", t, ",", g, ")"));
    }
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.random_samples; ++i) {
    const GroupElement g(random_integer(rng), random_integer(rng));
    const GroupElement h(random_integer(rng), random_integer(rng));
    const GroupElement k(random_integer(rng), random_integer(rng));
    r.expect(mul(mul(g, h), k) == mul(g, mul(h, k)), cat("random associativity at ", g, h, k));
    r.expect(mul(g, inv(g)).is_identity(), cat("random inverse at ", g));
    r.expect(conj(h, g) == mul(mul(h, g), inv(h)), cat("random conj at ", h, g));
  }
}

void representation(SuiteReport& r, const VerifyOptions& o) {
  const std::vector<GroupElement> elems = box(o.bound);
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      r.expect(as_affine(mul(g, h)) == as_affine(g).compose(as_affine(h)), cat("homomorphism at ", g, h));
    }
    r.expect(as_affine(g).is_identity() == g.is_identity(), cat("faithfulness at ", g));
  }
}

void isotropy_suite(SuiteReport& r, const VerifyOptions& o) {
  const std::vector<Line> lines = line_grid(o.max_denominator);
  const std::vector<GroupElement> elems = box(o.bound);
  for (const auto& l : lines) {
    const CyclicSubgroup iso = isotropy_group(l);
    for (const auto& g : elems) {
      const bool fixes = act_line(g, l) == l;
      r.expect(fixes == stabilizes(g, l), cat("stabilizes(", g, ",", l, ")"));
      r.expect(fixes == contains(iso, g), cat("isotropy ", iso, " of ", l, " vs ", g));
    }
  }
}

void i_complex(SuiteReport& r, const VerifyOptions& o) {
  const IComplexReport rep = verify_i_complex(o.bound);
  r.checks += rep.lines_checked + rep.subgroups_checked;
  for (const auto& c : rep.counterexamples) r.expect(false, c);
}

bool brute_commensurable(const CyclicSubgroup& s, const CyclicSubgroup& t, long bound) {
  for (long k = -bound; k <= bound; ++k) {
    if (k == 0) continue;
    const GroupElement a = pow(s.generator(), Integer(k));
    for (long l = -bound; l <= bound; ++l) {
      if (l != 0 && a == pow(t.generator(), Integer(l))) return true;
    }
  }
  return false;
}

std::vector<CyclicSubgroup> subgroups(long bound) {
  std::vector<CyclicSubgroup> out;
  for (const auto& g : box(bound)) {
    if (g.is_identity()) continue;
    const CyclicSubgroup s = canonicalize(g);
    if (s.generator() == g) out.push_back(s);
  }
  return out;
}

void classes(SuiteReport& r, const VerifyOptions& o) {
  const std::vector<CyclicSubgroup> subs = subgroups(o.bound);
  for (const auto& s : subs) {
    for (const auto& t : subs) {
      const bool c = commensurable(s, t);
      r.expect(c == brute_commensurable(s, t, 24), cat("commensurable(", s, ",", t, ")"));
      const bool same = comm_class(s) == comm_class(t) && maximal_r_subgroup(s) == maximal_r_subgroup(t);
      r.expect(c == same, cat("class of ", s, " vs ", t));
    }
    for (const auto& t : box(o.bound)) {
      const CyclicSubgroup c = conj_subgroup(t, s);
      r.expect(comm_class(c) == comm_class(s), cat("conjugation moves the class of ", s));
      if (auto root = maximal_r_subgroup(s)) {
        const GroupElement& g = root->generator();
        const GroupElement flipped = is_even(t.m) ? g : GroupElement(Integer(-g.n), g.m);
        r.expect(*maximal_r_subgroup(c) == canonicalize(flipped), cat("R-class permutation of ", s, " by ", t));
      }
    }
  }
}

void kn_action(SuiteReport& r, const VerifyOptions& o) {
  const std::vector<GroupElement> elems = box(o.bound);
  for (long n = -o.bound; n <= o.bound; ++n) {
    const Integer idx(n);
    const CyclicSubgroup kn = canonicalize({idx, Integer(1)});
    for (const auto& g : elems) {
      r.expect((act_on_kn(g, idx) == idx) == contains(kn, g), cat("stabilizer of k_", n, " at ", g));
      // g K_n g^{-1} = K_{g.n}
      r.expect(conj_subgroup(g, kn) == canonicalize({act_on_kn(g, idx), Integer(1)}), cat("k_n index at ", g));
      for (const auto& h : elems) {
        if (!(act_on_kn(mul(g, h), idx) == act_on_kn(g, act_on_kn(h, idx)))) {
          r.expect(false, cat("k_n action axiom at ", g, h, " n=", n));
        }
      }
    }
  }
}

void equivariance(SuiteReport& r, const VerifyOptions& o) {
  const std::vector<GroupElement> elems = box(o.bound);
  std::vector<PlanePoint> points;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) points.push_back({make_rational(a, 2), make_rational(b, 3)});
  }
  const std::vector<CyclicSubgroup> reps = r_orbit_representatives(3);
  for (const auto& g : elems) {
    for (const auto& x : points) {
      r.expect(map_p(act_point(g, x)) == model3b_action(g, map_p(x)), cat("map_p at ", g, x));
      for (const auto& rep : reps) {
        const MapFTransfer tr = map_f_transfer(rep, g);
        r.expect(map_f(rep, act_point(g, x)) == tr.offset + tr.sign * map_f(tr.target, x), cat("map_f at ", g, x));
        if (is_even(g.m)) {
          const Integer phi = map_f_phi(rep, g);
          r.expect(tr.offset == Rational(phi), cat("map_f shift at ", g));
          r.expect((phi == 0) == contains(rep, g), cat("kernel of phi at ", g));
        }
      }
    }
  }
}

void homology_suite(SuiteReport& r, const VerifyOptions& o) {
  const auto cap = static_cast<std::size_t>(std::max(1L, std::min(o.bound, 3L)));
  for (std::size_t n = 1; n <= cap; ++n) {
    const GradedGroups k = model_homology(n, HomologyMethod::Kunneth);
    r.expect(k == model_homology(n, HomologyMethod::Simplicial), cat("methods disagree at N=", n));
    r.expect(k.at(1).is_zero(), cat("H_1 nonzero at N=", n));
  }
  r.expect(circle_klein_product_homology(HomologyMethod::Kunneth) ==
               circle_klein_product_homology(HomologyMethod::Simplicial),
           "S1 x K methods disagree");
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.bound < 1) throw PreconditionError("bound must be at least 1");
  if (options.max_denominator < 1) throw PreconditionError("max denominator must be at least 1");
  SuiteReport r;
  r.suite = name;
  if (name == "group-law") group_law(r, options);
  else if (name == "representation") representation(r, options);
  else if (name == "isotropy") isotropy_suite(r, options);
  else if (name == "i-complex") i_complex(r, options);
  else if (name == "classes") classes(r, options);
  else if (name == "kn-action") kn_action(r, options);
  else if (name == "equivariance") equivariance(r, options);
  else if (name == "homology") homology_suite(r, options);
  else throw PreconditionError("unknown verify suite '" + name + "'");
  return r;
}

}  // namespace kleinvcy
