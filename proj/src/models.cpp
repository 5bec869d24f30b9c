#include "kleinvcy/models.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kleinvcy {

Integer act_on_kn(const GroupElement& g, const Integer& n) {
  Integer base = is_even(g.m) ? n : Integer(-n);
  return base + 2 * g.n;
}

Rational map_p(const PlanePoint& x) { return x.r; }

Rational model3b_action(const GroupElement& g, const Rational& x) { return Rational(g.m) + x; }

void require_reduced_r(const CyclicSubgroup& rep) {
  const GroupElement& g = rep.generator();
  if (g.n == 0 || g.m == 0 || is_odd(g.m) || gcd_abs(g.n, Integer(g.m / 2)) != 1) {
    throw PreconditionError("expected a reduced generator (n,2m) with n, m nonzero and gcd(n,m) = 1");
  }
}

Rational map_f(const CyclicSubgroup& rep, const PlanePoint& x) {
  require_reduced_r(rep);
  const GroupElement& g = rep.generator();
  return Rational(g.m * x.t - g.n * x.r) / 2;
}

Integer map_f_phi(const CyclicSubgroup& rep, const GroupElement& g) {
  require_reduced_r(rep);
  if (is_odd(g.m)) throw PreconditionError("element is outside the commensurator {(t1,2t2)}");
  const GroupElement& r = rep.generator();
  return Integer(r.m / 2 * g.n - r.n * (g.m / 2));
}

MapFTransfer map_f_transfer(const CyclicSubgroup& rep, const GroupElement& g) {
  require_reduced_r(rep);
  const GroupElement& r = rep.generator();
  Rational offset = Rational(r.m * g.n - r.n * g.m) / 2;
  if (is_even(g.m)) return {std::move(offset), 1, rep};
  return {std::move(offset), -1, CyclicSubgroup::generated_by({Integer(-r.n), r.m})};
}

std::vector<CyclicSubgroup> r_orbit_representatives(long bound) {
  std::vector<CyclicSubgroup> reps;
  for (long n = 1; n <= bound; ++n) {
    for (long m = 1; m <= bound; ++m) {
      if (std::gcd(n, m) == 1) reps.push_back(CyclicSubgroup::generated_by({n, 2 * m}));
    }
  }
  return reps;
}

std::string to_string(ModelKind k) { return k == ModelKind::JoinModel ? "JoinModel" : "PushoutModel"; }

std::string to_string(PieceKind k) {
  switch (k) {
    case PieceKind::BasePlane: return "BasePlane";
    case PieceKind::SlopeFamily: return "SlopeFamily";
    case PieceKind::HLine: return "HLine";
    case PieceKind::KJoin: return "KJoin";
    case PieceKind::RLine: return "RLine";
  }
  return "?";
}

std::size_t ModelDescriptor::count(PieceKind k) const {
  return static_cast<std::size_t>(
      std::count_if(pieces.begin(), pieces.end(), [k](const ModelPiece& p) { return p.kind == k; }));
}

namespace {

std::string element_text(const GroupElement& g) { return "(" + to_string(g.n) + "," + to_string(g.m) + ")"; }

}  // namespace

ModelDescriptor pushout_report(long orbit_bound) {
  if (orbit_bound < 1) throw PreconditionError("orbit bound must be at least 1");
  ModelDescriptor d;
  d.kind = ModelKind::PushoutModel;
  d.pieces.push_back({"E", PieceKind::BasePlane, "R^2", "(n,m)(t,r) = (n+(-1)^m t, m+r)",
                      "identity", std::nullopt, SubgroupDescriptor::WholeGroup, SubgroupFamily::trivial()});

  const CommClass h = CommClass::h();
  d.pieces.push_back({"H", PieceKind::HLine, "R", "(t1,t2) x = t2 + x", "p(t,r) = r", h, commensurator(h),
                      class_family(h)});

  const CommClass k = CommClass::k();
  d.pieces.push_back({"K", PieceKind::KJoin, "{k_n} * R^2", "(t1,t2) k_n = k_{(-1)^t2 n + 2 t1}",
                      "inclusion R^2 -> {k_n} * R^2", k, commensurator(k), class_family(k)});

  for (const CyclicSubgroup& rep : r_orbit_representatives(orbit_bound)) {
    const CommClass c = r_class(rep);
    const GroupElement& g = rep.generator();
    const std::string gen = element_text(g);
    d.pieces.push_back({"R" + gen, PieceKind::RLine, "G x_A R",
                        "A = {(t1,2t2)} acts by x -> phi(t1,2t2) + x, phi = " + to_string(Integer(g.m / 2)) +
                            " t1 - " + to_string(g.n) + " t2",
                        "f(t,r) = (" + to_string(g.m) + " t - " + to_string(g.n) + " r)/2", c, commensurator(c),
                        class_family(c)});
  }
  d.identification = "for all x in R^2: p(x) ~ g(x) ~ [1_G, f_R(x)] for every R-piece";
  return d;
}

ModelDescriptor join_model_report(long slope_bound) {
  if (slope_bound < 1) throw PreconditionError("slope bound must be at least 1");
  ModelDescriptor d;
  d.kind = ModelKind::JoinModel;
  d.pieces.push_back({"E", PieceKind::BasePlane, "R^2", "(n,m)(t,r) = (n+(-1)^m t, m+r)", "join factor",
                      std::nullopt, SubgroupDescriptor::WholeGroup, SubgroupFamily::trivial()});
  std::set<Rational> slopes;
  for (long q = 1; q <= slope_bound; ++q) {
    for (long p = -slope_bound; p <= slope_bound; ++p) slopes.insert(make_rational(p, q));
  }
  for (const Rational& a : slopes) {
    d.pieces.push_back({"R_" + to_string(a), PieceKind::SlopeFamily, "R", "(n,m) l(a,b) = l((-1)^m a, b+m-(-1)^m a n)",
                        "join factor", std::nullopt, std::nullopt, std::nullopt});
  }
  d.pieces.push_back({"R_inf", PieceKind::SlopeFamily, "R", "(n,m) l(inf,b) = l(inf, n+(-1)^m b)", "join factor",
                      std::nullopt, std::nullopt, std::nullopt});
  d.identification = "join R^2 * (disjoint union over a in Q u {inf} of R_a)";
  return d;
}

}  // namespace kleinvcy
