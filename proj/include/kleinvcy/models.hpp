#pragma once

// Symbolic descriptions of the two models of the classifying space for
// virtually cyclic subgroups of Z⋊Z, and the maps used to glue the pushout
// model together.
//
// Pushout pieces:
//   H  R with (t1, t2) x = t2 + x                      (model for VCY(<(1,0)>))
//   K  {k_n} * R^2 with g k_n = k_{(-1)^t2 n + 2 t1}  (model for G[K])
//   R  G ×_A R with A = {(t1, 2 t2)} acting through A/R ≅ Z, one per orbit rep
// glued to E(G) = R^2 along p (projection to y), the inclusion R^2 → {k_n} * R^2,
// and the quotients f_R : R^2 → R along the line through the generator of R.

#include <string>
#include <vector>

#include "kleinvcy/group.hpp"
#include "kleinvcy/subgroups.hpp"

namespace kleinvcy {

/// Index of g · k_n, i.e. g K_n g^{-1} = K_m with K_n = <(n, 1)>.
Integer act_on_kn(const GroupElement& g, const Integer& n);

/// Projection of the plane onto the y-axis.
Rational map_p(const PlanePoint& x);

/// The action on R used by the H-piece: (t1, t2) x = t2 + x.
Rational model3b_action(const GroupElement& g, const Rational& x);

/// Throws PreconditionError unless `rep` is <(n, 2m)> with n, m ≠ 0 and
/// gcd(n, m) = 1 (either sign of n).
void require_reduced_r(const CyclicSubgroup& rep);

/// Quotient of the plane by the line through rep's generator (n, 2m):
/// (t, r) ↦ (2m t − n r) / 2. The scale makes the translation action of the
/// commensurator descend to A/R ≅ Z with unit steps.
Rational map_f(const CyclicSubgroup& rep, const PlanePoint& x);

/// φ : {(t1, 2 t2)} → Z with kernel rep, φ(t1, 2 t2) = m t1 − n t2.
/// Throws PreconditionError when g is outside the commensurator.
Integer map_f_phi(const CyclicSubgroup& rep, const GroupElement& g);

/// map_f(rep, g x) = offset + sign · map_f(target, x) for every x.
/// For g in the commensurator: offset = φ(g), sign = +1, target = rep.
/// For odd g.m: sign = −1 and target = <(−n, 2m)>, the conjugate piece.
struct MapFTransfer {
  Rational offset;
  int sign = 1;
  CyclicSubgroup target;
};

MapFTransfer map_f_transfer(const CyclicSubgroup& rep, const GroupElement& g);

/// Orbit representatives <(n, 2m)>, 1 ≤ n, m ≤ bound, gcd(n, m) = 1, in
/// lexicographic order of (n, m).
std::vector<CyclicSubgroup> r_orbit_representatives(long bound);

enum class ModelKind { JoinModel, PushoutModel };
enum class PieceKind { BasePlane, SlopeFamily, HLine, KJoin, RLine };

std::string to_string(ModelKind k);
std::string to_string(PieceKind k);

struct ModelPiece {
  std::string label;
  PieceKind kind = PieceKind::BasePlane;
  std::string space;
  std::string action;
  std::string attaching_map;
  std::optional<CommClass> cls;
  std::optional<SubgroupDescriptor> commensurator;
  std::optional<SubgroupFamily> family;
};

struct ModelDescriptor {
  ModelKind kind = ModelKind::PushoutModel;
  std::vector<ModelPiece> pieces;
  std::string identification;

  std::size_t count(PieceKind k) const;
};

/// The pushout model with R-pieces for every orbit representative within
/// `orbit_bound` (see r_orbit_representatives).
ModelDescriptor pushout_report(long orbit_bound);

/// The join model R^2 * (disjoint union of R_a); lists the slope components
/// a = p/q with |p|, q ≤ slope_bound and the vertical component.
ModelDescriptor join_model_report(long slope_bound);

}  // namespace kleinvcy
