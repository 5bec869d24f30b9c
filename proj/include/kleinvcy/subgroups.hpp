#pragma once

// Infinite cyclic subgroups of Z⋊Z, commensurability classes and the
// families attached to them.
//
// Every nontrivial virtually cyclic subgroup is infinite cyclic, and falls
// in exactly one commensurability class:
//   H  the class of <(1,0)>,          generators (n, 0);
//   K  the class of <(0,2)>,          generators (n, odd) and (0, even);
//   R  one class per maximal <(n,2m)>, n, m != 0, gcd(n, m) = 1.
// Conjugation fixes H and K and swaps <(n,2m)> with <(-n,2m)>.

#include <iosfwd>
#include <optional>
#include <string>

#include "kleinvcy/group.hpp"

namespace kleinvcy {

class CyclicSubgroup {
 public:
  /// The canonical generator of <g>: m > 0, or m = 0 and n > 0.
  /// Throws PreconditionError for the identity.
  static CyclicSubgroup generated_by(const GroupElement& g);

  const GroupElement& generator() const { return gen_; }

  friend bool operator==(const CyclicSubgroup& a, const CyclicSubgroup& b) {
    return a.gen_ == b.gen_;
  }

 private:
  explicit CyclicSubgroup(GroupElement g) : gen_(std::move(g)) {}
  GroupElement gen_;
};

std::ostream& operator<<(std::ostream& os, const CyclicSubgroup& s);

inline CyclicSubgroup canonicalize(const GroupElement& g) { return CyclicSubgroup::generated_by(g); }

/// g ∈ S, solved exactly from the power closed forms.
bool contains(const CyclicSubgroup& s, const GroupElement& g);

/// |S ∩ T| = ∞.
bool commensurable(const CyclicSubgroup& s, const CyclicSubgroup& t);

enum class ClassTag { H, K, R };

std::string to_string(ClassTag tag);

struct CommClass {
  ClassTag tag = ClassTag::H;
  /// Only for tag R: the maximal subgroup of the class, chosen in its
  /// conjugation orbit with rep.n > 0 (so rep = <(n, 2m)>, n, m > 0, coprime).
  std::optional<CyclicSubgroup> rep;

  static CommClass h() { return {ClassTag::H, std::nullopt}; }
  static CommClass k() { return {ClassTag::K, std::nullopt}; }

  friend bool operator==(const CommClass& a, const CommClass& b) {
    return a.tag == b.tag && a.rep == b.rep;
  }
};

std::ostream& operator<<(std::ostream& os, const CommClass& c);

/// Which of H, K, R the subgroup belongs to.
ClassTag class_tag(const CyclicSubgroup& s);

/// Orbit-level class of S (constant on conjugation orbits).
CommClass comm_class(const CyclicSubgroup& s);

/// For tag R, the maximal infinite cyclic subgroup <(n/s, 2m/s)> containing
/// S, without the orbit sign normalization. Empty for tags H and K.
std::optional<CyclicSubgroup> maximal_r_subgroup(const CyclicSubgroup& s);

/// Builds the tag-R class whose orbit contains <(n, 2m)>.
/// Throws PreconditionError unless the input has tag R.
CommClass r_class(const CyclicSubgroup& s);

enum class SubgroupDescriptor { WholeGroup, EvenVertical };

std::string to_string(SubgroupDescriptor d);
bool descriptor_contains(SubgroupDescriptor d, const GroupElement& g);

/// The commensurator N[c]: the whole group for H and K, {(t1, 2 t2)} for R.
SubgroupDescriptor commensurator(const CommClass& c);

class SubgroupFamily {
 public:
  enum class Kind { VcyOf, GOfK, Trivial, All };

  /// Infinite cyclic subgroups of `c`, plus the trivial group.
  static SubgroupFamily vcy_of(const CyclicSubgroup& c) { return {Kind::VcyOf, c}; }
  static SubgroupFamily g_of_k() { return {Kind::GOfK, std::nullopt}; }
  static SubgroupFamily trivial() { return {Kind::Trivial, std::nullopt}; }
  static SubgroupFamily all() { return {Kind::All, std::nullopt}; }

  Kind kind() const { return kind_; }
  const std::optional<CyclicSubgroup>& ambient() const { return ambient_; }

  bool contains(const CyclicSubgroup& s) const;
  /// Every family contains the trivial subgroup.
  bool contains_trivial() const { return true; }

  friend bool operator==(const SubgroupFamily& a, const SubgroupFamily& b) {
    return a.kind_ == b.kind_ && a.ambient_ == b.ambient_;
  }

 private:
  SubgroupFamily(Kind kind, std::optional<CyclicSubgroup> ambient)
      : kind_(kind), ambient_(std::move(ambient)) {}
  Kind kind_;
  std::optional<CyclicSubgroup> ambient_;
};

std::string to_string(SubgroupFamily::Kind k);

/// G[c]: VCY(<(1,0)>) for H, VCY(rep) for R, and for K every subgroup
/// commensurable with <(0,2)>.
SubgroupFamily class_family(const CommClass& c);

inline bool family_contains(const SubgroupFamily& f, const CyclicSubgroup& s) { return f.contains(s); }

/// canonicalize(t · S.gen · t^{-1}).
CyclicSubgroup conj_subgroup(const GroupElement& t, const CyclicSubgroup& s);

}  // namespace kleinvcy
