#pragma once

// Finitely generated abelian groups in invariant-factor form and graded
// sequences of them.

#include <iosfwd>
#include <string>
#include <vector>

#include "kleinvcy/numeric.hpp"

namespace kleinvcy {

/// Z^rank ⊕ Z_{d1} ⊕ ... ⊕ Z_{dk} with d1 | d2 | ... | dk, every di ≥ 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Accepts arbitrary cyclic orders: 0 adds a free summand, ±1 is dropped,
  /// and the rest is renormalized to invariant factors.
  static AbelianGroup from_cyclic(std::size_t rank, std::vector<Integer> orders);
  static AbelianGroup free(std::size_t rank) { return from_cyclic(rank, {}); }
  static AbelianGroup cyclic(const Integer& order) { return from_cyclic(0, {order}); }
  static AbelianGroup zero() { return {}; }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
inline AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) { return direct_sum(a, b); }

/// A^k = A ⊕ ... ⊕ A.
AbelianGroup power(const AbelianGroup& a, std::size_t k);

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);

/// Prime-power orders of the torsion part, sorted. Factorization is by
/// trial division, so intended for the small torsion met in practice.
std::vector<Integer> elementary_divisors(const AbelianGroup& a);

/// "0", "Z", "Z^3", "Z_2", "Z^2 + Z_2^3 + Z_6".
std::string to_string(const AbelianGroup& a);
std::ostream& operator<<(std::ostream& os, const AbelianGroup& a);

/// Homology groups by degree. Degrees past the end are zero.
struct GradedGroups {
  std::vector<AbelianGroup> groups;
  bool reduced = false;

  const AbelianGroup& at(std::size_t degree) const;
  void set(std::size_t degree, AbelianGroup g);
  /// Highest nonzero degree + 1.
  std::size_t length() const;

  friend bool operator==(const GradedGroups& a, const GradedGroups& b);
};

/// Drops one free summand from degree 0. Requires an unreduced, nonempty input.
GradedGroups to_reduced(const GradedGroups& h);
/// Adds one free summand in degree 0.
GradedGroups to_unreduced(const GradedGroups& h);

/// "H_0 = Z, H_1 = 0, H_2 = Z + Z_2" up to the highest nonzero degree.
std::string to_string(const GradedGroups& h);
std::ostream& operator<<(std::ostream& os, const GradedGroups& h);

}  // namespace kleinvcy
