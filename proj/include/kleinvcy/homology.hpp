#pragma once

// Künneth formulas for products and joins, and the homology of the quotient
// model (⊔_N S¹) * K, truncated to N circles.

#include <vector>

#include "kleinvcy/abelian.hpp"
#include "kleinvcy/simplicial.hpp"

namespace kleinvcy {

/// H(S¹) = (Z, Z).
GradedGroups circle_homology();
/// H(K) = (Z, Z ⊕ Z_2, 0).
GradedGroups klein_homology();
/// Homology of N disjoint copies of a space.
GradedGroups disjoint_copies(const GradedGroups& h, std::size_t n);

/// H_n(X × Y) = ⊕_{i+j=n} H_i X ⊗ H_j Y ⊕ ⊕_{i+j=n-1} Tor(H_i X, H_j Y).
/// Unreduced inputs and output.
GradedGroups kunneth_product(const GradedGroups& hx, const GradedGroups& hy);

/// H̃_{n+1}(X * Y) = ⊕_{i+j=n} H̃_i X ⊗ H̃_j Y ⊕ ⊕_{i+j=n-1} Tor(H̃_i X, H̃_j Y).
/// Reduced inputs and output.
GradedGroups kunneth_join(const GradedGroups& hx_reduced, const GradedGroups& hy_reduced);

/// One degree of the join exact sequence
///   0 → H̃_{n+1}(X*Y) → H̃_n(X×Y) → H̃_n X ⊕ H̃_n Y → 0.
struct SesRow {
  std::size_t degree = 0;  // n
  AbelianGroup join_next;  // H̃_{n+1}(X*Y)
  AbelianGroup product;    // H̃_n(X×Y)
  AbelianGroup sum;        // H̃_n X ⊕ H̃_n Y
  /// rank H̃_{n+1}(X*Y) = rank H̃_n(X×Y) − rank(H̃_n X ⊕ H̃_n Y).
  bool rank_ok = false;
  /// The sequence splits on elementary divisors: those of H̃_n(X×Y) are the
  /// disjoint union of those of the two outer terms.
  bool torsion_ok = false;
};

/// Checks every degree 0 ≤ n < max_degree from independently obtained groups
/// (all reduced).
std::vector<SesRow> join_ses_bookkeeping(const GradedGroups& join_red, const GradedGroups& product_red,
                                         const GradedGroups& x_red, const GradedGroups& y_red,
                                         std::size_t max_degree);

/// Same, with the product and join computed by the Künneth formulas.
std::vector<SesRow> join_ses_bookkeeping(const GradedGroups& x_red, const GradedGroups& y_red);

enum class HomologyMethod { Kunneth, Simplicial };

/// Largest N accepted by the simplicial method by default.
inline constexpr std::size_t kDefaultSimplicialCap = 6;

/// Unreduced homology of (⊔_N S¹) * K. The simplicial method builds the join
/// complex and throws PreconditionError when N exceeds `simplicial_cap`.
GradedGroups model_homology(std::size_t n, HomologyMethod method,
                            std::size_t simplicial_cap = kDefaultSimplicialCap);

/// Unreduced homology of S¹ × K by either method.
GradedGroups circle_klein_product_homology(HomologyMethod method);

}  // namespace kleinvcy
