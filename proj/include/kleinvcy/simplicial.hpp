#pragma once

// Finite abstract simplicial complexes with labeled vertices, the named
// triangulations used as homology oracles, and the join and ordered-product
// constructions.

#include <string>
#include <vector>

#include "kleinvcy/smith.hpp"

namespace kleinvcy {

class SimplicialComplex {
 public:
  /// Sorted vertex ids.
  using Simplex = std::vector<std::size_t>;

  SimplicialComplex() = default;

  /// Closes `facets` under taking faces. Vertex ids index into `labels`.
  static SimplicialComplex from_facets(std::vector<std::string> labels, const std::vector<Simplex>& facets);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Simplices of one dimension, lexicographically sorted.
  const std::vector<Simplex>& simplices(std::size_t dim) const;
  std::vector<Simplex> facets() const;
  std::size_t simplex_count() const;

  long euler_characteristic() const;

  /// Simplicial chains oriented by increasing vertex id.
  ChainComplex chain_complex() const;

  /// Pure 2-dimensional, every edge in exactly two triangles, and every
  /// vertex link a single cycle.
  bool is_closed_surface() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
};

SimplicialComplex point_complex();
/// The boundary of a k-gon, k ≥ 3.
SimplicialComplex circle_complex(std::size_t k = 3);
/// Nine-vertex Klein bottle: a 3×3 grid with the top and bottom edges glued
/// directly and the left and right edges glued with a flip.
SimplicialComplex klein_complex();
/// N disjoint 3-cycles.
SimplicialComplex disjoint_circles(std::size_t n);

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y);

/// Simplices σ ∪ τ with σ ∈ X ∪ {∅}, τ ∈ Y ∪ {∅}, not both empty. Vertex
/// labels are prefixed "x:" and "y:" to keep the two sides apart.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

/// Staircase triangulation of |X| × |Y| using the vertex-id orders:
/// simplices are chains (x0,y0) < ... < (xk,yk), weakly increasing in both
/// coordinates, with {xi} ∈ X and {yi} ∈ Y.
SimplicialComplex ordered_product(const SimplicialComplex& x, const SimplicialComplex& y);

/// Unreduced integral homology.
GradedGroups simplicial_homology(const SimplicialComplex& k);

}  // namespace kleinvcy
