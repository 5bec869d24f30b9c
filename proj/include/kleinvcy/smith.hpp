#pragma once

// Integer matrices, Smith normal form, and homology of integer chain complexes.

#include <vector>

#include "kleinvcy/abelian.hpp"

namespace kleinvcy {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// a · b. Skips zero entries, so sparse boundary matrices multiply cheaply.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  /// Nonzero diagonal of the Smith normal form, positive, each dividing the next.
  std::vector<Integer> factors;
  std::size_t rank = 0;
};

/// Diagonalizes a copy of `m` by unimodular row and column operations,
/// always pivoting on the entry of least absolute value.
SmithForm smith_normal_form(IntMatrix m);

/// C_0 ← C_1 ← ... ← C_top. boundaries[k] is ∂_{k+1} : C_{k+1} → C_k,
/// a dims[k] × dims[k+1] matrix.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
};

/// Throws PreconditionError on shape mismatch or when ∂∘∂ ≠ 0.
void validate(const ChainComplex& c);

/// H_n = ker ∂_n / im ∂_{n+1}: rank dim C_n − rank ∂_n − rank ∂_{n+1},
/// torsion the invariant factors of ∂_{n+1} exceeding 1.
GradedGroups homology_of_chain(const ChainComplex& c);

}  // namespace kleinvcy
