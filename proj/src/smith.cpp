#include "kleinvcy/smith.hpp"

#include <string>
#include <utility>

namespace kleinvcy {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  std::vector<std::vector<std::size_t>> b_nonzero(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(k, j) != 0) b_nonzero[k].push_back(j);
    }
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j : b_nonzero[k]) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

namespace {

class Reducer {
 public:
  explicit Reducer(IntMatrix& m) : m_(m) {}

  // Least |entry| over the trailing submatrix starting at (t, t).
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    const Integer* best = nullptr;
    for (std::size_t i = t; i < m_.rows(); ++i) {
      for (std::size_t j = t; j < m_.cols(); ++j) {
        const Integer& v = m_(i, j);
        if (v == 0) continue;
        if (!best || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &v;
          pi = i;
          pj = j;
          if (*best == 1 || *best == -1) return true;
        }
      }
    }
    return best != nullptr;
  }

  // Least |entry| in row t or column t (from t on).
  void repivot_cross(std::size_t t) {
    std::size_t pi = t, pj = t;
    const Integer* best = m_(t, t) != 0 ? &m_(t, t) : nullptr;
    for (std::size_t i = t + 1; i < m_.rows(); ++i) {
      const Integer& v = m_(i, t);
      if (v != 0 && (!best || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0)) {
        best = &v;
        pi = i;
        pj = t;
      }
    }
    for (std::size_t j = t + 1; j < m_.cols(); ++j) {
      const Integer& v = m_(t, j);
      if (v != 0 && (!best || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0)) {
        best = &v;
        pi = t;
        pj = j;
      }
    }
    swap_rows(t, pi);
    swap_cols(t, pj);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m_.cols(); ++j) std::swap(m_(a, j), m_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m_.rows(); ++i) std::swap(m_(i, a), m_(i, b));
  }

  // Clears row and column t below/right of the pivot as far as division
  // allows. Returns true when both are zero.
  bool eliminate(std::size_t t) {
    bool clean = true;
    const Integer p = m_(t, t);
    std::vector<std::size_t> row_support;
    for (std::size_t j = t; j < m_.cols(); ++j) {
      if (m_(t, j) != 0) row_support.push_back(j);
    }
    Integer q;
    for (std::size_t i = t + 1; i < m_.rows(); ++i) {
      if (m_(i, t) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), m_(i, t).get_mpz_t(), p.get_mpz_t());
      if (q != 0) {
        for (std::size_t j : row_support) m_(i, j) -= q * m_(t, j);
      }
      if (m_(i, t) != 0) clean = false;
    }
    std::vector<std::size_t> col_support;
    for (std::size_t i = t; i < m_.rows(); ++i) {
      if (m_(i, t) != 0) col_support.push_back(i);
    }
    for (std::size_t j = t + 1; j < m_.cols(); ++j) {
      if (m_(t, j) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), m_(t, j).get_mpz_t(), p.get_mpz_t());
      if (q != 0) {
        for (std::size_t i : col_support) m_(i, j) -= q * m_(i, t);
      }
      if (m_(t, j) != 0) clean = false;
    }
    return clean;
  }

 private:
  IntMatrix& m_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  Reducer red(m);
  std::vector<Integer> diagonal;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!red.find_pivot(t, pi, pj)) break;
    red.swap_rows(t, pi);
    red.swap_cols(t, pj);
    while (!red.eliminate(t)) red.repivot_cross(t);
    diagonal.push_back(abs_int(m(t, t)));
  }
  // A diagonal matrix has the invariant factors of its entries.
  SmithForm out;
  out.rank = diagonal.size();
  AbelianGroup g = AbelianGroup::from_cyclic(0, diagonal);
  const std::size_t units = out.rank - g.torsion().size();
  out.factors.assign(units, Integer(1));
  out.factors.insert(out.factors.end(), g.torsion().begin(), g.torsion().end());
  return out;
}

void validate(const ChainComplex& c) {
  if (c.dims.size() != c.boundaries.size() + 1) {
    throw PreconditionError("chain complex needs one more group than boundary maps");
  }
  for (std::size_t k = 0; k < c.boundaries.size(); ++k) {
    const IntMatrix& d = c.boundaries[k];
    if (d.rows() != c.dims[k] || d.cols() != c.dims[k + 1]) {
      throw PreconditionError("boundary map " + std::to_string(k + 1) + " has the wrong shape");
    }
  }
  for (std::size_t k = 0; k + 1 < c.boundaries.size(); ++k) {
    if (!multiply(c.boundaries[k], c.boundaries[k + 1]).is_zero()) {
      throw PreconditionError("boundary maps " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                              " do not compose to zero");
    }
  }
}

GradedGroups homology_of_chain(const ChainComplex& c) {
  validate(c);
  std::vector<SmithForm> forms;
  forms.reserve(c.boundaries.size());
  for (const auto& d : c.boundaries) forms.push_back(smith_normal_form(d));
  GradedGroups h;
  for (std::size_t n = 0; n < c.dims.size(); ++n) {
    const std::size_t rank_out = n == 0 ? 0 : forms[n - 1].rank;  // rank ∂_n
    const std::size_t rank_in = n < forms.size() ? forms[n].rank : 0;  // rank ∂_{n+1}
    std::vector<Integer> torsion;
    if (n < forms.size()) torsion = forms[n].factors;
    h.set(n, AbelianGroup::from_cyclic(c.dims[n] - rank_out - rank_in, std::move(torsion)));
  }
  return h;
}

}  // namespace kleinvcy
