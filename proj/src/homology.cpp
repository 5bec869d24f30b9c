#include "kleinvcy/homology.hpp"

#include <algorithm>

namespace kleinvcy {

GradedGroups circle_homology() { return {{AbelianGroup::free(1), AbelianGroup::free(1)}, false}; }

GradedGroups klein_homology() {
  return {{AbelianGroup::free(1), AbelianGroup::from_cyclic(1, {Integer(2)}), AbelianGroup::zero()}, false};
}

GradedGroups disjoint_copies(const GradedGroups& h, std::size_t n) {
  GradedGroups out;
  out.reduced = false;
  const GradedGroups base = to_unreduced(h);
  for (std::size_t d = 0; d < base.length(); ++d) out.set(d, power(base.at(d), n));
  return h.reduced ? to_reduced(out) : out;
}

namespace {

GradedGroups kunneth_sum(const GradedGroups& hx, const GradedGroups& hy, std::size_t shift) {
  GradedGroups out;
  const std::size_t lx = hx.length();
  const std::size_t ly = hy.length();
  for (std::size_t i = 0; i < lx; ++i) {
    for (std::size_t j = 0; j < ly; ++j) {
      const std::size_t n = i + j + shift;
      out.set(n, direct_sum(out.at(n), tensor(hx.at(i), hy.at(j))));
      out.set(n + 1, direct_sum(out.at(n + 1), tor(hx.at(i), hy.at(j))));
    }
  }
  return out;
}

}  // namespace

GradedGroups kunneth_product(const GradedGroups& hx, const GradedGroups& hy) {
  if (hx.reduced || hy.reduced) throw PreconditionError("kunneth_product expects unreduced homology");
  GradedGroups out = kunneth_sum(hx, hy, 0);
  out.reduced = false;
  return out;
}

GradedGroups kunneth_join(const GradedGroups& hx_reduced, const GradedGroups& hy_reduced) {
  if (!hx_reduced.reduced || !hy_reduced.reduced) throw PreconditionError("kunneth_join expects reduced homology");
  GradedGroups out = kunneth_sum(hx_reduced, hy_reduced, 1);
  out.reduced = true;
  return out;
}

std::vector<SesRow> join_ses_bookkeeping(const GradedGroups& join_red, const GradedGroups& product_red,
                                         const GradedGroups& x_red, const GradedGroups& y_red,
                                         std::size_t max_degree) {
  std::vector<SesRow> rows;
  for (std::size_t n = 0; n < max_degree; ++n) {
    SesRow row;
    row.degree = n;
    row.join_next = join_red.at(n + 1);
    row.product = product_red.at(n);
    row.sum = direct_sum(x_red.at(n), y_red.at(n));
    row.rank_ok = row.join_next.rank() + row.sum.rank() == row.product.rank();
    std::vector<Integer> outer = elementary_divisors(row.join_next);
    const std::vector<Integer> s = elementary_divisors(row.sum);
    outer.insert(outer.end(), s.begin(), s.end());
    std::sort(outer.begin(), outer.end());
    row.torsion_ok = outer == elementary_divisors(row.product);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SesRow> join_ses_bookkeeping(const GradedGroups& x_red, const GradedGroups& y_red) {
  const GradedGroups product = to_reduced(kunneth_product(to_unreduced(x_red), to_unreduced(y_red)));
  const GradedGroups joined = kunneth_join(x_red, y_red);
  const std::size_t top = std::max({product.length(), joined.length(), x_red.length(), y_red.length()});
  return join_ses_bookkeeping(joined, product, x_red, y_red, top);
}

GradedGroups model_homology(std::size_t n, HomologyMethod method, std::size_t simplicial_cap) {
  if (n < 1) throw PreconditionError("need at least one circle");
  if (method == HomologyMethod::Kunneth) {
    const GradedGroups circles = to_reduced(disjoint_copies(circle_homology(), n));
    return to_unreduced(kunneth_join(circles, to_reduced(klein_homology())));
  }
  if (n > simplicial_cap) {
    throw PreconditionError("simplicial method is capped at " + std::to_string(simplicial_cap) + " circles");
  }
  return simplicial_homology(join(disjoint_circles(n), klein_complex()));
}

GradedGroups circle_klein_product_homology(HomologyMethod method) {
  if (method == HomologyMethod::Kunneth) return kunneth_product(circle_homology(), klein_homology());
  return simplicial_homology(ordered_product(circle_complex(), klein_complex()));
}

}  // namespace kleinvcy
