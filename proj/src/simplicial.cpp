#include "kleinvcy/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kleinvcy {

namespace {

// The Klein bottle triangulation: cells of a 3×3 grid on vertices 3x + y,
// with (3, y) identified to (0, -y mod 3).
const std::vector<SimplicialComplex::Simplex> kKleinTriangles = {
    {0, 1, 4}, {0, 1, 8}, {0, 2, 3}, {0, 2, 6}, {0, 3, 4}, {0, 6, 8}, {1, 2, 5}, {1, 2, 7}, {1, 4, 5},
    {1, 7, 8}, {2, 3, 5}, {2, 6, 7}, {3, 4, 7}, {3, 5, 6}, {3, 6, 7}, {4, 5, 8}, {4, 7, 8}, {5, 6, 8},
};

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels, const std::vector<Simplex>& facets) {
  std::vector<std::set<Simplex>> acc;
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw PreconditionError("repeated vertex in simplex");
    if (f.empty()) continue;
    if (f.back() >= labels.size()) throw PreconditionError("simplex uses an unlabeled vertex");
    const std::size_t k = f.size();
    if (acc.size() < k) acc.resize(k);
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1UL << i)) face.push_back(f[i]);
      }
      acc[face.size() - 1].insert(std::move(face));
    }
  }
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  for (auto& s : acc) c.by_dim_.emplace_back(s.begin(), s.end());
  return c;
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(std::size_t dim) const {
  static const std::vector<Simplex> kNone;
  return dim < by_dim_.size() ? by_dim_[dim] : kNone;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    std::set<Simplex> covered;
    if (d + 1 < by_dim_.size()) {
      for (const auto& s : by_dim_[d + 1]) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<long>(i));
          covered.insert(std::move(face));
        }
      }
    }
    for (const auto& s : by_dim_[d]) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  return out;
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& s : by_dim_) n += s.size();
  return n;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim_[d].size());
  }
  return chi;
}

ChainComplex SimplicialComplex::chain_complex() const {
  ChainComplex c;
  if (by_dim_.empty()) {
    c.dims.push_back(0);
    return c;
  }
  for (const auto& s : by_dim_) c.dims.push_back(s.size());
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < by_dim_[d - 1].size(); ++i) index.emplace(by_dim_[d - 1][i], i);
    IntMatrix m(by_dim_[d - 1].size(), by_dim_[d].size());
    for (std::size_t j = 0; j < by_dim_[d].size(); ++j) {
      const Simplex& s = by_dim_[d][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        m(index.at(face), j) = (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

bool SimplicialComplex::is_closed_surface() const {
  if (dimension() != 2) return false;
  for (const auto& f : facets()) {
    if (f.size() != 3) return false;
  }
  std::map<Simplex, int> edge_use;
  for (const auto& t : by_dim_[2]) {
    edge_use[{t[0], t[1]}]++;
    edge_use[{t[0], t[2]}]++;
    edge_use[{t[1], t[2]}]++;
  }
  for (const auto& e : by_dim_[1]) {
    auto it = edge_use.find(e);
    if (it == edge_use.end() || it->second != 2) return false;
  }
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    // The link of v is a graph on its neighbours; it must be one cycle.
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (const auto& t : by_dim_[2]) {
      if (std::find(t.begin(), t.end(), v) == t.end()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t u : t) {
        if (u != v) rest.push_back(u);
      }
      adj[rest[0]].push_back(rest[1]);
      adj[rest[1]].push_back(rest[0]);
    }
    if (adj.size() < 3) return false;
    for (const auto& [u, nbrs] : adj) {
      if (nbrs.size() != 2) return false;
    }
    std::set<std::size_t> seen{adj.begin()->first};
    std::vector<std::size_t> stack{adj.begin()->first};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != adj.size()) return false;
  }
  return true;
}

SimplicialComplex point_complex() { return SimplicialComplex::from_facets({"p"}, {{0}}); }

SimplicialComplex circle_complex(std::size_t k) {
  if (k < 3) throw PreconditionError("a simplicial circle needs at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<SimplicialComplex::Simplex> edges;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("c" + std::to_string(i));
    edges.push_back({i, (i + 1) % k});
  }
  return SimplicialComplex::from_facets(std::move(labels), edges);
}

SimplicialComplex klein_complex() {
  std::vector<std::string> labels;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) labels.push_back("k" + std::to_string(x) + std::to_string(y));
  }
  return SimplicialComplex::from_facets(std::move(labels), kKleinTriangles);
}

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<std::string> labels = x.labels();
  labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  std::vector<SimplicialComplex::Simplex> facets = x.facets();
  for (auto f : y.facets()) {
    for (auto& v : f) v += x.vertex_count();
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

SimplicialComplex disjoint_circles(std::size_t n) {
  if (n < 1) throw PreconditionError("need at least one circle");
  std::vector<std::string> labels;
  std::vector<SimplicialComplex::Simplex> edges;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t base = 3 * c;
    for (std::size_t i = 0; i < 3; ++i) {
      labels.push_back("s" + std::to_string(c) + "_" + std::to_string(i));
      edges.push_back({base + i, base + (i + 1) % 3});
    }
  }
  return SimplicialComplex::from_facets(std::move(labels), edges);
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<std::string> labels;
  for (const auto& l : x.labels()) labels.push_back("x:" + l);
  for (const auto& l : y.labels()) labels.push_back("y:" + l);
  const std::size_t shift = x.vertex_count();
  std::vector<SimplicialComplex::Simplex> fx = x.facets();
  std::vector<SimplicialComplex::Simplex> fy = y.facets();
  for (auto& f : fy) {
    for (auto& v : f) v += shift;
  }
  std::vector<SimplicialComplex::Simplex> facets;
  if (fx.empty()) facets = fy;
  else if (fy.empty()) facets = fx;
  for (const auto& a : fx) {
    for (const auto& b : fy) {
      SimplicialComplex::Simplex s = a;
      s.insert(s.end(), b.begin(), b.end());
      facets.push_back(std::move(s));
    }
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

SimplicialComplex ordered_product(const SimplicialComplex& x, const SimplicialComplex& y) {
  const std::size_t ny = y.vertex_count();
  std::vector<std::string> labels;
  for (const auto& a : x.labels()) {
    for (const auto& b : y.labels()) labels.push_back("(" + a + "," + b + ")");
  }
  std::vector<SimplicialComplex::Simplex> facets;
  for (const auto& s : x.facets()) {
    for (const auto& t : y.facets()) {
      // Each monotone lattice path from (0,0) to (p,q) is one top simplex.
      const std::size_t p = s.size() - 1;
      const std::size_t q = t.size() - 1;
      std::vector<bool> steps(p + q, false);
      std::fill(steps.begin() + static_cast<long>(p), steps.end(), true);
      do {
        std::size_t i = 0, j = 0;
        SimplicialComplex::Simplex simplex{s[0] * ny + t[0]};
        for (bool up : steps) {
          if (up) ++j;
          else ++i;
          simplex.push_back(s[i] * ny + t[j]);
        }
        facets.push_back(std::move(simplex));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

GradedGroups simplicial_homology(const SimplicialComplex& k) { return homology_of_chain(k.chain_complex()); }

}  // namespace kleinvcy
