#ifndef TILTN_SIGMA_HPP
#define TILTN_SIGMA_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "braid.hpp"

namespace tiltn {

using Face = std::vector<int>; // sorted vertex ids

/// The combinatorial model of the simplicial complex of tilting modules:
/// vertices are pairs (x, i) of an interval element and a slot, modulo the
/// relation (s_j x, i) ~ (x, i) for s_j x in the interval and j != i;
/// the facet of x is {(x,1), ..., (x,n)}.
struct SigmaComplex {
  int n = 0;
  std::vector<PositiveBraid> nodes; // interval, sorted by normal form
  std::vector<int> vertex_class;    // (node x, slot i) -> class id, at x*n + i-1
  int num_classes = 0;
  std::vector<int> class_slot;      // slot of each class
  std::vector<Face> facets;         // one per node, sorted class ids

  int cls(int x, int i) const { return vertex_class[x * n + (i - 1)]; }

  std::vector<long> p_counts() const {
    std::vector<long> p(n, 0);
    for (int c = 0; c < num_classes; ++c) ++p[class_slot[c] - 1];
    return p;
  }

  long vertex_count() const { return num_classes; }
  long facet_count() const { return static_cast<long>(facets.size()); }

  /// All nonempty faces (subsets of facets), deduplicated.
  std::set<Face> all_faces() const {
    std::set<Face> faces;
    for (const Face &f : facets) {
      int k = static_cast<int>(f.size());
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Face sub;
        for (int b = 0; b < k; ++b)
          if (mask & (1u << b)) sub.push_back(f[b]);
        faces.insert(std::move(sub));
      }
    }
    return faces;
  }

  /// Codimension-one faces with the number of facets containing each.
  std::map<Face, int> ridge_multiplicity() const {
    std::map<Face, int> mult;
    for (const Face &f : facets)
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face r;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (k != drop) r.push_back(f[k]);
        ++mult[r];
      }
    return mult;
  }

  /// Faces of the boundary subcomplex: all subsets of ridges lying in
  /// exactly one facet.
  std::set<Face> boundary_faces() const {
    std::set<Face> faces;
    for (const auto &[ridge, m] : ridge_multiplicity()) {
      if (m != 1) continue;
      int k = static_cast<int>(ridge.size());
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Face sub;
        for (int b = 0; b < k; ++b)
          if (mask & (1u << b)) sub.push_back(ridge[b]);
        faces.insert(std::move(sub));
      }
    }
    return faces;
  }

  std::set<int> boundary_vertices() const {
    std::set<int> verts;
    for (const Face &f : boundary_faces())
      if (f.size() == 1) verts.insert(f[0]);
    return verts;
  }

  /// The class of (1, n), apex of the cone decomposition.
  int apex() const {
    int root = -1;
    for (std::size_t x = 0; x < nodes.size(); ++x)
      if (nodes[x].is_identity()) root = static_cast<int>(x);
    return cls(root, n);
  }

  /// Sigma = boundary + apex + cones over the boundary, as disjoint sets.
  bool cone_decomposition_holds() const {
    std::set<Face> faces = all_faces();
    std::set<Face> bd = boundary_faces();
    int a = apex();
    std::set<Face> rebuilt = bd;
    rebuilt.insert(Face{a});
    for (const Face &f : bd) {
      Face g = f;
      g.push_back(a);
      std::sort(g.begin(), g.end());
      if (bd.count(g) || g == f) return false; // not disjoint
      rebuilt.insert(std::move(g));
    }
    if (bd.count(Face{a})) return false;
    return rebuilt == faces;
  }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// Build Sigma_n from the generating relation; edge_order permutes the
/// union-find edge processing (the result must not depend on it).
inline SigmaComplex build_sigma(int n, const std::vector<int> *edge_order = nullptr) {
  SigmaComplex S;
  S.n = n;
  S.nodes = interval_w2(n);
  int count = static_cast<int>(S.nodes.size());
  std::map<PositiveBraid, int> index;
  for (int x = 0; x < count; ++x) index[S.nodes[x]] = x;

  std::vector<std::pair<int, int>> edges; // pairs of flat vertex ids
  for (int x = 0; x < count; ++x)
    for (int j = 1; j < n; ++j) {
      PositiveBraid y = PositiveBraid::generator(j, n) * S.nodes[x];
      auto it = index.find(y);
      if (it == index.end()) continue;
      for (int i = 1; i <= n; ++i)
        if (i != j) edges.push_back({x * n + (i - 1), it->second * n + (i - 1)});
    }

  detail::UnionFind uf(count * n);
  if (edge_order) {
    if (edge_order->size() != edges.size())
      throw std::invalid_argument("edge order size mismatch");
    for (int e : *edge_order) uf.unite(edges[e].first, edges[e].second);
  } else {
    for (auto &[a, b] : edges) uf.unite(a, b);
  }

  S.vertex_class.assign(count * n, -1);
  S.class_slot.clear();
  std::map<int, int> renumber;
  for (int v = 0; v < count * n; ++v) {
    int root = uf.find(v);
    auto it = renumber.find(root);
    if (it == renumber.end()) {
      it = renumber.insert({root, static_cast<int>(renumber.size())}).first;
      S.class_slot.push_back(v % n + 1);
    }
    S.vertex_class[v] = it->second;
  }
  S.num_classes = static_cast<int>(renumber.size());

  for (int x = 0; x < count; ++x) {
    Face f;
    for (int i = 1; i <= n; ++i) f.push_back(S.cls(x, i));
    std::sort(f.begin(), f.end());
    for (std::size_t k = 1; k < f.size(); ++k)
      if (f[k] == f[k - 1]) throw std::logic_error("facet with repeated vertex");
    S.facets.push_back(std::move(f));
  }
  return S;
}

inline std::vector<long> p_counts(int n) { return build_sigma(n).p_counts(); }

} // namespace tiltn

#endif
