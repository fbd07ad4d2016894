#ifndef TILTN_TILT_HPP
#define TILTN_TILT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bimodule.hpp"
#include "braid.hpp"
#include "homology.hpp"

namespace tiltn {

/// A (candidate) tilting module T_x: the interval index x and the slots
/// e_1 T, ..., e_n T.
struct TiltingObject {
  PositiveBraid index;
  std::vector<RightModule> slots; // 1-based, slot 0 unused

  int rank() const { return index.rank(); }
  const RightModule &slot(int i) const { return slots[i]; }

  std::vector<std::vector<int>> dim_vectors() const {
    std::vector<std::vector<int>> d;
    for (int i = 1; i <= rank(); ++i) d.push_back(slots[i].dim_vector());
    return d;
  }
};

inline TiltingObject tilting_of_bimodule(const Bimodule &B, PositiveBraid index) {
  return {std::move(index), B.rows};
}

/// I_w = I_{i_1} ... I_{i_l} along any reduced word of w.
inline Ideal ideal_I_w(const Algebra &alg, const Perm &w) {
  Ideal I = unit_ideal(alg);
  for (int i : w.reduced_word()) I = ideal_product(I, ideal_I_i(alg, i));
  return I;
}

/// Tensor-route construction of T = I_v (x) I_w: slot i is the tensor of
/// the row e_i I_v with I_w; the index is the normal form of vw.
inline TiltingObject tilting_from_pair(const Algebra &alg, const Perm &v, const Perm &w) {
  Ideal Iv = ideal_I_w(alg, v);
  Ideal Iw = ideal_I_w(alg, w);
  TiltingObject T{from_pair(v, w), {}};
  T.slots.reserve(alg.rank() + 1);
  T.slots.push_back(RightModule::zero(alg));
  for (int i = 1; i <= alg.rank(); ++i)
    T.slots.push_back(tensor_with_ideal(ideal_row_module(Iv, i), Iw));
  return T;
}

inline std::vector<Resolution> slot_resolutions(const TiltingObject &T) {
  std::vector<Resolution> res(1); // slot 0 unused
  for (int i = 1; i <= T.rank(); ++i)
    res.push_back(projective_resolution(T.slot(i)));
  return res;
}

/// Self-orthogonality plus n pairwise non-isomorphic indecomposable slots.
inline bool is_tilting(const TiltingObject &T) {
  int n = T.rank();
  if (static_cast<int>(T.slots.size()) != n + 1) return false;
  for (int i = 1; i <= n; ++i)
    if (!is_indecomposable(T.slot(i))) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (is_isomorphic_checked(T.slot(i), T.slot(j)) != IsoResult::No) return false;
  auto res = slot_resolutions(T);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto e = ext_dims(res[i], T.slot(j));
      if (e[1] != 0 || e[2] != 0) return false;
    }
  return true;
}

/// Ext-vanishing test with precomputed resolutions of the first argument.
inline bool ext_orthogonal(const std::vector<Resolution> &res, const TiltingObject &Tp) {
  for (std::size_t i = 1; i < res.size(); ++i)
    for (int j = 1; j <= Tp.rank(); ++j) {
      auto e = ext_dims(res[i], Tp.slot(j));
      if (e[1] != 0 || e[2] != 0) return false;
    }
  return true;
}

/// The Ext-order relation on tilting modules: true iff Ext^1(T,T') and
/// Ext^2(T,T') vanish, i.e. T >= T' in tilt(Lambda).
inline bool tilting_le(const TiltingObject &T, const TiltingObject &Tp) {
  return ext_orthogonal(slot_resolutions(T), Tp);
}

/// The s_i action on tuples of dimension vectors,
/// (v_1,...,v_n) -> (..., v_{i-1} - v_i + v_{i+1}, ...) with v_0 = 0,
/// applied along a reduced word of p (rightmost letter first).
inline std::vector<std::vector<int>> dim_action(const Perm &p,
                                                std::vector<std::vector<int>> d) {
  int n = p.rank();
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("component count mismatch");
  auto rw = p.reduced_word();
  for (auto it = rw.rbegin(); it != rw.rend(); ++it) {
    int i = *it; // 1 <= i < n
    std::vector<int> fresh(d[i].size(), 0); // d is 0-based: v_i = d[i-1]
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      int lo = i >= 2 ? d[i - 2][k] : 0;
      fresh[k] = lo - d[i - 1][k] + d[i][k];
    }
    d[i - 1] = std::move(fresh);
  }
  return d;
}

/// The tilting poset: nodes are the interval elements, arrows
/// x ->(i) s_i x whenever both lie in the interval. With modules attached,
/// every node carries the TiltingObject produced by iterated mutation
/// from Lambda.
struct TiltingPoset {
  int n = 0;
  std::vector<PositiveBraid> nodes;                 // deterministic order
  std::vector<std::tuple<int, int, int>> arrows;    // (from, to, slot)
  std::vector<std::optional<TiltingObject>> objects;
  std::vector<std::optional<Bimodule>> bimodules;

  int node_index(const PositiveBraid &x) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    if (it == nodes.end() || !(*it == x)) return -1;
    return static_cast<int>(it - nodes.begin());
  }

  /// x <=_L y restricted to nodes, i.e. T_x >= T_y.
  bool le_L(int x, int y) const {
    return PositiveBraid::le_L(nodes[x], nodes[y]);
  }

  /// Meet in the tilting order = join of the indices in <=_L inside the
  /// interval: the unique minimal common upper bound.
  int meet_node(int a, int b) const {
    int best = -1;
    for (std::size_t z = 0; z < nodes.size(); ++z) {
      if (!le_L(a, z) || !le_L(b, z)) continue;
      if (best < 0 || le_L(static_cast<int>(z), best)) best = static_cast<int>(z);
    }
    if (best < 0) throw std::logic_error("no common bound in the interval");
    for (std::size_t z = 0; z < nodes.size(); ++z)
      if (le_L(a, z) && le_L(b, z) && !le_L(best, z))
        throw std::logic_error("interval join is not unique");
    return best;
  }
};

inline TiltingPoset build_tilting_poset(const Algebra &alg, bool with_modules) {
  int n = alg.rank();
  TiltingPoset P;
  P.n = n;
  P.nodes = interval_w2(n); // sorted by normal-form key
  std::size_t count = P.nodes.size();
  for (std::size_t x = 0; x < count; ++x)
    for (int i = 1; i < n; ++i) {
      PositiveBraid y = PositiveBraid::generator(i, n) * P.nodes[x];
      int yi = P.node_index(y);
      if (yi >= 0) P.arrows.emplace_back(static_cast<int>(x), yi, i);
    }
  if (!with_modules) return P;

  P.objects.resize(count);
  P.bimodules.resize(count);
  int root = P.node_index(PositiveBraid(n));
  P.bimodules[root] = lambda_bimodule(alg);
  P.objects[root] = tilting_of_bimodule(*P.bimodules[root], P.nodes[root]);
  // breadth-first over arrows; arrows from a known node always mutate
  // inside the interval
  std::vector<int> queue{root};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (auto &[from, to, slot] : P.arrows) {
      if (from != x || P.objects[to]) continue;
      auto next = mutate(*P.bimodules[x], slot);
      if (!next)
        throw std::logic_error("mutation failed although the target is in the interval");
      P.bimodules[to] = std::move(*next);
      P.objects[to] = tilting_of_bimodule(*P.bimodules[to], P.nodes[to]);
      queue.push_back(to);
    }
  }
  for (std::size_t x = 0; x < count; ++x)
    if (!P.objects[x]) throw std::logic_error("interval node unreachable by mutation");
  return P;
}

/// Combinatorial meet lifted back to objects; requires a poset built with
/// modules when objects are to be returned.
inline TiltingObject meet(const TiltingPoset &P, const TiltingObject &T,
                          const TiltingObject &Tp) {
  int a = P.node_index(T.index);
  int b = P.node_index(Tp.index);
  if (a < 0 || b < 0) throw std::invalid_argument("index not in the poset");
  int m = P.meet_node(a, b);
  if (P.objects.empty() || !P.objects[m])
    throw std::invalid_argument("poset was built without modules");
  return *P.objects[m];
}

/// D(Lambda) as a slot list, for comparison with T_{w_+^2}.
inline std::vector<RightModule> dual_lambda_slots(const Algebra &alg) {
  std::vector<RightModule> slots;
  slots.push_back(RightModule::zero(alg));
  for (int i = 1; i <= alg.rank(); ++i) slots.push_back(injective_module(alg, i));
  return slots;
}

} // namespace tiltn

#endif
