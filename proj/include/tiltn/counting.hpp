#ifndef TILTN_COUNTING_HPP
#define TILTN_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "perm.hpp"
#include "rational.hpp"

namespace tiltn {

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= (n - k + i);
    b /= i;
  }
  return b;
}

/// t_0 = 1, t_n = sum_{k=0}^{n-1} (-1)^{n+k+1} C(n,k)^2 t_k.
inline BigInt t_recursive(int n) {
  std::vector<BigInt> t(n + 1);
  t[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int k = 0; k < m; ++k) {
      BigInt term = binomial(m, k);
      term *= term;
      term *= t[k];
      if ((m + k + 1) % 2 == 0)
        s += term;
      else
        s -= term;
    }
    t[m] = s;
  }
  return t[n];
}

/// Number of pairs (v,w) in S_n x S_n without common right descent,
/// counted by grouping permutations by right-descent bitmask.
inline BigInt t_by_pairs(int n) {
  if (n == 0) return 1;
  std::vector<std::uint64_t> by_mask(std::size_t(1) << (n - 1), 0);
  for (const Perm &p : Perm::all(n)) ++by_mask[p.right_descent_mask()];
  BigInt total = 0;
  for (std::size_t a = 0; a < by_mask.size(); ++a) {
    if (by_mask[a] == 0) continue;
    for (std::size_t b = 0; b < by_mask.size(); ++b) {
      if ((a & b) == 0 && by_mask[b] != 0)
        total += BigInt(by_mask[a]) * BigInt(by_mask[b]);
    }
  }
  return total;
}

struct CountReport {
  int n = 0;
  BigInt c;
  BigInt t_rec;
  std::optional<BigInt> t_pairs;
  std::optional<BigInt> t_interval;
  std::optional<std::vector<long>> p; // p_{n,i} when computed
  bool consistent = true;
};

} // namespace tiltn

#include "sigma.hpp"

namespace tiltn {

/// Cross-check every available count of tilting modules for rank n:
/// the recursion, the descent-free pair count, the interval of rational
/// permutation braids, and the facet/vertex statistics of Sigma_n.
/// The heavier computations are skipped above small ranks.
inline CountReport consistency_report(int n) {
  CountReport r;
  r.n = n;
  r.c = factorial(n);
  r.t_rec = t_recursive(n);
  if (n <= 8) {
    r.t_pairs = t_by_pairs(n);
    if (*r.t_pairs != r.t_rec) r.consistent = false;
  }
  if (n >= 1 && n <= 5) {
    SigmaComplex S = build_sigma(n);
    r.t_interval = BigInt(static_cast<long>(S.nodes.size()));
    if (*r.t_interval != r.t_rec) r.consistent = false;
    r.p = S.p_counts();
    if (S.facet_count() != static_cast<long>(S.nodes.size())) r.consistent = false;
    long vertex_total = 0;
    for (long pi : *r.p) vertex_total += pi;
    if (vertex_total != S.vertex_count()) r.consistent = false;
  }
  return r;
}

} // namespace tiltn

#endif
