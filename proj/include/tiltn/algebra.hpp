#ifndef TILTN_ALGEBRA_HPP
#define TILTN_ALGEBRA_HPP

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace tiltn {

/// Basis path of the Auslander algebra of K[x]/(x^n): the residue class of
/// the unique relation-normal path src -> valley -> src+1 -> ... -> tgt
/// (down along betas, up along alphas). 1 <= valley <= min(src, tgt).
/// valley == src == tgt is the idempotent e_src.
struct BasisPath {
  int src;
  int tgt;
  int valley;

  bool operator==(const BasisPath &o) const {
    return src == o.src && tgt == o.tgt && valley == o.valley;
  }
};

/// The Auslander algebra of K[x]/(x^n): path algebra of the linear double
/// quiver on vertices 1..n with arrows a_i : i -> i+1 and b_{i+1} : i+1 -> i,
/// modulo a_1 b_2 and a_i b_{i+1} - b_i a_{i-1}. Paths compose left to
/// right. The basis consists of valley-normal paths; the rewriting
/// a_i b_{i+1} -> b_i a_{i-1} (and a_1 b_2 -> 0) lowers every interior peak
/// until the path is valley-normal or vanishes.
class Algebra {
public:
  explicit Algebra(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int v = 1; v <= std::min(i, j); ++v) {
          index_[{i, j, v}] = static_cast<int>(basis_.size());
          basis_.push_back({i, j, v});
        }
  }

  int rank() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisPath> &basis() const { return basis_; }
  const BasisPath &path(int k) const { return basis_[k]; }

  int index_of(int src, int tgt, int valley) const {
    auto it = index_.find({src, tgt, valley});
    assert(it != index_.end());
    return it->second;
  }

  /// Indices of the basis of e_i Lambda e_j.
  std::vector<int> block(int i, int j) const {
    std::vector<int> res;
    for (int v = 1; v <= std::min(i, j); ++v) res.push_back(index_of(i, j, v));
    return res;
  }

  /// Reduce an arbitrary lattice path (sequence of visited vertices, steps
  /// of +-1) to its basis path, or nothing if it vanishes in the algebra.
  static std::optional<BasisPath> reduce_path(std::vector<int> verts) {
    assert(!verts.empty());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 2 < verts.size(); ++k) {
        if (verts[k + 1] == verts[k] + 1 && verts[k + 2] == verts[k]) {
          // peak: a_{p-1} b_p with p = verts[k+1]
          if (verts[k] == 1) return std::nullopt; // a_1 b_2 = 0
          verts[k + 1] = verts[k] - 1;
          changed = true;
        }
      }
    }
    int valley = verts.front();
    for (int v : verts) valley = std::min(valley, v);
    return BasisPath{verts.front(), verts.back(), valley};
  }

  /// Product of two basis paths; monomial (coefficient 1) or zero.
  std::optional<int> mult(int a, int b) const {
    const BasisPath &p = basis_[a];
    const BasisPath &q = basis_[b];
    if (p.tgt != q.src) return std::nullopt;
    int v = p.valley + q.valley - p.tgt;
    if (v < 1) return std::nullopt;
    return index_of(p.src, q.tgt, v);
  }

  /// Elements are coordinate vectors over the path basis (dim() x 1).
  Mat zero_element() const { return Mat(dim(), 1); }

  Mat basis_element(int k) const {
    Mat e = zero_element();
    e(k, 0) = 1;
    return e;
  }

  Mat one() const {
    Mat e = zero_element();
    for (int i = 1; i <= n_; ++i) e(index_of(i, i, i), 0) = 1;
    return e;
  }

  Mat idempotent(int i) const { return basis_element(index_of(i, i, i)); }

  /// Arrow a_i : i -> i+1, 1 <= i < n.
  Mat alpha(int i) const {
    assert(i >= 1 && i < n_);
    return basis_element(index_of(i, i + 1, i));
  }

  /// Arrow b_i : i -> i-1, 2 <= i <= n.
  Mat beta(int i) const {
    assert(i >= 2 && i <= n_);
    return basis_element(index_of(i, i - 1, i - 1));
  }

  Mat mult(const Mat &x, const Mat &y) const {
    Mat r = zero_element();
    for (int a = 0; a < dim(); ++a) {
      if (x(a, 0) == 0) continue;
      for (int b = 0; b < dim(); ++b) {
        if (y(b, 0) == 0) continue;
        auto c = mult(a, b);
        if (c) r(*c, 0) += x(a, 0) * y(b, 0);
      }
    }
    return r;
  }

  /// The vertex path of basis element k (down to the valley, then up).
  std::vector<int> vertex_path(int k) const {
    const BasisPath &p = basis_[k];
    std::vector<int> verts;
    for (int v = p.src; v >= p.valley; --v) verts.push_back(v);
    for (int v = p.valley + 1; v <= p.tgt; ++v) verts.push_back(v);
    return verts;
  }

private:
  struct Key {
    int i, j, v;
    bool operator<(const Key &o) const {
      if (i != o.i) return i < o.i;
      if (j != o.j) return j < o.j;
      return v < o.v;
    }
  };

  int n_;
  std::vector<BasisPath> basis_;
  std::map<Key, int> index_;
};

/// Two-sided ideal of the algebra, kept as a canonical subspace of the
/// path-basis coordinate space.
class Ideal {
public:
  Ideal(const Algebra &alg, Subspace space) : alg_(&alg), space_(std::move(space)) {
    assert(space_.ambient_dim() == static_cast<std::size_t>(alg.dim()));
  }

  const Algebra &algebra() const { return *alg_; }
  const Subspace &space() const { return space_; }
  int dim() const { return static_cast<int>(space_.dim()); }

  bool operator==(const Ideal &o) const { return space_ == o.space_; }
  bool operator!=(const Ideal &o) const { return !(*this == o); }

  bool contains(const Mat &x) const { return space_.contains(x); }

  /// Basis of the block e_i I e_j, as columns in e_i Lambda e_j coordinates
  /// (the algebra's block(i,j) ordering). Canonical via rref.
  Mat block_basis(int i, int j) const {
    auto cols = alg_->block(i, j);
    Mat rows(space_.dim(), cols.size());
    const Mat &b = space_.basis_rows();
    for (std::size_t r = 0; r < space_.dim(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) rows(r, c) = b(r, cols[c]);
    return rows.row_basis().transpose();
  }

private:
  const Algebra *alg_;
  Subspace space_;
};

/// Smallest two-sided ideal containing the given elements, computed by
/// saturating the span with idempotent and arrow multipliers on both sides.
inline Ideal ideal_closure(const Algebra &alg, const std::vector<Mat> &gens) {
  Subspace s(alg.dim());
  std::vector<Mat> queue;
  for (const auto &g : gens)
    if (s.insert(g)) queue.push_back(g);
  std::vector<Mat> multipliers;
  for (int i = 1; i <= alg.rank(); ++i) multipliers.push_back(alg.idempotent(i));
  for (int i = 1; i < alg.rank(); ++i) multipliers.push_back(alg.alpha(i));
  for (int i = 2; i <= alg.rank(); ++i) multipliers.push_back(alg.beta(i));
  while (!queue.empty()) {
    Mat x = queue.back();
    queue.pop_back();
    for (const auto &m : multipliers) {
      for (Mat y : {alg.mult(m, x), alg.mult(x, m)}) {
        if (!y.is_zero() && s.insert(y)) queue.push_back(y);
      }
    }
  }
  return Ideal(alg, s);
}

inline Ideal unit_ideal(const Algebra &alg) { return ideal_closure(alg, {alg.one()}); }

inline Ideal zero_ideal(const Algebra &alg) { return Ideal(alg, Subspace(alg.dim())); }

/// I_i = Lambda (1 - e_i) Lambda.
inline Ideal ideal_I_i(const Algebra &alg, int i) {
  Mat g = alg.one() - alg.idempotent(i);
  return ideal_closure(alg, {g});
}

/// Span of pairwise products; a two-sided ideal again.
inline Ideal ideal_product(const Ideal &a, const Ideal &b) {
  const Algebra &alg = a.algebra();
  assert(&alg == &b.algebra());
  Subspace s(alg.dim());
  Mat ar = a.space().basis_cols();
  Mat br = b.space().basis_cols();
  for (std::size_t i = 0; i < ar.cols(); ++i)
    for (std::size_t j = 0; j < br.cols(); ++j)
      s.insert(alg.mult(ar.col(i), br.col(j)));
  return Ideal(alg, s);
}

} // namespace tiltn

#endif
