#ifndef TILTN_MODULE_HPP
#define TILTN_MODULE_HPP

#include <cassert>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"

namespace tiltn {

/// Right module over the Auslander algebra, as a quiver representation:
/// one rational vector space per vertex and, per arrow, the matrix of the
/// right action. alpha(i) : M_i -> M_{i+1} is the action of a_i, and
/// beta(i) : M_i -> M_{i-1} the action of b_i. Composition follows path
/// order: m . (pq) = (m . p) . q.
class RightModule {
public:
  RightModule(const Algebra &alg, std::vector<int> dims, std::vector<Mat> alpha,
              std::vector<Mat> beta)
      : alg_(&alg), dims_(std::move(dims)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    int n = alg.rank();
    assert(static_cast<int>(dims_.size()) == n + 1); // 1-based, slot 0 unused
    assert(static_cast<int>(alpha_.size()) == n + 1);
    assert(static_cast<int>(beta_.size()) == n + 1);
    assert(relations_hold());
  }

  static RightModule zero(const Algebra &alg) {
    int n = alg.rank();
    std::vector<int> dims(n + 1, 0);
    std::vector<Mat> a(n + 1), b(n + 1);
    for (int i = 1; i < n; ++i) a[i] = Mat(0, 0);
    for (int i = 2; i <= n; ++i) b[i] = Mat(0, 0);
    return RightModule(alg, dims, a, b);
  }

  /// The indecomposable projective e_i Lambda; vertex space e_i Lambda e_j
  /// has the valley-ordered path basis.
  static RightModule projective(const Algebra &alg, int i) {
    int n = alg.rank();
    std::vector<int> dims(n + 1, 0);
    for (int j = 1; j <= n; ++j) dims[j] = std::min(i, j);
    std::vector<Mat> a(n + 1), b(n + 1);
    for (int j = 1; j < n; ++j) {
      // (i,j,v) . a_j = (i,j+1,v)
      Mat m(dims[j + 1], dims[j]);
      for (int v = 1; v <= dims[j]; ++v) m(v - 1, v - 1) = 1;
      a[j] = m;
    }
    for (int j = 2; j <= n; ++j) {
      // (i,j,v) . b_j = (i,j-1,v-1), zero when v = 1
      Mat m(dims[j - 1], dims[j]);
      for (int v = 2; v <= dims[j]; ++v) m(v - 2, v - 1) = 1;
      b[j] = m;
    }
    return RightModule(alg, dims, a, b);
  }

  /// The simple module at vertex i.
  static RightModule simple(const Algebra &alg, int i) {
    int n = alg.rank();
    std::vector<int> dims(n + 1, 0);
    dims[i] = 1;
    std::vector<Mat> a(n + 1), b(n + 1);
    for (int j = 1; j < n; ++j) a[j] = Mat(dims[j + 1], dims[j]);
    for (int j = 2; j <= n; ++j) b[j] = Mat(dims[j - 1], dims[j]);
    return RightModule(alg, dims, a, b);
  }

  const Algebra &algebra() const { return *alg_; }
  int rank() const { return alg_->rank(); }
  int dim(int vertex) const { return dims_[vertex]; }
  int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

  std::vector<int> dim_vector() const {
    return {dims_.begin() + 1, dims_.end()};
  }

  const Mat &alpha(int i) const {
    assert(i >= 1 && i < rank());
    return alpha_[i];
  }
  const Mat &beta(int i) const {
    assert(i >= 2 && i <= rank());
    return beta_[i];
  }

  /// Action matrix of an arbitrary arrow between adjacent vertices.
  const Mat &arrow(int from, int to) const {
    assert(std::abs(from - to) == 1);
    return to == from + 1 ? alpha(from) : beta(from);
  }

  bool relations_hold() const {
    int n = rank();
    for (int j = 1; j < n; ++j)
      if (static_cast<int>(alpha_[j].rows()) != dims_[j + 1] ||
          static_cast<int>(alpha_[j].cols()) != dims_[j])
        return false;
    for (int j = 2; j <= n; ++j)
      if (static_cast<int>(beta_[j].rows()) != dims_[j - 1] ||
          static_cast<int>(beta_[j].cols()) != dims_[j])
        return false;
    if (n >= 2 && !(beta_[2] * alpha_[1]).is_zero()) return false;
    for (int i = 2; i < n; ++i)
      if (!(beta_[i + 1] * alpha_[i] - alpha_[i - 1] * beta_[i]).is_zero()) return false;
    return true;
  }

  /// Matrix of the right action of basis path k : M_src -> M_tgt.
  Mat act_path(int k) const {
    auto verts = alg_->vertex_path(k);
    Mat m = Mat::identity(dims_[verts.front()]);
    for (std::size_t t = 0; t + 1 < verts.size(); ++t)
      m = arrow(verts[t], verts[t + 1]) * m;
    return m;
  }

  /// Matrix of the right action of an algebra element restricted to the
  /// (src, tgt) component: M_src -> M_tgt.
  Mat act_element(const Mat &x, int src, int tgt) const {
    Mat m(dims_[tgt], dims_[src]);
    for (int k = 0; k < alg_->dim(); ++k) {
      if (x(k, 0) == 0) continue;
      const BasisPath &p = alg_->path(k);
      if (p.src != src || p.tgt != tgt) continue;
      m = m + act_path(k).scaled(x(k, 0));
    }
    return m;
  }

  bool operator==(const RightModule &o) const {
    return dims_ == o.dims_ && alpha_ == o.alpha_ && beta_ == o.beta_;
  }

private:
  const Algebra *alg_;
  std::vector<int> dims_; // 1-based
  std::vector<Mat> alpha_; // alpha_[i] : M_i -> M_{i+1}, 1 <= i < n
  std::vector<Mat> beta_;  // beta_[i]  : M_i -> M_{i-1}, 2 <= i <= n
};

/// Morphism of right modules: one block per vertex, commuting with all
/// arrow actions.
struct ModuleMap {
  RightModule source;
  RightModule target;
  std::vector<Mat> blocks; // 1-based

  ModuleMap(RightModule src, RightModule tgt, std::vector<Mat> b)
      : source(std::move(src)), target(std::move(tgt)), blocks(std::move(b)) {
    assert(static_cast<int>(blocks.size()) == source.rank() + 1);
    assert(intertwines());
  }

  bool intertwines() const {
    int n = source.rank();
    for (int j = 1; j <= n; ++j)
      if (static_cast<int>(blocks[j].rows()) != target.dim(j) ||
          static_cast<int>(blocks[j].cols()) != source.dim(j))
        return false;
    for (int i = 1; i < n; ++i)
      if (!(target.alpha(i) * blocks[i] - blocks[i + 1] * source.alpha(i)).is_zero())
        return false;
    for (int i = 2; i <= n; ++i)
      if (!(target.beta(i) * blocks[i] - blocks[i - 1] * source.beta(i)).is_zero())
        return false;
    return true;
  }

  bool is_injective() const {
    for (int j = 1; j <= source.rank(); ++j)
      if (blocks[j].rank() != static_cast<std::size_t>(source.dim(j))) return false;
    return true;
  }

  bool is_surjective() const {
    for (int j = 1; j <= source.rank(); ++j)
      if (blocks[j].rank() != static_cast<std::size_t>(target.dim(j))) return false;
    return true;
  }

  bool is_invertible() const {
    for (int j = 1; j <= source.rank(); ++j)
      if (source.dim(j) != target.dim(j) || !blocks[j].is_invertible()) return false;
    return true;
  }

  bool is_zero() const {
    for (int j = 1; j <= source.rank(); ++j)
      if (!blocks[j].is_zero()) return false;
    return true;
  }
};

/// Direct sum, with the block layout recorded so components can be
/// embedded and projected.
struct DirectSum {
  RightModule module;
  std::vector<std::vector<int>> offsets; // offsets[part][vertex]

  static DirectSum of(const Algebra &alg, const std::vector<const RightModule *> &parts) {
    int n = alg.rank();
    std::vector<int> dims(n + 1, 0);
    std::vector<std::vector<int>> offsets;
    for (const auto *p : parts) {
      std::vector<int> off(n + 1, 0);
      for (int j = 1; j <= n; ++j) {
        off[j] = dims[j];
        dims[j] += p->dim(j);
      }
      offsets.push_back(off);
    }
    std::vector<Mat> a(n + 1), b(n + 1);
    for (int i = 1; i < n; ++i) {
      Mat m(dims[i + 1], dims[i]);
      for (std::size_t t = 0; t < parts.size(); ++t) {
        const Mat &blk = parts[t]->alpha(i);
        for (std::size_t r = 0; r < blk.rows(); ++r)
          for (std::size_t c = 0; c < blk.cols(); ++c)
            m(offsets[t][i + 1] + r, offsets[t][i] + c) = blk(r, c);
      }
      a[i] = m;
    }
    for (int i = 2; i <= n; ++i) {
      Mat m(dims[i - 1], dims[i]);
      for (std::size_t t = 0; t < parts.size(); ++t) {
        const Mat &blk = parts[t]->beta(i);
        for (std::size_t r = 0; r < blk.rows(); ++r)
          for (std::size_t c = 0; c < blk.cols(); ++c)
            m(offsets[t][i - 1] + r, offsets[t][i] + c) = blk(r, c);
      }
      b[i] = m;
    }
    return {RightModule(alg, dims, a, b), offsets};
  }
};

/// Basis of Hom(M, N), solved from the commuting-square equations.
inline std::vector<ModuleMap> hom_space(const RightModule &M, const RightModule &N) {
  assert(&M.algebra() == &N.algebra());
  int n = M.rank();
  // Unknowns: entries of f_j (N.dim(j) x M.dim(j)), vertex by vertex.
  std::vector<int> offset(n + 2, 0);
  for (int j = 1; j <= n; ++j) offset[j + 1] = offset[j] + N.dim(j) * M.dim(j);
  int unknowns = offset[n + 1];
  auto var = [&](int j, int r, int c) { return offset[j] + r * M.dim(j) + c; };

  std::vector<std::vector<std::pair<int, Rat>>> eqs;
  auto add_arrow_eqs = [&](int from, int to) {
    const Mat &Ma = M.arrow(from, to);
    const Mat &Na = N.arrow(from, to);
    // N_a * f_from = f_to * M_a : (N.dim(to) x M.dim(from)) equations
    for (int r = 0; r < N.dim(to); ++r)
      for (int c = 0; c < M.dim(from); ++c) {
        std::vector<std::pair<int, Rat>> eq;
        for (int k = 0; k < N.dim(from); ++k)
          if (Na(r, k) != 0) eq.push_back({var(from, k, c), Na(r, k)});
        for (int k = 0; k < M.dim(to); ++k)
          if (Ma(k, c) != 0) eq.push_back({var(to, r, k), -Ma(k, c)});
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  };
  for (int i = 1; i < n; ++i) add_arrow_eqs(i, i + 1);
  for (int i = 2; i <= n; ++i) add_arrow_eqs(i, i - 1);

  Mat sys(eqs.size(), unknowns);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (auto &[v, coef] : eqs[e]) sys(e, v) += coef;
  Mat ker = unknowns == 0 ? Mat(0, 0) : sys.kernel();

  std::vector<ModuleMap> res;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j) {
      Mat b(N.dim(j), M.dim(j));
      for (int r = 0; r < N.dim(j); ++r)
        for (int cc = 0; cc < M.dim(j); ++cc) b(r, cc) = ker(var(j, r, cc), c);
      blocks[j] = b;
    }
    res.emplace_back(M, N, std::move(blocks));
  }
  return res;
}

inline int hom_dim(const RightModule &M, const RightModule &N) {
  return static_cast<int>(hom_space(M, N).size());
}

/// M is indecomposable iff End(M) is local. In characteristic zero the
/// radical of End(M) is the radical of the trace form of its action on M,
/// so End(M)/rad is one-dimensional iff the trace form has rank one.
inline bool is_indecomposable(const RightModule &M) {
  if (M.total_dim() == 0) return false;
  auto homs = hom_space(M, M);
  std::size_t d = homs.size();
  if (d == 1) return true;
  Mat gram(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Rat tr = 0;
      for (int j = 1; j <= M.rank(); ++j) {
        Mat prod = homs[a].blocks[j] * homs[b].blocks[j];
        for (std::size_t k = 0; k < prod.rows(); ++k) tr += prod(k, k);
      }
      gram(a, b) = tr;
    }
  return gram.rank() == 1;
}

/// Kernel of a module map, with its inclusion.
struct SubmoduleWithInclusion {
  RightModule module;
  ModuleMap inclusion;
};

inline SubmoduleWithInclusion kernel_of(const ModuleMap &f) {
  const RightModule &M = f.source;
  const Algebra &alg = M.algebra();
  int n = M.rank();
  std::vector<Mat> kbasis(n + 1); // columns span ker f_j
  std::vector<int> dims(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    kbasis[j] = f.blocks[j].kernel();
    dims[j] = static_cast<int>(kbasis[j].cols());
  }
  auto induced = [&](const Mat &arrow_mat, int from, int to) {
    Mat img = arrow_mat * kbasis[from];
    Mat x;
    bool ok = kbasis[to].solve(img, x);
    assert(ok && "kernel not arrow-stable?");
    (void)ok;
    return x;
  };
  std::vector<Mat> a(n + 1), b(n + 1);
  for (int i = 1; i < n; ++i) a[i] = induced(M.alpha(i), i, i + 1);
  for (int i = 2; i <= n; ++i) b[i] = induced(M.beta(i), i, i - 1);
  RightModule K(alg, dims, a, b);
  std::vector<Mat> blocks(n + 1);
  for (int j = 1; j <= n; ++j) blocks[j] = kbasis[j];
  ModuleMap inc(K, M, blocks);
  return {std::move(K), std::move(inc)};
}

/// Quotient of M by a family of arrow-stable vertexwise subspaces
/// (given as column spans), with the projection map.
struct QuotientWithProjection {
  RightModule module;
  ModuleMap projection;
  std::vector<Mat> lift; // vertexwise sections of the projection (not a module map)
};

inline QuotientWithProjection quotient_by(const RightModule &M,
                                          const std::vector<Mat> &span_cols) {
  const Algebra &alg = M.algebra();
  int n = M.rank();
  std::vector<Mat> proj(n + 1); // projection matrices M_j -> Q_j
  std::vector<Mat> lift(n + 1); // sections Q_j -> M_j on free coordinates
  std::vector<int> dims(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    Mat rr = span_cols[j].transpose().row_basis(); // rref rows spanning the subspace
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rr.rows(); ++r) {
      std::size_t c = 0;
      while (c < rr.cols() && rr(r, c) == 0) ++c;
      pivots.push_back(c);
    }
    std::vector<bool> is_pivot(M.dim(j), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<int> freecols;
    for (int c = 0; c < M.dim(j); ++c)
      if (!is_pivot[c]) freecols.push_back(c);
    dims[j] = static_cast<int>(freecols.size());
    // q(v) = (v - sum v[pivot_r] * row_r) restricted to free coordinates
    Mat p(dims[j], M.dim(j));
    Mat l(M.dim(j), dims[j]);
    for (int r = 0; r < dims[j]; ++r) {
      p(r, freecols[r]) = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k)
        p(r, pivots[k]) = -rr(k, freecols[r]);
      l(freecols[r], r) = 1;
    }
    proj[j] = p;
    lift[j] = l;
  }
  std::vector<Mat> a(n + 1), b(n + 1);
  for (int i = 1; i < n; ++i) a[i] = proj[i + 1] * M.alpha(i) * lift[i];
  for (int i = 2; i <= n; ++i) b[i] = proj[i - 1] * M.beta(i) * lift[i];
  RightModule Q(alg, dims, a, b);
  std::vector<Mat> blocks(n + 1);
  for (int j = 1; j <= n; ++j) blocks[j] = proj[j];
  ModuleMap pr(M, Q, blocks);
  return {std::move(Q), std::move(pr), std::move(lift)};
}

inline QuotientWithProjection cokernel_of(const ModuleMap &f) {
  int n = f.source.rank();
  std::vector<Mat> span(n + 1);
  for (int j = 1; j <= n; ++j) span[j] = f.blocks[j];
  return quotient_by(f.target, span);
}

/// Op-twisted standard dual: D(M) has spaces M_j^* and the action of a_i is
/// the transpose of b_{i+1}, the action of b_i the transpose of a_{i-1}.
/// Composing D with the path-reversal isomorphism Lambda ~ Lambda^op turns
/// left modules into right modules; applied twice it is the identity.
inline RightModule duality(const RightModule &M) {
  const Algebra &alg = M.algebra();
  int n = M.rank();
  std::vector<int> dims(n + 1, 0);
  for (int j = 1; j <= n; ++j) dims[j] = M.dim(j);
  std::vector<Mat> a(n + 1), b(n + 1);
  for (int i = 1; i < n; ++i) a[i] = M.beta(i + 1).transpose();
  for (int i = 2; i <= n; ++i) b[i] = M.alpha(i - 1).transpose();
  return RightModule(alg, dims, a, b);
}

/// The indecomposable injective D(Lambda e_i).
inline RightModule injective_module(const Algebra &alg, int i) {
  return duality(RightModule::projective(alg, i));
}

enum class IsoResult { Yes, No, Undecided };

/// Isomorphism test: prefilter by dimension vectors, then search for an
/// invertible map in Hom(M,N), first over small integer coefficient
/// combinations, then randomized rational ones. Never silently guesses:
/// when the prefilters cannot separate and no invertible map was found,
/// reports Undecided.
inline IsoResult is_isomorphic_checked(const RightModule &M, const RightModule &N,
                                       unsigned seed = 12345) {
  if (M.dim_vector() != N.dim_vector()) return IsoResult::No;
  if (M == N) return IsoResult::Yes;
  auto homs = hom_space(M, N);
  if (homs.empty()) return M.total_dim() == 0 ? IsoResult::Yes : IsoResult::No;
  int n = M.rank();
  auto try_combo = [&](const std::vector<Rat> &coef) {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j) {
      Mat b(N.dim(j), M.dim(j));
      for (std::size_t k = 0; k < homs.size(); ++k)
        if (coef[k] != 0) b = b + homs[k].blocks[j].scaled(coef[k]);
      blocks[j] = b;
    }
    for (int j = 1; j <= n; ++j)
      if (!blocks[j].is_invertible()) return false;
    return true;
  };
  // single basis maps and their negatives first
  for (std::size_t k = 0; k < homs.size(); ++k) {
    std::vector<Rat> coef(homs.size(), 0);
    coef[k] = 1;
    if (try_combo(coef)) return IsoResult::Yes;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-8, 8);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Rat> coef(homs.size());
    for (auto &c : coef) c = d(rng);
    if (try_combo(coef)) return IsoResult::Yes;
  }
  // No invertible combination found; separate by Hom dimensions if possible.
  int mn = static_cast<int>(homs.size());
  int nm = hom_dim(N, M);
  int mm = hom_dim(M, M);
  int nn = hom_dim(N, N);
  if (mn != nm || mm != nn || mm != mn) return IsoResult::No;
  // Top and socle multiplicities: Hom against each simple in both directions.
  for (int j = 1; j <= n; ++j) {
    RightModule S = RightModule::simple(M.algebra(), j);
    if (hom_dim(M, S) != hom_dim(N, S)) return IsoResult::No;
    if (hom_dim(S, M) != hom_dim(S, N)) return IsoResult::No;
  }
  return IsoResult::Undecided;
}

inline bool is_isomorphic(const RightModule &M, const RightModule &N, unsigned seed = 12345) {
  IsoResult r = is_isomorphic_checked(M, N, seed);
  if (r == IsoResult::Undecided)
    throw std::runtime_error("isomorphism test undecided");
  return r == IsoResult::Yes;
}

} // namespace tiltn

#endif
