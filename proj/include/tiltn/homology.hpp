#ifndef TILTN_HOMOLOGY_HPP
#define TILTN_HOMOLOGY_HPP

#include <array>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"
#include "module.hpp"

namespace tiltn {

/// Minimal projective cover P = (+) e_{verts[t]} Lambda -> M, recorded by
/// its summand vertices and the generator images (a lift of a basis of
/// top M = M / M rad).
struct ProjectiveCover {
  std::vector<int> verts;
  std::vector<Mat> gens; // gens[t] in M_{verts[t]}
  RightModule P;
  ModuleMap map;
};

/// Column span of M rad at every vertex.
inline std::vector<Mat> radical_span(const RightModule &M) {
  int n = M.rank();
  std::vector<Mat> span(n + 1);
  for (int j = 1; j <= n; ++j) {
    Mat s(M.dim(j), 0);
    if (j >= 2) s = Mat::hcat(s, M.alpha(j - 1));
    if (j < n) s = Mat::hcat(s, M.beta(j + 1));
    span[j] = s;
  }
  return span;
}

inline RightModule projective_sum(const Algebra &alg, const std::vector<int> &verts) {
  std::vector<RightModule> parts;
  parts.reserve(verts.size());
  for (int v : verts) parts.push_back(RightModule::projective(alg, v));
  std::vector<const RightModule *> ptrs;
  for (const auto &p : parts) ptrs.push_back(&p);
  return DirectSum::of(alg, ptrs).module;
}

/// Offset of summand t inside the direct sum at vertex j.
inline int proj_offset(const Algebra &alg, const std::vector<int> &verts, std::size_t t, int j) {
  int off = 0;
  for (std::size_t s = 0; s < t; ++s) off += std::min(verts[s], j);
  return off;
}

inline ProjectiveCover projective_cover(const RightModule &M) {
  const Algebra &alg = M.algebra();
  int n = M.rank();
  auto rad = radical_span(M);
  auto q = quotient_by(M, rad);
  std::vector<int> verts;
  std::vector<Mat> gens;
  for (int j = 1; j <= n; ++j) {
    // lifts of the top basis at vertex j: right-invert the projection
    int topdim = q.module.dim(j);
    if (topdim == 0) continue;
    // the projection has a section on free coordinates; recover lifts by
    // solving proj * x = e_r
    for (int r = 0; r < topdim; ++r) {
      Mat e(topdim, 1);
      e(r, 0) = 1;
      Mat x;
      bool ok = q.projection.blocks[j].solve(e, x);
      assert(ok);
      (void)ok;
      verts.push_back(j);
      gens.push_back(x);
    }
  }
  RightModule P = projective_sum(alg, verts);
  std::vector<Mat> blocks(n + 1);
  for (int j = 1; j <= n; ++j) {
    Mat b(M.dim(j), P.dim(j));
    for (std::size_t t = 0; t < verts.size(); ++t) {
      int off = proj_offset(alg, verts, t, j);
      for (int v = 1; v <= std::min(verts[t], j); ++v) {
        Mat col = M.act_path(alg.index_of(verts[t], j, v)) * gens[t];
        for (int r = 0; r < M.dim(j); ++r) b(r, off + v - 1) = col(r, 0);
      }
    }
    blocks[j] = b;
  }
  ModuleMap cover(P, M, blocks);
  assert(cover.is_surjective());
  return {std::move(verts), std::move(gens), std::move(P), std::move(cover)};
}

/// Minimal projective resolution 0 -> P2 -> P1 -> P0 -> M -> 0; the
/// differentials are matrices over the algebra: d1[t][s] in
/// e_{v0[t]} Lambda e_{v1[s]} describes the map component from the s-th
/// summand of P1 to the t-th summand of P0 (left multiplication).
struct Resolution {
  std::vector<int> v0, v1, v2;
  std::vector<std::vector<Mat>> d1; // d1[t][s], algebra coordinate vectors
  std::vector<std::vector<Mat>> d2;
};

namespace detail {

/// Express the generator images of a cover of a submodule K of a
/// projective sum (+) e_{verts} Lambda as an algebra matrix.
inline std::vector<std::vector<Mat>> algebra_matrix(const Algebra &alg,
                                                    const std::vector<int> &amb_verts,
                                                    const std::vector<int> &sub_verts,
                                                    const std::vector<Mat> &images) {
  std::vector<std::vector<Mat>> d(amb_verts.size(),
                                  std::vector<Mat>(sub_verts.size(), alg.zero_element()));
  for (std::size_t s = 0; s < sub_verts.size(); ++s) {
    int b = sub_verts[s];
    const Mat &w = images[s]; // element of the ambient sum at vertex b
    for (std::size_t t = 0; t < amb_verts.size(); ++t) {
      int off = proj_offset(alg, amb_verts, t, b);
      Mat x = alg.zero_element();
      for (int v = 1; v <= std::min(amb_verts[t], b); ++v)
        x(alg.index_of(amb_verts[t], b, v), 0) = w(off + v - 1, 0);
      d[t][s] = x;
    }
  }
  return d;
}

} // namespace detail

inline Resolution projective_resolution(const RightModule &M) {
  const Algebra &alg = M.algebra();
  Resolution res;
  auto c0 = projective_cover(M);
  res.v0 = c0.verts;
  auto k0 = kernel_of(c0.map);
  if (k0.module.total_dim() == 0) return res;
  auto c1 = projective_cover(k0.module);
  res.v1 = c1.verts;
  {
    std::vector<Mat> images;
    for (std::size_t s = 0; s < c1.verts.size(); ++s)
      images.push_back(k0.inclusion.blocks[c1.verts[s]] * c1.gens[s]);
    res.d1 = detail::algebra_matrix(alg, res.v0, res.v1, images);
  }
  auto k1 = kernel_of(c1.map);
  if (k1.module.total_dim() == 0) return res;
  auto c2 = projective_cover(k1.module);
  res.v2 = c2.verts;
  {
    std::vector<Mat> images;
    for (std::size_t s = 0; s < c2.verts.size(); ++s)
      images.push_back(k1.inclusion.blocks[c2.verts[s]] * c2.gens[s]);
    res.d2 = detail::algebra_matrix(alg, res.v1, res.v2, images);
  }
  auto k2 = kernel_of(c2.map);
  if (k2.module.total_dim() != 0)
    throw std::logic_error("projective resolution exceeds length 2");
  return res;
}

inline int projective_dimension(const Resolution &r) {
  if (!r.v2.empty()) return 2;
  if (!r.v1.empty()) return 1;
  return 0;
}

/// Dimensions of Ext^0, Ext^1, Ext^2 computed as cohomology of
/// Hom(P_*, N); Hom((+) e_a Lambda, N) is identified with (+) N_a and the
/// induced maps act by the right action of the differential entries.
inline std::array<int, 3> ext_dims(const Resolution &r, const RightModule &N) {
  auto cochain_dim = [&](const std::vector<int> &verts) {
    int d = 0;
    for (int a : verts) d += N.dim(a);
    return d;
  };
  auto induced = [&](const std::vector<int> &from_verts, const std::vector<int> &to_verts,
                     const std::vector<std::vector<Mat>> &d) {
    // map (+)_t N_{from[t]} -> (+)_s N_{to[s]}, block (s,t) = action of d[t][s]
    int rows = cochain_dim(to_verts);
    int cols = cochain_dim(from_verts);
    Mat m(rows, cols);
    int roff = 0;
    for (std::size_t s = 0; s < to_verts.size(); ++s) {
      int coff = 0;
      for (std::size_t t = 0; t < from_verts.size(); ++t) {
        Mat blk = N.act_element(d[t][s], from_verts[t], to_verts[s]);
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j) m(roff + i, coff + j) = blk(i, j);
        coff += N.dim(from_verts[t]);
      }
      roff += N.dim(to_verts[s]);
    }
    return m;
  };
  int c0 = cochain_dim(r.v0), c1 = cochain_dim(r.v1), c2 = cochain_dim(r.v2);
  int rank_u = 0, rank_v = 0;
  if (c0 > 0 && c1 > 0) rank_u = static_cast<int>(induced(r.v0, r.v1, r.d1).rank());
  if (c1 > 0 && c2 > 0) rank_v = static_cast<int>(induced(r.v1, r.v2, r.d2).rank());
  return {c0 - rank_u, c1 - rank_v - rank_u, c2 - rank_v};
}

inline int ext_dim(const RightModule &M, const RightModule &N, int q) {
  if (q < 0 || q > 2) throw std::invalid_argument("q must be 0, 1 or 2");
  auto r = projective_resolution(M);
  return ext_dims(r, N)[q];
}

/// The i-th row e_i I of an ideal, as a quiver representation with vertex
/// spaces e_i I e_j.
inline RightModule ideal_row_module(const Ideal &I, int i) {
  const Algebra &alg = I.algebra();
  int n = alg.rank();
  RightModule amb = RightModule::projective(alg, i);
  std::vector<Mat> basis(n + 1);
  std::vector<int> dims(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    basis[j] = I.block_basis(i, j);
    dims[j] = static_cast<int>(basis[j].cols());
  }
  auto induced = [&](const Mat &ambient, int from, int to) {
    Mat img = ambient * basis[from];
    Mat x;
    bool ok = basis[to].solve(img, x);
    assert(ok && "ideal block not arrow-stable?");
    (void)ok;
    return x;
  };
  std::vector<Mat> a(n + 1), b(n + 1);
  for (int j = 1; j < n; ++j) a[j] = induced(amb.alpha(j), j, j + 1);
  for (int j = 2; j <= n; ++j) b[j] = induced(amb.beta(j), j, j - 1);
  return RightModule(alg, dims, a, b);
}

/// Ambient matrix of left multiplication by x (supported on the (a,b)
/// block) from e_b Lambda e_j to e_a Lambda e_j, in valley bases.
inline Mat left_mult_ambient(const Algebra &alg, const Mat &x, int a, int b, int j) {
  Mat m(std::min(a, j), std::min(b, j));
  for (int k = 0; k < alg.dim(); ++k) {
    if (x(k, 0) == 0) continue;
    const BasisPath &p = alg.path(k);
    if (p.src != a || p.tgt != b) continue;
    for (int v = 1; v <= std::min(b, j); ++v) {
      int u = p.valley + v - b; // (a,b,valley) * (b,j,v)
      if (u >= 1) m(u - 1, v - 1) += x(k, 0);
    }
  }
  return m;
}

/// Map e_b I -> e_a I, y -> x y, in the chosen row bases.
inline ModuleMap left_mult_map(const Ideal &I, const Mat &x, int a, int b,
                               const RightModule &row_a, const RightModule &row_b) {
  const Algebra &alg = I.algebra();
  int n = alg.rank();
  std::vector<Mat> blocks(n + 1);
  for (int j = 1; j <= n; ++j) {
    Mat amb = left_mult_ambient(alg, x, a, b, j);
    Mat img = amb * I.block_basis(b, j);
    Mat coords;
    bool ok = I.block_basis(a, j).solve(img, coords);
    assert(ok && "ideal not closed under left multiplication?");
    (void)ok;
    blocks[j] = coords;
  }
  return ModuleMap(row_b, row_a, std::move(blocks));
}

/// M (x)_Lambda I for proj.dim M <= 1, via a projective presentation
/// P1 -> P0 -> M -> 0: replace each summand e_a Lambda by e_a I and take
/// the cokernel of the induced map.
inline RightModule tensor_with_ideal(const RightModule &M, const Ideal &I) {
  const Algebra &alg = M.algebra();
  assert(&alg == &I.algebra());
  auto res = projective_resolution(M);
  if (!res.v2.empty())
    throw std::invalid_argument("tensor_with_ideal requires proj.dim <= 1");
  std::vector<RightModule> rows0, rows1;
  for (int a : res.v0) rows0.push_back(ideal_row_module(I, a));
  for (int b : res.v1) rows1.push_back(ideal_row_module(I, b));
  std::vector<const RightModule *> p0, p1;
  for (const auto &m : rows0) p0.push_back(&m);
  for (const auto &m : rows1) p1.push_back(&m);
  DirectSum S0 = DirectSum::of(alg, p0);
  DirectSum S1 = DirectSum::of(alg, p1);
  int n = alg.rank();
  std::vector<Mat> blocks(n + 1);
  for (int j = 1; j <= n; ++j) {
    Mat blk(S0.module.dim(j), S1.module.dim(j));
    for (std::size_t s = 0; s < res.v1.size(); ++s) {
      for (std::size_t t = 0; t < res.v0.size(); ++t) {
        if (res.d1[t][s].is_zero()) continue;
        ModuleMap lm = left_mult_map(I, res.d1[t][s], res.v0[t], res.v1[s], rows0[t], rows1[s]);
        const Mat &sub = lm.blocks[j];
        for (std::size_t r = 0; r < sub.rows(); ++r)
          for (std::size_t c = 0; c < sub.cols(); ++c)
            blk(S0.offsets[t][j] + r, S1.offsets[s][j] + c) = sub(r, c);
      }
    }
    blocks[j] = blk;
  }
  ModuleMap f(S1.module, S0.module, std::move(blocks));
  return cokernel_of(f).module;
}

} // namespace tiltn

#endif
