#ifndef TILTN_BIMODULE_HPP
#define TILTN_BIMODULE_HPP

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homology.hpp"
#include "module.hpp"

namespace tiltn {

/// Bimodule presentation of a tilting module T: the rows e_i T as right
/// modules together with the left multiplications by the arrows,
/// la[i] : e_{i+1}T -> e_iT (by a_i) and lb[i] : e_{i-1}T -> e_iT (by b_i).
/// The left maps are right-module morphisms and satisfy the defining
/// relations of the algebra acting on the left.
struct Bimodule {
  const Algebra *alg;
  std::vector<RightModule> rows;              // 1-based, rows[i] = e_i T
  std::vector<std::optional<ModuleMap>> la;   // la[i], 1 <= i < n
  std::vector<std::optional<ModuleMap>> lb;   // lb[i], 2 <= i <= n

  int rank() const { return alg->rank(); }

  const RightModule &row(int i) const { return rows[i]; }

  std::vector<std::vector<int>> dim_vectors() const {
    std::vector<std::vector<int>> d;
    for (int i = 1; i <= rank(); ++i) d.push_back(rows[i].dim_vector());
    return d;
  }

  /// Left-module relations: a_1 b_2 = 0 and a_i b_{i+1} = b_i a_{i-1}.
  bool left_relations_hold() const {
    int n = rank();
    for (int j = 1; j <= n; ++j) {
      if (n >= 2 && !(la[1]->blocks[j] * lb[2]->blocks[j]).is_zero()) return false;
      for (int i = 2; i < n; ++i)
        if (!(la[i]->blocks[j] * lb[i + 1]->blocks[j] -
              lb[i]->blocks[j] * la[i - 1]->blocks[j])
                 .is_zero())
          return false;
    }
    return true;
  }

  bool valid() const {
    int n = rank();
    for (int i = 1; i < n; ++i)
      if (!la[i] || !la[i]->intertwines()) return false;
    for (int i = 2; i <= n; ++i)
      if (!lb[i] || !lb[i]->intertwines()) return false;
    return left_relations_hold();
  }
};

/// Lambda as a bimodule over itself: rows are the projectives and the left
/// maps act on valley bases by multiplication with the arrows.
inline Bimodule lambda_bimodule(const Algebra &alg) {
  int n = alg.rank();
  Bimodule B{&alg, {}, std::vector<std::optional<ModuleMap>>(n + 1),
             std::vector<std::optional<ModuleMap>>(n + 1)};
  B.rows.reserve(n + 1);
  B.rows.push_back(RightModule::zero(alg)); // slot 0 unused
  for (int i = 1; i <= n; ++i) B.rows.push_back(RightModule::projective(alg, i));
  for (int i = 1; i < n; ++i) {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j)
      blocks[j] = left_mult_ambient(alg, alg.alpha(i), i, i + 1, j);
    B.la[i].emplace(B.rows[i + 1], B.rows[i], std::move(blocks));
  }
  for (int i = 2; i <= n; ++i) {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j)
      blocks[j] = left_mult_ambient(alg, alg.beta(i), i, i - 1, j);
    B.lb[i].emplace(B.rows[i - 1], B.rows[i], std::move(blocks));
  }
  assert(B.valid());
  return B;
}

/// A two-sided ideal as a bimodule: rows with left multiplication maps.
inline Bimodule bimodule_of_ideal(const Ideal &I) {
  const Algebra &alg = I.algebra();
  int n = alg.rank();
  Bimodule B{&alg, {}, std::vector<std::optional<ModuleMap>>(n + 1),
             std::vector<std::optional<ModuleMap>>(n + 1)};
  B.rows.reserve(n + 1);
  B.rows.push_back(RightModule::zero(alg));
  for (int i = 1; i <= n; ++i) B.rows.push_back(ideal_row_module(I, i));
  for (int i = 1; i < n; ++i)
    B.la[i] = left_mult_map(I, alg.alpha(i), i, i + 1, B.rows[i], B.rows[i + 1]);
  for (int i = 2; i <= n; ++i)
    B.lb[i] = left_mult_map(I, alg.beta(i), i, i - 1, B.rows[i], B.rows[i - 1]);
  assert(B.valid());
  return B;
}

/// Mutation at slot i (1 <= i < n): form the left approximation
/// iota = (a_{i-1} . ; b_{i+1} . ) : e_iT -> e_{i-1}T (+) e_{i+1}T.
/// When iota is injective the new slot i is its cokernel and the left
/// actions transport along the quotient; otherwise the mutation leaves the
/// module interval and nothing is returned.
inline std::optional<Bimodule> mutate(const Bimodule &B, int i) {
  int n = B.rank();
  if (i < 1 || i >= n) throw std::invalid_argument("mutable slots are 1..n-1");
  const Algebra &alg = *B.alg;

  std::vector<const RightModule *> parts;
  if (i >= 2) parts.push_back(&B.rows[i - 1]);
  parts.push_back(&B.rows[i + 1]);
  DirectSum D = DirectSum::of(alg, parts);
  const auto &off_lo = D.offsets[0];                    // rows[i-1] if present
  const auto &off_hi = D.offsets[i >= 2 ? 1 : 0];       // rows[i+1]

  std::vector<Mat> iota(n + 1);
  for (int j = 1; j <= n; ++j) {
    Mat m = i >= 2 ? Mat::vcat(B.la[i - 1]->blocks[j], B.lb[i + 1]->blocks[j])
                   : B.lb[i + 1]->blocks[j];
    iota[j] = m;
  }
  ModuleMap approx(B.rows[i], D.module, iota);
  if (!approx.is_injective()) return std::nullopt;

  auto coker = cokernel_of(approx);
  const RightModule &R = coker.module;

  Bimodule out{&alg, B.rows, B.la, B.lb};
  out.rows[i] = R;

  auto embed_lo = [&](int j, const Mat &m) { // rows[i-1] -> D at vertex j
    Mat e(D.module.dim(j), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) e(off_lo[j] + r, c) = m(r, c);
    return e;
  };
  auto embed_hi = [&](int j, const Mat &m) { // rows[i+1] -> D at vertex j
    Mat e(D.module.dim(j), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) e(off_hi[j] + r, c) = m(r, c);
    return e;
  };

  // incoming maps: a_i . v = [0 (+) v], b_i . u = [-u (+) 0]
  {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j)
      blocks[j] = coker.projection.blocks[j] *
                  embed_hi(j, Mat::identity(B.rows[i + 1].dim(j)));
    out.la[i].emplace(B.rows[i + 1], R, std::move(blocks));
  }
  if (i >= 2) {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j)
      blocks[j] = coker.projection.blocks[j] *
                  embed_lo(j, -Mat::identity(B.rows[i - 1].dim(j)));
    out.lb[i].emplace(B.rows[i - 1], R, std::move(blocks));
  }
  // outgoing maps, defined on classes via the section of the projection:
  // a_{i-1} . [u (+) v] = -a_{i-1}b_i u + a_{i-1}a_i v
  if (i >= 2) {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j) {
      Mat onD = Mat::hcat(-(B.la[i - 1]->blocks[j] * B.lb[i]->blocks[j]),
                          B.la[i - 1]->blocks[j] * B.la[i]->blocks[j]);
      blocks[j] = onD * coker.lift[j];
    }
    out.la[i - 1].emplace(R, B.rows[i - 1], std::move(blocks));
  }
  // b_{i+1} . [u (+) v] = -b_{i+1}b_i u + b_{i+1}a_i v
  {
    std::vector<Mat> blocks(n + 1);
    for (int j = 1; j <= n; ++j) {
      Mat hi = B.lb[i + 1]->blocks[j] * B.la[i]->blocks[j];
      Mat onD = i >= 2
                    ? Mat::hcat(-(B.lb[i + 1]->blocks[j] * B.lb[i]->blocks[j]), hi)
                    : hi;
      blocks[j] = onD * coker.lift[j];
    }
    out.lb[i + 1].emplace(R, B.rows[i + 1], std::move(blocks));
  }
  assert(out.valid());
  return out;
}

} // namespace tiltn

#endif
