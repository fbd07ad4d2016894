#ifndef TILTN_EXCEPTIONAL_HPP
#define TILTN_EXCEPTIONAL_HPP

#include <stdexcept>
#include <vector>

#include "homology.hpp"
#include "tilt.hpp"

namespace tiltn {

/// The standard module Delta_k (k = i* = n - i), cokernel of
/// b_{i+1} . : e_i Lambda -> e_{i+1} Lambda. Supported on vertices
/// n-k+1..n with one-dimensional spaces.
inline RightModule standard_module(const Algebra &alg, int k) {
  int n = alg.rank();
  if (k < 1 || k > n) throw std::invalid_argument("standard index out of range");
  int i = n - k;
  RightModule target = RightModule::projective(alg, i + 1);
  if (i == 0) return target; // cokernel of the zero map from e_0 = 0
  RightModule source = RightModule::projective(alg, i);
  std::vector<Mat> blocks(n + 1);
  for (int j = 1; j <= n; ++j)
    blocks[j] = left_mult_ambient(alg, alg.beta(i + 1), i + 1, i, j);
  ModuleMap inc(source, target, std::move(blocks));
  assert(inc.is_injective());
  return cokernel_of(inc).module;
}

/// E_{w,i*} = coker(e_i I_w -> e_{i+1} I_w), the standard module twisted
/// by the tilting ideal I_w.
inline RightModule exceptional_module(const Ideal &I, int k) {
  const Algebra &alg = I.algebra();
  int n = alg.rank();
  if (k < 1 || k > n) throw std::invalid_argument("index out of range");
  int i = n - k;
  RightModule target = ideal_row_module(I, i + 1);
  if (i == 0) return target;
  RightModule source = ideal_row_module(I, i);
  ModuleMap inc = left_mult_map(I, alg.beta(i + 1), i + 1, i, target, source);
  if (!inc.is_injective())
    throw std::logic_error("left multiplication on ideal rows is not injective");
  return cokernel_of(inc).module;
}

struct ExceptionalSequence {
  std::vector<RightModule> modules; // 0-based, position k-1 holds E_k
};

/// E_w = (E_{w,1}, ..., E_{w,n}).
inline ExceptionalSequence exceptional_sequence(const Algebra &alg, const Perm &w) {
  Ideal I = ideal_I_w(alg, w);
  ExceptionalSequence E;
  for (int k = 1; k <= alg.rank(); ++k) E.modules.push_back(exceptional_module(I, k));
  return E;
}

/// Exceptionality of each member (End = K, no self-extensions) plus
/// Hom/Ext vanishing from later to earlier members; fullness = n members.
inline bool is_full_exceptional_sequence(const Algebra &alg,
                                         const std::vector<RightModule> &E) {
  if (static_cast<int>(E.size()) != alg.rank()) return false;
  std::vector<Resolution> res;
  for (const RightModule &M : E) res.push_back(projective_resolution(M));
  for (std::size_t j = 0; j < E.size(); ++j) {
    auto self = ext_dims(res[j], E[j]);
    if (self[0] != 1 || self[1] != 0 || self[2] != 0) return false;
    for (std::size_t i = 0; i < j; ++i) {
      auto e = ext_dims(res[j], E[i]); // Ext^q(E_j, E_i), i < j
      if (e[0] != 0 || e[1] != 0 || e[2] != 0) return false;
    }
  }
  return true;
}

/// Isomorphism classes of e_1 T_x over the interval (the exceptional
/// modules); requires a poset built with modules.
inline std::vector<RightModule> enumerate_exceptional_modules(const TiltingPoset &P) {
  std::vector<RightModule> classes;
  for (const auto &obj : P.objects) {
    const RightModule &M = obj->slot(1);
    bool fresh = true;
    for (const RightModule &C : classes)
      if (is_isomorphic(C, M)) {
        fresh = false;
        break;
      }
    if (fresh) classes.push_back(M);
  }
  return classes;
}

/// The extension 0 -> S -> X -> Delta -> 0 along a cocycle f : P_lo -> S,
/// as the pushout of the standard sequence 0 -> P_lo -> P_hi -> Delta -> 0.
inline RightModule extension_by_cocycle(const Algebra &alg, int i, const ModuleMap &f) {
  int n = alg.rank();
  RightModule Plo = RightModule::projective(alg, i);
  RightModule Phi = RightModule::projective(alg, i + 1);
  const RightModule &S = f.target;
  DirectSum D = DirectSum::of(alg, {&S, &Phi});
  std::vector<Mat> span(n + 1);
  for (int j = 1; j <= n; ++j) {
    Mat inc = left_mult_ambient(alg, alg.beta(i + 1), i + 1, i, j);
    span[j] = Mat::vcat(f.blocks[j], -inc);
  }
  return quotient_by(D.module, span).module;
}

/// Verify L_{i*}(E_1) = E_{s_i}: the mutated member is the universal
/// extension of Delta_{i*} by S_i, unique because Ext^1 is one-dimensional.
inline bool left_mutation_check(const Algebra &alg, int i) {
  int n = alg.rank();
  if (i < 1 || i >= n) throw std::invalid_argument("mutable positions are 1..n-1");
  int istar = n - i;
  RightModule Delta = standard_module(alg, istar);
  RightModule S = RightModule::simple(alg, i);
  if (ext_dim(Delta, S, 1) != 1)
    throw std::logic_error("Ext^1(Delta_{i*}, S_i) is not one-dimensional");

  // cocycles f : e_i Lambda -> S_i; Hom is one-dimensional
  RightModule Plo = RightModule::projective(alg, i);
  auto homs = hom_space(Plo, S);
  if (homs.size() != 1) throw std::logic_error("unexpected Hom(e_i Lambda, S_i)");
  RightModule X = extension_by_cocycle(alg, i, homs[0]);
  {
    // a scaled cocycle gives the same extension up to isomorphism, and the
    // extension is non-split
    ModuleMap scaled(homs[0].source, homs[0].target, [&] {
      std::vector<Mat> b;
      for (const Mat &m : homs[0].blocks) b.push_back(m.scaled(3));
      return b;
    }());
    if (!is_isomorphic(X, extension_by_cocycle(alg, i, scaled))) return false;
    DirectSum split = DirectSum::of(alg, {&S, &Delta});
    if (is_isomorphic_checked(X, split.module) != IsoResult::No) return false;
    if (X.total_dim() != S.total_dim() + Delta.total_dim()) return false;
  }

  // L_{i*}(E_1): positions i* and i*+1 hold X and Delta_{i*}
  ExceptionalSequence base = exceptional_sequence(alg, Perm::identity(n));
  std::vector<RightModule> mutated;
  for (int k = 1; k <= n; ++k) {
    if (k == istar)
      mutated.push_back(X);
    else if (k == istar + 1)
      mutated.push_back(Delta);
    else
      mutated.push_back(base.modules[k - 1]);
  }
  if (!is_full_exceptional_sequence(alg, mutated)) return false;
  ExceptionalSequence target = exceptional_sequence(alg, Perm::simple(i, n));
  for (int k = 0; k < n; ++k)
    if (!is_isomorphic(mutated[k], target.modules[k])) return false;
  return true;
}

} // namespace tiltn

#endif
