#ifndef TILTN_BRAID_HPP
#define TILTN_BRAID_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace tiltn {

/// Positive braid in left-greedy (Garside) normal form: an ordered list of
/// non-identity permutation factors, left-weighted at every junction:
/// descents(a, Right) contains descents(b, Left) for adjacent (a,b).
/// Equality of factor lists is equality in B_+.
class PositiveBraid {
public:
  explicit PositiveBraid(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
  }

  PositiveBraid(int n, std::vector<Perm> factors) : n_(n), factors_(std::move(factors)) {}

  /// Left-greedy normalization of a generator word by local sliding:
  /// for adjacent factors (a,b), any i in descents(b,Left) \ descents(a,Right)
  /// slides from b's head to a's tail until every junction is left-weighted.
  static PositiveBraid normalize(const std::vector<int> &word, int n) {
    for (int i : word)
      if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    PositiveBraid b(n);
    for (int i : word) b.push_generator(i);
    return b;
  }

  int rank() const { return n_; }
  const std::vector<Perm> &factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }

  int length() const {
    int l = 0;
    for (const auto &f : factors_) l += f.length();
    return l;
  }

  /// Concatenated reduced words of the factors; a positive word for *this.
  std::vector<int> word() const {
    std::vector<int> w;
    for (const auto &f : factors_) {
      auto r = f.reduced_word();
      w.insert(w.end(), r.begin(), r.end());
    }
    return w;
  }

  bool operator==(const PositiveBraid &o) const {
    return n_ == o.n_ && factors_ == o.factors_;
  }
  bool operator!=(const PositiveBraid &o) const { return !(*this == o); }
  bool operator<(const PositiveBraid &o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return key() < o.key();
  }

  /// Flattened comparison key: factor count then one-line words.
  std::vector<int> key() const {
    std::vector<int> k;
    k.push_back(static_cast<int>(factors_.size()));
    for (const auto &f : factors_) {
      const auto &w = f.word();
      k.insert(k.end(), w.begin(), w.end());
    }
    return k;
  }

  PositiveBraid operator*(const PositiveBraid &o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
    auto w = word();
    auto v = o.word();
    w.insert(w.end(), v.begin(), v.end());
    return normalize(w, n_);
  }

  /// Image under the word-reversal anti-automorphism of B_+.
  PositiveBraid reversed() const {
    auto w = word();
    std::reverse(w.begin(), w.end());
    return normalize(w, n_);
  }

  static PositiveBraid generator(int i, int n) { return normalize({i}, n); }

  /// Embedding S_n -> B_+, w -> underline(w).
  static PositiveBraid from_perm(const Perm &p) {
    return normalize(p.reduced_word(), p.rank());
  }

  static PositiveBraid half_twist(int n) { return from_perm(Perm::longest(n)); }

  /// True iff y = z * x for some z in B_+ (i.e. x <=_L y). Decided inside
  /// the positive monoid by peeling atoms on the left of the reversed
  /// braids: an atom s_i left-divides a braid iff i is a left descent of
  /// the first normal-form factor.
  static bool is_right_divisor(const PositiveBraid &x, const PositiveBraid &y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
    return is_left_divisor(x.reversed(), y.reversed());
  }

  static bool is_left_divisor(const PositiveBraid &x, const PositiveBraid &y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
    PositiveBraid rest = y;
    for (int i : x.word()) {
      if (rest.factors_.empty()) return false;
      const Perm &head = rest.factors_.front();
      if (!head.has_descent(i, Side::Left)) return false;
      std::vector<int> w;
      {
        Perm stripped = Perm::simple(i, rest.n_) * head;
        auto r = stripped.reduced_word();
        w.insert(w.end(), r.begin(), r.end());
      }
      for (std::size_t k = 1; k < rest.factors_.size(); ++k) {
        auto r = rest.factors_[k].reduced_word();
        w.insert(w.end(), r.begin(), r.end());
      }
      rest = normalize(w, rest.n_);
    }
    return true;
  }

  /// x <=_L y, the right-divisibility order on B_+.
  static bool le_L(const PositiveBraid &x, const PositiveBraid &y) {
    return is_right_divisor(x, y);
  }

private:
  void push_generator(int i) {
    factors_.push_back(Perm::simple(i, n_));
    // Slide leftward until every junction is left-weighted.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < factors_.size(); ++k) {
        Perm &a = factors_[k];
        Perm &b = factors_[k + 1];
        bool moved = true;
        while (moved) {
          moved = false;
          for (int d = 1; d < n_; ++d) {
            if (b.has_descent(d, Side::Left) && !a.has_descent(d, Side::Right)) {
              a = a * Perm::simple(d, n_);
              b = Perm::simple(d, n_) * b;
              moved = true;
              changed = true;
              if (b.is_identity()) break;
            }
          }
          if (b.is_identity()) break;
        }
      }
      factors_.erase(std::remove_if(factors_.begin(), factors_.end(),
                                    [](const Perm &p) { return p.is_identity(); }),
                     factors_.end());
    }
  }

  int n_;
  std::vector<Perm> factors_;
};

/// Image of a positive braid under the projection B_+ -> S_n.
inline Perm perm_image(const PositiveBraid &x) {
  Perm p = Perm::identity(x.rank());
  for (const Perm &f : x.factors()) p = p * f;
  return p;
}

/// Pair of permutations without common right descent; these index the
/// rational permutation braids.
struct DescentPair {
  Perm v;
  Perm w;

  DescentPair(Perm v_, Perm w_) : v(std::move(v_)), w(std::move(w_)) {
    v.check_rank(w);
    if ((v.right_descent_mask() & w.right_descent_mask()) != 0)
      throw std::invalid_argument("pair has a common right descent");
  }
};

/// The full interval [1, w_+^2]_L = { normalize(v w) : v, w in S_n },
/// deduplicated by normal form. Every element has at most two factors.
inline std::vector<PositiveBraid> interval_w2(int n) {
  std::set<PositiveBraid> seen;
  auto perms = Perm::all(n);
  for (const auto &v : perms) {
    auto vw = v.reduced_word();
    for (const auto &w : perms) {
      auto word = vw;
      auto r = w.reduced_word();
      word.insert(word.end(), r.begin(), r.end());
      seen.insert(PositiveBraid::normalize(word, n));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Canonical 2-factor reading (v, w) of an interval element, with identity
/// padding on either end. Throws if the braid has three or more factors.
inline std::pair<Perm, Perm> pair_form(const PositiveBraid &x) {
  const auto &f = x.factors();
  if (f.size() > 2)
    throw std::invalid_argument("braid is not in [1, w_+^2]_L");
  Perm id = Perm::identity(x.rank());
  if (f.empty()) return {id, id};
  if (f.size() == 1) return {f[0], id};
  return {f[0], f[1]};
}

inline PositiveBraid from_pair(const Perm &v, const Perm &w) {
  v.check_rank(w);
  auto word = v.reduced_word();
  auto r = w.reduced_word();
  word.insert(word.end(), r.begin(), r.end());
  return PositiveBraid::normalize(word, v.rank());
}

/// The intro bijection (v,w) -> v w^-1 into [w_-,w_+]_R composed with the
/// anti-isomorphism x -> x^-1 w_+ into [1,w_+^2]_L, computed positively:
/// (v w^-1)^-1 w_+ = w * underline(v^-1 w_0).
inline PositiveBraid descent_pair_to_interval(const DescentPair &p) {
  int n = p.v.rank();
  Perm tail = p.v.inverse() * Perm::longest(n);
  auto word = p.w.reduced_word();
  auto r = tail.reduced_word();
  word.insert(word.end(), r.begin(), r.end());
  return PositiveBraid::normalize(word, n);
}

/// All descent pairs for rank n.
inline std::vector<DescentPair> all_descent_pairs(int n) {
  std::vector<DescentPair> res;
  auto perms = Perm::all(n);
  for (const auto &v : perms)
    for (const auto &w : perms)
      if ((v.right_descent_mask() & w.right_descent_mask()) == 0)
        res.emplace_back(v, w);
  return res;
}

} // namespace tiltn

#endif
