#ifndef TILTN_PERM_HPP
#define TILTN_PERM_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace tiltn {

enum class Side { Left, Right };
enum class LatticeOp { Join, Meet };

/// Permutation of {1,...,n} in one-line notation, w(i) = word()[i-1].
/// Immutable value type; permutations of different rank never mix.
class Perm {
public:
  explicit Perm(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation of {1..n}");
      seen[v - 1] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
  }

  static Perm longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Perm(std::move(w));
  }

  /// The simple transposition s_i exchanging i and i+1 (1 <= i < n).
  static Perm simple(int i, int n) {
    assert(i >= 1 && i < n);
    auto w = identity(n);
    std::swap(w.word_[i - 1], w.word_[i]);
    return w;
  }

  int rank() const { return static_cast<int>(word_.size()); }
  const std::vector<int> &word() const { return word_; }
  int operator()(int i) const { return word_[i - 1]; }

  bool is_identity() const {
    for (int i = 0; i < rank(); ++i)
      if (word_[i] != i + 1) return false;
    return true;
  }

  bool operator==(const Perm &o) const { return word_ == o.word_; }
  bool operator!=(const Perm &o) const { return word_ != o.word_; }
  bool operator<(const Perm &o) const { return word_ < o.word_; }

  /// Composition (u*v)(i) = u(v(i)).
  Perm operator*(const Perm &o) const {
    check_rank(o);
    std::vector<int> w(word_.size());
    for (int i = 0; i < rank(); ++i) w[i] = word_[o.word_[i] - 1];
    return Perm(std::move(w));
  }

  Perm inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 0; i < rank(); ++i) w[word_[i] - 1] = i + 1;
    return Perm(std::move(w));
  }

  /// Number of inversions.
  int length() const {
    int l = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = i + 1; j < rank(); ++j)
        if (word_[i] > word_[j]) ++l;
    return l;
  }

  /// i is a right descent iff l(w s_i) < l(w), equivalently w(i) > w(i+1);
  /// a left descent iff l(s_i w) < l(w).
  std::set<int> descents(Side side) const {
    std::set<int> d;
    for (int i = 1; i < rank(); ++i) {
      if (side == Side::Right) {
        if (word_[i - 1] > word_[i]) d.insert(i);
      } else {
        if (inverse_position(i) > inverse_position(i + 1)) d.insert(i);
      }
    }
    return d;
  }

  /// Right-descent set as a bitmask (bit i-1 set iff i is a descent).
  std::uint32_t right_descent_mask() const {
    std::uint32_t m = 0;
    for (int i = 1; i < rank(); ++i)
      if (word_[i - 1] > word_[i]) m |= (1u << (i - 1));
    return m;
  }

  bool has_descent(int i, Side side) const {
    if (side == Side::Right) return word_[i - 1] > word_[i];
    return inverse_position(i) > inverse_position(i + 1);
  }

  /// Lexicographically smallest reduced word, by greedily stripping the
  /// smallest left descent: w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word() const {
    std::vector<int> res;
    Perm w = *this;
    while (!w.is_identity()) {
      int i = 1;
      while (!w.has_descent(i, Side::Left)) ++i;
      res.push_back(i);
      w = Perm::simple(i, rank()) * w;
    }
    return res;
  }

  /// v <= w in the chosen weak order (length-additivity definition).
  static bool weak_le(const Perm &v, const Perm &w, Side side) {
    v.check_rank(w);
    if (side == Side::Left)
      return w.length() == v.length() + (w * v.inverse()).length();
    return w.length() == v.length() + (v.inverse() * w).length();
  }

  static Perm weak_lattice_op(const Perm &v, const Perm &w, Side side, LatticeOp kind);

  /// All n! permutations, in lexicographic one-line order.
  static std::vector<Perm> all(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> res;
    do {
      res.push_back(Perm(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return res;
  }

  void check_rank(const Perm &o) const {
    if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  }

private:
  int inverse_position(int v) const {
    for (int i = 0; i < rank(); ++i)
      if (word_[i] == v) return i + 1;
    return 0;
  }

  std::vector<int> word_;
};

namespace detail {

/// Right-weak-order join via inversion sets: Inv(w) = {(a,b) : a < b,
/// w^-1(a) > w^-1(b)}. The join's inversion set is the transitive closure
/// of the union.
inline Perm join_right_closure(const Perm &v, const Perm &w) {
  int n = v.rank();
  std::vector<std::vector<bool>> inv(n + 1, std::vector<bool>(n + 1, false));
  auto add_inversions = [&](const Perm &p) {
    Perm pi = p.inverse();
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (pi(a) > pi(b)) inv[a][b] = true;
  };
  add_inversions(v);
  add_inversions(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          if (inv[a][b] && inv[b][c] && !inv[a][c]) {
            inv[a][c] = true;
            changed = true;
          }
  }
  // Sort values so that a precedes b (a < b) unless (a,b) is an inversion.
  std::vector<int> vals(n);
  std::iota(vals.begin(), vals.end(), 1);
  std::stable_sort(vals.begin(), vals.end(), [&](int a, int b) {
    if (a < b) return !inv[a][b];
    return bool(inv[b][a]);
  });
  // vals lists values by position, i.e. the one-line notation itself.
  return Perm(vals);
}

inline Perm exhaustive_lattice_op(const Perm &v, const Perm &w, Side side, LatticeOp kind) {
  int n = v.rank();
  std::vector<Perm> bounds;
  for (const Perm &u : Perm::all(n)) {
    bool ok = (kind == LatticeOp::Join)
                  ? Perm::weak_le(v, u, side) && Perm::weak_le(w, u, side)
                  : Perm::weak_le(u, v, side) && Perm::weak_le(u, w, side);
    if (ok) bounds.push_back(u);
  }
  const Perm *best = nullptr;
  for (const Perm &u : bounds) {
    bool extremal = true;
    for (const Perm &x : bounds) {
      bool le = (kind == LatticeOp::Join) ? Perm::weak_le(u, x, side)
                                          : Perm::weak_le(x, u, side);
      if (!le) {
        extremal = false;
        break;
      }
    }
    if (extremal) {
      best = &u;
      break;
    }
  }
  if (!best) throw std::logic_error("weak order is not a lattice?");
  return *best;
}

} // namespace detail

inline Perm Perm::weak_lattice_op(const Perm &v, const Perm &w, Side side, LatticeOp kind) {
  v.check_rank(w);
  int n = v.rank();
  if (n <= 5) return detail::exhaustive_lattice_op(v, w, side, kind);
  // Reduce everything to the right-order join computed by inversion-set
  // closure: left order transports via inverse, meets via u -> u w_0.
  auto join_r = [&](const Perm &a, const Perm &b) { return detail::join_right_closure(a, b); };
  Perm w0 = Perm::longest(n);
  if (kind == LatticeOp::Join) {
    if (side == Side::Right) return join_r(v, w);
    return join_r(v.inverse(), w.inverse()).inverse();
  }
  if (side == Side::Right) return join_r(v * w0, w * w0) * w0;
  return w0 * join_r((w0 * v).inverse(), (w0 * w).inverse()).inverse();
}

} // namespace tiltn

#endif
