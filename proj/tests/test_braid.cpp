#include <doctest.h>

#include <random>
#include <set>

#include <tiltn/braid.hpp>

using namespace tiltn;

TEST_CASE("normal form is left-weighted with non-identity factors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> gen(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> word(trial % 9);
    for (int &g : word) g = gen(rng);
    PositiveBraid b = PositiveBraid::normalize(word, 4);
    CHECK(b.length() == static_cast<int>(word.size()));
    const auto &f = b.factors();
    for (const Perm &p : f) CHECK(!p.is_identity());
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      auto right = f[k].descents(Side::Right);
      for (int d : f[k + 1].descents(Side::Left)) CHECK(right.count(d) == 1);
    }
  }
}

TEST_CASE("normal form is invariant under braid moves") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> gen(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> word(6);
    for (int &g : word) g = gen(rng);
    PositiveBraid b = PositiveBraid::normalize(word, 4);
    // far commutation s_i s_j = s_j s_i
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (std::abs(word[k] - word[k + 1]) >= 2) {
        auto moved = word;
        std::swap(moved[k], moved[k + 1]);
        CHECK(PositiveBraid::normalize(moved, 4) == b);
      }
    }
    // braid move s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    for (std::size_t k = 0; k + 2 < word.size(); ++k) {
      if (std::abs(word[k] - word[k + 1]) == 1 && word[k + 2] == word[k]) {
        auto moved = word;
        moved[k] = word[k + 1];
        moved[k + 1] = word[k];
        moved[k + 2] = word[k + 1];
        CHECK(PositiveBraid::normalize(moved, 4) == b);
      }
    }
  }
}

TEST_CASE("the interval [1, w_+^2] has the expected size") {
  CHECK(interval_w2(1).size() == 1);
  CHECK(interval_w2(2).size() == 3);
  CHECK(interval_w2(3).size() == 19);
  CHECK(interval_w2(4).size() == 211);
}

TEST_CASE("interval elements have at most two factors and pair_form round-trips") {
  for (int n = 2; n <= 4; ++n) {
    for (const PositiveBraid &x : interval_w2(n)) {
      auto [v, w] = pair_form(x);
      CHECK(from_pair(v, w) == x);
    }
  }
}

TEST_CASE("descent pairs biject with the interval") {
  for (int n = 2; n <= 4; ++n) {
    auto pairs = all_descent_pairs(n);
    std::set<PositiveBraid> images;
    for (const auto &p : pairs) images.insert(descent_pair_to_interval(p));
    CHECK(images.size() == pairs.size());
    std::set<PositiveBraid> interval;
    for (const auto &x : interval_w2(n)) interval.insert(x);
    CHECK(images == interval);
  }
}

namespace {

/// Brute-force oracle: x right-divides y iff some positive word z of
/// length l(y) - l(x) satisfies z x = y.
bool right_divides_bruteforce(const PositiveBraid &x, const PositiveBraid &y) {
  int n = x.rank();
  int extra = y.length() - x.length();
  if (extra < 0) return false;
  std::vector<int> z(extra, 1);
  auto advance = [&]() {
    for (int k = extra - 1; k >= 0; --k) {
      if (z[k] < n - 1) {
        ++z[k];
        for (int j = k + 1; j < extra; ++j) z[j] = 1;
        return true;
      }
    }
    return false;
  };
  do {
    auto word = z;
    auto xs = x.word();
    word.insert(word.end(), xs.begin(), xs.end());
    if (PositiveBraid::normalize(word, n) == y) return true;
  } while (extra > 0 && advance());
  return false;
}

} // namespace

TEST_CASE("right-divisibility matches a brute-force search on the interval for n=3") {
  auto interval = interval_w2(3);
  for (const auto &x : interval)
    for (const auto &y : interval)
      CHECK(PositiveBraid::is_right_divisor(x, y) == right_divides_bruteforce(x, y));
}

TEST_CASE("right-divisibility is not read off the last normal-form factor") {
  // Delta * s_1 in B_3 has normal form [321, 21...]; s_2 right-divides it
  // although it is not <= the final factor.
  PositiveBraid y = PositiveBraid::normalize({1, 2, 1, 1}, 3);
  PositiveBraid s2 = PositiveBraid::generator(2, 3);
  Perm last = y.factors().back();
  CHECK(!Perm::weak_le(Perm::simple(2, 3), last, Side::Right));
  CHECK(PositiveBraid::is_right_divisor(s2, y));
}

TEST_CASE("every interval element right-divides w_+^2") {
  for (int n = 2; n <= 4; ++n) {
    PositiveBraid w2 = PositiveBraid::half_twist(n) * PositiveBraid::half_twist(n);
    for (const auto &x : interval_w2(n)) CHECK(PositiveBraid::le_L(x, w2));
  }
}

TEST_CASE("half twist is a single Garside factor") {
  for (int n = 2; n <= 5; ++n) {
    PositiveBraid d = PositiveBraid::half_twist(n);
    CHECK(d.factors().size() == 1);
    CHECK(d.factors()[0] == Perm::longest(n));
    CHECK(d.length() == n * (n - 1) / 2);
  }
}
