#include <doctest.h>

#include <tiltn/braid.hpp>
#include <tiltn/counting.hpp>

using namespace tiltn;

TEST_CASE("binomials and factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("t_n recursion reproduces the known values") {
  std::vector<long> expected = {1, 1, 3, 19, 211, 3651, 90921, 3081513};
  for (int n = 0; n <= 7; ++n) CHECK(t_recursive(n) == expected[n]);
}

TEST_CASE("descent-pair count equals the recursion") {
  for (int n = 0; n <= 7; ++n) CHECK(t_by_pairs(n) == t_recursive(n));
}

TEST_CASE("interval size equals t_n") {
  for (int n = 1; n <= 4; ++n)
    CHECK(BigInt(interval_w2(n).size()) == t_recursive(n));
}
