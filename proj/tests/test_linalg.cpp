#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sr2se/linalg.hpp"

using namespace sr2se;

namespace {

IntMatrix random_int(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("poly arithmetic") {
  Poly a({-2, 0, 1});
  CHECK(a == Poly::x2_minus(2));
  CHECK(a.pow(2) == Poly({4, 0, -4, 0, 1}));
  CHECK(Poly({1, 1}).reflect() == Poly({1, -1}));
  CHECK((a - a).is_zero());
  CHECK(to_string(Poly::x2_minus(5) * Poly::x2_minus(1)) == "x^4 - 6x^2 + 5");
  CHECK(to_string(Poly({0, -1})) == "-x");
}

TEST_CASE("char_poly small cases") {
  IntMatrix k2(2, 2);
  k2(0, 1) = k2(1, 0) = 1;
  CHECK(char_poly(k2) == Poly::x2_minus(1));
  CHECK(char_poly(IntMatrix(0, 0)) == Poly({1}));
  CHECK(char_poly(IntMatrix(3, 3)) == Poly::monomial(3));
}

TEST_CASE("char_poly agrees with trace-recurrence oracle") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + rng() % 12;
    auto m = random_int(n, n, -3, 3, rng);
    CHECK(char_poly(m) == oracle::charpoly(m));
  }
  // Large entries force several primes in the CRT lift.
  auto big = random_int(8, 8, -1000000, 1000000, rng);
  CHECK(char_poly(big) == oracle::charpoly(big));
}

TEST_CASE("exact rank agrees with rational elimination") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8, k = 1 + rng() % 4;
    // Product of random factors gives rank-deficient matrices.
    auto m = random_int(r, k, -2, 2, rng) * random_int(k, c, -2, 2, rng);
    CHECK(exact_rank(m) == oracle::rank(m));
  }
  CHECK(exact_rank(IntMatrix(4, 4)) == 0);
  CHECK(exact_rank(IntMatrix::identity(5)) == 5);
}

TEST_CASE("perfect squares") {
  std::int64_t r = 0;
  CHECK(is_perfect_square(0, &r));
  CHECK(r == 0);
  CHECK(is_perfect_square(49, &r));
  CHECK(r == 7);
  CHECK_FALSE(is_perfect_square(50));
  CHECK_FALSE(is_perfect_square(-4));
}
