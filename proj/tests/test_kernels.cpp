#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sr2se/constructions.hpp"
#include "sr2se/kernels.hpp"

using namespace sr2se;

namespace {

SignedGraph random_signed(std::size_t n, std::mt19937& rng) {
  std::bernoulli_distribution edge(0.4), neg(0.5);
  SignMatrix m(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) m.set_edge(u, v, neg(rng) ? -1 : 1);
  return SignedGraph(m);
}

}  // namespace

TEST_CASE("parallel kernels match serial references and the oracle") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    auto g = random_signed(1 + rng() % 40, rng);
    const auto a = g.to_int_matrix();
    const auto sq = kernels::signed_square(g);
    CHECK(sq == kernels::signed_square_serial(g));
    CHECK(sq == oracle::product(a, a));
    const auto cube = kernels::times_adjacency(sq, g);
    CHECK(cube == kernels::times_adjacency_serial(sq, g));
    CHECK(cube == oracle::product(sq, a));
    CHECK(kernels::multiply(sq, cube) == kernels::multiply_serial(sq, cube));
  }
}

TEST_CASE("scalar-square violation search") {
  auto cube = signed_cube(6);
  CHECK_FALSE(kernels::square_scalar_violation(cube, 6).has_value());
  CHECK_FALSE(kernels::square_scalar_violation_serial(cube, 6).has_value());

  auto q = hypercube(5).as_signed();
  auto par = kernels::square_scalar_violation(q, 5);
  auto ser = kernels::square_scalar_violation_serial(q, 5);
  REQUIRE(par.has_value());
  REQUIRE(ser.has_value());
  CHECK(par->row == ser->row);
  CHECK(par->col == ser->col);
  CHECK(par->value == 2);
}
