#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sr2se/constructions.hpp"
#include "sr2se/error.hpp"
#include "sr2se/spectral.hpp"
#include "sr2se/switching.hpp"
#include "test_util.hpp"

using namespace sr2se;

TEST_CASE("ltimes K2 examples") {
  auto k2 = signed_cube(1);
  auto g2 = ltimes_k2(k2);
  CHECK(g2.order() == 4);
  CHECK(oracle::charpoly(g2.to_int_matrix()) == Poly::x2_minus(2).pow(2));
  CHECK(switching_isomorphic(g2, signed_cube(2)).has_value());

  auto g5 = ltimes_k2(signed_cube(4));
  auto c = certify_two_sym(g5);
  REQUIRE(c.accepted());
  CHECK(c->lambda_sq == 5);
  CHECK(g5 == signed_cube(5));

  auto k1 = ltimes_k2(SignedGraph::empty(1));
  CHECK(oracle::charpoly(k1.to_int_matrix()) == Poly::x2_minus(1));
  CHECK(ltimes_k2_transform(Poly::monomial(1)) == Poly::x2_minus(1));
}

TEST_CASE("ltimes K2 transforms the characteristic polynomial") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    auto g = testutil::random_signed(1 + rng() % 9, 0.5, rng);
    const Poly p = oracle::charpoly(g.to_int_matrix());
    CHECK(oracle::charpoly(ltimes_k2(g).to_int_matrix()) == ltimes_k2_transform(p));
  }
  // The literal factor-by-factor form on symmetric spectra.
  for (auto g : {signed_cube(3), complete_bipartite(2, 2).as_signed(), signed_tetrahedron()}) {
    const Poly p = oracle::charpoly(g.to_int_matrix());
    CHECK(ltimes_k2_transform_literal(p) == ltimes_k2_transform(p));
  }
  CHECK_THROWS(ltimes_k2_transform_literal(oracle::charpoly(path(3).as_signed().to_int_matrix()) +
                                           Poly::monomial(0)));
}

TEST_CASE("cartesian K2") {
  auto c4 = cartesian_k2(signed_cube(1));
  CHECK(oracle::isomorphic(underlying(c4), cycle(4)));
  CHECK(c4.edges().size() == 4);
  for (const auto& e : c4.edges()) CHECK(e.sign == 1);
  CHECK(oracle::isomorphic(cartesian_k2(underlying(signed_cube(3))), hypercube(4)));
  CHECK(cartesian_k2(hypercube(3)) == hypercube(4));
}

TEST_CASE("bipartite double") {
  auto d = bipartite_double(signed_cube(2));
  CHECK(d.order() == 8);
  auto comps = components(underlying(d));
  REQUIRE(comps.size() == 2);
  for (const auto& comp : comps) {
    auto part = induced(d, comp);
    CHECK(switching_isomorphic(part, signed_cube(2)).has_value());
  }
  auto kk = bipartite_double(signed_cube(1));
  CHECK(kk.edge_count() == 2);
  CHECK(components(underlying(kk)).size() == 2);

  auto t = bipartite_double(signed_tetrahedron());
  CHECK(is_connected(underlying(t)));
  CHECK(char_poly(t) == char_poly(signed_tetrahedron()) * char_poly(negation(signed_tetrahedron())));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto g = testutil::random_signed(2 + rng() % 8, 0.6, rng);
    if (!is_connected(underlying(g))) continue;
    const bool bip = bipartition(underlying(g)).has_value();
    CHECK(is_connected(underlying(bipartite_double(g))) == !bip);
  }
}

TEST_CASE("negation") {
  std::mt19937_64 rng(9);
  auto g = testutil::random_signed(7, 0.5, rng);
  CHECK(negation(negation(g)) == g);
  auto k2 = negation(signed_cube(1));
  CHECK(k2(0, 1) == -1);
  // charpoly(-A)(x) = (-1)^n charpoly(A)(-x)
  const Poly p = char_poly(g), q = char_poly(negation(g));
  for (std::size_t i = 0; i <= 7; ++i) CHECK(q.coeff(i) == ((7 - i) % 2 ? -p.coeff(i) : p.coeff(i)));
}

TEST_CASE("signed cubes") {
  CHECK(signed_cube(1) == SignedGraph::from_edges(2, std::vector<SignedEdge>{{0, 1, 1}}));
  for (int r = 1; r <= 10; ++r) {
    auto g = signed_cube(r);
    CHECK(g.order() == (std::size_t{1} << r));
    auto c = certify_two_sym(g);
    REQUIRE(c.accepted());
    CHECK(c->lambda_sq == r);
    if (r <= 6) {
      auto q = testutil::quadrangle_signs(g);
      CHECK(q.size() == oracle::quadrangles(underlying(g)));
      CHECK(std::all_of(q.begin(), q.end(), [](int s) { return s == -1; }));
    }
    CHECK(underlying(g) == hypercube(r));
  }
  CHECK_THROWS_AS(signed_cube(0), PreconditionError);
}

TEST_CASE("folded cubes") {
  auto f4 = folded_cube(4);
  CHECK(f4.order() == 16);
  auto rep = structure_report(f4);
  CHECK(rep.degree == 5);
  CHECK(rep.regular);
  auto prof = oracle::common_neighbours(f4);
  CHECK(std::all_of(prof.begin(), prof.end(), [](std::size_t c) { return c == 0 || c == 2; }));
  CHECK(rep.zero_two);
  CHECK(f4 == clebsch());

  auto f5 = folded_cube(5);
  CHECK(f5.order() == 32);
  CHECK(structure_report(f5).degree == 6);
  CHECK(is_rectagraph(f5));
  CHECK_THROWS_AS(folded_cube(3), PreconditionError);
}

TEST_CASE("symmetric design incidence graphs") {
  auto b = biplane_7_incidence();
  CHECK(b.order() == 14);
  auto rep = structure_report(b);
  CHECK(rep.regular);
  CHECK(rep.degree == 4);
  CHECK(rep.bipartite);
  CHECK(is_rectagraph(b));
  CHECK(b == bibd_incidence(7, biplane_7()));

  auto h = heawood();
  CHECK(h.order() == 14);
  CHECK(structure_report(h).degree == 3);
  CHECK_FALSE(structure_report(h).zero_two);
  auto prof = oracle::common_neighbours(h);
  CHECK(std::find(prof.begin(), prof.end(), 1u) != prof.end());

  auto tri = bibd_incidence(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(oracle::isomorphic(tri, cycle(6)));

  CHECK_THROWS_AS(bibd_incidence(3, {{0, 1}, {1, 2}, {0, 1, 2}}), PreconditionError);
  CHECK_THROWS_AS(bibd_incidence(3, {{0, 1}, {0, 2}}), PreconditionError);
}

TEST_CASE("Gewirtz graph") {
  auto g = gewirtz();
  CHECK(g.order() == 56);
  auto rep = structure_report(g);
  CHECK(rep.degree == 10);
  CHECK(rep.triangle_free);
  CHECK(rep.zero_two);
  CHECK_FALSE(rep.bipartite);
}

TEST_CASE("small named graphs") {
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(path(4).edge_count() == 3);
  auto t = signed_tetrahedron();
  auto c = certify_four_sym(t);
  REQUIRE(c.accepted());
  CHECK(c->lambda_sq == 5);
  CHECK(c->mu_sq == 1);
}
