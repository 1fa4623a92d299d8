#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sr2se/constructions.hpp"
#include "sr2se/error.hpp"
#include "sr2se/switching.hpp"
#include "test_util.hpp"

using namespace sr2se;

namespace {

SignedGraph scramble(const SignedGraph& g, std::mt19937_64& rng) {
  auto p = testutil::random_perm(g.order(), rng);
  auto s = testutil::random_subset(g.order(), rng);
  return switched(relabel(g, p), s);
}

void check_normal_form(const SignedGraph& g, Vertex base) {
  auto sc = schem_normal_form(g, base);
  CHECK(sc.representative == switched(relabel(g, sc.permutation), sc.switch_set));
  auto w = switching_isomorphic(g, sc.representative);
  REQUIRE(w.has_value());
  CHECK(w->apply(g) == sc.representative);
}

}  // namespace

TEST_CASE("switch examples") {
  auto c4 = cycle(4).as_signed();
  const std::vector<Vertex> one{0};
  auto s = switched(c4, one);
  CHECK(s(0, 1) == -1);
  CHECK(s(0, 3) == -1);
  CHECK(s(1, 2) == 1);
  CHECK(s(2, 3) == 1);
  CHECK(switched(c4, {}) == c4);
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(switched(c4, all) == c4);
  CHECK(switched(s, one) == c4);
  const std::vector<Vertex> bad{7};
  CHECK_THROWS_AS(switched(c4, bad), PreconditionError);
}

TEST_CASE("signed permutations compose") {
  std::mt19937_64 rng(4);
  auto g = testutil::random_signed(9, 0.5, rng);
  auto rand_sp = [&] {
    SignedPermutation p;
    p.perm = testutil::random_perm(9, rng);
    for (int i = 0; i < 9; ++i) p.signs.push_back((rng() & 1u) ? -1 : 1);
    return p;
  };
  auto p = rand_sp(), q = rand_sp();
  CHECK(q.after(p).apply(g) == q.apply(p.apply(g)));
  CHECK(p.inverse().apply(p.apply(g)) == g);
  CHECK(SignedPermutation::identity(9).apply(g) == g);
  CHECK(p.apply(g.to_int_matrix()) == p.apply(g).to_int_matrix());
}

TEST_CASE("schem normal form of small signed cubes") {
  auto g2 = schem_normal_form(signed_cube(2), 0);
  CHECK(g2.k == 0);
  CHECK(g2.degree == 2);
  CHECK(g2.scheme_prefix_holds);
  // Forced 4x4 pattern: star at 0, vertex 3 joined to 1 (+) and 2 (-).
  CHECK(g2.representative(0, 1) == 1);
  CHECK(g2.representative(0, 2) == 1);
  CHECK(g2.representative(1, 3) == 1);
  CHECK(g2.representative(2, 3) == -1);

  auto g3 = signed_cube(3);
  for (Vertex base = 0; base < 8; ++base) {
    auto sc = schem_normal_form(g3, base);
    CHECK(sc.scheme_prefix_holds);
    // 8 = C(4,2) + 1 + k
    CHECK(sc.k == 1);
    check_normal_form(g3, base);
  }
}

TEST_CASE("schem normal form on larger graphs") {
  std::mt19937_64 rng(8);
  for (int r = 4; r <= 6; ++r) {
    auto g = scramble(signed_cube(r), rng);
    auto sc = schem_normal_form(g, rng() % g.order());
    CHECK(sc.scheme_prefix_holds);
    CHECK(sc.k == g.order() - std::size_t(r * (r + 1) / 2) - 1);
    CHECK(sc.representative == switched(relabel(g, sc.permutation), sc.switch_set));
  }
  check_normal_form(scramble(signed_cube(5), rng), 3);

  // A non-SR2SE signing of the same graph breaks the pattern.
  auto plain = schem_normal_form(hypercube(3).as_signed(), 0);
  CHECK_FALSE(plain.scheme_prefix_holds);
}

TEST_CASE("schem normal form rejects non-candidates") {
  auto msg = [](const SignedGraph& g) {
    try {
      schem_normal_form(g, 0);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg(path(3).as_signed()).find("not regular") != std::string::npos);
  CHECK(msg(complete(4).as_signed()).find("not triangle-free") != std::string::npos);
  CHECK(msg(cycle(5).as_signed()).find("not a (0,2)-graph") != std::string::npos);
  UnderlyingGraph two(8);
  for (int i = 0; i < 4; ++i) {
    two.add_edge(i, (i + 1) % 4);
    two.add_edge(4 + i, 4 + (i + 1) % 4);
  }
  CHECK(msg(two.as_signed()).find("not connected") != std::string::npos);
  CHECK_THROWS_AS(schem_normal_form(signed_cube(2), 9), PreconditionError);
}

TEST_CASE("switching isomorphism examples") {
  std::mt19937_64 rng(21);
  for (int r = 1; r <= 6; ++r) {
    auto g = signed_cube(r);
    auto h = switched(g, testutil::random_subset(g.order(), rng));
    auto w = switching_isomorphic(g, h);
    REQUIRE(w.has_value());
    CHECK(w->apply(g) == h);
    auto hs = scramble(g, rng);
    auto w2 = switching_isomorphic(g, hs);
    REQUIRE(w2.has_value());
    CHECK(w2->apply(g) == hs);
  }
  CHECK_FALSE(switching_isomorphic(signed_cube(2), cycle(4).as_signed()).has_value());
  CHECK_FALSE(switching_isomorphic(signed_cube(2), signed_cube(1)).has_value());
  // -Ġ_r is switching isomorphic to Ġ_r (switch one side of the bipartition).
  CHECK(switching_isomorphic(signed_cube(4), negation(signed_cube(4))).has_value());
  auto t = signed_tetrahedron();
  CHECK(switching_isomorphic(t, negation(t)).has_value() ==
        oracle::same_signing_class(complete(4), t, negation(t)));
}

TEST_CASE("switching isomorphism agrees with the automorphism oracle") {
  std::mt19937_64 rng(33);
  const std::vector<UnderlyingGraph> hosts{hypercube(3), complete_bipartite(3, 3), cycle(6),
                                           complete(4), folded_cube(4)};
  for (const auto& host : hosts) {
    for (int i = 0; i < 12; ++i) {
      auto a = testutil::random_signing(host, rng);
      auto b = testutil::random_signing(host, rng);
      const bool expect = oracle::same_signing_class(host, a, b);
      auto w = switching_isomorphic(a, b);
      CHECK(w.has_value() == expect);
      if (w) CHECK(w->apply(a) == b);
    }
  }
}

TEST_CASE("switching isomorphism is an equivalence on samples") {
  std::mt19937_64 rng(77);
  auto base = testutil::random_signing(hypercube(4), rng);
  auto a = scramble(base, rng), b = scramble(base, rng), c = scramble(base, rng);
  CHECK(switching_isomorphic(a, a).has_value());
  auto ab = switching_isomorphic(a, b), ba = switching_isomorphic(b, a);
  CHECK(ab.has_value());
  CHECK(ba.has_value());
  auto bc = switching_isomorphic(b, c);
  REQUIRE(ab.has_value());
  REQUIRE(bc.has_value());
  CHECK(bc->after(*ab).apply(a) == c);
  CHECK(switching_isomorphic(a, c).has_value());
}

TEST_CASE("disconnected inputs") {
  std::mt19937_64 rng(3);
  UnderlyingGraph host(10);
  for (int i = 0; i < 4; ++i) host.add_edge(i, (i + 1) % 4);
  for (int i = 0; i < 6; ++i) host.add_edge(4 + i, 4 + (i + 1) % 6);
  auto g = testutil::random_signing(host, rng);
  auto h = scramble(g, rng);
  auto w = switching_isomorphic(g, h);
  REQUIRE(w.has_value());
  CHECK(w->apply(g) == h);
  auto other = testutil::random_signing(host, rng);
  CHECK(switching_isomorphic(g, other).has_value() == oracle::same_signing_class(host, g, other));
}

TEST_CASE("isomorphism cap") {
  auto big = signed_cube(8);
  CHECK_THROWS_AS(switching_isomorphic(big, big), CapExceededError);
  CHECK(switching_isomorphic(big, big, 256).has_value());
  CHECK(switching_isomorphic(signed_cube(7), signed_cube(7)).has_value());
}

TEST_CASE("class invariants") {
  std::mt19937_64 rng(13);
  for (auto g : {signed_cube(3), signed_cube(5), signed_tetrahedron(),
                 testutil::random_signing(clebsch(), rng)}) {
    const auto inv = class_invariants(g);
    for (int i = 0; i < 5; ++i) CHECK(class_invariants(scramble(g, rng)) == inv);
  }
  CHECK_FALSE(class_invariants(signed_cube(2)) == class_invariants(cycle(4).as_signed()));
  auto q = class_invariants(signed_cube(3));
  // Every quadrangle of the signed cube is negative; three through each vertex.
  for (auto [pos, neg] : q.quadrangle_balance) {
    CHECK(pos == 0);
    CHECK(neg == 3);
  }
  CHECK(refinement_certificate(hypercube(3)) ==
        refinement_certificate(relabel(hypercube(3), testutil::random_perm(8, rng))));
  CHECK_FALSE(refinement_certificate(hypercube(3)) == refinement_certificate(cycle(8)));
}
