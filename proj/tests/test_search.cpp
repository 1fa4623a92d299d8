#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sr2se/constructions.hpp"
#include "sr2se/error.hpp"
#include "sr2se/search.hpp"
#include "sr2se/spectral.hpp"
#include "test_util.hpp"

using namespace sr2se;

namespace {

void check_solutions(const SearchOutcome& out, const UnderlyingGraph& g) {
  for (const auto& s : out.solutions) {
    auto c = certify_two_sym(s);
    REQUIRE(c.accepted());
    CHECK(c->lambda_sq == static_cast<std::int64_t>(g.degree(0)));
    CHECK(underlying(s) == g);
  }
}

}  // namespace

TEST_CASE("prepared problem fixes the scheme rows") {
  auto p = prepare_signature_search(hypercube(4));
  CHECK(p.degree == 4);
  // rows 0..r contain no free edge
  for (auto [u, v] : p.free_edges) CHECK(u > 4);
  SignMatrix fixed = p.fixed;
  std::size_t count = 0;
  for (std::size_t u = 0; u < 16; ++u)
    for (std::size_t v = u + 1; v < 16; ++v) count += fixed(u, v) != 0;
  CHECK(count + p.free_edges.size() == hypercube(4).edge_count());
}

TEST_CASE("signed cubes are the unique signatures of hypercubes") {
  for (int r = 1; r <= 5; ++r) {
    auto q = hypercube(r);
    auto out = search_signatures(q);
    CHECK(out.exhausted);
    REQUIRE(out.solutions.size() == 1);
    check_solutions(out, q);
    CHECK(switching_isomorphic(out.solutions[0], signed_cube(r)).has_value());
    CHECK(static_cast<int>(out.raw_solutions) == (1 << oracle::gf2_labeled_class_log2(q)));
  }
}

TEST_CASE("Clebsch graph has exactly one class") {
  auto out = search_signatures(clebsch());
  CHECK(out.exhausted);
  REQUIRE(out.solutions.size() == 1);
  check_solutions(out, clebsch());
  CHECK_FALSE(structure_report(out.solutions[0]).bipartite);
  CHECK(static_cast<int>(out.raw_solutions) == (1 << oracle::gf2_labeled_class_log2(clebsch())));
}

TEST_CASE("biplane incidence graph has exactly one class") {
  auto g = biplane_7_incidence();
  auto out = search_signatures(g);
  CHECK(out.exhausted);
  REQUIRE(out.solutions.size() == 1);
  check_solutions(out, g);
}

TEST_CASE("folded 5-cube has no SR2SE signature") {
  auto out = search_signatures(folded_cube(5));
  CHECK(out.exhausted);
  CHECK(out.solutions.empty());
  CHECK(oracle::gf2_labeled_class_log2(folded_cube(5)) == -1);
}

TEST_CASE("search agrees with exhaustive enumeration on small rectagraphs") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t r = 0; r < n; ++r) {
      if (n * r / 2 > 16) continue;
      for (const auto& g : oracle::zero_two_graphs(n, r, true)) {
        if (g.order() > 1 && g.edge_count() == 0) continue;
        CAPTURE(n);
        CAPTURE(r);
        CHECK(search_signatures(g).solutions.size() == oracle::naive_sr2se_class_count(g));
      }
    }
}

TEST_CASE("free-edge order does not change the result") {
  for (const auto& g : {hypercube(3), hypercube(4), clebsch()}) {
    const auto base = search_signatures(g);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      SearchOptions opt;
      opt.shuffle_seed = seed;
      auto out = search_signatures(g, opt);
      CHECK(out.exhausted);
      CHECK(out.solutions.size() == base.solutions.size());
      CHECK(out.raw_solutions == base.raw_solutions);
      CHECK(out.row_counts.empty());
    }
  }
}

TEST_CASE("parallel and serial searches agree") {
  for (const auto& g : {hypercube(4), clebsch(), folded_cube(5), biplane_7_incidence()}) {
    auto par = search_signatures(g);
    auto ser = search_signatures_serial(g);
    CHECK(par.nodes_explored == ser.nodes_explored);
    CHECK(par.depth_counts == ser.depth_counts);
    CHECK(par.row_counts == ser.row_counts);
    CHECK(par.raw_solutions == ser.raw_solutions);
    REQUIRE(par.solutions.size() == ser.solutions.size());
    for (std::size_t i = 0; i < par.solutions.size(); ++i) CHECK(par.solutions[i] == ser.solutions[i]);
    SearchOptions deep;
    deep.split_depth = 5;
    CHECK(search_signatures(g, deep).depth_counts == ser.depth_counts);
  }
}

TEST_CASE("node budget") {
  SearchOptions opt;
  opt.node_budget = 10;
  auto out = search_signatures(folded_cube(5), opt);
  CHECK_FALSE(out.exhausted);
  auto ser = search_signatures_serial(folded_cube(5), opt);
  CHECK_FALSE(ser.exhausted);
  CHECK(ser.nodes_explored <= 11);
}

TEST_CASE("search preconditions") {
  CHECK_THROWS_AS(search_signatures(path(3)), PreconditionError);
  CHECK_THROWS_AS(search_signatures(complete(4)), PreconditionError);
  CHECK_THROWS_AS(search_signatures(cycle(6)), PreconditionError);
  CHECK_THROWS_AS(search_signatures(heawood()), PreconditionError);
}

TEST_CASE("proof logs") {
  auto f5 = folded_cube(5);
  auto log = verify_nonexistence(f5);
  CHECK(log.exhausted);
  CHECK(log.solutions == 0);
  CHECK(log.n == 32);
  CHECK(log.r == 6);
  const auto text = to_text(log);
  CHECK(text.rfind("sr2se-proof 1\n", 0) == 0);
  CHECK(parse_proof_log(text) == log);
  CHECK(replay_proof(f5, log));

  auto tampered = log;
  tampered.nodes += 1;
  CHECK_FALSE(replay_proof(f5, tampered));
  CHECK_FALSE(replay_proof(hypercube(5), log));

  auto q3 = verify_nonexistence(hypercube(3));
  CHECK(q3.solutions == 1);
  CHECK(replay_proof(hypercube(3), parse_proof_log(to_text(q3))));

  CHECK_THROWS_AS(parse_proof_log(""), ParseError);
  CHECK_THROWS_AS(parse_proof_log("sr2se-proof 2\n"), ParseError);
  std::string cut = text.substr(0, text.find("result"));
  CHECK_THROWS_AS(parse_proof_log(cut), ParseError);
  std::string bad = text;
  bad.replace(bad.find("depth 1 "), 7, "depth 9");
  CHECK_THROWS_AS(parse_proof_log(bad), ParseError);
}

TEST_CASE("weighing search small cases") {
  auto w41 = search_weighing(4, 1);
  CHECK(w41.exhausted);
  REQUIRE(w41.matrices.size() == 1);
  CHECK(equivalent(w41.matrices[0], *verify_weighing(IntMatrix::identity(4))).has_value());

  auto w65 = search_weighing(6, 5);
  CHECK(w65.exhausted);
  CHECK(w65.matrices.empty());
  CHECK(oracle::brute_weighing_count(6, 5) == 0);

  // Weight 2: direct sums of copies of the 2x2 matrix.
  auto w42 = search_weighing(4, 2);
  REQUIRE(w42.matrices.size() == 1);
  CHECK_FALSE(is_proper(w42.matrices[0]));
  CHECK(oracle::brute_weighing_count(4, 2) > 0);

  auto w84 = search_weighing(8, 4);
  REQUIRE_FALSE(w84.matrices.empty());
  bool found_cube = false;
  for (const auto& w : w84.matrices) {
    CHECK(has_zero_two_intersections(w));
    if (is_proper(w) && switching_isomorphic(to_bipartite_sr2se(w), signed_cube(4))) found_cube = true;
  }
  CHECK(found_cube);
  CHECK_THROWS_AS(search_weighing(3, 4), PreconditionError);
}

TEST_CASE("weighing search at order 12") {
  auto out = search_weighing(12, 5);
  CHECK(out.exhausted);
  REQUIRE_FALSE(out.matrices.empty());
  auto ser = search_weighing_serial(12, 5);
  CHECK(ser.raw_solutions == out.raw_solutions);
  CHECK(ser.nodes_explored == out.nodes_explored);
  CHECK(ser.matrices.size() == out.matrices.size());
  std::size_t proper = 0;
  for (const auto& w : out.matrices) {
    CHECK(intersection_numbers(w) == std::set<std::size_t>{0, 2});
    CHECK(scheme2_prefix_matches(w.entries, 5));
    if (!is_proper(w)) continue;
    ++proper;
    auto g = to_bipartite_sr2se(w);
    CHECK(g.order() == 24);
    auto c = certify_two_sym(g);
    REQUIRE(c.accepted());
    CHECK(c->lambda_sq == 5);
    auto back = from_bipartite_sr2se(g);
    CHECK(switching_isomorphic(to_bipartite_sr2se(back), g).has_value());
  }
  CHECK(proper >= 1);
}
