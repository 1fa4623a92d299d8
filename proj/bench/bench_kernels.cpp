// Parallel kernels and searches against their serial references.

#include <benchmark/benchmark.h>

#include <map>

#include "sr2se/constructions.hpp"
#include "sr2se/kernels.hpp"
#include "sr2se/search.hpp"

using namespace sr2se;
using namespace sr2se::kernels;

namespace {

const SignedGraph& cube(int r) {
  static std::map<int, SignedGraph> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, signed_cube(r)).first;
  return it->second;
}

template <IntMatrix (*F)(const SignedGraph&)>
void square(benchmark::State& s) {
  const auto& g = cube(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(F(g));
}

template <IntMatrix (*F)(const IntMatrix&, const SignedGraph&)>
void times_adj(benchmark::State& s) {
  const auto& g = cube(static_cast<int>(s.range(0)));
  const IntMatrix a = g.to_int_matrix();
  for (auto _ : s) benchmark::DoNotOptimize(F(a, g));
}

template <IntMatrix (*F)(const IntMatrix&, const IntMatrix&)>
void mult(benchmark::State& s) {
  const IntMatrix a = cube(static_cast<int>(s.range(0))).to_int_matrix();
  for (auto _ : s) benchmark::DoNotOptimize(F(a, a));
}

template <std::optional<EntryViolation> (*F)(const SignedGraph&, std::int64_t)>
void violation(benchmark::State& s) {
  const int r = static_cast<int>(s.range(0));
  const auto& g = cube(r);
  for (auto _ : s) benchmark::DoNotOptimize(F(g, r));
}

template <SearchOutcome (*F)(const UnderlyingGraph&, const SearchOptions&)>
void search(benchmark::State& s) {
  const auto g = s.range(0) == 0 ? clebsch() : hypercube(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(F(g, {}));
}

template <WeighingSearchOutcome (*F)(std::size_t, std::size_t, const SearchOptions&)>
void weighing(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(F(static_cast<std::size_t>(s.range(0)), 5, {}));
}

}  // namespace

BENCHMARK(square<signed_square>)->Name("signed_square/parallel")->DenseRange(7, 10);
BENCHMARK(square<signed_square_serial>)->Name("signed_square/serial")->DenseRange(7, 10);
BENCHMARK(times_adj<times_adjacency>)->Name("times_adjacency/parallel")->DenseRange(7, 9);
BENCHMARK(times_adj<times_adjacency_serial>)->Name("times_adjacency/serial")->DenseRange(7, 9);
BENCHMARK(mult<multiply>)->Name("multiply/parallel")->DenseRange(6, 8);
BENCHMARK(mult<multiply_serial>)->Name("multiply/serial")->DenseRange(6, 8);
BENCHMARK(violation<square_scalar_violation>)->Name("square_scalar_violation/parallel")->DenseRange(7, 10);
BENCHMARK(violation<square_scalar_violation_serial>)->Name("square_scalar_violation/serial")->DenseRange(7, 10);
// Argument 0 is the Clebsch graph, otherwise the hypercube dimension.
BENCHMARK(search<search_signatures>)->Name("search_signatures/parallel")->Arg(0)->Arg(4)->Arg(5);
BENCHMARK(search<search_signatures_serial>)->Name("search_signatures/serial")->Arg(0)->Arg(4)->Arg(5);
BENCHMARK(weighing<search_weighing>)->Name("search_weighing/parallel")->Arg(12);
BENCHMARK(weighing<search_weighing_serial>)->Name("search_weighing/serial")->Arg(12);

BENCHMARK_MAIN();
