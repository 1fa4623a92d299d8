#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sr2se/core.hpp"

namespace testutil {

inline std::vector<sr2se::Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<sr2se::Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<sr2se::Vertex> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<sr2se::Vertex> s;
  for (sr2se::Vertex v = 0; v < n; ++v)
    if (rng() & 1u) s.push_back(v);
  return s;
}

inline sr2se::SignedGraph random_signed(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p), neg(0.5);
  sr2se::SignMatrix m(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) m.set_edge(u, v, neg(rng) ? -1 : 1);
  return sr2se::SignedGraph(m);
}

inline sr2se::SignedGraph random_signing(const sr2se::UnderlyingGraph& g, std::mt19937_64& rng) {
  sr2se::SignMatrix m(g.order());
  for (auto [u, v] : g.edges()) m.set_edge(u, v, (rng() & 1u) ? -1 : 1);
  return sr2se::SignedGraph(m);
}

// Product of edge signs around every 4-cycle, collected in a vector.
inline std::vector<int> quadrangle_signs(const sr2se::SignedGraph& g) {
  std::vector<int> out;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      std::vector<std::size_t> mid;
      for (std::size_t b = 0; b < n; ++b)
        if (g(a, b) != 0 && g(b, c) != 0) mid.push_back(b);
      for (std::size_t i = 0; i < mid.size(); ++i)
        for (std::size_t j = i + 1; j < mid.size(); ++j) {
          // Each 4-cycle is found from both diagonals; keep the one with a < min(b, d).
          const auto b = mid[i], d = mid[j];
          if (a > std::min(b, d)) continue;
          out.push_back(g(a, b) * g(b, c) * g(c, d) * g(d, a));
        }
    }
  return out;
}

}  // namespace testutil
