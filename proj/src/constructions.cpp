#include "sr2se/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sr2se/error.hpp"

namespace sr2se {

namespace {

SignedGraph two_copies(const SignedGraph& g, int second_copy_sign) {
  const std::size_t n = g.order();
  SignMatrix m(2 * n);
  for (const auto& e : g.edges()) {
    m.set_edge(e.u, e.v, e.sign);
    m.set_edge(n + e.u, n + e.v, second_copy_sign * e.sign);
  }
  for (std::size_t v = 0; v < n; ++v) m.set_edge(v, n + v, 1);
  return SignedGraph(std::move(m));
}

}  // namespace

SignedGraph ltimes_k2(const SignedGraph& g) { return two_copies(g, -1); }
SignedGraph cartesian_k2(const SignedGraph& g) { return two_copies(g, 1); }

UnderlyingGraph cartesian_k2(const UnderlyingGraph& g) {
  return underlying(cartesian_k2(g.as_signed()));
}

SignedGraph bipartite_double(const SignedGraph& g) {
  SignMatrix m(2 * g.order());
  for (const auto& e : g.edges()) {
    m.set_edge(2 * e.u, 2 * e.v + 1, e.sign);
    m.set_edge(2 * e.u + 1, 2 * e.v, e.sign);
  }
  return SignedGraph(std::move(m));
}

SignedGraph negation(const SignedGraph& g) {
  SignMatrix m(g.order());
  for (const auto& e : g.edges()) m.set_edge(e.u, e.v, -e.sign);
  return SignedGraph(std::move(m));
}

Poly ltimes_k2_transform(const Poly& p) {
  // q(x^2) = (-1)^n p(x) p(-x) has the squared eigenvalues as roots; the
  // answer is q(x^2 - 1).
  Poly even = p * p.reflect();
  if (p.degree() % 2 != 0) even = -even;
  const Poly shift = Poly::x2_minus(1);
  Poly out;
  for (std::size_t i = 1; i < even.coeffs().size(); i += 2)
    if (even[i] != 0) throw Error("ltimes_k2_transform: odd coefficient in even product");
  for (int i = even.degree(); i >= 0; i -= 2)
    out = out * shift + Poly({even[static_cast<std::size_t>(i)]});
  return out;
}

Poly ltimes_k2_transform_literal(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("zero polynomial");
  std::size_t m0 = 0;
  while (p[m0] == 0) ++m0;
  std::vector<BigInt> s;
  for (std::size_t i = m0; i < p.coeffs().size(); ++i) {
    if ((i - m0) % 2 == 1) {
      if (p[i] != 0) throw PreconditionError("polynomial is not of the form x^m0 s(x^2)");
      continue;
    }
    s.push_back(p[i]);
  }
  const Poly shift = Poly::x2_minus(1);
  Poly s_shifted;
  for (auto it = s.rbegin(); it != s.rend(); ++it) s_shifted = s_shifted * shift + Poly({*it});
  return shift.pow(static_cast<unsigned>(m0)) * s_shifted * s_shifted;
}

SignedGraph signed_cube(int r) {
  if (r < 1) throw PreconditionError("signed_cube: r must be at least 1");
  SignMatrix k2(2);
  k2.set_edge(0, 1, 1);
  SignedGraph g(std::move(k2));
  for (int i = 1; i < r; ++i) g = ltimes_k2(g);
  return g;
}

UnderlyingGraph hypercube(int r) {
  if (r < 0 || r > 20) throw PreconditionError("hypercube: dimension out of range");
  const std::size_t n = std::size_t{1} << r;
  UnderlyingGraph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (int b = 0; b < r; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

UnderlyingGraph folded_cube(int r) {
  if (r < 4)
    throw PreconditionError("folded_cube: r must be at least 4 (smaller cases are not rectagraphs)");
  UnderlyingGraph g = hypercube(r);
  const std::size_t n = g.order(), mask = n - 1;
  for (std::size_t v = 0; v < n; ++v)
    if (v < (v ^ mask)) g.add_edge(v, v ^ mask);
  return g;
}

UnderlyingGraph clebsch() { return folded_cube(4); }

UnderlyingGraph bibd_incidence(std::size_t points, const std::vector<std::vector<int>>& blocks) {
  if (blocks.size() != points || points == 0)
    throw PreconditionError("bibd_incidence: a symmetric design needs as many blocks as points");
  const std::size_t n = points;
  std::vector<std::set<int>> sets;
  for (const auto& b : blocks) {
    std::set<int> s(b.begin(), b.end());
    if (s.size() != b.size()) throw PreconditionError("bibd_incidence: repeated point in block");
    for (int p : s)
      if (p < 0 || static_cast<std::size_t>(p) >= n)
        throw PreconditionError("bibd_incidence: point out of range");
    sets.push_back(std::move(s));
  }
  const std::size_t r = sets[0].size();
  for (const auto& s : sets)
    if (s.size() != r) throw PreconditionError("bibd_incidence: blocks differ in size");
  std::vector<std::size_t> rep(n, 0);
  for (const auto& s : sets)
    for (int p : s) ++rep[static_cast<std::size_t>(p)];
  for (auto c : rep)
    if (c != r) throw PreconditionError("bibd_incidence: replication number differs from block size");
  std::optional<std::size_t> lambda;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t c = 0;
      for (const auto& s : sets) c += s.count(static_cast<int>(a)) && s.count(static_cast<int>(b));
      if (lambda && *lambda != c) throw PreconditionError("bibd_incidence: pair counts are not constant");
      lambda = c;
    }
  UnderlyingGraph g(2 * n);
  for (std::size_t b = 0; b < n; ++b)
    for (int p : sets[b]) g.add_edge(static_cast<std::size_t>(p), n + b);
  return g;
}

std::vector<std::vector<int>> fano_lines() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}

std::vector<std::vector<int>> biplane_7() {
  std::vector<std::vector<int>> out;
  for (const auto& line : fano_lines()) {
    std::vector<int> c;
    for (int p = 0; p < 7; ++p)
      if (std::find(line.begin(), line.end(), p) == line.end()) c.push_back(p);
    out.push_back(c);
  }
  return out;
}

UnderlyingGraph heawood() { return bibd_incidence(7, fano_lines()); }
UnderlyingGraph biplane_7_incidence() { return bibd_incidence(7, biplane_7()); }

UnderlyingGraph gewirtz() {
  // Cyclic [23,12] Golay code from g(x) = x^11+x^10+x^6+x^5+x^4+x^2+1,
  // extended by an overall parity bit to length 24.
  const std::uint32_t gen = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) |
                            (1u << 2) | 1u;
  std::vector<std::uint32_t> basis;
  for (int s = 0; s < 12; ++s) {
    std::uint32_t w = gen << s;
    if (std::popcount(w) % 2) w |= 1u << 23;
    basis.push_back(w);
  }
  std::vector<std::uint32_t> octads;
  for (std::uint32_t c = 0; c < (1u << 12); ++c) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if ((c >> i) & 1u) w ^= basis[static_cast<std::size_t>(i)];
    if (std::popcount(w) == 8) octads.push_back(w);
  }
  if (octads.size() != 759) throw Error("gewirtz: Golay code construction failed");
  // Hexads of S(3,6,22) are octads through points 22 and 23 with those removed;
  // keep the ones avoiding point 21.
  const std::uint32_t fixed = (1u << 22) | (1u << 23);
  std::vector<std::uint32_t> hexads;
  for (auto w : octads)
    if ((w & fixed) == fixed && !((w >> 21) & 1u)) hexads.push_back(w & ~fixed);
  std::sort(hexads.begin(), hexads.end());
  UnderlyingGraph g(hexads.size());
  for (std::size_t i = 0; i < hexads.size(); ++i)
    for (std::size_t j = i + 1; j < hexads.size(); ++j)
      if ((hexads[i] & hexads[j]) == 0) g.add_edge(i, j);
  return g;
}

UnderlyingGraph complete(std::size_t n) {
  UnderlyingGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

UnderlyingGraph complete_bipartite(std::size_t a, std::size_t b) {
  UnderlyingGraph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

UnderlyingGraph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle: need at least 3 vertices");
  UnderlyingGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

UnderlyingGraph path(std::size_t n) {
  UnderlyingGraph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SignedGraph signed_tetrahedron() {
  SignMatrix m(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) m.set_edge(u, v, 1);
  m.set_edge(0, 1, -1);
  return SignedGraph(std::move(m));
}

}  // namespace sr2se
