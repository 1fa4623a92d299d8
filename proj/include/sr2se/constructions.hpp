#pragma once

#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/linalg.hpp"

namespace sr2se {

/// [[A, I], [I, -A]]: two copies, the second negated, joined by a positive
/// perfect matching. Vertex v of the second copy is n + v.
SignedGraph ltimes_k2(const SignedGraph& g);
/// [[A, I], [I, A]].
SignedGraph cartesian_k2(const SignedGraph& g);
UnderlyingGraph cartesian_k2(const UnderlyingGraph& g);
/// A (x) [[0,1],[1,0]]; vertex v becomes 2v and 2v + 1.
SignedGraph bipartite_double(const SignedGraph& g);
SignedGraph negation(const SignedGraph& g);

/// Characteristic polynomial of ltimes_k2(g) from that of g: every
/// eigenvalue t contributes the factor x^2 - t^2 - 1.
Poly ltimes_k2_transform(const Poly& p);
/// Same transform written factor-wise, for p(x) = x^m0 s(x^2):
/// (x^2 - 1)^m0 * s(x^2 - 1)^2. Faults if p has a different shape.
Poly ltimes_k2_transform_literal(const Poly& p);

/// K2, then repeatedly ltimes_k2: the r-cube signed with every quadrangle negative.
SignedGraph signed_cube(int r);
UnderlyingGraph hypercube(int r);
/// Q_r plus an edge between every pair of antipodal vertices: 2^r vertices,
/// degree r + 1. Faults for r < 4, where the result is not a rectagraph.
UnderlyingGraph folded_cube(int r);
UnderlyingGraph clebsch();

/// Incidence graph of a symmetric design: points are vertices 0..n-1,
/// blocks n..2n-1. Faults unless blocks form a symmetric (n, r, l)-BIBD.
UnderlyingGraph bibd_incidence(std::size_t points, const std::vector<std::vector<int>>& blocks);
std::vector<std::vector<int>> fano_lines();
/// Complements of the Fano lines: the (7,4,2) biplane.
std::vector<std::vector<int>> biplane_7();
UnderlyingGraph heawood();
UnderlyingGraph biplane_7_incidence();

/// srg(56,10,0,2): blocks of S(3,6,22) avoiding a fixed point, adjacent when
/// disjoint. Built from the extended binary Golay code.
UnderlyingGraph gewirtz();

UnderlyingGraph complete(std::size_t n);
UnderlyingGraph complete_bipartite(std::size_t a, std::size_t b);
UnderlyingGraph cycle(std::size_t n);
UnderlyingGraph path(std::size_t n);
/// K4 with a single negative edge; spectrum {+-1, +-sqrt5}.
SignedGraph signed_tetrahedron();

}  // namespace sr2se
