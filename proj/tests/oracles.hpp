#pragma once

// Independent, deliberately naive reference computations used to produce and
// check expected values in the tests. Nothing here calls the library's own
// algorithms beyond the plain data types.

#include <cstdint>
#include <string>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/linalg.hpp"
#include "sr2se/matrix.hpp"

namespace oracle {

using sr2se::IntMatrix;
using sr2se::Poly;
using sr2se::SignedGraph;
using sr2se::UnderlyingGraph;
using sr2se::Vertex;

/// det(xI - M) by the Faddeev-LeVerrier trace recurrence over big integers.
Poly charpoly(const IntMatrix& m);

/// Rank by Gaussian elimination over the rationals.
std::size_t rank(const IntMatrix& m);

/// Dense A*B without any sparsity tricks.
IntMatrix product(const IntMatrix& a, const IntMatrix& b);

/// 4-cycles counted over all vertex quadruples.
std::uint64_t quadrangles(const UnderlyingGraph& g);

/// Common-neighbour counts, pair by pair, with plain loops.
std::vector<std::size_t> common_neighbours(const UnderlyingGraph& g);

bool isomorphic(const UnderlyingGraph& a, const UnderlyingGraph& b);

/// All automorphisms as vertex maps v -> p[v].
std::vector<std::vector<Vertex>> automorphisms(const UnderlyingGraph& g);

/// All connected (0,2)-graphs on exactly n vertices, up to isomorphism.
std::vector<UnderlyingGraph> zero_two_graphs(std::size_t n);
/// Same, restricted to degree r and optionally to triangle-free graphs.
std::vector<UnderlyingGraph> zero_two_graphs(std::size_t n, std::size_t r, bool triangle_free);

/// One signing per switching class (spanning-forest edges fixed positive),
/// returned as sign vectors aligned with g.edges().
std::vector<std::vector<int>> signings_up_to_switching(const UnderlyingGraph& g);

SignedGraph apply_signing(const UnderlyingGraph& g, const std::vector<int>& signs);

/// Number of switching-isomorphism classes of signings of g with A^2 = rI,
/// by enumerating all 2^|E| signings. Requires g connected.
std::size_t naive_sr2se_class_count(const UnderlyingGraph& g);

/// Whether two signings of the same connected underlying graph are switching
/// isomorphic, decided by trying every automorphism.
bool same_signing_class(const UnderlyingGraph& g, const SignedGraph& a, const SignedGraph& b);

/// Number of n x n weighing matrices of weight r with row intersections in
/// {0,2}, counted as sets of rows up to row order and row negation. Tiny n only.
std::size_t brute_weighing_count(std::size_t n, std::size_t r);

/// Signatures of a connected rectagraph with every quadrangle negative form an
/// affine space over GF(2); returns log2 of the number of its cosets modulo
/// switching, or -1 when the linear system is inconsistent.
int gf2_labeled_class_log2(const UnderlyingGraph& g);

}  // namespace oracle
