#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/linalg.hpp"
#include "sr2se/matrix.hpp"

namespace sr2se {

/// Reverses the sign of every edge with exactly one end in s.
SignedGraph switched(const SignedGraph& g, std::span<const Vertex> s);

/// Signed permutation Q acting by similarity: the entry (u,v) of the input
/// lands at (perm[u], perm[v]) multiplied by signs[u] * signs[v].
struct SignedPermutation {
  std::vector<Vertex> perm;
  std::vector<int> signs;

  static SignedPermutation identity(std::size_t n);
  SignedGraph apply(const SignedGraph& g) const;
  IntMatrix apply(const IntMatrix& m) const;
  SignedPermutation inverse() const;
  /// (this after other): first other, then this.
  SignedPermutation after(const SignedPermutation& other) const;
};

inline constexpr std::size_t kDefaultIsoCap = 128;

/// Signed permutation P with P.apply(a) == b, for symmetric integer matrices
/// of equal order (diagonals included). Optional vertex colours must be
/// preserved. Faults above the cap.
std::optional<SignedPermutation> find_signed_isomorphism(
    const IntMatrix& a, const IntMatrix& b, std::span<const int> colours_a = {},
    std::span<const int> colours_b = {}, std::size_t cap = kDefaultIsoCap);

/// Decides switching isomorphism; the witness maps g onto h and has been
/// re-verified by direct application.
std::optional<SignedPermutation> switching_isomorphic(const SignedGraph& g, const SignedGraph& h,
                                                      std::size_t cap = kDefaultIsoCap);

/// Switching-invariant screening data. Equal classes give equal invariants;
/// the converse does not hold.
struct ClassInvariants {
  Poly charpoly;
  /// Per vertex: (positive, negative) quadrangles through it, sorted.
  std::vector<std::pair<std::int64_t, std::int64_t>> quadrangle_balance;
  /// Colour-refinement certificate of the underlying graph.
  std::string underlying_certificate;

  friend bool operator==(const ClassInvariants&, const ClassInvariants&) = default;
  std::string key() const;
};

ClassInvariants class_invariants(const SignedGraph& g);

/// Stable colour-refinement certificate of an unsigned graph; isomorphic
/// graphs give equal strings.
std::string refinement_certificate(const UnderlyingGraph& g);

/// Scheme-(1) representative of a signed rectagraph.
///   representative == switched(relabel(original, permutation), switch_set)
/// Vertex 0 is the base, 1..r its neighbours in increasing original index,
/// then one vertex per neighbour pair (1,2),(1,3),...,(r-1,r), then the
/// k remaining vertices in breadth-first order.
struct SwitchingClass {
  SignedGraph representative;
  Vertex base_vertex = 0;
  std::vector<Vertex> permutation;
  std::vector<Vertex> switch_set;
  std::size_t degree = 0;
  std::size_t k = 0;
  /// Whether rows 0..r carry the scheme-(1) sign pattern. Always true for an
  /// SR2SE; other signings of the same graph may violate it.
  bool scheme_prefix_holds = false;
};

/// Faults (naming the failed predicate) unless g is a connected, regular,
/// triangle-free (0,2)-graph.
SwitchingClass schem_normal_form(const SignedGraph& g, Vertex base);

/// Just the relabeling used by schem_normal_form (old index -> new index).
std::vector<Vertex> scheme_order(const UnderlyingGraph& g, Vertex base);

/// Checks the scheme-(1) sign pattern of rows 0..r of an already-ordered graph.
bool scheme_prefix_matches(const SignedGraph& g, std::size_t r);

}  // namespace sr2se
