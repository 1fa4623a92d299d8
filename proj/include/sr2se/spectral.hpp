#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/error.hpp"
#include "sr2se/linalg.hpp"

namespace sr2se {

enum class SpectrumKind { TwoSym, ThreeSym, FourSym, Other };

const char* to_string(SpectrumKind k);

/// Exact witness of a symmetric spectrum shape.
///   TwoSym:   spec = {[-l]^m, [l]^m},                 A^2 = l^2 I
///   ThreeSym: spec = {[-l]^m, [0]^d, [l]^m},          A^3 = l^2 A
///   FourSym:  spec = {[-l]^m, [-u]^k, [u]^k, [l]^m},  (A^2 - l^2 I)(A^2 - u^2 I) = 0
/// charpoly is the polynomial the certified spectrum implies.
struct SpectralCertificate {
  SpectrumKind kind = SpectrumKind::Other;
  std::int64_t lambda_sq = 0;
  std::int64_t mu_sq = 0;
  std::size_t m = 0;
  std::size_t mu_mult = 0;
  std::size_t d = 0;
  Poly charpoly;
};

std::string describe(const SpectralCertificate& c);

Outcome<SpectralCertificate> certify_two_sym(const SignedGraph& g);

/// The optional hint fixes l^2 when traces cannot determine it (graphs
/// without edges, where every l^2 satisfies the identity).
Outcome<SpectralCertificate> certify_three_sym(const SignedGraph& g,
                                               std::optional<std::int64_t> lambda_sq_hint = {});

/// With a hint, l^2 is taken as given and may have multiplicity zero (this
/// arises for very small deleted subgraphs).
Outcome<SpectralCertificate> certify_four_sym(const SignedGraph& g,
                                              std::optional<std::int64_t> lambda_sq_hint = {});

/// First of TwoSym, ThreeSym, FourSym that applies; otherwise Other with the
/// computed characteristic polynomial.
SpectralCertificate strongest_certificate(const SignedGraph& g);

Poly char_poly(const SignedGraph& g);

/// Floating-point cross-check: eigenvalues of A against the certified
/// multiset, absolute tolerance tol.
bool numeric_spectrum_matches(const SignedGraph& g, const SpectralCertificate& c,
                              double tol = 1e-9);
std::vector<double> numeric_eigenvalues(const SignedGraph& g);

struct FilterFailure {
  std::string condition;
  std::string detail;
};

struct FilterVerdict {
  bool passed = true;
  std::vector<FilterFailure> failures;

  bool failed(const std::string& condition) const;
  void fail(std::string condition, std::string detail);
};

bool sum_of_two_squares(std::int64_t k);

/// Necessary conditions for an (n, r)-SR2SE; with bipartite set, also the
/// conditions on the part size n/2.
FilterVerdict filter_sr2se(std::int64_t n, std::int64_t r, bool bipartite);

struct TraceIdentities {
  std::int64_t sum_cubes = 0;
  std::int64_t sum_fourths = 0;
  std::int64_t expected_fourths = 0;
};

/// trace(A^3), trace(A^4) and n r (3r - 2) for the 0/1 adjacency matrix.
/// Faults on non-regular input.
TraceIdentities trace_identities(const UnderlyingGraph& g);
inline TraceIdentities trace_identities(const SignedGraph& g) {
  return trace_identities(underlying(g));
}

/// filter_sr2se on the graph's parameters plus the trace identities.
FilterVerdict filter_graph(const UnderlyingGraph& g);

}  // namespace sr2se
