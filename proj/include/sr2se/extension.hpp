#pragma once

// Vertex deletion and re-extension of signed graphs with symmetric spectra.
// Everything here is driven by the Gram residual M = l^2 I - A^2, whose
// rank-1 and rank-2 structure determines how a deleted vertex can be put back.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/error.hpp"
#include "sr2se/matrix.hpp"
#include "sr2se/spectral.hpp"
#include "sr2se/switching.hpp"

namespace sr2se {

/// Induced subgraph on the vertices not in s (kept in their original order).
SignedGraph delete_vertices(const SignedGraph& g, std::span<const Vertex> s);

/// The five shapes a rank-2 Gram residual with diagonal in {0,1,2} can take,
/// up to switching isomorphism (c is the nonzero eigenvalue of M):
///   A  O + J_c + J_c
///   B  O + J_c + 2J_{c/2}
///   C  O + 2J_{c/2} + 2J_{c/2}
///   D  O + [[2,1,1],[1,2,-1],[1,-1,2]] (x) J_{c/3}
///   E  O + the four-block form mixing 2J_{d2/2} and J_{d1/2} blocks
enum class GramCase { A, B, C, D, E, None };

const char* to_string(GramCase c);

struct GramResidual {
  IntMatrix matrix;
  std::int64_t lambda_sq = 0;
  std::size_t d0 = 0, d1 = 0, d2 = 0;
  std::size_t rank = 0;
  GramCase case_label = GramCase::None;
};

GramResidual gram_residual(const SignedGraph& g, std::int64_t lambda_sq);

struct GramClassification {
  GramCase label = GramCase::None;
  /// Nonzero eigenvalue of M.
  std::int64_t eigenvalue = 0;
  IntMatrix canonical;
  /// witness.apply(residual) == canonical
  SignedPermutation witness;
};

/// Requires rank 2, M^2 = cM for c = trace/2, and diagonal in {0,1,2}.
GramClassification classify_gram(const GramResidual& m);

struct ExtensionVector {
  std::vector<int> x;
  std::int64_t norm_sq = 0;
};

/// Every {0,+-1} vector in the column space of a rank-2 M with M^2 = cM,
/// sorted lexicographically (-1 < 0 < 1). Computed with exact arithmetic.
std::vector<ExtensionVector> eigenspace_sign_vectors(const IntMatrix& m);

/// Rank-1 factor M = x x^T. The first index i0 with M[i0,i0] = 1 gets
/// x = +1 and x_i = M[i0,i] elsewhere.
ExtensionVector rank_one_factor(const IntMatrix& m);

/// [[A, x], [x^T, 0]]: the new vertex is appended last.
SignedGraph border(const SignedGraph& g, const std::vector<int>& x);

/// Input: spectrum {[-l]^m, [0]^1, [l]^m} with degrees l^2 or l^2 - 1.
/// Output: an added vertex giving spectrum {[-l]^(m+1), [l]^(m+1)}.
/// The optional l^2 is needed only when the graph has no edges.
SignedGraph extend_one_vertex(const SignedGraph& g, std::optional<std::int64_t> lambda_sq = {});

/// Input: spectrum {[-l]^(m-2), [-1], [1], [l]^(m-2)}, degrees in
/// {l^2, l^2-1, l^2-2}, at least one of degree l^2 - 1. Output: one added
/// vertex giving {[-l]^(m-1), [0], [l]^(m-1)} with degrees l^2 or l^2 - 1.
SignedGraph extend_four_to_three(const SignedGraph& g, std::optional<std::int64_t> lambda_sq = {});

struct ZeroPairOptions {
  /// Require at least l^2 + 1 vertices of degree l^2 - 1. With this off, the
  /// extension is attempted anyway and the result is verified.
  bool require_degree_hypothesis = true;
};

/// Input: spectrum {[-l]^(m-2), [0]^2, [l]^(m-2)}, degrees in
/// {l^2, l^2-1, l^2-2}. Output: one added vertex giving
/// {[-l]^(m-1), [0], [l]^(m-1)} with degrees l^2 or l^2 - 1.
SignedGraph extend_zero_pair(const SignedGraph& g, std::optional<std::int64_t> lambda_sq = {},
                             const ZeroPairOptions& options = {});

struct ConstantDiagVerdict {
  std::int64_t eigenvalue = 0;
  IntMatrix canonical;  // 2J_{n/2} + 2J_{n/2}
  SignedPermutation witness;
};

/// Symmetric n x n integer matrix, n >= 3, constant diagonal, off-diagonal
/// entries in {0,+-2}, spectrum {[c]^2, [0]^(n-2)} with c > 0. Refuses input
/// outside these hypotheses; accepted input is switched onto 2J + 2J.
Outcome<ConstantDiagVerdict> classify_constant_diag_gram(const IntMatrix& m);

enum class SmallSpectrumScope { ThreeEigenvalues, FourEigenvalues, OutOfScope };

struct SmallSpectrumVerdict {
  SmallSpectrumScope scope = SmallSpectrumScope::OutOfScope;
  /// False means a signed (0,2)-graph contradicts the classification.
  bool holds = true;
  std::string detail;

  bool falsified() const { return !holds; }
};

/// For a signed (0,2)-graph: three symmetric eigenvalues force underlying
/// K_{2,2}; four symmetric eigenvalues +-l (multiplicity m), +-u
/// (multiplicity 1) with 1 <= u < l force K_4.
SmallSpectrumVerdict classify_small_spectrum_02graph(const SignedGraph& g);

}  // namespace sr2se
