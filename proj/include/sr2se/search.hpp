#pragma once

// Exhaustive backtracking searches: SR2SE signatures of a fixed underlying
// rectagraph, and weighing matrices with intersection numbers {0, 2}.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/switching.hpp"
#include "sr2se/weighing.hpp"

namespace sr2se {

struct SearchOptions {
  /// Search nodes (sign or row assignments tried); unlimited when empty.
  std::optional<std::uint64_t> node_budget;
  bool parallel = true;
  /// Depth at which the tree is cut into independent tasks; 0 picks the end
  /// of the first row holding free edges.
  std::size_t split_depth = 0;
  /// Shuffle the free edges instead of row-major order (results must not change).
  std::optional<std::uint64_t> shuffle_seed;
  Vertex base = 0;
  std::size_t iso_cap = kDefaultIsoCap;
  /// Called from the coordinating thread with (tasks done, tasks total, nodes).
  std::function<void(std::size_t, std::size_t, std::uint64_t)> progress;
};

/// The normalised problem: vertices relabelled by scheme_order, rows 0..r and
/// every vertex's edge to its earliest neighbour fixed, remaining edges free.
struct SignatureSearchProblem {
  UnderlyingGraph graph;             // relabelled
  std::vector<Vertex> permutation;   // original -> relabelled
  std::size_t degree = 0;
  SignMatrix fixed;                  // 0 where the edge is free
  std::vector<std::pair<Vertex, Vertex>> free_edges;
};

SignatureSearchProblem prepare_signature_search(const UnderlyingGraph& g, Vertex base = 0);

struct SearchOutcome {
  /// One representative per switching class, on the original vertex labels.
  std::vector<SignedGraph> solutions;
  std::size_t raw_solutions = 0;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
  /// False when classes above iso_cap were merged by invariants alone.
  bool classes_exact = true;
  /// Surviving partial assignments after each free edge (index = depth - 1).
  std::vector<std::uint64_t> depth_counts;
  /// Surviving partial assignments at the completion of each row.
  std::vector<std::uint64_t> row_counts;
  std::size_t fixed_edges = 0;
};

SearchOutcome search_signatures(const UnderlyingGraph& g, const SearchOptions& options = {});
/// Single-threaded reference: plain recursion from the root, no task split.
SearchOutcome search_signatures_serial(const UnderlyingGraph& g, const SearchOptions& options = {});

/// Replayable record of a signature search.
struct ProofLog {
  std::uint64_t graph_hash = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  Vertex base = 0;
  std::size_t fixed_edges = 0;
  std::size_t free_edges = 0;
  std::vector<std::uint64_t> depth_counts;
  std::vector<std::uint64_t> row_counts;
  std::size_t solutions = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  friend bool operator==(const ProofLog&, const ProofLog&) = default;
};

std::uint64_t graph_hash(const UnderlyingGraph& g);

ProofLog make_proof_log(const UnderlyingGraph& g, const SearchOutcome& out, Vertex base);
ProofLog verify_nonexistence(const UnderlyingGraph& g, const SearchOptions& options = {});
std::string to_text(const ProofLog& log);
/// Throws ParseError on malformed logs.
ProofLog parse_proof_log(std::string_view text);
/// Re-runs the search serially and compares every recorded count.
bool replay_proof(const UnderlyingGraph& g, const ProofLog& log);

struct WeighingSearchOutcome {
  std::vector<WeighingMatrix> matrices;  // one per equivalence class
  std::size_t raw_solutions = 0;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
};

/// All W(n, r) with intersection numbers in {0, 2} whose first r rows follow
/// scheme (2), up to equivalence.
WeighingSearchOutcome search_weighing(std::size_t n, std::size_t r, const SearchOptions& options = {});
WeighingSearchOutcome search_weighing_serial(std::size_t n, std::size_t r,
                                             const SearchOptions& options = {});

}  // namespace sr2se
