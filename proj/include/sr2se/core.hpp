#pragma once

// Exact signed-graph model and the structural predicates the rest of the
// toolkit is built on: regularity, connectivity, bipartiteness,
// triangle-freeness, the (0,2) property and quadrangle counts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sr2se/matrix.hpp"

namespace sr2se {

using Vertex = std::uint32_t;

/// Mutable dense square {-1,0,+1} matrix used to assemble graphs before they
/// are frozen into a SignedGraph.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int8_t operator()(std::size_t u, std::size_t v) const { return data_[u * n_ + v]; }

  /// Sets both (u,v) and (v,u).
  void set_edge(std::size_t u, std::size_t v, int sign);
  void set(std::size_t u, std::size_t v, int value) {
    data_[u * n_ + v] = static_cast<std::int8_t>(value);
  }

  const std::vector<std::int8_t>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> data_;
};

struct SignedEdge {
  Vertex u;
  Vertex v;
  int sign;
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Signed graph given by its symmetric adjacency matrix with zero diagonal
/// and entries in {-1,0,+1}. Immutable after construction.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// Validates symmetry, zero diagonal and entry range.
  explicit SignedGraph(SignMatrix adj, std::vector<std::string> labels = {});

  static SignedGraph from_edges(std::size_t n, std::span<const SignedEdge> edges);
  static SignedGraph empty(std::size_t n) { return SignedGraph(SignMatrix(n)); }

  std::size_t order() const { return adj_.size(); }
  int operator()(std::size_t u, std::size_t v) const { return adj_(u, v); }
  const SignMatrix& matrix() const { return adj_; }

  std::span<const Vertex> neighbours(std::size_t v) const { return nbrs_[v]; }
  std::size_t degree(std::size_t v) const { return nbrs_[v].size(); }
  const BitRow& support_row(std::size_t v) const { return support_[v]; }
  std::size_t edge_count() const { return edges_; }

  /// Edges with u < v in row-major order.
  std::vector<SignedEdge> edges() const;
  const std::vector<std::string>& labels() const { return labels_; }

  IntMatrix to_int_matrix() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.adj_.data() == b.adj_.data();
  }

 private:
  SignMatrix adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<BitRow> support_;
  std::size_t edges_ = 0;
  std::vector<std::string> labels_;
};

/// Unsigned simple graph (0/1 adjacency) stored as bit rows.
class UnderlyingGraph {
 public:
  UnderlyingGraph() = default;
  explicit UnderlyingGraph(std::size_t n);

  static UnderlyingGraph from_edges(std::size_t n,
                                    std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return rows_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const BitRow& row(std::size_t v) const { return rows_[v]; }
  std::vector<Vertex> neighbours(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void add_edge(std::size_t u, std::size_t v);

  /// All-positive signing.
  SignedGraph as_signed() const;

  friend bool operator==(const UnderlyingGraph&, const UnderlyingGraph&) = default;

 private:
  std::vector<BitRow> rows_;
};

struct StructureReport {
  bool regular = false;
  std::size_t degree = 0;  // valid iff regular
  bool connected = false;
  bool bipartite = false;
  bool triangle_free = false;
  bool zero_two = false;
  std::uint64_t quadrangle_count = 0;
};

UnderlyingGraph underlying(const SignedGraph& g);

StructureReport structure_report(const UnderlyingGraph& g);
inline StructureReport structure_report(const SignedGraph& g) {
  return structure_report(underlying(g));
}

/// |N(u) ∩ N(v)| over all unordered pairs u < v, sorted ascending.
std::vector<std::size_t> common_neighbour_profile(const UnderlyingGraph& g);
inline std::vector<std::size_t> common_neighbour_profile(const SignedGraph& g) {
  return common_neighbour_profile(underlying(g));
}

bool is_connected(const UnderlyingGraph& g);
/// Two-colouring of a bipartite graph (0/1 per vertex), or nullopt.
std::optional<std::vector<int>> bipartition(const UnderlyingGraph& g);
/// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> components(const UnderlyingGraph& g);
std::uint64_t quadrangle_count(const UnderlyingGraph& g);
bool is_rectagraph(const UnderlyingGraph& g);

/// Relabels g so that vertex v becomes perm[v].
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm);
UnderlyingGraph relabel(const UnderlyingGraph& g, std::span<const Vertex> perm);

/// Induced subgraph on the listed vertices, in the listed order.
SignedGraph induced(const SignedGraph& g, std::span<const Vertex> keep);

std::string to_string(const SignedGraph& g);

}  // namespace sr2se
