#include "sr2se/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "sr2se/error.hpp"

namespace sr2se {

void SignMatrix::set_edge(std::size_t u, std::size_t v, int sign) {
  set(u, v, sign);
  set(v, u, sign);
}

SignedGraph::SignedGraph(SignMatrix adj, std::vector<std::string> labels)
    : adj_(std::move(adj)), labels_(std::move(labels)) {
  const std::size_t n = adj_.size();
  if (!labels_.empty() && labels_.size() != n)
    throw PreconditionError("label count does not match vertex count");
  nbrs_.resize(n);
  support_.assign(n, BitRow(n));
  for (std::size_t u = 0; u < n; ++u) {
    if (adj_(u, u) != 0) throw PreconditionError("nonzero diagonal entry at " + std::to_string(u));
    for (std::size_t v = 0; v < n; ++v) {
      const int a = adj_(u, v);
      if (a < -1 || a > 1) throw PreconditionError("entry outside {-1,0,1}");
      if (a != adj_(v, u))
        throw PreconditionError("asymmetric entry at (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
      if (a != 0) {
        nbrs_[u].push_back(static_cast<Vertex>(v));
        support_[u].set(v);
        if (u < v) ++edges_;
      }
    }
  }
}

SignedGraph SignedGraph::from_edges(std::size_t n, std::span<const SignedEdge> edges) {
  SignMatrix m(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw PreconditionError("bad edge endpoint");
    if (e.sign != 1 && e.sign != -1) throw PreconditionError("edge sign must be +1 or -1");
    m.set_edge(e.u, e.v, e.sign);
  }
  return SignedGraph(std::move(m));
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < order(); ++u)
    for (Vertex v : nbrs_[u])
      if (u < v) out.push_back({static_cast<Vertex>(u), v, adj_(u, v)});
  return out;
}

IntMatrix SignedGraph::to_int_matrix() const {
  IntMatrix m(order(), order());
  for (std::size_t u = 0; u < order(); ++u)
    for (Vertex v : nbrs_[u]) m(u, v) = adj_(u, v);
  return m;
}

UnderlyingGraph::UnderlyingGraph(std::size_t n) : rows_(n, BitRow(n)) {}

UnderlyingGraph UnderlyingGraph::from_edges(std::size_t n,
                                            std::span<const std::pair<Vertex, Vertex>> edges) {
  UnderlyingGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void UnderlyingGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order() || u == v) throw PreconditionError("bad edge endpoint");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::vector<Vertex> UnderlyingGraph::neighbours(std::size_t v) const {
  std::vector<Vertex> out;
  for (std::size_t u = 0; u < order(); ++u)
    if (rows_[v].test(u)) out.push_back(static_cast<Vertex>(u));
  return out;
}

std::size_t UnderlyingGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& r : rows_) s += r.count();
  return s / 2;
}

std::vector<std::pair<Vertex, Vertex>> UnderlyingGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (adjacent(u, v)) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return out;
}

SignedGraph UnderlyingGraph::as_signed() const {
  SignMatrix m(order());
  for (auto [u, v] : edges()) m.set_edge(u, v, 1);
  return SignedGraph(std::move(m));
}

UnderlyingGraph underlying(const SignedGraph& g) {
  UnderlyingGraph h(g.order());
  for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
  return h;
}

std::vector<std::vector<Vertex>> components(const UnderlyingGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      out.back().push_back(static_cast<Vertex>(u));
      for (std::size_t v = 0; v < n; ++v)
        if (g.adjacent(u, v) && comp[v] < 0) {
          comp[v] = id;
          q.push(v);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const UnderlyingGraph& g) { return components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const UnderlyingGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::uint64_t quadrangle_count(const UnderlyingGraph& g) {
  // Every 4-cycle is counted once from each of its two diagonals.
  std::uint64_t twice = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const std::uint64_t c = g.row(u).and_count(g.row(v));
      twice += c * (c - (c > 0 ? 1 : 0)) / 2;
    }
  return twice / 2;
}

StructureReport structure_report(const UnderlyingGraph& g) {
  StructureReport rep;
  const std::size_t n = g.order();
  rep.connected = is_connected(g);
  rep.bipartite = bipartition(g).has_value();
  rep.regular = true;
  if (n > 0) {
    rep.degree = g.degree(0);
    for (std::size_t v = 1; v < n; ++v)
      if (g.degree(v) != rep.degree) rep.regular = false;
  }
  if (!rep.regular) rep.degree = 0;

  rep.triangle_free = true;
  bool pairs_ok = true;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto c = g.row(u).and_count(g.row(v));
      if (c != 0 && c != 2) pairs_ok = false;
      if (c > 0 && g.adjacent(u, v)) rep.triangle_free = false;
    }
  // A (0,2)-graph is connected by definition.
  rep.zero_two = pairs_ok && rep.connected;
  rep.quadrangle_count = quadrangle_count(g);
  return rep;
}

std::vector<std::size_t> common_neighbour_profile(const UnderlyingGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) out.push_back(g.row(u).and_count(g.row(v)));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_rectagraph(const UnderlyingGraph& g) {
  auto rep = structure_report(g);
  return rep.zero_two && rep.triangle_free;
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw PreconditionError("relabel: permutation size mismatch");
  SignMatrix m(n);
  for (const auto& e : g.edges()) m.set_edge(perm[e.u], perm[e.v], e.sign);
  return SignedGraph(std::move(m));
}

UnderlyingGraph relabel(const UnderlyingGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw PreconditionError("relabel: permutation size mismatch");
  UnderlyingGraph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

SignedGraph induced(const SignedGraph& g, std::span<const Vertex> keep) {
  SignMatrix m(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      const int a = g(keep[i], keep[j]);
      if (a != 0) m.set_edge(i, j, a);
    }
  return SignedGraph(std::move(m));
}

std::string to_string(const SignedGraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      const int a = g(i, j);
      os << (a > 0 ? '+' : a < 0 ? '-' : '.');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sr2se
