#include "sr2se/switching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sr2se/error.hpp"
#include "sr2se/kernels.hpp"
#include "sr2se/spectral.hpp"

namespace sr2se {

SignedGraph switched(const SignedGraph& g, std::span<const Vertex> s) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : s) {
    if (v >= g.order()) throw PreconditionError("switched: vertex out of range");
    in[v] = true;
  }
  SignMatrix m(g.order());
  for (const auto& e : g.edges()) m.set_edge(e.u, e.v, in[e.u] != in[e.v] ? -e.sign : e.sign);
  return SignedGraph(std::move(m));
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), 0);
  p.signs.assign(n, 1);
  return p;
}

SignedGraph SignedPermutation::apply(const SignedGraph& g) const {
  if (perm.size() != g.order() || signs.size() != g.order())
    throw PreconditionError("signed permutation size mismatch");
  SignMatrix m(g.order());
  for (const auto& e : g.edges()) m.set_edge(perm[e.u], perm[e.v], signs[e.u] * signs[e.v] * e.sign);
  return SignedGraph(std::move(m));
}

IntMatrix SignedPermutation::apply(const IntMatrix& m) const {
  if (!m.square() || perm.size() != m.rows() || signs.size() != m.rows())
    throw PreconditionError("signed permutation size mismatch");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t u = 0; u < m.rows(); ++u)
    for (std::size_t v = 0; v < m.cols(); ++v)
      out(perm[u], perm[v]) = signs[u] * signs[v] * m(u, v);
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation q;
  q.perm.resize(perm.size());
  q.signs.resize(perm.size());
  for (std::size_t u = 0; u < perm.size(); ++u) {
    q.perm[perm[u]] = static_cast<Vertex>(u);
    q.signs[perm[u]] = signs[u];
  }
  return q;
}

SignedPermutation SignedPermutation::after(const SignedPermutation& other) const {
  SignedPermutation q;
  q.perm.resize(perm.size());
  q.signs.resize(perm.size());
  for (std::size_t u = 0; u < perm.size(); ++u) {
    q.perm[u] = perm[other.perm[u]];
    q.signs[u] = other.signs[u] * signs[other.perm[u]];
  }
  return q;
}

namespace {

// Joint colour refinement over the disjoint union of a (vertices 0..n-1) and
// b (vertices n..2n-1), edge-weighted by absolute entry values.
class JointRefiner {
 public:
  JointRefiner(const IntMatrix& a, const IntMatrix& b) : n_(a.rows()), adj_(2 * a.rows()) {
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) {
        if (u == v) continue;
        if (a(u, v) != 0) adj_[u].push_back({v, std::abs(a(u, v))});
        if (b(u, v) != 0) adj_[n_ + u].push_back({n_ + v, std::abs(b(u, v))});
      }
  }

  // Refines in place; returns false if the two sides' colour histograms differ.
  bool refine(std::vector<int>& col) const {
    std::size_t classes = count_classes(col);
    while (true) {
      std::map<std::vector<std::int64_t>, int> ids;
      std::vector<std::vector<std::int64_t>> sig(2 * n_);
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> nb;
        nb.reserve(adj_[v].size());
        for (auto [w, x] : adj_[v]) nb.emplace_back(x, col[w]);
        std::sort(nb.begin(), nb.end());
        auto& s = sig[v];
        s.push_back(col[v]);
        for (auto [x, c] : nb) {
          s.push_back(x);
          s.push_back(c);
        }
        ids.emplace(s, 0);
      }
      int next = 0;
      for (auto& [k, id] : ids) id = next++;
      for (std::size_t v = 0; v < 2 * n_; ++v) col[v] = ids[sig[v]];
      const std::size_t now = ids.size();
      if (!balanced(col)) return false;
      if (now == classes) return true;
      classes = now;
    }
  }

  bool balanced(const std::vector<int>& col) const {
    std::map<int, int> h;
    for (std::size_t v = 0; v < n_; ++v) ++h[col[v]];
    for (std::size_t v = n_; v < 2 * n_; ++v)
      if (--h[col[v]] < 0) return false;
    return true;
  }

 private:
  static std::size_t count_classes(const std::vector<int>& col) {
    std::vector<int> c = col;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj_;
};

class IsoSearch {
 public:
  IsoSearch(const IntMatrix& a, const IntMatrix& b) : a_(a), b_(b), n_(a.rows()), ref_(a, b) {}

  std::optional<SignedPermutation> run(std::vector<int> col) {
    if (!ref_.refine(col)) return std::nullopt;
    perm_.assign(n_, kNone);
    inv_.assign(n_, kNone);
    signs_.assign(n_, 0);
    if (!extend(col, 0)) return std::nullopt;
    return SignedPermutation{std::vector<Vertex>(perm_.begin(), perm_.end()), signs_};
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t choose(const std::vector<int>& col) const {
    std::map<int, int> size;
    for (std::size_t v = 0; v < n_; ++v)
      if (perm_[v] == kNone) ++size[col[v]];
    std::size_t best = kNone;
    bool best_linked = false;
    int best_size = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      if (perm_[u] != kNone) continue;
      bool linked = false;
      for (std::size_t w = 0; w < n_ && !linked; ++w)
        linked = w != u && perm_[w] != kNone && a_(u, w) != 0;
      const int s = size[col[u]];
      if (best == kNone || (linked && !best_linked) || (linked == best_linked && s < best_size)) {
        best = u;
        best_linked = linked;
        best_size = s;
      }
    }
    return best;
  }

  bool extend(const std::vector<int>& col, std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t u = choose(col);
    // Sign of u: forced through an already-mapped neighbour, otherwise u
    // starts a new component and its sign is free (fixed to +1).
    std::size_t anchor = kNone;
    for (std::size_t w = 0; w < n_ && anchor == kNone; ++w)
      if (w != u && perm_[w] != kNone && a_(u, w) != 0) anchor = w;

    for (std::size_t t = 0; t < n_; ++t) {
      if (inv_[t] != kNone || col[n_ + t] != col[u] || b_(t, t) != a_(u, u)) continue;
      int s = 1;
      if (anchor != kNone) {
        const std::int64_t want = a_(u, anchor) * signs_[anchor];
        const std::int64_t got = b_(t, perm_[anchor]);
        if (got == want) s = 1;
        else if (got == -want) s = -1;
        else continue;
      }
      bool ok = true;
      for (std::size_t w = 0; w < n_ && ok; ++w)
        if (w != u && perm_[w] != kNone) ok = b_(t, perm_[w]) == s * signs_[w] * a_(u, w);
      if (!ok) continue;

      std::vector<int> next = col;
      const int fresh = *std::max_element(next.begin(), next.end()) + 1;
      next[u] = fresh;
      next[n_ + t] = fresh;
      if (!ref_.refine(next)) continue;
      perm_[u] = t;
      inv_[t] = u;
      signs_[u] = s;
      if (extend(next, depth + 1)) return true;
      perm_[u] = kNone;
      inv_[t] = kNone;
      signs_[u] = 0;
    }
    return false;
  }

  const IntMatrix& a_;
  const IntMatrix& b_;
  std::size_t n_;
  JointRefiner ref_;
  std::vector<std::size_t> perm_, inv_;
  std::vector<int> signs_;
};

}  // namespace

std::optional<SignedPermutation> find_signed_isomorphism(const IntMatrix& a, const IntMatrix& b,
                                                         std::span<const int> colours_a,
                                                         std::span<const int> colours_b,
                                                         std::size_t cap) {
  if (!a.square() || !b.square() || !a.is_symmetric() || !b.is_symmetric())
    throw PreconditionError("find_signed_isomorphism: symmetric square matrices required");
  if (a.rows() != b.rows()) return std::nullopt;
  const std::size_t n = a.rows();
  if (n > cap)
    throw CapExceededError("switching isomorphism: order " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap) + "; use class_invariants");
  if (colours_a.size() != colours_b.size() || (!colours_a.empty() && colours_a.size() != n))
    throw PreconditionError("find_signed_isomorphism: colour vector size mismatch");

  // Initial colours: user colour, diagonal entry, multiset of |off-diagonal|.
  std::map<std::vector<std::int64_t>, int> ids;
  std::vector<std::vector<std::int64_t>> keys(2 * n);
  for (std::size_t side = 0; side < 2; ++side) {
    const IntMatrix& m = side ? b : a;
    const auto colours = side ? colours_b : colours_a;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::int64_t> k{colours.empty() ? 0 : colours[v], m(v, v)};
      std::vector<std::int64_t> offs;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && m(v, w) != 0) offs.push_back(std::abs(m(v, w)));
      std::sort(offs.begin(), offs.end());
      k.insert(k.end(), offs.begin(), offs.end());
      keys[side * n + v] = k;
      ids.emplace(k, 0);
    }
  }
  int next = 0;
  for (auto& [k, id] : ids) id = next++;
  std::vector<int> col(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) col[v] = ids[keys[v]];

  IsoSearch search(a, b);
  auto result = search.run(std::move(col));
  if (result && !(result->apply(a) == b))
    throw Error("find_signed_isomorphism: witness failed verification");
  return result;
}

std::optional<SignedPermutation> switching_isomorphic(const SignedGraph& g, const SignedGraph& h,
                                                      std::size_t cap) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto w = find_signed_isomorphism(g.to_int_matrix(), h.to_int_matrix(), {}, {}, cap);
  if (w && !(w->apply(g) == h)) throw Error("switching_isomorphic: witness failed verification");
  return w;
}

std::string refinement_certificate(const UnderlyingGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> col(n, 0);
  std::ostringstream cert;
  cert << "n" << n << ";";
  std::size_t classes = 1;
  for (std::size_t round = 0; round <= n; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nb;
      for (std::size_t w = 0; w < n; ++w)
        if (g.adjacent(v, w)) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      ++ids[sig[v]];
    }
    // The sorted signature table with multiplicities is canonical.
    int next = 0;
    for (auto& [s, cnt] : ids) {
      cert << cnt << ":";
      for (int x : s) cert << x << ",";
      cert << "|";
      cnt = next++;
    }
    cert << ";";
    for (std::size_t v = 0; v < n; ++v) col[v] = ids[sig[v]];
    if (ids.size() == classes && round > 0) break;
    classes = ids.size();
  }
  return cert.str();
}

std::string ClassInvariants::key() const {
  std::ostringstream os;
  os << to_string(charpoly) << "#";
  for (auto [p, q] : quadrangle_balance) os << p << "/" << q << ",";
  os << "#" << underlying_certificate;
  return os.str();
}

ClassInvariants class_invariants(const SignedGraph& g) {
  ClassInvariants inv;
  inv.charpoly = char_poly(g);
  const std::size_t n = g.order();
  const IntMatrix s2 = kernels::signed_square(g);
  const auto u = underlying(g);
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t pos = 0, neg = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v) continue;
      // c two-paths from v to w, p of them positive and q negative.
      const auto c = static_cast<std::int64_t>(u.row(v).and_count(u.row(w)));
      const std::int64_t p = (c + s2(v, w)) / 2, q = (c - s2(v, w)) / 2;
      pos += p * (p - 1) / 2 + q * (q - 1) / 2;
      neg += p * q;
    }
    // Each quadrangle through v is seen once from its opposite vertex.
    inv.quadrangle_balance.emplace_back(pos, neg);
  }
  std::sort(inv.quadrangle_balance.begin(), inv.quadrangle_balance.end());
  inv.underlying_certificate = refinement_certificate(u);
  return inv;
}

std::vector<Vertex> scheme_order(const UnderlyingGraph& g, Vertex base) {
  const std::size_t n = g.order();
  if (base >= n) throw PreconditionError("schem_normal_form: base vertex out of range");
  const auto rep = structure_report(g);
  if (!rep.connected) throw PreconditionError("schem_normal_form: graph is not connected");
  if (!rep.regular) throw PreconditionError("schem_normal_form: graph is not regular");
  if (!rep.triangle_free) throw PreconditionError("schem_normal_form: graph is not triangle-free");
  if (!rep.zero_two) throw PreconditionError("schem_normal_form: graph is not a (0,2)-graph");

  std::vector<Vertex> order{base};
  std::vector<bool> placed(n, false);
  placed[base] = true;
  const auto nbrs = g.neighbours(base);
  for (Vertex v : nbrs) {
    order.push_back(v);
    placed[v] = true;
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      for (std::size_t w = 0; w < n; ++w)
        if (w != base && g.adjacent(nbrs[i], w) && g.adjacent(nbrs[j], w)) {
          if (placed[w]) throw Error("schem_normal_form: distance-2 vertex seen twice");
          order.push_back(static_cast<Vertex>(w));
          placed[w] = true;
        }
  for (std::size_t idx = 0; idx < order.size(); ++idx)
    for (Vertex w : g.neighbours(order[idx]))
      if (!placed[w]) {
        order.push_back(w);
        placed[w] = true;
      }
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[order[i]] = static_cast<Vertex>(i);
  return perm;
}

bool scheme_prefix_matches(const SignedGraph& g, std::size_t r) {
  const std::size_t n = g.order();
  if (n < r + 1 + r * (r - 1) / 2) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (g(0, j) != ((j >= 1 && j <= r) ? 1 : 0)) return false;
  // Column of the distance-2 vertex shared by neighbours i < j (1-based).
  std::size_t col = r + 1;
  std::vector<std::vector<std::size_t>> owner(r + 1);
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j, ++col) {
      owner[i].push_back(col);
      owner[j].push_back(col);
    }
  for (std::size_t i = 1; i <= r; ++i) {
    if (g(i, 0) != 1) return false;
    for (std::size_t j = 1; j < n; ++j) {
      const bool should = std::find(owner[i].begin(), owner[i].end(), j) != owner[i].end();
      if ((g(i, j) != 0) != should) return false;
      if (!should) continue;
      bool earlier = false;
      for (std::size_t k = 1; k < i && !earlier; ++k) earlier = g(k, j) != 0;
      if (g(i, j) != (earlier ? -1 : 1)) return false;
    }
  }
  return true;
}

SwitchingClass schem_normal_form(const SignedGraph& g, Vertex base) {
  const auto perm = scheme_order(underlying(g), base);
  const SignedGraph relabeled = relabel(g, perm);
  const std::size_t n = g.order();
  std::vector<int> x(n, 1);
  for (std::size_t j = 1; j < n; ++j) {
    const auto nb = relabeled.neighbours(j);
    const Vertex parent = nb.front();  // neighbours are sorted; the first is earlier
    if (parent >= j) throw Error("schem_normal_form: vertex without earlier neighbour");
    x[j] = x[parent] * relabeled(parent, j);
  }
  SwitchingClass sc;
  for (std::size_t j = 0; j < n; ++j)
    if (x[j] < 0) sc.switch_set.push_back(static_cast<Vertex>(j));
  sc.representative = switched(relabeled, sc.switch_set);
  sc.base_vertex = base;
  sc.permutation = perm;
  sc.degree = g.degree(base);
  const std::size_t r = sc.degree;
  sc.k = n - r * (r + 1) / 2 - 1;
  sc.scheme_prefix_holds = scheme_prefix_matches(sc.representative, r);
  return sc;
}

}  // namespace sr2se
