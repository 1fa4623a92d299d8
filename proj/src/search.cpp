#include "sr2se/search.hpp"

#include <array>
#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <random>
#include <sstream>

#include <omp.h>

#include "sr2se/error.hpp"

namespace sr2se {

namespace {

// Compiled form of a signature search: edge-indexed signs, and for every free
// edge the quadrangles it closes (the other three edges are decided earlier).
struct CompiledSearch {
  SignatureSearchProblem problem;
  std::vector<std::pair<Vertex, Vertex>> edges;  // all edges, ids
  std::vector<std::int8_t> initial;              // fixed signs by edge id, 0 if free
  std::vector<std::size_t> free_id;              // depth -> edge id
  std::vector<std::vector<std::array<std::size_t, 3>>> closing;  // depth -> quadrangles
  std::vector<std::size_t> row_end;  // depth -> row index if the row completes here, else npos
  bool fixed_consistent = true;
};

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

CompiledSearch compile(const UnderlyingGraph& g, const SearchOptions& opt) {
  CompiledSearch cs;
  cs.problem = prepare_signature_search(g, opt.base);
  auto& p = cs.problem;
  const std::size_t n = p.graph.order();
  if (opt.shuffle_seed) {
    std::mt19937_64 rng(*opt.shuffle_seed);
    std::shuffle(p.free_edges.begin(), p.free_edges.end(), rng);
  }

  std::vector<std::vector<std::size_t>> id(n, std::vector<std::size_t>(n, kNpos));
  for (auto [u, v] : p.graph.edges()) {
    id[u][v] = id[v][u] = cs.edges.size();
    cs.edges.emplace_back(u, v);
    cs.initial.push_back(static_cast<std::int8_t>(p.fixed(u, v)));
  }
  std::vector<std::size_t> depth_of(cs.edges.size(), kNpos);
  for (auto [u, v] : p.free_edges) {
    depth_of[id[u][v]] = cs.free_id.size();
    cs.free_id.push_back(id[u][v]);
  }
  auto when = [&](std::size_t e) { return depth_of[e] == kNpos ? 0 : depth_of[e] + 1; };

  // Enumerate each quadrangle once: a is its least vertex, c opposite a.
  cs.closing.resize(cs.free_id.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c) {
      std::vector<Vertex> mid;
      for (Vertex b : p.graph.neighbours(a))
        if (p.graph.adjacent(b, c)) mid.push_back(b);
      if (mid.size() < 2) continue;
      if (mid.size() != 2) throw Error("signature search: pair with more than two common neighbours");
      const Vertex b = mid[0], d = mid[1];
      if (a > std::min(b, d)) continue;
      std::array<std::size_t, 4> q{id[a][b], id[b][c], id[c][d], id[d][a]};
      std::size_t last = 0;
      for (std::size_t i = 1; i < 4; ++i)
        if (when(q[i]) > when(q[last])) last = i;
      if (when(q[last]) == 0) {
        int prod = 1;
        for (auto e : q) prod *= cs.initial[e];
        if (prod != -1) cs.fixed_consistent = false;
        continue;
      }
      std::array<std::size_t, 3> rest{};
      std::size_t k = 0;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != last) rest[k++] = q[i];
      cs.closing[depth_of[q[last]]].push_back(rest);
    }

  cs.row_end.assign(cs.free_id.size(), kNpos);
  if (!opt.shuffle_seed)
    for (std::size_t d = 0; d < cs.free_id.size(); ++d) {
      const Vertex row = cs.edges[cs.free_id[d]].first;
      if (d + 1 == cs.free_id.size() || cs.edges[cs.free_id[d + 1]].first != row) cs.row_end[d] = row;
    }
  return cs;
}

struct TaskStats {
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> depth_counts;
  std::vector<std::uint64_t> row_counts;
  std::vector<std::vector<std::int8_t>> solutions;
  bool aborted = false;
};

class Walker {
 public:
  Walker(const CompiledSearch& cs, std::atomic<std::uint64_t>* shared, std::optional<std::uint64_t> budget,
         std::atomic<bool>* stop)
      : cs_(cs), shared_(shared), budget_(budget), stop_(stop) {}

  // Depth-first from `depth` with `signs` holding the decided prefix. When
  // `frontier` is set, states reaching `cut` are stored instead of expanded.
  void run(std::vector<std::int8_t>& signs, std::size_t depth, TaskStats& st, std::size_t cut = kNpos,
           std::vector<std::vector<std::int8_t>>* frontier = nullptr) {
    if (st.aborted) return;
    if (depth == cs_.free_id.size()) {
      st.solutions.push_back(signs);
      return;
    }
    if (depth == cut) {
      frontier->push_back(signs);
      return;
    }
    const auto& closes = cs_.closing[depth];
    int forced = 0;
    for (const auto& q : closes) {
      const int need = -signs[q[0]] * signs[q[1]] * signs[q[2]];
      if (forced == 0) forced = need;
      else if (forced != need) forced = 2;
    }
    for (int value : {1, -1}) {
      if (!count_node(st)) return;
      if (forced != 0 && value != forced) continue;
      const std::size_t e = cs_.free_id[depth];
      signs[e] = static_cast<std::int8_t>(value);
      ++st.depth_counts[depth];
      if (cs_.row_end[depth] != kNpos) ++st.row_counts[cs_.row_end[depth]];
      run(signs, depth + 1, st, cut, frontier);
      signs[e] = 0;
      if (st.aborted) return;
    }
  }

 private:
  bool count_node(TaskStats& st) {
    ++st.nodes;
    if (stop_ && stop_->load(std::memory_order_relaxed)) {
      st.aborted = true;
      return false;
    }
    if (budget_) {
      const auto total = shared_->fetch_add(1, std::memory_order_relaxed) + 1;
      if (total > *budget_) {
        st.aborted = true;
        if (stop_) stop_->store(true);
        return false;
      }
    }
    return true;
  }

  const CompiledSearch& cs_;
  std::atomic<std::uint64_t>* shared_;
  std::optional<std::uint64_t> budget_;
  std::atomic<bool>* stop_;
};

TaskStats fresh_stats(const CompiledSearch& cs) {
  TaskStats st;
  st.depth_counts.assign(cs.free_id.size(), 0);
  st.row_counts.assign(cs.problem.graph.order(), 0);
  return st;
}

void merge_into(TaskStats& into, const TaskStats& from) {
  into.nodes += from.nodes;
  for (std::size_t i = 0; i < into.depth_counts.size(); ++i) into.depth_counts[i] += from.depth_counts[i];
  for (std::size_t i = 0; i < into.row_counts.size(); ++i) into.row_counts[i] += from.row_counts[i];
  into.solutions.insert(into.solutions.end(), from.solutions.begin(), from.solutions.end());
  into.aborted = into.aborted || from.aborted;
}

SearchOutcome finish(const CompiledSearch& cs, const TaskStats& st, const SearchOptions& opt) {
  SearchOutcome out;
  out.nodes_explored = st.nodes;
  out.exhausted = !st.aborted;
  out.depth_counts = st.depth_counts;
  if (!opt.shuffle_seed) out.row_counts = st.row_counts;
  out.raw_solutions = st.solutions.size();
  out.fixed_edges = cs.edges.size() - cs.free_id.size();

  const auto& p = cs.problem;
  const std::size_t n = p.graph.order();
  std::vector<Vertex> back(n);
  for (Vertex v = 0; v < n; ++v) back[p.permutation[v]] = v;

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (const auto& signs : st.solutions) {
    SignMatrix m(n);
    for (std::size_t e = 0; e < cs.edges.size(); ++e) m.set_edge(cs.edges[e].first, cs.edges[e].second, signs[e]);
    SignedGraph sol = relabel(SignedGraph(std::move(m)), back);
    auto& bucket = buckets[class_invariants(sol).key()];
    bool seen = false;
    if (n > opt.iso_cap) {
      seen = !bucket.empty();
      if (seen) out.classes_exact = false;
    } else {
      for (std::size_t idx : bucket)
        if (switching_isomorphic(out.solutions[idx], sol, opt.iso_cap)) {
          seen = true;
          break;
        }
    }
    if (!seen) {
      bucket.push_back(out.solutions.size());
      out.solutions.push_back(std::move(sol));
    }
  }
  return out;
}

std::vector<std::int8_t> start_signs(const CompiledSearch& cs) { return cs.initial; }

}  // namespace

SignatureSearchProblem prepare_signature_search(const UnderlyingGraph& g, Vertex base) {
  SignatureSearchProblem p;
  p.permutation = scheme_order(g, base);
  p.graph = relabel(g, p.permutation);
  const std::size_t n = g.order();
  p.degree = n > 0 ? p.graph.degree(0) : 0;
  const std::size_t r = p.degree;
  p.fixed = SignMatrix(n);
  // Every vertex's edge to its earliest neighbour is positive (a spanning
  // tree, so this only fixes the switching).
  for (Vertex v = 1; v < n; ++v) {
    const auto nb = p.graph.neighbours(v);
    p.fixed.set_edge(nb.front(), v, 1);
  }
  // The second edge into each distance-2 vertex closes a quadrangle through
  // the base with three positive edges, so it is negative.
  for (Vertex v = r + 1; v < r + 1 + r * (r - 1) / 2 && v < n; ++v) {
    const auto nb = p.graph.neighbours(v);
    if (nb.size() < 2 || nb[1] > r) throw Error("signature search: distance-2 vertex without two base neighbours");
    p.fixed.set_edge(nb[1], v, -1);
  }
  for (auto [u, v] : p.graph.edges())
    if (p.fixed(u, v) == 0) p.free_edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(p.free_edges.begin(), p.free_edges.end());
  return p;
}

SearchOutcome search_signatures_serial(const UnderlyingGraph& g, const SearchOptions& opt) {
  const CompiledSearch cs = compile(g, opt);
  TaskStats st = fresh_stats(cs);
  if (cs.fixed_consistent) {
    std::atomic<std::uint64_t> shared{0};
    Walker w(cs, &shared, opt.node_budget, nullptr);
    auto signs = start_signs(cs);
    w.run(signs, 0, st);
  }
  return finish(cs, st, opt);
}

SearchOutcome search_signatures(const UnderlyingGraph& g, const SearchOptions& opt) {
  if (!opt.parallel) return search_signatures_serial(g, opt);
  const CompiledSearch cs = compile(g, opt);
  TaskStats total = fresh_stats(cs);
  if (!cs.fixed_consistent) return finish(cs, total, opt);

  std::size_t cut = opt.split_depth;
  if (cut == 0 && !cs.free_id.empty()) {
    const Vertex first_row = cs.edges[cs.free_id[0]].first;
    while (cut < cs.free_id.size() && cs.edges[cs.free_id[cut]].first == first_row) ++cut;
  }
  cut = std::min(cut, cs.free_id.size());

  std::atomic<std::uint64_t> shared{0};
  std::atomic<bool> stop{false};
  std::vector<std::vector<std::int8_t>> frontier;
  {
    Walker w(cs, &shared, opt.node_budget, &stop);
    auto signs = start_signs(cs);
    w.run(signs, 0, total, cut, &frontier);
  }

  std::vector<TaskStats> parts(frontier.size());
  std::atomic<std::size_t> done{0};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t < frontier.size(); ++t) {
    TaskStats st = fresh_stats(cs);
    Walker w(cs, &shared, opt.node_budget, &stop);
    auto signs = frontier[t];
    w.run(signs, cut, st);
    parts[t] = std::move(st);
    const auto now = ++done;
    if (opt.progress && omp_get_thread_num() == 0) opt.progress(now, frontier.size(), shared.load());
  }
  for (const auto& part : parts) merge_into(total, part);
  return finish(cs, total, opt);
}

std::uint64_t graph_hash(const UnderlyingGraph& g) {
  // FNV-1a over the order and the packed adjacency rows.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(g.order());
  for (std::size_t v = 0; v < g.order(); ++v)
    for (auto w : g.row(v).words()) mix(w);
  return h;
}

ProofLog make_proof_log(const UnderlyingGraph& g, const SearchOutcome& out, Vertex base) {
  ProofLog log;
  log.graph_hash = graph_hash(g);
  log.n = g.order();
  log.r = g.order() ? g.degree(0) : 0;
  log.base = base;
  log.fixed_edges = out.fixed_edges;
  log.free_edges = out.depth_counts.size();
  log.depth_counts = out.depth_counts;
  log.row_counts = out.row_counts;
  log.solutions = out.solutions.size();
  log.nodes = out.nodes_explored;
  log.exhausted = out.exhausted;
  return log;
}

ProofLog verify_nonexistence(const UnderlyingGraph& g, const SearchOptions& options) {
  SearchOptions opt = options;
  opt.shuffle_seed.reset();
  return make_proof_log(g, search_signatures(g, opt), opt.base);
}

std::string to_text(const ProofLog& log) {
  std::ostringstream os;
  os << "sr2se-proof 1\n";
  os << "graph " << std::hex << log.graph_hash << std::dec << " n " << log.n << " r " << log.r << "\n";
  os << "prefix base " << log.base << " fixed " << log.fixed_edges << " free " << log.free_edges << "\n";
  for (std::size_t d = 0; d < log.depth_counts.size(); ++d)
    os << "depth " << d + 1 << " " << log.depth_counts[d] << "\n";
  for (std::size_t i = 0; i < log.row_counts.size(); ++i)
    if (log.row_counts[i] != 0) os << "row " << i << " " << log.row_counts[i] << "\n";
  os << "result solutions " << log.solutions << " nodes " << log.nodes << " exhausted "
     << (log.exhausted ? 1 : 0) << "\n";
  return os.str();
}

ProofLog parse_proof_log(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty()) return;
    }
    throw ParseError(ParseErrorKind::kTruncated, std::string("proof log ends before ") + what, lineno);
  };
  auto expect = [&](std::istringstream& ls, const char* word) {
    std::string tok;
    if (!(ls >> tok) || tok != word)
      throw ParseError(ParseErrorKind::kBadToken, std::string("expected '") + word + "'", lineno);
  };
  auto number = [&](std::istringstream& ls, auto& out, bool hex = false) {
    if (!(hex ? (ls >> std::hex >> out >> std::dec) : (ls >> out)))
      throw ParseError(ParseErrorKind::kBadToken, "expected a number", lineno);
  };

  ProofLog log;
  next("header");
  if (line != "sr2se-proof 1") throw ParseError(ParseErrorKind::kBadHeader, "unknown proof log header", lineno);
  next("graph line");
  {
    std::istringstream ls(line);
    expect(ls, "graph");
    number(ls, log.graph_hash, true);
    expect(ls, "n");
    number(ls, log.n);
    expect(ls, "r");
    number(ls, log.r);
  }
  next("prefix line");
  {
    std::istringstream ls(line);
    expect(ls, "prefix");
    expect(ls, "base");
    number(ls, log.base);
    expect(ls, "fixed");
    number(ls, log.fixed_edges);
    expect(ls, "free");
    number(ls, log.free_edges);
  }
  log.row_counts.assign(log.n, 0);
  while (true) {
    next("result line");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "depth") {
      std::size_t d = 0;
      std::uint64_t c = 0;
      number(ls, d);
      number(ls, c);
      if (d != log.depth_counts.size() + 1)
        throw ParseError(ParseErrorKind::kOutOfRange, "depth lines out of order", lineno);
      log.depth_counts.push_back(c);
    } else if (tag == "row") {
      std::size_t i = 0;
      std::uint64_t c = 0;
      number(ls, i);
      number(ls, c);
      if (i >= log.n) throw ParseError(ParseErrorKind::kOutOfRange, "row index out of range", lineno);
      log.row_counts[i] = c;
    } else if (tag == "result") {
      expect(ls, "solutions");
      number(ls, log.solutions);
      expect(ls, "nodes");
      number(ls, log.nodes);
      expect(ls, "exhausted");
      int ex = 0;
      number(ls, ex);
      if (ex != 0 && ex != 1) throw ParseError(ParseErrorKind::kBadToken, "exhausted flag must be 0 or 1", lineno);
      log.exhausted = ex == 1;
      break;
    } else {
      throw ParseError(ParseErrorKind::kBadToken, "unexpected line '" + line + "'", lineno);
    }
  }
  if (log.depth_counts.size() != log.free_edges)
    throw ParseError(ParseErrorKind::kTruncated, "depth lines do not cover every free edge", lineno);
  return log;
}

bool replay_proof(const UnderlyingGraph& g, const ProofLog& log) {
  if (graph_hash(g) != log.graph_hash || g.order() != log.n) return false;
  SearchOptions opt;
  opt.base = log.base;
  opt.parallel = false;
  if (!log.exhausted) opt.node_budget = log.nodes;
  auto again = make_proof_log(g, search_signatures_serial(g, opt), log.base);
  if (again.row_counts.size() != log.row_counts.size()) again.row_counts.resize(log.row_counts.size(), 0);
  return again == log;
}

// ---------------------------------------------------------------------------
// Weighing-matrix search.

namespace {

struct PackedRow {
  std::uint64_t support = 0;
  std::uint64_t neg = 0;
  auto operator<=>(const PackedRow&) const = default;
};

bool compatible(const PackedRow& a, const PackedRow& b) {
  const std::uint64_t common = a.support & b.support;
  const int pc = std::popcount(common);
  if (pc != 0 && pc != 2) return false;
  return pc == 0 || std::popcount((a.neg ^ b.neg) & common) == 1;
}

PackedRow pack(std::span<const std::int64_t> row) {
  PackedRow p;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) p.support |= std::uint64_t{1} << j;
    if (row[j] < 0) p.neg |= std::uint64_t{1} << j;
  }
  return p;
}

struct WeighingTask {
  std::uint64_t nodes = 0;
  std::vector<std::vector<PackedRow>> solutions;
  bool aborted = false;
};

class WeighingWalker {
 public:
  WeighingWalker(std::size_t n, std::size_t r, std::atomic<std::uint64_t>* shared,
                 std::optional<std::uint64_t> budget, std::atomic<bool>* stop)
      : n_(n), r_(r), shared_(shared), budget_(budget), stop_(stop) {}

  // cands sorted descending; rows holds the tail rows chosen so far.
  void run(const std::vector<PackedRow>& cands, std::vector<PackedRow>& rows, std::vector<int>& colcount,
           std::size_t need, WeighingTask& t) {
    if (t.aborted) return;
    if (need == 0) {
      t.solutions.push_back(rows);
      return;
    }
    for (std::size_t i = 0; i < cands.size() && cands.size() - i >= need; ++i) {
      place(cands, i, rows, colcount, need, t);
      if (t.aborted) return;
    }
  }

  // Chooses cands[i] as the next row and continues below it.
  void place(const std::vector<PackedRow>& cands, std::size_t i, std::vector<PackedRow>& rows,
             std::vector<int>& colcount, std::size_t need, WeighingTask& t) {
    if (!node(t)) return;
    const PackedRow c = cands[i];
    std::uint64_t full = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const int cnt = colcount[j] + static_cast<int>((c.support >> j) & 1u);
      if (cnt == static_cast<int>(r_)) full |= std::uint64_t{1} << j;
    }
    std::vector<PackedRow> next;
    for (std::size_t k = i + 1; k < cands.size(); ++k)
      if ((cands[k].support & full) == 0 && compatible(c, cands[k])) next.push_back(cands[k]);
    for (std::size_t j = 0; j < n_; ++j)
      if ((c.support >> j) & 1u) ++colcount[j];
    if (coverable(next, colcount, need - 1)) {
      rows.push_back(c);
      run(next, rows, colcount, need - 1, t);
      rows.pop_back();
    }
    for (std::size_t j = 0; j < n_; ++j)
      if ((c.support >> j) & 1u) --colcount[j];
  }

 private:
  bool coverable(const std::vector<PackedRow>& cands, const std::vector<int>& colcount, std::size_t need) const {
    if (cands.size() < need) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      const int deficit = static_cast<int>(r_) - colcount[j];
      if (deficit == 0) continue;
      int avail = 0;
      for (const auto& c : cands)
        if ((c.support >> j) & 1u) ++avail;
      if (avail < deficit) return false;
    }
    return true;
  }

  bool node(WeighingTask& t) {
    ++t.nodes;
    if (stop_->load(std::memory_order_relaxed)) {
      t.aborted = true;
      return false;
    }
    if (budget_ && shared_->fetch_add(1, std::memory_order_relaxed) + 1 > *budget_) {
      t.aborted = true;
      stop_->store(true);
      return false;
    }
    return true;
  }

  std::size_t n_, r_;
  std::atomic<std::uint64_t>* shared_;
  std::optional<std::uint64_t> budget_;
  std::atomic<bool>* stop_;
};

// The first r rows of scheme (2).
IntMatrix scheme2_rows(std::size_t n, std::size_t r) {
  IntMatrix m(r, n);
  for (std::size_t j = 0; j < r; ++j) m(0, j) = 1;
  for (std::size_t i = 1; i < r; ++i) {
    m(i, 0) = 1;
    m(i, i) = -1;
  }
  std::size_t col = r;
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j, ++col) {
      m(i, col) = 1;
      m(j, col) = -1;
    }
  return m;
}

// Invariant used to bucket solutions before the equivalence test.
std::string weighing_key(const WeighingMatrix& w) {
  std::ostringstream os;
  for (int side = 0; side < 2; ++side) {
    std::vector<std::vector<int>> prof(w.n);
    for (std::size_t a = 0; a < w.n; ++a) {
      for (std::size_t b = 0; b < w.n; ++b) {
        if (a == b) continue;
        int c = 0;
        for (std::size_t t = 0; t < w.n; ++t)
          c += side ? (w(t, a) != 0 && w(t, b) != 0) : (w(a, t) != 0 && w(b, t) != 0);
        prof[a].push_back(c);
      }
      std::sort(prof[a].begin(), prof[a].end());
    }
    std::sort(prof.begin(), prof.end());
    for (const auto& p : prof) {
      for (int x : p) os << x << ",";
      os << ";";
    }
    os << "|";
  }
  return os.str();
}

WeighingSearchOutcome run_weighing(std::size_t n, std::size_t r, const SearchOptions& opt, bool parallel) {
  if (r < 1 || n < r) throw PreconditionError("search_weighing: need n >= r >= 1");
  if (n > 64) throw PreconditionError("search_weighing: orders above 64 are not supported");
  WeighingSearchOutcome out;
  out.exhausted = true;
  if (n < r + (r - 1) * (r - 2) / 2) return out;  // scheme (2) does not fit

  const IntMatrix head = scheme2_rows(n, r);
  std::vector<PackedRow> fixed;
  std::vector<int> colcount(n, 0);
  for (std::size_t i = 0; i < r; ++i) {
    fixed.push_back(pack(head.row(i)));
    for (std::size_t j = 0; j < n; ++j) colcount[j] += head(i, j) != 0;
  }
  std::uint64_t full = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (colcount[j] == static_cast<int>(r)) full |= std::uint64_t{1} << j;

  // Candidate rows: weight r, first nonzero entry positive, compatible with
  // every scheme row, avoiding full columns.
  std::vector<PackedRow> cands;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == r) {
      std::uint64_t sup = 0;
      for (auto j : pick) sup |= std::uint64_t{1} << j;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << (r - 1)); ++s) {
        PackedRow row{sup, 0};
        for (std::size_t b = 1; b < r; ++b)
          if ((s >> (b - 1)) & 1u) row.neg |= std::uint64_t{1} << pick[b];
        if (std::all_of(fixed.begin(), fixed.end(), [&](const PackedRow& f) { return compatible(f, row); }))
          cands.push_back(row);
      }
      return;
    }
    for (std::size_t j = from; j + (r - pick.size()) <= n; ++j) {
      if ((full >> j) & 1u) continue;
      pick.push_back(j);
      choose(j + 1);
      pick.pop_back();
    }
  };
  choose(0);
  std::sort(cands.begin(), cands.end(), [](const PackedRow& a, const PackedRow& b) { return b < a; });

  std::atomic<std::uint64_t> shared{0};
  std::atomic<bool> stop{false};
  const std::size_t need = n - r;
  std::vector<WeighingTask> parts;
  if (need == 0) {
    parts.emplace_back();
    parts.back().solutions.emplace_back();
  } else if (!parallel) {
    parts.emplace_back();
    WeighingWalker w(n, r, &shared, opt.node_budget, &stop);
    std::vector<PackedRow> rows;
    w.run(cands, rows, colcount, need, parts.back());
  } else {
    // One task per choice of the first tail row.
    parts.resize(cands.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cands.size() - i < need) continue;
      WeighingWalker w(n, r, &shared, opt.node_budget, &stop);
      std::vector<PackedRow> rows;
      auto cc = colcount;
      w.place(cands, i, rows, cc, need, parts[i]);
    }
  }

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (const auto& part : parts) {
    out.nodes_explored += part.nodes;
    if (part.aborted) out.exhausted = false;
    for (const auto& rows : part.solutions) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = head(i, j);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
          if ((rows[i].support >> j) & 1u) m(r + i, j) = ((rows[i].neg >> j) & 1u) ? -1 : 1;
      auto w = verify_weighing(m);
      if (!w || w->r != static_cast<std::int64_t>(r) || !has_zero_two_intersections(*w))
        throw Error("search_weighing: produced an invalid matrix");
      ++out.raw_solutions;
      auto& bucket = buckets[weighing_key(*w)];
      bool seen = false;
      for (std::size_t idx : bucket)
        if (equivalent(out.matrices[idx], *w, std::max<std::size_t>(opt.iso_cap, n))) {
          seen = true;
          break;
        }
      if (!seen) {
        bucket.push_back(out.matrices.size());
        out.matrices.push_back(*w);
      }
    }
  }
  return out;
}

}  // namespace

WeighingSearchOutcome search_weighing(std::size_t n, std::size_t r, const SearchOptions& options) {
  return run_weighing(n, r, options, options.parallel);
}

WeighingSearchOutcome search_weighing_serial(std::size_t n, std::size_t r, const SearchOptions& options) {
  return run_weighing(n, r, options, false);
}

}  // namespace sr2se
