#include "sr2se/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "sr2se/constructions.hpp"
#include "sr2se/linalg.hpp"
#include "sr2se/search.hpp"
#include "sr2se/spectral.hpp"
#include "sr2se/switching.hpp"

namespace sr2se {

namespace {

using RS = RowSource;

const std::vector<CatalogRow> kTable = {
    {"R1.1", 2, 1, true, "signed cube G1", RS::Constructed},
    {"R2.1", 4, 2, true, "signed cube G2", RS::Constructed},
    {"R3.1", 8, 3, true, "signed cube G3", RS::Constructed},
    {"R4.1", 14, 4, true, "signing of the (7,4,2) biplane incidence graph", RS::Searched},
    {"R4.2", 16, 4, true, "signed cube G4", RS::Constructed},
    {"R5.1", 24, 5, true, "W(12,5)", RS::Weighing},
    {"R5.2", 28, 5, true, "W(14,5)", RS::Weighing},
    {"R5.3", 32, 5, true, "D(16,5), the signed cube G5", RS::Constructed},
    {"R5.4", 16, 5, false, "signing of the Clebsch graph", RS::Searched},
    {"R6.1", 40, 6, true, "W(20,6), first class", RS::Weighing},
    {"R6.2", 40, 6, true, "W(20,6), second class", RS::Weighing},
    {"R6.3", 48, 6, true, "W(24,6), first class", RS::Weighing},
    {"R6.4", 48, 6, true, "W(24,6), second class", RS::Weighing},
    {"R6.5", 56, 6, true, "R5.2 ltimes K2", RS::Constructed},
    {"R6.6", 64, 6, true, "signed cube G6", RS::Constructed},
    {"R6.7", 32, 6, false, "R5.4 ltimes K2", RS::Constructed},
    {"R7.1", 80, 7, true, "R6.2 ltimes K2", RS::Constructed},
    {"R7.2", 80, 7, true, "R6.1 ltimes K2", RS::Constructed},
    {"R7.3", 96, 7, true, "R6.4 ltimes K2", RS::Constructed},
    {"R7.4", 96, 7, true, "R6.3 ltimes K2", RS::Constructed},
    {"R7.5", 112, 7, true, "R6.5 ltimes K2", RS::Constructed},
    {"R7.6", 128, 7, true, "signed cube G7", RS::Constructed},
    {"R7.7", 64, 7, false, "R6.7 ltimes K2", RS::Constructed},
};

const std::map<std::string, std::string> kLtimesBase = {
    {"R6.5", "R5.2"}, {"R6.7", "R5.4"}, {"R7.1", "R6.2"}, {"R7.2", "R6.1"},
    {"R7.3", "R6.4"}, {"R7.4", "R6.3"}, {"R7.5", "R6.5"}, {"R7.7", "R6.7"},
};

const std::map<std::string, int> kCubeRows = {
    {"R1.1", 1}, {"R2.1", 2}, {"R3.1", 3}, {"R4.2", 4}, {"R5.3", 5}, {"R6.6", 6}, {"R7.6", 7},
};

// Node budget for the order-20 and order-24 weighing searches. Both proper
// classes turn up after a few tens of thousands of nodes.
constexpr std::uint64_t kWeighingBudget = 40000;

std::mutex cache_mutex;
std::map<std::string, SignedGraph> cache;

std::optional<int> parse_suffix(const std::string& id, const std::string& prefix) {
  if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int v = 0;
  for (std::size_t i = prefix.size(); i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9' || v > 100) return std::nullopt;
    v = v * 10 + (id[i] - '0');
  }
  return v;
}

// Proper classes of W(n, r) with intersection numbers {0,2}, ordered by the
// nullity of the unsigned adjacency matrix of the bipartite graph (the two
// classes at orders 20 and 24 share their refinement certificates).
std::vector<SignedGraph> weighing_graphs(std::size_t n, std::size_t r, bool exhaustive) {
  static std::mutex m;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<SignedGraph>> found;
  std::lock_guard lock(m);
  if (auto it = found.find({n, r}); it != found.end()) return it->second;
  SearchOptions opt;
  if (!exhaustive) opt.node_budget = kWeighingBudget;
  auto out = search_weighing_serial(n, r, opt);
  std::vector<SignedGraph> gs;
  for (const auto& w : out.matrices)
    if (is_proper(w)) gs.push_back(to_bipartite_sr2se(w));
  auto nullity = [](const SignedGraph& g) {
    return g.order() - exact_rank(underlying(g).as_signed().to_int_matrix());
  };
  std::stable_sort(gs.begin(), gs.end(),
                   [&](const SignedGraph& a, const SignedGraph& b) { return nullity(a) < nullity(b); });
  found.emplace(std::make_pair(n, r), gs);
  return gs;
}

SignedGraph build_row(const CatalogRow& row, const CatalogOptions& opt) {
  if (auto it = opt.ingested.find(row.id); it != opt.ingested.end()) {
    if (row.source != RS::Weighing && row.id != "R5.3")
      throw PreconditionError("catalog: row " + row.id + " is not built from a weighing matrix");
    return to_bipartite_sr2se(it->second);
  }
  if (auto c = kCubeRows.find(row.id); c != kCubeRows.end()) return signed_cube(c->second);
  if (auto b = kLtimesBase.find(row.id); b != kLtimesBase.end())
    return ltimes_k2(catalog_signed(b->second, opt));
  if (row.id == "R4.1") return search_signatures(biplane_7_incidence()).solutions.at(0);
  if (row.id == "R5.4") return search_signatures(clebsch()).solutions.at(0);

  if (!opt.allow_weighing_search)
    throw PreconditionError("catalog: row " + row.id + " requires a weighing-matrix file");
  std::size_t n = row.n / 2, index = 0;
  if (row.id == "R6.2" || row.id == "R6.4") index = 1;
  auto gs = weighing_graphs(n, row.r, n <= 16);
  if (gs.size() <= index)
    throw Error("catalog: weighing search for " + row.id + " found " + std::to_string(gs.size()) +
                " proper classes");
  return gs[index];
}

}  // namespace

const std::vector<CatalogRow>& sr2se_table() { return kTable; }

const CatalogRow* find_row(const std::string& id) {
  for (const auto& r : kTable)
    if (r.id == id) return &r;
  return nullptr;
}

Outcome<CatalogRow> check_row(const CatalogRow& row, const SignedGraph& g) {
  if (g.order() != row.n)
    return Refusal{row.id + ": order " + std::to_string(g.order()) + ", expected " + std::to_string(row.n)};
  const auto rep = structure_report(g);
  if (!rep.regular || rep.degree != row.r)
    return Refusal{row.id + ": not regular of degree " + std::to_string(row.r)};
  if (!rep.connected || !rep.triangle_free || !rep.zero_two)
    return Refusal{row.id + ": underlying graph is not a rectagraph"};
  if (rep.bipartite != row.bipartite)
    return Refusal{row.id + (row.bipartite ? ": expected bipartite" : ": expected non-bipartite")};
  auto c = certify_two_sym(g);
  if (!c) return Refusal{row.id + ": " + c.reason()};
  if (c->lambda_sq != static_cast<std::int64_t>(row.r))
    return Refusal{row.id + ": lambda^2 = " + std::to_string(c->lambda_sq)};
  return row;
}

CatalogObject catalog(const std::string& id, const CatalogOptions& options) {
  if (const CatalogRow* row = find_row(id)) {
    const bool cacheable = options.ingested.empty() && options.allow_weighing_search;
    if (cacheable) {
      std::lock_guard lock(cache_mutex);
      if (auto it = cache.find(id); it != cache.end()) return it->second;
    }
    SignedGraph g = build_row(*row, options);
    if (auto ok = check_row(*row, g); !ok) throw PreconditionError("catalog: " + ok.reason());
    if (cacheable) {
      std::lock_guard lock(cache_mutex);
      cache.emplace(id, g);
    }
    return g;
  }
  if (auto r = parse_suffix(id, "G"); r && *r >= 1 && *r <= 12) return signed_cube(*r);
  if (auto r = parse_suffix(id, "Q"); r && *r >= 1 && *r <= 12) return hypercube(*r);
  if (auto r = parse_suffix(id, "FQ"); r && *r >= 2 && *r <= 12) return folded_cube(*r);
  if (id == "B742") return biplane_7_incidence();
  if (id == "Clebsch") return clebsch();
  if (id == "Gewirtz") return gewirtz();
  if (id == "Heawood") return heawood();
  if (id == "K22") return complete_bipartite(2, 2);
  if (id == "K4") return complete(4);
  if (id == "T") return signed_tetrahedron();
  throw PreconditionError("catalog: unknown id '" + id + "'");
}

SignedGraph catalog_signed(const std::string& id, const CatalogOptions& options) {
  auto obj = catalog(id, options);
  if (auto* g = std::get_if<SignedGraph>(&obj)) return *g;
  return std::get<UnderlyingGraph>(obj).as_signed();
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& r : kTable) ids.push_back(r.id);
  for (const char* s : {"G<r>", "Q<r>", "FQ<r>", "B742", "Clebsch", "Gewirtz", "Heawood", "K22", "K4", "T"})
    ids.emplace_back(s);
  return ids;
}

}  // namespace sr2se
