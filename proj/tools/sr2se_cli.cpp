// Command-line front end. Exit codes: 0 success, 1 refusal or missing
// solution, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "sr2se/catalog.hpp"
#include "sr2se/constructions.hpp"
#include "sr2se/extension.hpp"
#include "sr2se/io.hpp"
#include "sr2se/search.hpp"
#include "sr2se/spectral.hpp"

using namespace sr2se;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or unreadable files are input errors, not refusals.
std::string load_file(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct Input {
  std::string catalog;
  std::string graph6;
  std::string graph6_file;
  std::string signed_file;
  std::string weighing_file;
  std::vector<std::string> ingest;
  bool no_weighing_search = false;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--catalog", in.catalog, "catalog id (R4.2, G5, Clebsch, ...)");
  cmd->add_option("--graph6", in.graph6, "graph6 string");
  cmd->add_option("--graph6-file", in.graph6_file, "file holding one graph6 line");
  cmd->add_option("--signed-file", in.signed_file, "sg1 file");
  cmd->add_option("--weighing-file", in.weighing_file, "weighing matrix; its bipartite SR2SE is used");
  cmd->add_option("--ingest", in.ingest, "ROW=FILE weighing matrix for a catalog row")->take_all();
  cmd->add_flag("--no-weighing-search", in.no_weighing_search,
                "do not search for catalog rows built from weighing matrices");
}

CatalogOptions catalog_options(const Input& in) {
  CatalogOptions opt;
  opt.allow_weighing_search = !in.no_weighing_search;
  for (const auto& spec : in.ingest) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--ingest expects ROW=FILE, got '" + spec + "'");
    opt.ingested.insert_or_assign(spec.substr(0, eq), parse_weighing(load_file(spec.substr(eq + 1))));
  }
  return opt;
}

std::size_t sources(const Input& in) {
  return !in.catalog.empty() + !in.graph6.empty() + !in.graph6_file.empty() + !in.signed_file.empty() +
         !in.weighing_file.empty();
}

// Underlying-only inputs come back as their all-positive signing.
SignedGraph load_signed(const Input& in) {
  if (sources(in) != 1)
    throw UsageError("give exactly one of --catalog, --graph6, --graph6-file, --signed-file, --weighing-file");
  if (!in.catalog.empty()) {
    if (!find_row(in.catalog)) {
      try {
        (void)catalog(in.catalog);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    }
    return catalog_signed(in.catalog, catalog_options(in));
  }
  if (!in.graph6.empty()) return parse_graph6(in.graph6).as_signed();
  if (!in.graph6_file.empty()) return parse_graph6(load_file(in.graph6_file)).as_signed();
  if (!in.signed_file.empty()) return parse_signed(load_file(in.signed_file));
  return to_bipartite_sr2se(parse_weighing(load_file(in.weighing_file)));
}

UnderlyingGraph load_underlying(const Input& in) { return underlying(load_signed(in)); }

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

std::string report_text(const StructureReport& r) {
  std::ostringstream os;
  os << "regular=" << (r.regular ? "yes" : "no");
  if (r.regular) os << " degree=" << r.degree;
  os << " connected=" << (r.connected ? "yes" : "no") << " bipartite=" << (r.bipartite ? "yes" : "no")
     << " triangle-free=" << (r.triangle_free ? "yes" : "no") << " zero-two=" << (r.zero_two ? "yes" : "no")
     << " quadrangles=" << r.quadrangle_count;
  return os.str();
}

// expr := id | name '(' expr ')'
SignedGraph evaluate(std::string expr, const Input& in) {
  while (!expr.empty() && expr.front() == ' ') expr.erase(expr.begin());
  while (!expr.empty() && expr.back() == ' ') expr.pop_back();
  const auto open = expr.find('(');
  if (open == std::string::npos) {
    Input leaf = in;
    leaf.catalog = expr;
    return load_signed(leaf);
  }
  if (expr.back() != ')') throw UsageError("unbalanced expression '" + expr + "'");
  const std::string fn = expr.substr(0, open);
  SignedGraph arg = evaluate(expr.substr(open + 1, expr.size() - open - 2), in);
  if (fn == "ltimes-k2") return ltimes_k2(arg);
  if (fn == "cartesian-k2") return cartesian_k2(arg);
  if (fn == "bipartite-double") return bipartite_double(arg);
  if (fn == "negation") return negation(arg);
  throw UsageError("unknown function '" + fn + "' (ltimes-k2, cartesian-k2, bipartite-double, negation)");
}

int run_check(const Input& in) {
  const auto g = load_signed(in);
  const auto c = strongest_certificate(g);
  std::cout << describe(c) << '\n';
  std::cout << "n=" << g.order() << " edges=" << g.edge_count() << ' ' << report_text(structure_report(g)) << '\n';
  return c.kind == SpectrumKind::Other ? 1 : 0;
}

struct SearchArgs {
  std::optional<std::uint64_t> budget;
  bool serial = false;
  Vertex base = 0;
  std::string out;
  std::string proof_log;
  std::string verify_proof;
  bool expect_solution = false;
};

int run_search(const Input& in, const SearchArgs& a) {
  const auto g = load_underlying(in);
  if (!a.verify_proof.empty()) {
    const auto log = parse_proof_log(load_file(a.verify_proof));
    const bool ok = replay_proof(g, log);
    std::cout << (ok ? "proof replayed" : "proof does not replay") << '\n';
    return ok ? 0 : 1;
  }
  SearchOptions opt;
  opt.node_budget = a.budget;
  opt.base = a.base;
  opt.progress = [](std::size_t done, std::size_t total, std::uint64_t nodes) {
    std::cerr << "progress tasks " << done << '/' << total << " nodes " << nodes << '\n';
  };
  const auto out = a.serial ? search_signatures_serial(g, opt) : search_signatures(g, opt);
  std::cout << "classes " << out.solutions.size() << " raw " << out.raw_solutions << " nodes "
            << out.nodes_explored << " exhausted " << (out.exhausted ? "yes" : "no") << '\n';
  if (!out.classes_exact) std::cout << "warning: classes merged by invariants only\n";
  std::string sols;
  for (const auto& s : out.solutions) sols += write_signed(s);
  if (!a.out.empty()) emit(a.out, sols);
  else std::cout << sols;
  const auto log = to_text(make_proof_log(g, out, a.base));
  if (!a.proof_log.empty()) emit(a.proof_log, log);
  else std::cout << log;
  return a.expect_solution && out.solutions.empty() ? 1 : 0;
}

int run_search_weighing(std::size_t n, std::size_t r, std::optional<std::uint64_t> budget, bool serial,
                        const std::string& out_path, bool expect_solution) {
  SearchOptions opt;
  opt.node_budget = budget;
  const auto out = serial ? search_weighing_serial(n, r, opt) : search_weighing(n, r, opt);
  std::size_t proper = 0;
  std::string text;
  for (const auto& w : out.matrices) {
    proper += is_proper(w);
    text += write_weighing(w);
  }
  std::cout << "classes " << out.matrices.size() << " proper " << proper << " raw " << out.raw_solutions
            << " nodes " << out.nodes_explored << " exhausted " << (out.exhausted ? "yes" : "no") << '\n';
  emit(out_path, text);
  return expect_solution && proper == 0 ? 1 : 0;
}

int run_extend(const Input& in, const std::string& del, std::optional<std::int64_t> lsq, bool relaxed,
               const std::string& out_path) {
  SignedGraph g = load_signed(in);
  if (!del.empty()) {
    std::vector<Vertex> s;
    std::stringstream ss(del);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        s.push_back(static_cast<Vertex>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw UsageError("--delete expects comma-separated vertices");
      }
    }
    if (!lsq) {
      if (auto c = certify_two_sym(g)) lsq = c->lambda_sq;
    }
    g = delete_vertices(g, s);
  }
  ZeroPairOptions zp;
  zp.require_degree_hypothesis = !relaxed;
  for (int step = 0; step < 3; ++step) {
    if (auto c = certify_two_sym(g); c && (!lsq || c->lambda_sq == *lsq)) {
      std::cout << "done: " << describe(*c) << " n=" << g.order() << '\n';
      emit(out_path, write_signed(g));
      return 0;
    }
    if (auto c = certify_three_sym(g, lsq); c && c->d == 1) {
      std::cout << "extend one vertex from " << describe(*c) << '\n';
      g = extend_one_vertex(g, c->lambda_sq);
    } else if (c && c->d == 2) {
      std::cout << "extend zero pair from " << describe(*c) << '\n';
      g = extend_zero_pair(g, c->lambda_sq, zp);
    } else if (auto f = certify_four_sym(g, lsq); f && f->mu_sq == 1) {
      std::cout << "extend four to three from " << describe(*f) << '\n';
      g = extend_four_to_three(g, f->lambda_sq);
    } else {
      std::cout << "no extension applies: " << describe(strongest_certificate(g)) << '\n';
      return 1;
    }
  }
  std::cout << "no two-eigenvalue graph after three steps\n";
  return 1;
}

int run_filter(const std::string& ns, const std::string& rs, bool bipartite) {
  auto range = [](const std::string& s, const char* what) {
    std::int64_t lo = 0, hi = 0;
    try {
      const auto colon = s.find(':');
      lo = std::stoll(s.substr(0, colon));
      hi = colon == std::string::npos ? lo : std::stoll(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + " expects N or A:B");
    }
    if (lo < 1 || hi < lo) throw UsageError(std::string("--") + what + " range is empty");
    return std::pair{lo, hi};
  };
  const auto [n0, n1] = range(ns, "n");
  const auto [r0, r1] = range(rs, "r");
  std::size_t passed = 0;
  for (auto n = n0; n <= n1; ++n)
    for (auto r = r0; r <= r1; ++r) {
      const auto v = filter_sr2se(n, r, bipartite);
      std::cout << n << ' ' << r << ' ';
      if (v.passed) {
        std::cout << "PASS\n";
        ++passed;
        continue;
      }
      std::cout << "FAIL";
      for (std::size_t i = 0; i < v.failures.size(); ++i) std::cout << (i ? "," : " ") << v.failures[i].condition;
      std::cout << '\n';
    }
  return passed > 0 ? 0 : 1;
}

int run_convert(const std::string& in_path, const std::string& from, const std::string& to,
                const std::string& out_path) {
  const std::string text = load_file(in_path);
  SignedGraph g;
  if (from == "graph6") g = parse_graph6(text).as_signed();
  else if (from == "sg1") g = parse_signed(text);
  else if (from == "weighing") g = to_bipartite_sr2se(parse_weighing(text));
  else throw UsageError("--from must be graph6, sg1 or weighing");
  if (to == "graph6") {
    const auto edges = g.edges();
    if (std::any_of(edges.begin(), edges.end(), [](const SignedEdge& e) { return e.sign < 0; }))
      std::cerr << "note: graph6 drops edge signs\n";
    emit(out_path, write_graph6(underlying(g)) + "\n");
  } else if (to == "sg1") {
    emit(out_path, write_signed(g));
  } else if (to == "weighing") {
    emit(out_path, write_weighing(from_bipartite_sr2se(g)));
  } else {
    throw UsageError("--to must be graph6, sg1 or weighing");
  }
  return 0;
}

int run_catalog(const Input& in, const std::string& id, const std::string& out_path) {
  if (id.empty()) {
    for (const auto& r : sr2se_table())
      std::cout << r.id << " n=" << r.n << " r=" << r.r << ' ' << (r.bipartite ? "bipartite" : "non-bipartite")
                << "  " << r.description << '\n';
    std::cout << "also:";
    for (const auto& s : catalog_ids())
      if (!find_row(s)) std::cout << ' ' << s;
    std::cout << '\n';
    return 0;
  }
  Input leaf = in;
  leaf.catalog = id;
  const auto g = load_signed(leaf);
  if (const auto* row = find_row(id)) std::cout << "# " << row->id << ": " << row->description << '\n';
  emit(out_path, write_signed(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graphs with symmetric spectra: certificates, searches, extensions"};
  app.require_subcommand(1);

  Input in;
  SearchArgs sa;
  std::string out_path, del, expr, in_path, from, to, id;
  std::string ns, rs;
  std::optional<std::int64_t> lsq;
  std::optional<std::uint64_t> budget;
  std::size_t wn = 0, wr = 0;
  bool bipartite = false, relaxed = false, serial = false, expect = false;

  auto* check = app.add_subcommand("check", "print the strongest spectral certificate and structure");
  add_input(check, in);

  auto* search = app.add_subcommand("search", "search SR2SE signatures of an underlying rectagraph");
  add_input(search, in);
  search->add_option("--budget", sa.budget, "node budget");
  search->add_flag("--serial", sa.serial, "single-threaded reference search");
  search->add_option("--base", sa.base, "base vertex of the scheme ordering");
  search->add_option("--out", sa.out, "write solutions (sg1) here");
  search->add_option("--proof-log", sa.proof_log, "write the proof log here");
  search->add_option("--verify-proof", sa.verify_proof, "replay a proof log instead of searching");
  search->add_flag("--expect-solution", sa.expect_solution, "exit 1 when no class is found");

  auto* sw = app.add_subcommand("search-weighing", "search W(n, r) with intersection numbers {0,2}");
  sw->add_option("--n", wn, "order")->required();
  sw->add_option("--r", wr, "weight")->required();
  sw->add_option("--budget", budget, "node budget");
  sw->add_flag("--serial", serial, "single-threaded reference search");
  sw->add_option("--out", out_path, "write matrices here");
  sw->add_flag("--expect-solution", expect, "exit 1 when no proper matrix is found");

  auto* construct = app.add_subcommand("construct", "build a graph from an expression such as ltimes-k2(R5.4)");
  add_input(construct, in);
  construct->add_option("--expr", expr, "expression")->required();
  construct->add_option("--out", out_path, "output file (sg1)");

  auto* extend = app.add_subcommand("extend", "delete vertices and extend back to two eigenvalues");
  add_input(extend, in);
  extend->add_option("--delete", del, "comma-separated vertices to delete first");
  extend->add_option("--lambda-sq", lsq, "lambda^2 when it cannot be read off the graph");
  extend->add_flag("--relaxed", relaxed, "skip the degree-count hypothesis of the zero-pair step");
  extend->add_option("--out", out_path, "output file (sg1)");

  auto* filter = app.add_subcommand("filter", "necessary conditions for (n, r)-SR2SEs");
  filter->add_option("--n", ns, "N or A:B")->required();
  filter->add_option("--r", rs, "R or A:B")->required();
  filter->add_flag("--bipartite", bipartite, "also apply the bipartite conditions");

  auto* convert = app.add_subcommand("convert", "transcode between graph6, sg1 and weighing text");
  convert->add_option("--in", in_path, "input file")->required();
  convert->add_option("--from", from, "graph6 | sg1 | weighing")->required();
  convert->add_option("--to", to, "graph6 | sg1 | weighing")->required();
  convert->add_option("--out", out_path, "output file");

  auto* cat = app.add_subcommand("catalog", "list catalog rows or print one as sg1");
  cat->add_option("--id", id, "row or object id");
  cat->add_option("--ingest", in.ingest, "ROW=FILE weighing matrix for a catalog row")->take_all();
  cat->add_flag("--no-weighing-search", in.no_weighing_search, "require ingestion for weighing rows");
  cat->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(in);
    if (*search) return run_search(in, sa);
    if (*sw) return run_search_weighing(wn, wr, budget, serial, out_path, expect);
    if (*construct) {
      if (sources(in) != 0) throw UsageError("construct takes ids inside --expr");
      const auto g = evaluate(expr, in);
      std::cout << "# " << describe(strongest_certificate(g)) << '\n';
      emit(out_path, write_signed(g));
      return 0;
    }
    if (*extend) return run_extend(in, del, lsq, relaxed, out_path);
    if (*filter) return run_filter(ns, rs, bipartite);
    if (*convert) return run_convert(in_path, from, to, out_path);
    if (*cat) return run_catalog(in, id, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
