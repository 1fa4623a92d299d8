#include "sr2se/extension.hpp"

#include <algorithm>
#include <numeric>

#include "sr2se/kernels.hpp"
#include "sr2se/linalg.hpp"

namespace sr2se {

namespace {

IntMatrix residual_matrix(const SignedGraph& g, std::int64_t lsq) {
  IntMatrix m = kernels::signed_square(g);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? lsq : 0) - m(i, j);
  return m;
}

// Nonzero eigenvalue c when M^2 = cM and rank(M) = 2 (trace = 2c).
std::optional<std::int64_t> rank_two_eigenvalue(const IntMatrix& m, std::size_t rank) {
  if (rank != 2) return std::nullopt;
  const std::int64_t t = m.trace();
  if (t <= 0 || t % 2 != 0) return std::nullopt;
  const std::int64_t c = t / 2;
  if (!(kernels::multiply(m, m) == c * m)) return std::nullopt;
  return c;
}

// O_{d0} followed by blocks of the given sizes, block (a,b) filled with t[a][b].
IntMatrix block_form(std::size_t d0, const std::vector<std::size_t>& sizes,
                     const std::vector<std::vector<int>>& t) {
  const std::size_t n = d0 + std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  IntMatrix m(n, n);
  std::vector<std::size_t> start{d0};
  for (std::size_t s : sizes) start.push_back(start.back() + s);
  for (std::size_t a = 0; a < sizes.size(); ++a)
    for (std::size_t b = 0; b < sizes.size(); ++b)
      for (std::size_t i = start[a]; i < start[a + 1]; ++i)
        for (std::size_t j = start[b]; j < start[b + 1]; ++j) m(i, j) = t[a][b];
  return m;
}

std::optional<IntMatrix> canonical_form(GramCase k, std::size_t n, std::int64_t c, std::size_t d1,
                                        std::size_t d2) {
  const auto cu = static_cast<std::size_t>(c);
  auto fits = [n](std::size_t used) { return used <= n; };
  switch (k) {
    case GramCase::A:
      if (d2 != 0 || d1 != 2 * cu || !fits(2 * cu)) return std::nullopt;
      return block_form(n - 2 * cu, {cu, cu}, {{1, 0}, {0, 1}});
    case GramCase::B:
      if (cu % 2 != 0 || d1 != cu || 2 * d2 != cu || !fits(cu + cu / 2)) return std::nullopt;
      return block_form(n - cu - cu / 2, {cu, cu / 2}, {{1, 0}, {0, 2}});
    case GramCase::C:
      if (cu % 2 != 0 || d1 != 0 || d2 != cu || !fits(cu)) return std::nullopt;
      return block_form(n - cu, {cu / 2, cu / 2}, {{2, 0}, {0, 2}});
    case GramCase::D:
      if (cu % 3 != 0 || d1 != 0 || d2 != cu || !fits(cu)) return std::nullopt;
      return block_form(n - cu, {cu / 3, cu / 3, cu / 3}, {{2, 1, 1}, {1, 2, -1}, {1, -1, 2}});
    case GramCase::E: {
      if (d1 == 0 || d2 == 0 || d1 % 2 != 0 || d2 % 2 != 0 || !fits(d1 + d2)) return std::nullopt;
      const std::size_t a = d2 / 2, b = d1 / 2;
      return block_form(n - d1 - d2, {a, a, b, b},
                        {{2, 0, 1, 1}, {0, 2, 1, -1}, {1, 1, 1, 0}, {1, -1, 0, 1}});
    }
    case GramCase::None:
      break;
  }
  return std::nullopt;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct DegreeProfile {
  std::size_t counts[3] = {0, 0, 0};  // degree l^2 - i
};

DegreeProfile check_degrees(const SignedGraph& g, std::int64_t lsq, std::int64_t max_deficit,
                            const char* op) {
  DegreeProfile p;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::int64_t def = lsq - static_cast<std::int64_t>(g.degree(v));
    if (def < 0 || def > max_deficit)
      throw PreconditionError(std::string(op) + ": vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + ", outside l^2 - " +
                              std::to_string(max_deficit) + " .. l^2 for l^2 = " +
                              std::to_string(lsq));
    ++p.counts[def];
  }
  return p;
}

std::int64_t quadratic_form(const SignedGraph& g, const std::vector<int>& x) {
  std::int64_t s = 0;
  for (const auto& e : g.edges()) s += 2 * e.sign * x[e.u] * x[e.v];
  return s;
}

bool degrees_after_border(const SignedGraph& g, const std::vector<int>& x, std::int64_t lsq) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v)) + (x[v] != 0 ? 1 : 0);
    if (d != lsq && d != lsq - 1) return false;
  }
  return true;
}

std::size_t iso_cap_for(std::size_t n) { return std::max(n, kDefaultIsoCap); }

}  // namespace

const char* to_string(GramCase c) {
  switch (c) {
    case GramCase::A: return "A";
    case GramCase::B: return "B";
    case GramCase::C: return "C";
    case GramCase::D: return "D";
    case GramCase::E: return "E";
    case GramCase::None: return "None";
  }
  return "?";
}

SignedGraph delete_vertices(const SignedGraph& g, std::span<const Vertex> s) {
  std::vector<bool> drop(g.order(), false);
  for (Vertex v : s) {
    if (v >= g.order()) throw PreconditionError("delete_vertices: vertex " + std::to_string(v) + " out of range");
    drop[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  if (keep.empty()) throw PreconditionError("delete_vertices: cannot delete every vertex");
  return induced(g, keep);
}

GramResidual gram_residual(const SignedGraph& g, std::int64_t lambda_sq) {
  if (lambda_sq < 1) throw PreconditionError("gram_residual: lambda^2 must be positive");
  GramResidual r;
  r.lambda_sq = lambda_sq;
  r.matrix = residual_matrix(g, lambda_sq);
  bool diag_ok = true;
  for (std::size_t i = 0; i < g.order(); ++i) {
    switch (r.matrix(i, i)) {
      case 0: ++r.d0; break;
      case 1: ++r.d1; break;
      case 2: ++r.d2; break;
      default: diag_ok = false;
    }
  }
  r.rank = exact_rank(r.matrix);
  if (diag_ok && rank_two_eigenvalue(r.matrix, r.rank)) r.case_label = classify_gram(r).label;
  return r;
}

GramClassification classify_gram(const GramResidual& m) {
  const std::size_t n = m.matrix.rows();
  if (m.d0 + m.d1 + m.d2 != n) throw PreconditionError("classify_gram: diagonal must lie in {0,1,2}");
  const auto c = rank_two_eigenvalue(m.matrix, m.rank);
  if (!c) throw PreconditionError("classify_gram: residual must have spectrum {[c]^2, [0]^(n-2)}");
  for (GramCase k : {GramCase::A, GramCase::B, GramCase::C, GramCase::D, GramCase::E}) {
    auto canon = canonical_form(k, n, *c, m.d1, m.d2);
    if (!canon) continue;
    auto w = find_signed_isomorphism(m.matrix, *canon, {}, {}, iso_cap_for(n));
    if (!w) continue;
    return GramClassification{k, *c, std::move(*canon), std::move(*w)};
  }
  throw Error("classify_gram: residual matches none of the five forms (d0=" + std::to_string(m.d0) +
              ", d1=" + std::to_string(m.d1) + ", d2=" + std::to_string(m.d2) + ")");
}

std::vector<ExtensionVector> eigenspace_sign_vectors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  // Two independent columns p, q and two rows i, j with a nonzero 2x2 minor.
  std::size_t p = n, q = n, ri = n, rj = n;
  for (std::size_t a = 0; a < n && p == n; ++a)
    for (std::size_t t = 0; t < n; ++t)
      if (m(t, a) != 0) {
        p = a;
        break;
      }
  if (p == n) throw PreconditionError("eigenspace_sign_vectors: zero matrix");
  for (std::size_t b = p + 1; b < n && q == n; ++b)
    for (std::size_t i = 0; i < n && q == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m(i, p) * m(j, b) - m(j, p) * m(i, b) != 0) {
          q = b;
          ri = i;
          rj = j;
          break;
        }
  if (q == n) throw PreconditionError("eigenspace_sign_vectors: rank is below 2");

  const std::int64_t det = m(ri, p) * m(rj, q) - m(rj, p) * m(ri, q);
  std::vector<ExtensionVector> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      if (a == 0 && b == 0) continue;
      // x = alpha col_p + beta col_q with x_ri = a, x_rj = b (Cramer's rule).
      const std::int64_t an = a * m(rj, q) - b * m(ri, q);
      const std::int64_t bn = m(ri, p) * b - m(rj, p) * a;
      ExtensionVector v;
      v.x.resize(n);
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        const std::int64_t num = an * m(k, p) + bn * m(k, q);
        if (num % det != 0) ok = false;
        const std::int64_t val = num / det;
        if (val < -1 || val > 1) ok = false;
        v.x[k] = static_cast<int>(val);
        v.norm_sq += val * val;
      }
      if (ok) out.push_back(std::move(v));
    }
  std::sort(out.begin(), out.end(),
            [](const ExtensionVector& u, const ExtensionVector& v) { return lex_less(u.x, v.x); });
  return out;
}

ExtensionVector rank_one_factor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::size_t i0 = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0 && m(i, i) != 1)
      throw PreconditionError("rank_one_factor: diagonal entry " + std::to_string(m(i, i)) +
                              " at " + std::to_string(i) + " is not 0 or 1");
    if (i0 == n && m(i, i) == 1) i0 = i;
  }
  if (i0 == n) throw PreconditionError("rank_one_factor: zero matrix");
  ExtensionVector v;
  v.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.x[i] = static_cast<int>(m(i0, i));
    v.norm_sq += m(i0, i) * m(i0, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != v.x[i] * v.x[j]) throw PreconditionError("rank_one_factor: matrix is not rank one");
  return v;
}

SignedGraph border(const SignedGraph& g, const std::vector<int>& x) {
  const std::size_t n = g.order();
  if (x.size() != n) throw PreconditionError("border: vector length differs from order");
  SignMatrix a(n + 1);
  for (const auto& e : g.edges()) a.set_edge(e.u, e.v, e.sign);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) a.set_edge(i, n, x[i]);
  return SignedGraph(std::move(a));
}

SignedGraph extend_one_vertex(const SignedGraph& g, std::optional<std::int64_t> lambda_sq) {
  auto cert = certify_three_sym(g, lambda_sq);
  if (!cert) throw PreconditionError("extend_one_vertex: " + cert.reason());
  if (cert->d != 1)
    throw PreconditionError("extend_one_vertex: eigenvalue 0 has multiplicity " + std::to_string(cert->d));
  const std::int64_t lsq = cert->lambda_sq;
  check_degrees(g, lsq, 1, "extend_one_vertex");
  const IntMatrix m = residual_matrix(g, lsq);
  const std::size_t rank = exact_rank(m);
  if (rank != 1)
    throw PreconditionError("extend_one_vertex: residual has rank " + std::to_string(rank) + ", not 1");
  const auto x = rank_one_factor(m);
  SignedGraph b = border(g, x.x);
  auto out = certify_two_sym(b);
  if (!out || out->lambda_sq != lsq) throw Error("extend_one_vertex: bordered graph failed to certify");
  return b;
}

SignedGraph extend_four_to_three(const SignedGraph& g, std::optional<std::int64_t> lambda_sq) {
  const char* op = "extend_four_to_three";
  auto cert = certify_four_sym(g, lambda_sq);
  if (!cert) throw PreconditionError(std::string(op) + ": " + cert.reason());
  if (cert->mu_sq != 1 || cert->mu_mult != 1)
    throw PreconditionError(std::string(op) + ": need eigenvalues +-1 of multiplicity 1");
  const std::int64_t lsq = cert->lambda_sq;
  const auto deg = check_degrees(g, lsq, 2, op);
  if (deg.counts[1] == 0) throw PreconditionError(std::string(op) + ": no vertex of degree l^2 - 1");

  const auto res = gram_residual(g, lsq);
  if (res.case_label == GramCase::None) throw Error(std::string(op) + ": residual is not of rank-2 form");
  if (res.case_label == GramCase::D)
    throw OpenCaseError(std::string(op) + ": gram case (D) is an unresolved case");
  for (const auto& v : eigenspace_sign_vectors(res.matrix)) {
    if (v.norm_sq != lsq - 1 || quadratic_form(g, v.x) != 0) continue;
    if (!degrees_after_border(g, v.x, lsq)) continue;
    SignedGraph b = border(g, v.x);
    auto out = certify_three_sym(b, lsq);
    if (out && out->d == 1) return b;
  }
  throw Error(std::string(op) + ": no admissible extension vector (gram case " +
              to_string(res.case_label) + ")");
}

SignedGraph extend_zero_pair(const SignedGraph& g, std::optional<std::int64_t> lambda_sq,
                             const ZeroPairOptions& options) {
  const char* op = "extend_zero_pair";
  auto cert = certify_three_sym(g, lambda_sq);
  if (!cert) throw PreconditionError(std::string(op) + ": " + cert.reason());
  if (cert->d != 2)
    throw PreconditionError(std::string(op) + ": eigenvalue 0 has multiplicity " + std::to_string(cert->d));
  const std::int64_t lsq = cert->lambda_sq;
  const auto deg = check_degrees(g, lsq, 2, op);

  const auto res = gram_residual(g, lsq);
  if (res.case_label == GramCase::None) throw Error(std::string(op) + ": residual is not of rank-2 form");
  if (res.case_label == GramCase::D)
    throw OpenCaseError(std::string(op) + ": gram case (D) admits no extension vector");
  if (options.require_degree_hypothesis && static_cast<std::int64_t>(deg.counts[1]) < lsq + 1)
    throw PreconditionError(std::string(op) + ": only " + std::to_string(deg.counts[1]) +
                            " vertices of degree l^2 - 1, need " + std::to_string(lsq + 1));

  for (const auto& v : eigenspace_sign_vectors(res.matrix)) {
    if (v.norm_sq != lsq) continue;
    bool covers = true;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (res.matrix(i, i) == 2 && v.x[i] == 0) covers = false;
    if (!covers || !degrees_after_border(g, v.x, lsq)) continue;
    SignedGraph b = border(g, v.x);
    auto out = certify_three_sym(b, lsq);
    if (out && out->d == 1) return b;
  }
  throw Error(std::string(op) + ": no admissible extension vector (gram case " +
              to_string(res.case_label) + ")");
}

Outcome<ConstantDiagVerdict> classify_constant_diag_gram(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.square() || n < 3) return Refusal{"need a square matrix of order at least 3"};
  if (!m.is_symmetric()) return Refusal{"matrix is not symmetric"};
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != m(0, 0)) return Refusal{"diagonal is not constant"};
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m(i, j) != 0 && m(i, j) != 2 && m(i, j) != -2)
        return Refusal{"off-diagonal entry " + std::to_string(m(i, j)) + " not in {0,+-2}"};
  }
  const auto c = rank_two_eigenvalue(m, exact_rank(m));
  if (!c) return Refusal{"spectrum is not {[c]^2, [0]^(n-2)} with c > 0"};
  if (m(0, 0) != 2 || n % 2 != 0 || *c != static_cast<std::int64_t>(n))
    throw Error("classify_constant_diag_gram: hypotheses hold but the matrix is not 2J + 2J");
  ConstantDiagVerdict v;
  v.eigenvalue = *c;
  v.canonical = block_form(0, {n / 2, n / 2}, {{2, 0}, {0, 2}});
  auto w = find_signed_isomorphism(m, v.canonical, {}, {}, iso_cap_for(n));
  if (!w) throw Error("classify_constant_diag_gram: hypotheses hold but no switching onto 2J + 2J");
  v.witness = std::move(*w);
  return v;
}

SmallSpectrumVerdict classify_small_spectrum_02graph(const SignedGraph& g) {
  const auto rep = structure_report(g);
  if (!rep.zero_two) throw PreconditionError("classify_small_spectrum_02graph: not a (0,2)-graph");
  SmallSpectrumVerdict v;
  const std::size_t n = g.order();
  if (certify_two_sym(g)) {
    v.detail = "two eigenvalues; out of scope";
    return v;
  }
  if (auto c = certify_three_sym(g)) {
    v.scope = SmallSpectrumScope::ThreeEigenvalues;
    v.holds = n == 4 && g.edge_count() == 4 && rep.regular && rep.degree == 2;
    v.detail = describe(*c) + (v.holds ? "; underlying graph is K_{2,2}" : "; underlying graph is not K_{2,2}");
    return v;
  }
  if (auto c = certify_four_sym(g); c && c->mu_mult == 1) {
    v.scope = SmallSpectrumScope::FourEigenvalues;
    v.holds = n == 4 && g.edge_count() == 6;
    v.detail = describe(*c) + (v.holds ? "; underlying graph is K_4" : "; underlying graph is not K_4");
    return v;
  }
  v.detail = "spectrum outside the classified shapes";
  return v;
}

}  // namespace sr2se
