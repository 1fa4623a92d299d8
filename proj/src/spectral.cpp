#include "sr2se/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "sr2se/kernels.hpp"

namespace sr2se {

namespace {

// Exact-rank cross-checks are skipped above this order; the trace-derived
// multiplicities are already exact once the polynomial identity holds.
constexpr std::size_t kRankCheckLimit = 128;

std::string entry_text(std::size_t i, std::size_t j, std::int64_t v) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v);
}

std::int64_t sum_squares(const IntMatrix& m) {
  std::int64_t s = 0;
  for (auto v : m.data()) s += v * v;
  return s;
}

bool is_scalar(const IntMatrix& m, std::int64_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? c : 0)) return false;
  return true;
}

IntMatrix shifted(const IntMatrix& m, std::int64_t c) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= c;
  return out;
}

Poly spectrum_poly(std::int64_t lsq, std::size_t m, std::int64_t usq, std::size_t k,
                   std::size_t zeros) {
  return Poly::monomial(zeros) * Poly::x2_minus(lsq).pow(static_cast<unsigned>(m)) *
         Poly::x2_minus(usq).pow(static_cast<unsigned>(k));
}

}  // namespace

const char* to_string(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::TwoSym: return "TwoSym";
    case SpectrumKind::ThreeSym: return "ThreeSym";
    case SpectrumKind::FourSym: return "FourSym";
    case SpectrumKind::Other: return "Other";
  }
  return "?";
}

std::string describe(const SpectralCertificate& c) {
  std::ostringstream os;
  os << to_string(c.kind);
  switch (c.kind) {
    case SpectrumKind::TwoSym:
      os << " λ²=" << c.lambda_sq << " m=" << c.m;
      break;
    case SpectrumKind::ThreeSym:
      os << " λ²=" << c.lambda_sq << " m=" << c.m << " d=" << c.d;
      break;
    case SpectrumKind::FourSym:
      os << " λ²=" << c.lambda_sq << " μ²=" << c.mu_sq << " m=" << c.m << " k=" << c.mu_mult;
      break;
    case SpectrumKind::Other:
      os << " charpoly=" << to_string(c.charpoly);
      break;
  }
  return os.str();
}

Poly char_poly(const SignedGraph& g) { return char_poly(g.to_int_matrix()); }

Outcome<SpectralCertificate> certify_two_sym(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return Refusal{"empty graph"};
  const std::size_t r = g.degree(0);
  for (std::size_t v = 1; v < n; ++v)
    if (g.degree(v) != r)
      return Refusal{"graph is not regular (vertex " + std::to_string(v) + " has degree " +
                     std::to_string(g.degree(v)) + ", vertex 0 has " + std::to_string(r) + ")"};
  if (r == 0) return Refusal{"graph has no edges"};
  if (auto bad = kernels::square_scalar_violation(g, static_cast<std::int64_t>(r)))
    return Refusal{"A^2 != " + std::to_string(r) + "I at " +
                   entry_text(bad->row, bad->col, bad->value)};
  SpectralCertificate c;
  c.kind = SpectrumKind::TwoSym;
  c.lambda_sq = static_cast<std::int64_t>(r);
  c.m = n / 2;
  c.charpoly = spectrum_poly(c.lambda_sq, c.m, 0, 0, 0);
  return c;
}

Outcome<SpectralCertificate> certify_three_sym(const SignedGraph& g,
                                               std::optional<std::int64_t> hint) {
  const std::size_t n = g.order();
  if (n == 0) return Refusal{"empty graph"};
  const IntMatrix a2 = kernels::signed_square(g);
  const std::int64_t t1 = a2.trace();
  const std::int64_t t2 = sum_squares(a2);

  std::int64_t lsq;
  if (hint) {
    if (*hint < 1) throw PreconditionError("lambda^2 hint must be positive");
    lsq = *hint;
  } else {
    if (t1 == 0) return Refusal{"graph has no edges; lambda^2 is not determined"};
    if (t2 % t1 != 0) return Refusal{"trace(A^4)/trace(A^2) is not an integer"};
    lsq = t2 / t1;
  }

  const IntMatrix a3 = kernels::times_adjacency(a2, g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a3(i, j) != lsq * g(i, j))
        return Refusal{"A^3 != " + std::to_string(lsq) + "A at " + entry_text(i, j, a3(i, j))};
  if (is_scalar(a2, lsq)) return Refusal{"A^2 = " + std::to_string(lsq) + "I (two eigenvalues)"};

  // Eigenvalues lie in {0, +-l}, so the nonzero ones number trace(A^2)/l^2.
  if (t1 % lsq != 0) throw Error("three_sym: inconsistent trace after identity check");
  const auto rank = static_cast<std::size_t>(t1 / lsq);
  if (n <= kRankCheckLimit && exact_rank(g.to_int_matrix()) != rank)
    throw Error("three_sym: exact rank disagrees with trace count");
  if (rank % 2 != 0) throw Error("three_sym: odd rank for symmetric spectrum");

  SpectralCertificate c;
  c.kind = SpectrumKind::ThreeSym;
  c.lambda_sq = lsq;
  c.m = rank / 2;
  c.d = n - rank;
  c.charpoly = spectrum_poly(lsq, c.m, 0, 0, c.d);
  return c;
}

Outcome<SpectralCertificate> certify_four_sym(const SignedGraph& g,
                                              std::optional<std::int64_t> hint) {
  const std::size_t n = g.order();
  if (n == 0) return Refusal{"empty graph"};
  const IntMatrix a2 = kernels::signed_square(g);
  const IntMatrix a3 = kernels::times_adjacency(a2, g);
  if (a3.trace() != 0)
    return Refusal{"trace(A^3) = " + std::to_string(a3.trace()) + ", spectrum not symmetric"};

  const std::int64_t t0 = static_cast<std::int64_t>(n);
  const std::int64_t t1 = a2.trace();
  const std::int64_t t2 = sum_squares(a2);
  std::int64_t lsq = 0, usq = 0;

  if (!hint) {
    const BigInt t3 = sum_squares(a3);
    const BigInt den = BigInt(t1) * t1 - BigInt(t0) * t2;
    if (den == 0) return Refusal{"at most one distinct |eigenvalue|"};
    const BigInt snum = BigInt(t1) * t2 - BigInt(t0) * t3;
    const BigInt pnum = BigInt(t2) * t2 - BigInt(t1) * t3;
    if (snum % den != 0 || pnum % den != 0)
      return Refusal{"trace moments do not give integer l^2 + u^2 and l^2 u^2"};
    const auto s = static_cast<std::int64_t>(snum / den);
    const auto p = static_cast<std::int64_t>(pnum / den);
    std::int64_t q = 0;
    if (!is_perfect_square(s * s - 4 * p, &q) || (s + q) % 2 != 0)
      return Refusal{"squared eigenvalues are not integers"};
    lsq = (s + q) / 2;
    usq = (s - q) / 2;
    if (usq < 1) return Refusal{"eigenvalue 0 present (not four distinct nonzero)"};
  } else {
    lsq = *hint;
    if (lsq < 2) throw PreconditionError("lambda^2 hint must be at least 2 for FourSym");
    const IntMatrix nm = shifted(a2, lsq);
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (nm(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) return Refusal{"A^2 = " + std::to_string(lsq) + "I (two eigenvalues)"};
    const IntMatrix na2 = kernels::multiply(nm, a2);
    if (na2(pi, pj) % nm(pi, pj) != 0) return Refusal{"no integer second eigenvalue"};
    usq = na2(pi, pj) / nm(pi, pj);
    if (usq < 1 || usq >= lsq)
      return Refusal{"second squared eigenvalue " + std::to_string(usq) + " out of range"};
  }

  const IntMatrix prod = kernels::multiply(shifted(a2, lsq), shifted(a2, usq));
  if (!prod.is_zero())
    return Refusal{"(A^2 - " + std::to_string(lsq) + "I)(A^2 - " + std::to_string(usq) +
                   "I) != 0"};

  const std::int64_t num = t1 - usq * t0;
  const std::int64_t den = 2 * (lsq - usq);
  if (num < 0 || num % den != 0) throw Error("four_sym: inconsistent multiplicities");
  const auto m = static_cast<std::size_t>(num / den);
  if (2 * m > n || (n - 2 * m) % 2 != 0) throw Error("four_sym: inconsistent multiplicities");
  const std::size_t k = (n - 2 * m) / 2;
  if (k == 0) return Refusal{"A^2 = " + std::to_string(lsq) + "I (two eigenvalues)"};
  if (!hint && m == 0) throw Error("four_sym: missing eigenvalue after moment recovery");
  if (n <= kRankCheckLimit && exact_rank(shifted(a2, usq)) != 2 * m)
    throw Error("four_sym: exact rank disagrees with trace count");

  SpectralCertificate c;
  c.kind = SpectrumKind::FourSym;
  c.lambda_sq = lsq;
  c.mu_sq = usq;
  c.m = m;
  c.mu_mult = k;
  c.charpoly = spectrum_poly(lsq, m, usq, k, 0);
  return c;
}

SpectralCertificate strongest_certificate(const SignedGraph& g) {
  if (auto c = certify_two_sym(g)) return *c;
  if (auto c = certify_three_sym(g)) return *c;
  if (auto c = certify_four_sym(g)) return *c;
  SpectralCertificate c;
  c.charpoly = char_poly(g);
  return c;
}

std::vector<double> numeric_eigenvalues(const SignedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = g(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

bool numeric_spectrum_matches(const SignedGraph& g, const SpectralCertificate& c, double tol) {
  if (c.kind == SpectrumKind::Other) return true;  // no spectral claim to check
  std::vector<double> want;
  const double l = std::sqrt(static_cast<double>(c.lambda_sq));
  const double u = std::sqrt(static_cast<double>(c.mu_sq));
  for (std::size_t i = 0; i < c.m; ++i) {
    want.push_back(l);
    want.push_back(-l);
  }
  for (std::size_t i = 0; i < c.mu_mult; ++i) {
    want.push_back(u);
    want.push_back(-u);
  }
  for (std::size_t i = 0; i < c.d; ++i) want.push_back(0.0);
  std::sort(want.begin(), want.end());
  const auto got = numeric_eigenvalues(g);
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i] - want[i]) > tol) return false;
  return true;
}

bool FilterVerdict::failed(const std::string& condition) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const FilterFailure& f) { return f.condition == condition; });
}

void FilterVerdict::fail(std::string condition, std::string detail) {
  passed = false;
  failures.push_back({std::move(condition), std::move(detail)});
}

bool sum_of_two_squares(std::int64_t k) {
  if (k < 0) throw PreconditionError("sum_of_two_squares: negative argument");
  for (std::int64_t a = 0; a * a <= k; ++a)
    if (is_perfect_square(k - a * a)) return true;
  return false;
}

FilterVerdict filter_sr2se(std::int64_t n, std::int64_t r, bool bipartite) {
  if (n < 2 || r < 1) throw PreconditionError("filter_sr2se: need n >= 2 and r >= 1");
  FilterVerdict v;
  const std::int64_t c2 = r * (r - 1) / 2;
  const std::int64_t bound = r * (r + 1) / 2 + 1;
  if (n < bound) v.fail("bound", "n >= " + std::to_string(bound) + " required");
  if ((n * c2) % 4 != 0)
    v.fail("quadrangle-integrality", "n*C(r,2) = " + std::to_string(n * c2) + " not divisible by 4");
  if (n % 4 == 2) {
    if (!sum_of_two_squares(r))
      v.fail("sum-of-two-squares", std::to_string(r) + " is not a sum of two squares");
    if ((r * (r - 1)) % 4 != 0) v.fail("mod-4", "r(r-1) not divisible by 4");
  }
  if (bipartite) {
    if (n % 2 != 0) {
      v.fail("bipartite-order", "bipartite SR2SE needs equal parts");
      return v;
    }
    const std::int64_t h = n / 2;
    if (h < c2 + 1) v.fail("bound", "n/2 >= " + std::to_string(c2 + 1) + " required");
    if (h % 2 == 1) {
      if (!is_perfect_square(r)) v.fail("square", std::to_string(r) + " is not a square");
      if (h > (h - r) * (h - r) + h - r + 1)
        v.fail("odd-order-bound", "n/2 > (n/2-r)^2 + n/2 - r + 1");
      if ((r * (r - 1)) % 4 != 0 && !v.failed("mod-4"))
        v.fail("mod-4", "r(r-1) not divisible by 4");
    } else if (h % 4 == 2 && !sum_of_two_squares(r)) {
      v.fail("sum-of-two-squares", std::to_string(r) + " is not a sum of two squares");
    }
  }
  return v;
}

TraceIdentities trace_identities(const UnderlyingGraph& g) {
  const auto rep = structure_report(g);
  if (!rep.regular) throw PreconditionError("trace_identities: graph is not regular");
  TraceIdentities t;
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = static_cast<std::int64_t>(g.row(i).and_count(g.row(j)));
      t.sum_fourths += w * w;
      if (g.adjacent(i, j)) t.sum_cubes += w;
    }
  const auto r = static_cast<std::int64_t>(rep.degree);
  t.expected_fourths = static_cast<std::int64_t>(n) * r * (3 * r - 2);
  return t;
}

FilterVerdict filter_graph(const UnderlyingGraph& g) {
  const auto rep = structure_report(g);
  if (!rep.regular || rep.degree == 0)
    throw PreconditionError("filter_graph: graph must be regular with positive degree");
  auto v = filter_sr2se(static_cast<std::int64_t>(g.order()),
                        static_cast<std::int64_t>(rep.degree), rep.bipartite);
  const auto t = trace_identities(g);
  if (t.sum_cubes != 0) v.fail("trace-cube", "trace(A^3) = " + std::to_string(t.sum_cubes));
  if (t.sum_fourths != t.expected_fourths)
    v.fail("trace-fourth", "trace(A^4) = " + std::to_string(t.sum_fourths) + ", expected " +
                               std::to_string(t.expected_fourths));
  return v;
}

}  // namespace sr2se
