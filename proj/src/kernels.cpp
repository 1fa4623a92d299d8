#include "sr2se/kernels.hpp"

#include <limits>
#include <vector>

#include "sr2se/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sr2se::kernels {

namespace {

void square_row(const SignedGraph& g, std::size_t i, std::span<std::int64_t> out) {
  for (Vertex k : g.neighbours(i)) {
    const int aik = g(i, k);
    for (Vertex j : g.neighbours(k)) out[j] += aik * g(k, j);
  }
}

std::optional<EntryViolation> row_violation(const SignedGraph& g, std::size_t i, std::int64_t c,
                                            std::vector<std::int64_t>& buf) {
  std::fill(buf.begin(), buf.end(), 0);
  square_row(g, i, buf);
  for (std::size_t j = 0; j < buf.size(); ++j) {
    const std::int64_t want = (i == j) ? c : 0;
    if (buf[j] != want) return EntryViolation{i, j, buf[j]};
  }
  return std::nullopt;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

IntMatrix signed_square_serial(const SignedGraph& g) {
  const std::size_t n = g.order();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) square_row(g, i, out.row(i));
  return out;
}

IntMatrix signed_square(const SignedGraph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  IntMatrix out(g.order(), g.order());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) square_row(g, static_cast<std::size_t>(i), out.row(i));
  return out;
}

IntMatrix times_adjacency_serial(const IntMatrix& s, const SignedGraph& g) {
  if (s.cols() != g.order()) throw PreconditionError("times_adjacency: shape mismatch");
  IntMatrix out(s.rows(), g.order());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    auto dst = out.row(i);
    auto src = s.row(i);
    for (std::size_t k = 0; k < g.order(); ++k) {
      if (src[k] == 0) continue;
      for (Vertex j : g.neighbours(k)) dst[j] += src[k] * g(k, j);
    }
  }
  return out;
}

IntMatrix times_adjacency(const IntMatrix& s, const SignedGraph& g) {
  if (s.cols() != g.order()) throw PreconditionError("times_adjacency: shape mismatch");
  IntMatrix out(s.rows(), g.order());
  const auto rows = static_cast<std::int64_t>(s.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    auto dst = out.row(i);
    auto src = s.row(i);
    for (std::size_t k = 0; k < g.order(); ++k) {
      if (src[k] == 0) continue;
      for (Vertex j : g.neighbours(k)) dst[j] += src[k] * g(k, j);
    }
  }
  return out;
}

IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b) { return a * b; }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

std::optional<EntryViolation> square_scalar_violation_serial(const SignedGraph& g,
                                                             std::int64_t c) {
  std::vector<std::int64_t> buf(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (auto v = row_violation(g, i, c, buf)) return v;
  return std::nullopt;
}

std::optional<EntryViolation> square_scalar_violation(const SignedGraph& g, std::int64_t c) {
  const auto n = static_cast<std::int64_t>(g.order());
  // Earliest violating row wins so the answer matches the serial version.
  std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
  std::optional<EntryViolation> found;
#pragma omp parallel
  {
    std::vector<std::int64_t> buf(g.order());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t seen;
#pragma omp atomic read
      seen = first_bad;
      if (i > seen) continue;
      if (auto v = row_violation(g, static_cast<std::size_t>(i), c, buf)) {
#pragma omp critical(sr2se_square_violation)
        {
          if (i < first_bad) {
#pragma omp atomic write
            first_bad = i;
            found = v;
          }
        }
      }
    }
  }
  return found;
}

}  // namespace sr2se::kernels
