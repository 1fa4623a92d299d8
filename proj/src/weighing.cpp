#include "sr2se/weighing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sr2se {

IntMatrix EquivalenceWitness::apply(const IntMatrix& m) const {
  if (rows.perm.size() != m.rows() || cols.perm.size() != m.cols())
    throw PreconditionError("equivalence witness size mismatch");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(rows.perm[i], cols.perm[j]) = rows.signs[i] * cols.signs[j] * m(i, j);
  return out;
}

Outcome<WeighingMatrix> verify_weighing(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) return Refusal{"matrix must be square and non-empty"};
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < -1 || m(i, j) > 1)
        return Refusal{"entry (" + std::to_string(i) + "," + std::to_string(j) + ") not in {0,±1}"};
  // Rows: M M^T = rI is equivalent to M^T M = rI for square M, but both are
  // checked so the refusal can name the offending pair.
  std::int64_t r = 0;
  for (std::size_t j = 0; j < n; ++j) r += m(0, j) * m(0, j);
  for (int side = 0; side < 2; ++side)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        std::int64_t dot = 0;
        for (std::size_t t = 0; t < n; ++t) dot += side ? m(t, a) * m(t, b) : m(a, t) * m(b, t);
        const std::int64_t want = a == b ? r : 0;
        if (dot != want) {
          std::ostringstream os;
          os << (side ? "columns " : "rows ") << a << " and " << b << ": inner product " << dot
             << ", expected " << want;
          return Refusal{os.str()};
        }
      }
  return WeighingMatrix{m, n, r};
}

namespace {

std::vector<BitRow> supports(const IntMatrix& m) {
  std::vector<BitRow> s(m.rows(), BitRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s[i].set(j);
  return s;
}

}  // namespace

std::set<std::size_t> intersection_numbers(const WeighingMatrix& w) {
  if (w.n < 2) throw PreconditionError("intersection_numbers: need n >= 2");
  const auto s = supports(w.entries);
  std::set<std::size_t> out;
  for (std::size_t a = 0; a < w.n; ++a)
    for (std::size_t b = a + 1; b < w.n; ++b) out.insert(s[a].and_count(s[b]));
  return out;
}

bool has_zero_two_intersections(const WeighingMatrix& w) {
  if (w.n < 2) return true;
  const auto in = intersection_numbers(w);
  return std::all_of(in.begin(), in.end(), [](std::size_t x) { return x == 0 || x == 2; });
}

bool is_proper(const WeighingMatrix& w) {
  UnderlyingGraph support(2 * w.n);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j)
      if (w(i, j) != 0) support.add_edge(i, w.n + j);
  return is_connected(support);
}

bool scheme2_prefix_matches(const IntMatrix& m, std::int64_t r) {
  const std::size_t n = m.rows();
  const auto ru = static_cast<std::size_t>(r);
  if (r < 1 || n < ru + (ru - 1) * (ru - 2) / 2) return false;
  IntMatrix want(ru, n);
  for (std::size_t j = 0; j < ru; ++j) want(0, j) = 1;
  for (std::size_t i = 1; i < ru; ++i) {
    want(i, 0) = 1;
    want(i, i) = -1;
  }
  std::size_t col = ru;
  for (std::size_t i = 1; i < ru; ++i)
    for (std::size_t j = i + 1; j < ru; ++j, ++col) {
      want(i, col) = 1;
      want(j, col) = -1;
    }
  for (std::size_t i = 0; i < ru; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != want(i, j)) return false;
  return true;
}

Schem2Form schem2_normal_form(const WeighingMatrix& w) {
  if (!has_zero_two_intersections(w))
    throw PreconditionError("schem2_normal_form: intersection numbers must lie in {0,2}");
  const std::size_t n = w.n;
  const auto r = static_cast<std::size_t>(w.r);
  const IntMatrix& m = w.entries;
  auto fail = [](const std::string& what) { throw Error("schem2_normal_form: " + what); };

  std::vector<std::size_t> row_order{0}, col_order;
  std::vector<bool> row_used(n, false), col_used(n, false);
  row_used[0] = true;
  std::vector<std::size_t> head;  // support of row 0
  for (std::size_t j = 0; j < n; ++j)
    if (m(0, j) != 0) head.push_back(j);
  const std::size_t c1 = head.front();
  col_order.push_back(c1);
  col_used[c1] = true;

  // Rows through c1 other than row 0, each meeting row 0 in one more column.
  std::vector<std::pair<std::size_t, std::size_t>> through;  // (other column, row)
  for (std::size_t i = 1; i < n; ++i) {
    if (m(i, c1) == 0) continue;
    std::size_t other = n;
    for (std::size_t j : head)
      if (j != c1 && m(i, j) != 0) other = j;
    if (other == n) fail("row meets row 0 only once");
    through.emplace_back(other, i);
  }
  if (through.size() + 1 != r) fail("column weight differs from row weight");
  std::sort(through.begin(), through.end());
  for (auto [c, i] : through) {
    if (col_used[c]) fail("two rows share both columns with row 0");
    col_order.push_back(c);
    col_used[c] = true;
    row_order.push_back(i);
    row_used[i] = true;
  }
  // Pair columns: rows i < j among rows 1..r-1 share c1 and one more column.
  for (std::size_t a = 1; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      std::size_t shared = n;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c1 && m(row_order[a], j) != 0 && m(row_order[b], j) != 0) shared = j;
      if (shared == n || col_used[shared]) fail("pair column missing or repeated");
      col_order.push_back(shared);
      col_used[shared] = true;
    }
  for (std::size_t j = 0; j < n; ++j)
    if (!col_used[j]) col_order.push_back(j);
  for (std::size_t i = 0; i < n; ++i)
    if (!row_used[i]) row_order.push_back(i);

  // Signs: t for rows, s for columns, entry becomes t_i * s_j * m_ij.
  std::vector<int> t(n, 0), s(n, 0);
  t[0] = 1;
  for (std::size_t j = 0; j < r; ++j) s[col_order[j]] = static_cast<int>(m(0, col_order[j]));
  for (std::size_t a = 1; a < r; ++a) t[row_order[a]] = static_cast<int>(m(row_order[a], c1) * s[c1]);
  std::size_t col = r;
  for (std::size_t a = 1; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b, ++col) {
      const std::size_t j = col_order[col];
      s[j] = static_cast<int>(t[row_order[a]] * m(row_order[a], j));
    }
  // Tail columns keep their sign; each remaining row is scaled so its first
  // nonzero entry in the new column order is positive.
  for (std::size_t p = col; p < n; ++p) {
    const std::size_t j = col_order[p];
    s[j] = 1;
    for (std::size_t a = 0; a < r; ++a)
      if (m(row_order[a], j) != 0) fail("tail column meets the scheme rows");
  }
  for (std::size_t a = r; a < n; ++a) {
    const std::size_t i = row_order[a];
    for (std::size_t p = 0; p < n; ++p)
      if (m(i, col_order[p]) != 0) {
        t[i] = static_cast<int>(m(i, col_order[p]) * s[col_order[p]]);
        break;
      }
  }
  Schem2Form out;
  out.witness.rows.perm.resize(n);
  out.witness.cols.perm.resize(n);
  out.witness.rows.signs = t;
  out.witness.cols.signs = s;
  for (std::size_t a = 0; a < n; ++a) {
    out.witness.rows.perm[row_order[a]] = static_cast<Vertex>(a);
    out.witness.cols.perm[col_order[a]] = static_cast<Vertex>(a);
  }
  const IntMatrix normal = out.witness.apply(m);
  if (!scheme2_prefix_matches(normal, w.r)) fail("result does not match the scheme");
  out.matrix = WeighingMatrix{normal, n, w.r};
  out.k = n - r * (r - 1) / 2 - 1;
  return out;
}

SignedGraph to_bipartite_sr2se(const WeighingMatrix& w) {
  if (!has_zero_two_intersections(w))
    throw PreconditionError("to_bipartite_sr2se: intersection numbers must lie in {0,2}");
  if (!is_proper(w)) throw PreconditionError("to_bipartite_sr2se: weighing matrix is not proper");
  SignMatrix a(2 * w.n);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j)
      if (w(i, j) != 0) a.set_edge(j, w.n + i, static_cast<int>(w(i, j)));
  return SignedGraph(std::move(a));
}

WeighingMatrix from_bipartite_sr2se(const SignedGraph& g) {
  const auto u = underlying(g);
  if (!is_connected(u)) throw PreconditionError("from_bipartite_sr2se: graph is not connected");
  const auto colour = bipartition(u);
  if (!colour) throw PreconditionError("from_bipartite_sr2se: graph is not bipartite");
  std::vector<Vertex> cols, rows;
  for (Vertex v = 0; v < g.order(); ++v) ((*colour)[v] == (*colour)[0] ? cols : rows).push_back(v);
  if (cols.size() != rows.size()) throw PreconditionError("from_bipartite_sr2se: unequal parts");
  IntMatrix b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = g(rows[i], cols[j]);
  auto w = verify_weighing(b);
  if (!w) throw PreconditionError("from_bipartite_sr2se: not an SR2SE (" + w.reason() + ")");
  return *w;
}

std::optional<EquivalenceWitness> equivalent(const WeighingMatrix& a, const WeighingMatrix& b,
                                             std::size_t cap) {
  if (a.n != b.n || a.r != b.r) return std::nullopt;
  const std::size_t n = a.n;
  if (n > cap)
    throw CapExceededError("weighing equivalence: order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(cap) + "; screen with intersection numbers instead");
  // Bipartite block matrices with columns coloured 0 and rows coloured 1.
  auto block = [n](const WeighingMatrix& w) {
    IntMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(j, n + i) = w(i, j);
        m(n + i, j) = w(i, j);
      }
    return m;
  };
  std::vector<int> colours(2 * n, 0);
  std::fill(colours.begin() + static_cast<std::ptrdiff_t>(n), colours.end(), 1);
  auto sp = find_signed_isomorphism(block(a), block(b), colours, colours, 2 * cap);
  if (!sp) return std::nullopt;
  EquivalenceWitness w;
  w.rows.perm.resize(n);
  w.rows.signs.resize(n);
  w.cols.perm.resize(n);
  w.cols.signs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    w.cols.perm[j] = sp->perm[j];
    w.cols.signs[j] = sp->signs[j];
    w.rows.perm[j] = static_cast<Vertex>(sp->perm[n + j] - n);
    w.rows.signs[j] = sp->signs[n + j];
  }
  if (!(w.apply(a.entries) == b.entries)) throw Error("weighing equivalence: witness failed verification");
  return w;
}

}  // namespace sr2se
