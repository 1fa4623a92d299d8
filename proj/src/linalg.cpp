#include "sr2se/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sr2se/error.hpp"

namespace sr2se {

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(std::size_t degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::x2_minus(const BigInt& c) { return Poly({-c, 0, 1}); }

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result({1});
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::size_t exact_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Bound on |coefficient| of det(xI - M): C(n,k) * S^ceil(k/2), S = max squared row norm.
BigInt charpoly_bound(const IntMatrix& m) {
  const std::size_t n = m.rows();
  BigInt s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j) row += BigInt(m(i, j)) * m(i, j);
    s = std::max(s, row);
  }
  BigInt best = 1, binom = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    BigInt term = binom * boost::multiprecision::pow(s, static_cast<unsigned>((k + 1) / 2));
    best = std::max(best, term);
  }
  return best;
}

}  // namespace

std::vector<std::uint32_t> char_poly_mod(const IntMatrix& m, std::uint32_t prime) {
  if (!m.square()) throw PreconditionError("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  const std::uint64_t p = prime;
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
      h[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t m1 = col + 1;
    std::size_t piv = m1;
    while (piv < n && h[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m1) {
      std::swap(h[piv], h[m1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m1]);
    }
    const std::uint64_t inv = inv_mod(h[m1][col], p);
    for (std::size_t j = m1 + 1; j < n; ++j) {
      if (h[j][col] == 0) continue;
      const std::uint64_t u = h[j][col] * inv % p;
      for (std::size_t c = 0; c < n; ++c) h[j][c] = (h[j][c] + (p - u) * h[m1][c]) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][m1] = (h[r][m1] + u * h[r][j]) % p;
    }
  }

  // p_k(x) = det(xI - H_k) for leading k x k blocks.
  std::vector<std::vector<std::uint64_t>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = poly[k];
    cur.assign(k + 1, 0);
    const auto& prevp = poly[k - 1];
    const std::uint64_t diag = h[k - 1][k - 1];
    for (std::size_t i = 0; i < prevp.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prevp[i]) % p;
      cur[i] = (cur[i] + (p - diag) * prevp[i]) % p;
    }
    std::uint64_t t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      if (t == 0) break;
      const std::uint64_t f = t * h[i - 1][k - 1] % p;
      const auto& q = poly[i - 1];
      for (std::size_t c = 0; c < q.size(); ++c) cur[c] = (cur[c] + (p - f) * q[c]) % p;
    }
  }
  std::vector<std::uint32_t> out(poly[n].begin(), poly[n].end());
  return out;
}

Poly char_poly(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  const BigInt bound = 2 * charpoly_bound(m) + 1;

  std::vector<BigInt> value(n + 1, 0);
  BigInt modulus = 1;
  std::uint32_t prime = 2147483647u;
  while (modulus <= bound) {
    while (!is_prime(prime)) --prime;
    const auto res = char_poly_mod(m, prime);
    const std::uint64_t mod_p = static_cast<std::uint64_t>(modulus % prime);
    const std::uint64_t inv = inv_mod(mod_p, prime);
    for (std::size_t i = 0; i <= n; ++i) {
      const std::uint64_t cur = static_cast<std::uint64_t>(value[i] % prime);
      const std::uint64_t diff = (res[i] + prime - cur) % prime;
      value[i] += modulus * BigInt(diff * inv % prime);
    }
    modulus *= prime;
    --prime;
  }
  const BigInt half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return Poly(std::move(value));
}

bool is_perfect_square(std::int64_t v, std::int64_t* root) {
  if (v < 0) return false;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  if (s * s != v) return false;
  if (root) *root = s;
  return true;
}

}  // namespace sr2se
