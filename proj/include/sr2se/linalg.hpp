#pragma once

// Exact integer linear algebra: big-integer polynomials, fraction-free rank,
// and characteristic polynomials by multimodular Hessenberg reduction.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "sr2se/matrix.hpp"

namespace sr2se {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficients stored lowest degree first. The zero
/// polynomial is the empty vector; no trailing zero coefficients otherwise.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  static Poly monomial(std::size_t degree, BigInt coeff = 1);
  /// x^2 - c
  static Poly x2_minus(const BigInt& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /// p(-x)
  Poly reflect() const;
  Poly pow(unsigned e) const;

  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

std::string to_string(const Poly& p);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix& m);

/// Characteristic polynomial det(xI - M), computed modulo enough word-size
/// primes to cover a Hadamard-type coefficient bound, then lifted by CRT.
Poly char_poly(const IntMatrix& m);

/// Characteristic polynomial modulo a single prime p < 2^31.
std::vector<std::uint32_t> char_poly_mod(const IntMatrix& m, std::uint32_t p);

bool is_perfect_square(std::int64_t v, std::int64_t* root = nullptr);

}  // namespace sr2se
