#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sr2se {

/// Dense row-major integer matrix. Used for products such as A^2 and for
/// the Gram residuals of the extension module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n, std::int64_t scale = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<std::int64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  const std::vector<std::int64_t>& data() const { return data_; }

  std::int64_t trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(std::int64_t s, const IntMatrix& a);

std::string to_string(const IntMatrix& m);

/// Fixed-width bit row over a dynamic number of 64-bit words.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  /// Popcount of the intersection with another row of the same width.
  std::size_t and_count(const BitRow& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sr2se
