#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cpv {

/// Dense matrix over Z/2 with bit-packed rows.
class Gf2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Gf2Matrix identity(std::size_t n);
  /// Row-major 0/1 entries; every row must have `cols` entries.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);
  /// Entry (r, c) is bit r * cols + c of `bits`. Requires rows * cols <= 64.
  static Gf2Matrix from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v = true);

  std::vector<std::vector<int>> to_rows() const;

  bool is_zero() const;
  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  /// Composition: (*this) * rhs, i.e. apply rhs first.
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  Gf2Matrix operator+(const Gf2Matrix& rhs) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  Word* row(std::size_t r) { return data_.data() + r * words_; }
  const Word* row(std::size_t r) const { return data_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m);

}  // namespace cpv
