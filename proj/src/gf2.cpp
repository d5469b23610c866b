#include "cpv/gf2.hpp"

#include "cpv/error.hpp"

#include <ostream>
#include <string>

namespace cpv {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + kWordBits - 1) / kWordBits), data_(rows * words_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(r) + " has " +
                                                std::to_string(rows[r].size()) + " entries, expected " +
                                                std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) throw Error(ErrorKind::InvalidArgument, "GF(2) entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_bits(std::size_t rows, std::size_t cols, std::uint64_t bits) {
  if (rows * cols > kWordBits) throw Error(ErrorKind::TooLarge, "from_bits needs rows*cols <= 64");
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if ((bits >> (r * cols + c)) & 1U) m.set(r, c);
    }
  }
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  const Word mask = Word{1} << (c % kWordBits);
  Word& w = row(r)[c / kWordBits];
  w = v ? (w | mask) : (w & ~mask);
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
  }
  return out;
}

bool Gf2Matrix::is_zero() const {
  for (Word w : data_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t Gf2Matrix::rank() const {
  std::vector<Word> work = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t wi = c / kWordBits;
    const Word mask = Word{1} << (c % kWordBits);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(work[pivot * words_ + wi] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < words_; ++k) std::swap(work[pivot * words_ + k], work[rank * words_ + k]);
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (work[r * words_ + wi] & mask) {
        for (std::size_t k = wi; k < words_; ++k) work[r * words_ + k] ^= work[rank * words_ + k];
      }
    }
    ++rank;
  }
  return rank;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(ErrorKind::ShapeMismatch, "product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                              " and " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Gf2Matrix out(rows_, rhs.cols_);
  // Row r of the product is the XOR of rhs rows selected by row r of *this.
  for (std::size_t r = 0; r < rows_; ++r) {
    Word* dst = out.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const Word* src = rhs.row(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ShapeMismatch, "sum of unequal shapes");
  Gf2Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ';';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (m.get(r, c) ? '1' : '0');
  }
  return os << "](" << m.rows() << 'x' << m.cols() << ')';
}

}  // namespace cpv
