#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kh {

using Integer = mpz_class;

std::string to_string(const Integer& value);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::vector<Integer> column(std::size_t c) const;

  IntMatrix transpose() const;

  // Copy with one row and one column deleted.
  IntMatrix without(std::size_t row, std::size_t col) const;

  // result(i, j) = (*this)(row_order[i], col_order[j])
  IntMatrix permuted(std::span<const int> row_order, std::span<const int> col_order) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  // Entrywise residue in [0, modulus).
  IntMatrix mod(const Integer& modulus) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
IntMatrix operator*(const Integer& s, const IntMatrix& a);

// Least nonnegative residue, for any sign of value.
Integer residue(const Integer& value, const Integer& modulus);

// Aligned, bracketed rendering with exact integers.
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace kh
