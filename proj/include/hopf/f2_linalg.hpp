// Bit-packed matrices over F2.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopf/exact_linalg.hpp"

namespace hopf {

class F2Matrix;

/// Reduced row echelon form R = transform * M. `transform_inverse` is only
/// populated when tracking was requested.
struct F2Echelon;

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_int(const IntMatrix& m);  // entries reduced mod 2
  IntMatrix to_int() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  void set(std::size_t i, std::size_t j, bool v);
  void flip(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] ^= (std::uint64_t{1} << (j % 64)); }

  /// row[target] ^= row[source]
  void xor_row(std::size_t target, std::size_t source);
  void swap_rows(std::size_t a, std::size_t b);

  F2Matrix operator*(const F2Matrix& other) const;
  std::vector<bool> operator*(const std::vector<bool>& v) const;
  bool operator==(const F2Matrix& other) const = default;

  F2Matrix transpose() const;
  F2Matrix row_range(std::size_t first, std::size_t count) const;
  F2Matrix column_range(std::size_t first, std::size_t count) const;
  bool is_zero() const;

  F2Echelon row_reduce(bool track) const;
  std::size_t rank() const;
  /// Columns form a basis of the null space.
  F2Matrix kernel() const;
  std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;
  /// Inverse of a square matrix; throws PreconditionError when singular.
  F2Matrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct F2Echelon {
  F2Matrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot of row r is pivot_columns[r]
  F2Matrix transform;
  F2Matrix transform_inverse;
};

std::vector<bool> to_bits(const IntVector& v);
IntVector from_bits(const std::vector<bool>& v);

}  // namespace hopf
