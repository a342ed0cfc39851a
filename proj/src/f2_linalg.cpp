#include "hopf/f2_linalg.hpp"

#include <utility>

namespace hopf {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_int(const IntMatrix& m) {
  F2Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (mpz_odd_p(m(i, j).get_mpz_t())) out.set(i, j, true);
  return out;
}

IntMatrix F2Matrix::to_int() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out(i, j) = 1;
  return out;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
  auto& w = bits_[i * words_ + j / 64];
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  w = v ? (w | mask) : (w & ~mask);
}

void F2Matrix::xor_row(std::size_t target, std::size_t source) {
  for (std::size_t w = 0; w < words_; ++w) bits_[target * words_ + w] ^= bits_[source * words_ + w];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (cols_ != other.rows_) throw InputError("F2 matrix product dimension mismatch");
  F2Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k))
        for (std::size_t w = 0; w < other.words_; ++w)
          out.bits_[i * out.words_ + w] ^= other.bits_[k * other.words_ + w];
  return out;
}

std::vector<bool> F2Matrix::operator*(const std::vector<bool>& v) const {
  if (v.size() != cols_) throw InputError("F2 matrix-vector dimension mismatch");
  std::vector<bool> out(rows_, false);
  for (std::size_t i = 0; i < rows_; ++i) {
    bool acc = false;
    for (std::size_t j = 0; j < cols_; ++j) acc ^= (v[j] && get(i, j));
    out[i] = acc;
  }
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

F2Matrix F2Matrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw InputError("F2 row range out of bounds");
  F2Matrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t w = 0; w < words_; ++w) out.bits_[i * words_ + w] = bits_[(first + i) * words_ + w];
  return out;
}

F2Matrix F2Matrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw InputError("F2 column range out of bounds");
  F2Matrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (get(i, first + j)) out.set(i, j, true);
  return out;
}

bool F2Matrix::is_zero() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

F2Echelon F2Matrix::row_reduce(bool track) const {
  F2Echelon e;
  e.reduced = *this;
  F2Matrix& r = e.reduced;
  // transform_inverse is kept transposed so column operations become row XORs.
  F2Matrix inv_t;
  if (track) {
    e.transform = identity(rows_);
    inv_t = identity(rows_);
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && !r.get(p, col)) ++p;
    if (p == rows_) continue;
    r.swap_rows(row, p);
    if (track) {
      e.transform.swap_rows(row, p);
      inv_t.swap_rows(row, p);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || !r.get(i, col)) continue;
      r.xor_row(i, row);
      if (track) {
        e.transform.xor_row(i, row);
        inv_t.xor_row(row, i);
      }
    }
    e.pivot_columns.push_back(col);
    ++row;
  }
  if (track) e.transform_inverse = inv_t.transpose();
  return e;
}

std::size_t F2Matrix::rank() const { return row_reduce(false).pivot_columns.size(); }

F2Matrix F2Matrix::kernel() const {
  const F2Echelon e = row_reduce(false);
  std::vector<bool> pivot(cols_, false);
  for (auto c : e.pivot_columns) pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!pivot[c]) free_cols.push_back(c);
  F2Matrix k(cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.set(free_cols[f], f, true);
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r)
      if (e.reduced.get(r, free_cols[f])) k.set(e.pivot_columns[r], f, true);
  }
  return k;
}

std::optional<std::vector<bool>> F2Matrix::solve(const std::vector<bool>& b) const {
  if (b.size() != rows_) throw InputError("F2 solve: right-hand side has wrong length");
  const F2Echelon e = row_reduce(true);
  const std::vector<bool> c = e.transform * b;
  for (std::size_t i = e.pivot_columns.size(); i < rows_; ++i)
    if (c[i]) return std::nullopt;
  std::vector<bool> x(cols_, false);
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) x[e.pivot_columns[r]] = c[r];
  return x;
}

F2Matrix F2Matrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("F2 inverse of a non-square matrix");
  const F2Echelon e = row_reduce(true);
  if (e.pivot_columns.size() != rows_) throw PreconditionError("F2 matrix is singular");
  return e.transform;
}

std::vector<bool> to_bits(const IntVector& v) {
  std::vector<bool> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpz_odd_p(v[i].get_mpz_t()) != 0;
  return out;
}

IntVector from_bits(const std::vector<bool>& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] ? 1 : 0;
  return out;
}

}  // namespace hopf
