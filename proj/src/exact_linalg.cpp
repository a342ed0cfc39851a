#include "hopf/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

#include "hopf/f2_linalg.hpp"

namespace hopf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::column(std::size_t j) const {
  if (j >= cols_) throw InputError("column index out of range");
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  if (i >= rows_) throw InputError("row index out of range");
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const IntVector& v) {
  if (j >= cols_ || v.size() != rows_) throw InputError("set_column: dimension mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw InputError("column block out of range");
  IntMatrix b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw InputError("row block out of range");
  IntMatrix b(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
  return b;
}

void IntMatrix::paste(std::size_t row, std::size_t col, const IntMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) throw InputError("paste out of range");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
}

IntMatrix IntMatrix::reduced_mod2() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = mpz_odd_p(data_[k].get_mpz_t()) ? 1 : 0;
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  IntVector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Integer& a = (*this)(i, j);
      if (sgn(a) != 0) mpz_addmul(out[i].get_mpz_t(), a.get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Integer& b = other(k, j);
        if (sgn(b) != 0) mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += other.data_[k];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
  return out;
}

IntMatrix IntMatrix::operator-() const { return scaled(-1); }

IntMatrix IntMatrix::scaled(const Integer& c) const {
  IntMatrix out(*this);
  for (auto& x : out.data_) x *= c;
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (sgn(s) != 0) mpz_addmul((*this)(target, j).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (sgn(s) != 0) mpz_addmul((*this)(i, target).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw InputError("hstack: row counts differ");
  IntMatrix out(left.rows(), left.cols() + right.cols());
  out.paste(0, 0, left);
  out.paste(0, left.cols(), right);
  return out;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InputError("vstack: column counts differ");
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  out.paste(0, 0, top);
  out.paste(top.rows(), 0, bottom);
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

IntVector zero_vector(std::size_t n) { return IntVector(n); }

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("vector sum dimension mismatch");
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("vector difference dimension mismatch");
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVector scale(const IntVector& v, const Integer& c) {
  IntVector out(v);
  for (auto& x : out) x *= c;
  return out;
}

IntVector reduce_mod2(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpz_odd_p(v[i].get_mpz_t()) ? 1 : 0;
  return out;
}

IntVector to_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

// Working state: A = left * M * right, with inverses maintained alongside.
struct SnfState {
  IntMatrix a, u, uinv, v, vinv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& c) {
    a.add_row_multiple(target, source, c);
    u.add_row_multiple(target, source, c);
    uinv.add_col_multiple(source, target, -c);
  }
  void add_col(std::size_t target, std::size_t source, const Integer& c) {
    a.add_col_multiple(target, source, c);
    v.add_col_multiple(target, source, c);
    vinv.add_row_multiple(source, target, -c);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  }
};

bool smaller_abs(const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfState st{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols),
              IntMatrix::identity(cols)};
  IntMatrix& a = st.a;
  std::size_t t = 0;
  Integer q;

  while (t < rows && t < cols) {
    // Global minimal-|value| pivot in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(a(i, j)) != 0 && (pi == rows || smaller_abs(a(i, j), a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        st.add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        st.add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t into the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(a(i, t)) != 0 && smaller_abs(a(i, t), a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(a(t, j)) != 0 && smaller_abs(a(t, j), a(bi, bj))) {
            bi = t;
            bj = j;
          }
        st.swap_rows(t, bi);
        st.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      st.add_row(t, bad, 1);
    }
    if (sgn(a(t, t)) < 0) st.negate_row(t);
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.diagonal = std::move(st.a);
  out.left = std::move(st.u);
  out.left_inverse = std::move(st.uinv);
  out.right = std::move(st.v);
  out.right_inverse = std::move(st.vinv);
  return out;
}

std::optional<IntVector> solve_linear(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw InputError("solve_linear: right-hand side has wrong length");
  const SmithForm snf = smith_normal_form(m);
  const IntVector c = snf.left * b;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.diagonal(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  return snf.right.column_block(snf.rank, m.cols() - snf.rank);
}

// ---------------------------------------------------------------------------
// Abelian group presentations

Integer AbelianGroupPresentation::order(std::size_t g) const {
  if (g >= num_generators()) throw InputError("generator index out of range");
  return g < free_rank_ ? Integer(0) : torsion_[g - free_rank_];
}

bool AbelianGroupPresentation::is_cycle(const IntVector& v) const {
  if (v.size() != ambient_) throw InputError("cycle has wrong length");
  IntVector image = d_out_ * v;
  if (coefficients_ == Coefficients::F2) image = reduce_mod2(image);
  return is_zero(image);
}

IntVector AbelianGroupPresentation::coordinates(const IntVector& cycle) const {
  if (!is_cycle(cycle)) throw PreconditionError("vector is not a cycle");
  return normalize(coordinate_map_ * cycle);
}

IntVector AbelianGroupPresentation::normalize(const IntVector& coords) const {
  if (coords.size() != num_generators()) throw InputError("coordinate vector has wrong length");
  IntVector out(coords);
  for (std::size_t g = free_rank_; g < out.size(); ++g) mpz_fdiv_r(out[g].get_mpz_t(), out[g].get_mpz_t(),
                                                                   torsion_[g - free_rank_].get_mpz_t());
  return out;
}

bool AbelianGroupPresentation::is_boundary(const IntVector& cycle) const { return is_zero(coordinates(cycle)); }

IntVector AbelianGroupPresentation::generator(std::size_t g) const {
  if (g >= num_generators()) throw InputError("generator index out of range");
  return generators_.column(g);
}

std::string AbelianGroupPresentation::to_string(const std::string& plus) const {
  if (is_trivial()) return "0";
  std::string s;
  auto append = [&](const std::string& term) {
    if (!s.empty()) s += plus;
    s += term;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) append("Z/" + d.get_str());
  return s;
}

AbelianGroupPresentation AbelianGroupPresentation::assemble(Coefficients coefficients, std::size_t free_rank,
                                                            std::vector<Integer> torsion, IntMatrix d_out,
                                                            IntMatrix coordinate_map, IntMatrix generators) {
  AbelianGroupPresentation p;
  p.coefficients_ = coefficients;
  p.ambient_ = d_out.cols();
  p.free_rank_ = free_rank;
  p.torsion_ = std::move(torsion);
  p.d_out_ = std::move(d_out);
  p.coordinate_map_ = std::move(coordinate_map);
  p.generators_ = std::move(generators);
  if (p.coordinate_map_.rows() != p.num_generators() || p.generators_.cols() != p.num_generators() ||
      p.coordinate_map_.cols() != p.ambient_ || p.generators_.rows() != p.ambient_)
    throw InputError("inconsistent group presentation data");
  return p;
}

bool AbelianGroupPresentation::same_isomorphism_type(const AbelianGroupPresentation& other) const {
  return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
}

namespace {

AbelianGroupPresentation homology_over_f2(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace

AbelianGroupPresentation homology_at(const IntMatrix& d_in, const IntMatrix& d_out, Coefficients coefficients) {
  if (d_out.cols() != d_in.rows()) throw InputError("homology_at: d_in and d_out do not compose");
  IntMatrix composite = d_out * d_in;
  if (coefficients == Coefficients::F2) composite = composite.reduced_mod2();
  if (!composite.is_zero()) throw PreconditionError("not a complex: d_out * d_in != 0");
  if (coefficients == Coefficients::F2) return homology_over_f2(d_in, d_out);

  const std::size_t n = d_in.rows();
  const SmithForm outer = smith_normal_form(d_out);
  const std::size_t k = n - outer.rank;
  const IntMatrix kernel = outer.right.column_block(outer.rank, k);
  const IntMatrix left_inv = outer.right_inverse.row_block(outer.rank, k);

  const SmithForm inner = smith_normal_form(left_inv * d_in);
  const IntMatrix coords = inner.left * left_inv;
  const IntMatrix gens = kernel * inner.left_inverse;

  std::vector<std::size_t> order;  // rows of `coords` kept, free first
  for (std::size_t i = inner.rank; i < k; ++i) order.push_back(i);
  const std::size_t free_rank = order.size();
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < inner.rank; ++i) {
    const Integer& d = inner.diagonal(i, i);
    if (d != 1) {
      order.push_back(i);
      torsion.push_back(d);
    }
  }
  IntMatrix coordinate_map(order.size(), n);
  IntMatrix generators(n, order.size());
  for (std::size_t g = 0; g < order.size(); ++g) {
    for (std::size_t c = 0; c < n; ++c) {
      coordinate_map(g, c) = coords(order[g], c);
      generators(c, g) = gens(c, order[g]);
    }
  }
  return AbelianGroupPresentation::assemble(Coefficients::Integers, free_rank, std::move(torsion), d_out,
                                            std::move(coordinate_map), std::move(generators));
}

namespace {

AbelianGroupPresentation homology_over_f2(const IntMatrix& d_in, const IntMatrix& d_out) {
  const std::size_t n = d_in.rows();
  // Kernel of d_out from its reduced row echelon form; the free columns give
  // both a basis and the projection that recovers cycle coordinates.
  F2Matrix out = F2Matrix::from_int(d_out);
  const F2Echelon ech = out.row_reduce(false);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t k = free_cols.size();
  F2Matrix kernel(n, k);
  for (std::size_t f = 0; f < k; ++f) {
    kernel.set(free_cols[f], f, true);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
      if (ech.reduced.get(r, free_cols[f])) kernel.set(ech.pivot_columns[r], f, true);
  }
  F2Matrix proj(k, n);
  for (std::size_t f = 0; f < k; ++f) proj.set(f, free_cols[f], true);

  // Quotient of F2^k by the image of proj * d_in.
  F2Matrix a = proj * F2Matrix::from_int(d_in);
  const F2Echelon ech2 = a.row_reduce(true);
  const std::size_t r2 = ech2.pivot_columns.size();
  const F2Matrix coords = ech2.transform.row_range(r2, k - r2) * proj;
  const F2Matrix gens = kernel * ech2.transform_inverse.column_range(r2, k - r2);

  return AbelianGroupPresentation::assemble(Coefficients::F2, 0, std::vector<Integer>(k - r2, Integer(2)), d_out,
                                            coords.to_int(), gens.to_int());
}

}  // namespace

// ---------------------------------------------------------------------------
// Induced maps and exactness

InducedMap induced_map(const AbelianGroupPresentation& source, const AbelianGroupPresentation& target,
                       const IntMatrix& chain_map) {
  if (chain_map.cols() != source.ambient_dimension() || chain_map.rows() != target.ambient_dimension())
    throw InputError("induced_map: chain map has wrong shape");
  InducedMap f{source, target, IntMatrix(target.num_generators(), source.num_generators())};
  for (std::size_t g = 0; g < source.num_generators(); ++g) {
    IntVector image = chain_map * source.generator(g);
    if (!target.is_cycle(image)) throw PreconditionError("induced_map: chain map does not preserve cycles");
    f.matrix.set_column(g, target.coordinates(image));
  }
  return f;
}

namespace {

// Relation lattice of a presented group as columns: d_i e_i for torsion.
IntMatrix relation_columns(const AbelianGroupPresentation& g) {
  IntMatrix r(g.num_generators(), g.torsion().size());
  for (std::size_t t = 0; t < g.torsion().size(); ++t) r(g.free_rank() + t, t) = g.torsion()[t];
  return r;
}

// Is every column of `vectors` in the lattice spanned by columns of `lattice`?
bool columns_in_lattice(const IntMatrix& vectors, const IntMatrix& lattice) {
  for (std::size_t j = 0; j < vectors.cols(); ++j)
    if (!solve_linear(lattice, vectors.column(j))) return false;
  return true;
}

// Generators of ker(f) inside the coordinate lattice of f.source, as columns.
IntMatrix kernel_of_induced(const InducedMap& f) {
  const std::size_t a = f.source.num_generators();
  const IntMatrix system = hstack(f.matrix, relation_columns(f.target));
  const IntMatrix k = kernel_basis(system);
  IntMatrix out = k.row_block(0, a);
  // Torsion relations of the source lie in the kernel; include them so the
  // lattice is the full preimage.
  return hstack(out, relation_columns(f.source));
}

}  // namespace

ExactnessReport verify_exact(const InducedMap& f, const InducedMap& g) {
  ExactnessReport rep;
  if (!f.target.same_isomorphism_type(g.source) ||
      f.target.ambient_dimension() != g.source.ambient_dimension()) {
    rep.diagnostics = "middle groups differ";
    return rep;
  }
  const IntMatrix rel = relation_columns(f.target);
  const IntMatrix image = hstack(f.matrix, rel);
  const IntMatrix kernel = kernel_of_induced(g);
  const bool im_in_ker = columns_in_lattice(f.matrix, kernel);
  const bool ker_in_im = columns_in_lattice(kernel, image);
  rep.exact = im_in_ker && ker_in_im;
  if (!im_in_ker) rep.diagnostics = "image not contained in kernel";
  else if (!ker_in_im) rep.diagnostics = "kernel not contained in image";
  else rep.diagnostics = "exact";
  return rep;
}

ExactnessReport verify_isomorphism(const InducedMap& f) {
  ExactnessReport rep;
  if (!f.source.same_isomorphism_type(f.target)) {
    rep.diagnostics = "groups not isomorphic: " + f.source.to_string() + " vs " + f.target.to_string();
    return rep;
  }
  // Injective: kernel lattice equals the source relations.
  const IntMatrix kernel = kernel_of_induced(f);
  const bool injective = columns_in_lattice(kernel, relation_columns(f.source));
  // Surjective: image plus relations spans everything.
  const IntMatrix image = hstack(f.matrix, relation_columns(f.target));
  const bool surjective = columns_in_lattice(IntMatrix::identity(f.target.num_generators()), image);
  rep.exact = injective && surjective;
  rep.diagnostics = rep.exact ? "isomorphism" : (!injective ? "not injective" : "not surjective");
  return rep;
}

}  // namespace hopf
