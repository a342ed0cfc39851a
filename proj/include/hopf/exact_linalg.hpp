// Exact integer and mod-2 linear algebra: dense matrices over Z, Smith
// normal form, integer linear solving, and homology presentations.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;

  IntMatrix transpose() const;
  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, const IntVector& v);

  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// Writes `block` with its top-left corner at (row, col).
  void paste(std::size_t row, std::size_t col, const IntMatrix& block);

  IntMatrix reduced_mod2() const;

  IntVector operator*(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Integer& c) const;
  bool operator==(const IntMatrix& other) const;

  // Elementary operations used by the reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

IntVector zero_vector(std::size_t n);
bool is_zero(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& v, const Integer& c);
IntVector reduce_mod2(const IntVector& v);
IntVector to_vector(std::initializer_list<long> values);

/// Result of a Smith normal form reduction: left * input * right = diagonal,
/// with the nonzero diagonal entries d_1 | d_2 | ... positive and leading.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix left_inverse;
  IntMatrix right_inverse;
  std::size_t rank = 0;

  /// The nonzero diagonal entries, in order.
  std::vector<Integer> invariant_factors() const;
};

/// Classical row/column reduction with minimal-absolute-value pivots.
/// Deterministic for a fixed input.
SmithForm smith_normal_form(const IntMatrix& m);

/// Returns an integer solution of m * x = b, or nullopt when none exists.
/// The solution has zero components in the SNF kernel coordinates.
std::optional<IntVector> solve_linear(const IntMatrix& m, const IntVector& b);

/// Columns form a basis of the integer kernel {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

enum class Coefficients { Integers, F2 };

/// A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_t (d_i | d_{i+1},
/// d_i > 1) realized as ker(d_out)/im(d_in), together with a coordinate map
/// on cycles and representative cycles for its generators.
///
/// Over F2 every generator is a Z/2 summand; free_rank() is then 0.
class AbelianGroupPresentation {
 public:
  AbelianGroupPresentation() = default;

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t num_generators() const { return free_rank_ + torsion_.size(); }
  std::size_t ambient_dimension() const { return ambient_; }
  Coefficients coefficients() const { return coefficients_; }
  bool is_trivial() const { return num_generators() == 0; }

  /// Order of generator g (0 for infinite order). Free generators come first.
  Integer order(std::size_t g) const;

  /// Coordinates of a cycle: free coordinates first, then torsion
  /// coordinates reduced into [0, d_i).
  IntVector coordinates(const IntVector& cycle) const;
  bool is_cycle(const IntVector& v) const;
  /// True iff the cycle represents zero.
  bool is_boundary(const IntVector& cycle) const;

  /// Representative cycle of generator g.
  IntVector generator(std::size_t g) const;

  /// Reduces an arbitrary coordinate vector into normal form.
  IntVector normalize(const IntVector& coords) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/4" style rendering (separator configurable).
  std::string to_string(const std::string& plus = " ⊕ ") const;

  bool same_isomorphism_type(const AbelianGroupPresentation& other) const;

  /// Low-level constructor used by homology_at and by derived quotients.
  /// `coordinate_map` has one row per generator (free first); `generators`
  /// one column per generator.
  static AbelianGroupPresentation assemble(Coefficients coefficients, std::size_t free_rank,
                                           std::vector<Integer> torsion, IntMatrix d_out,
                                           IntMatrix coordinate_map, IntMatrix generators);

 private:
  Coefficients coefficients_ = Coefficients::Integers;
  std::size_t ambient_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  IntMatrix d_out_;
  // Maps a cycle to its raw coordinates (one row per generator, free rows
  // first); rows of torsion generators are reduced modulo the order.
  IntMatrix coordinate_map_;
  IntMatrix generators_;  // ambient x num_generators
};

/// Presents ker(d_out) / im(d_in). Requires d_out * d_in = 0.
AbelianGroupPresentation homology_at(const IntMatrix& d_in, const IntMatrix& d_out,
                                     Coefficients coefficients = Coefficients::Integers);

/// Homomorphism between two presented groups, given on generators.
struct InducedMap {
  AbelianGroupPresentation source;
  AbelianGroupPresentation target;
  IntMatrix matrix;  // target.num_generators() x source.num_generators()
};

/// Pushes each generator of `source` through the chain-level matrix and
/// records its coordinates in `target`.
InducedMap induced_map(const AbelianGroupPresentation& source, const AbelianGroupPresentation& target,
                       const IntMatrix& chain_map);

struct ExactnessReport {
  bool exact = false;
  std::string diagnostics;
};

/// Decides im(f) = ker(g) in the middle group, where f: A -> B, g: B -> C.
ExactnessReport verify_exact(const InducedMap& f, const InducedMap& g);

/// Decides whether an induced map is an isomorphism.
ExactnessReport verify_isomorphism(const InducedMap& f);

}  // namespace hopf
