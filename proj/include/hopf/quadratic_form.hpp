// (+-1)-quadratic forms over Z and F2 and their Witt invariants: signature,
// Arf invariant and the simply connected surgery obstruction groups L_n(Z).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/exact_linalg.hpp"

namespace hopf {

/// An element of Q_eps(R) = R / {x - eps x}: Z when eps = +1 over Z, and
/// Z/2 otherwise (eps = -1 over Z, or any eps over F2).
class QValue {
 public:
  QValue() = default;
  QValue(Coefficients ring, int epsilon, Integer value);

  Coefficients ring() const { return ring_; }
  int epsilon() const { return epsilon_; }
  bool is_mod2() const { return ring_ == Coefficients::F2 || epsilon_ == -1; }
  const Integer& value() const { return value_; }

  QValue operator+(const QValue& o) const;
  QValue operator-(const QValue& o) const;
  QValue operator-() const;
  bool operator==(const QValue& o) const;
  /// "3 in Z" or "1 in Z/2".
  std::string to_string() const;

 private:
  void check_compatible(const QValue& o) const;

  Coefficients ring_ = Coefficients::Integers;
  int epsilon_ = 1;
  Integer value_;
};

class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Validates lambda = eps lambda^T and, when mu is given, the diagonal
  /// relation lambda(e_i, e_i) = (1 + eps) mu(e_i). Over F2 entries are
  /// reduced mod 2. Nonsingularity is not required here; the Witt invariants
  /// check it.
  QuadraticForm(Coefficients ring, int epsilon, IntMatrix lambda, std::optional<std::vector<Integer>> mu);

  static QuadraticForm hyperbolic(Coefficients ring, int epsilon);
  /// The E8 lattice (positive definite, even, unimodular).
  static QuadraticForm e8();
  /// The F2 form lambda = [[0,1],[1,0]], mu = (1,1), of Arf invariant 1.
  static QuadraticForm arf_one();

  Coefficients ring() const { return ring_; }
  int epsilon() const { return epsilon_; }
  const IntMatrix& lambda() const { return lambda_; }
  bool has_mu() const { return mu_.has_value(); }
  const std::vector<Integer>& mu() const;
  std::size_t rank() const { return lambda_.rows(); }

  Integer lambda_of(const IntVector& x, const IntVector& y) const;
  /// mu(sum x_i e_i) = sum x_i^2 mu_i + sum_{i<j} x_i x_j lambda_ij.
  QValue mu_of(const IntVector& x) const;

  bool is_nonsingular() const;
  /// Every lambda(x, x) even.
  bool is_even() const;

  QuadraticForm orthogonal_sum(const QuadraticForm& o) const;
  QuadraticForm negated() const;
  /// The form in the basis given by the columns of p.
  QuadraticForm base_change(const IntMatrix& p) const;
  QuadraticForm reduced_mod2() const;

  std::string to_string() const;

 private:
  Coefficients ring_ = Coefficients::Integers;
  int epsilon_ = 1;
  IntMatrix lambda_;
  std::optional<std::vector<Integer>> mu_;
};

/// Signature of a symmetric integer matrix by exact rational diagonalization.
long signature(const IntMatrix& symmetric);
/// Signature of a nonsingular symmetric form over Z.
long signature(const QuadraticForm& form);

/// Arf invariant of a nonsingular (-1)-quadratic form over F2 (Z-forms are
/// reduced mod 2): 1 iff mu takes the value 1 on a strict majority of
/// vectors. For rank <= 6 the count is cross-checked by symplectic reduction.
int arf(const QuadraticForm& form);
/// Arf invariant by reduction to a symplectic basis: sum mu(a_i) mu(b_i).
int arf_symplectic(const QuadraticForm& form);

/// "Z", "0", "Z/2", "0" for n = 0, 1, 2, 3 mod 4.
std::string l_group(int n);

struct LClass {
  int n = 0;
  std::string group;
  Integer value;
  /// "1 ∈ L_0(Z) = Z", indexed by n mod 4.
  std::string to_string() const;
};

/// sigma/8 for n = 0 mod 4 (even forms), Arf for n = 2 mod 4, 0 for odd n.
LClass surgery_obstruction(const QuadraticForm& form, int n);

}  // namespace hopf
