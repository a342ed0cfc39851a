// Coefficient rings with involution: Z, F2 and integral group rings Z[pi]
// of finite groups with an orientation character.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopf/exact_linalg.hpp"

namespace hopf {

/// A finite group given by its multiplication table, with an orientation
/// character w: pi -> {+1, -1}.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates associativity, identity, inverses and that w is a homomorphism.
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table, int identity,
              std::vector<int> w);

  static FiniteGroup trivial();
  /// Z/n = {1, t, ..., t^{n-1}} with trivial orientation character.
  static FiniteGroup cyclic(int n);
  /// Z/n with w(t) = -1 (n even).
  static FiniteGroup cyclic_nonorientable(int n);

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  int w(int a) const { return w_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<int>& orientation() const { return w_; }

  bool operator==(const FiniteGroup& other) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> w_;
  std::vector<int> inverse_;
};

/// Element of Z[pi], stored as one integer coefficient per group element.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(std::shared_ptr<const FiniteGroup> group);
  static GroupRingElement basis(std::shared_ptr<const FiniteGroup> group, int g, const Integer& coeff = 1);

  const FiniteGroup& group() const { return *group_; }
  const IntVector& coefficients() const { return coeffs_; }
  const Integer& operator[](int g) const { return coeffs_[g]; }
  Integer& operator[](int g) { return coeffs_[g]; }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement scaled(const Integer& c) const;
  /// The involution sum a_g g -> sum a_g w(g) g^{-1}.
  GroupRingElement conjugate() const;
  bool is_zero() const { return hopf::is_zero(coeffs_); }
  bool operator==(const GroupRingElement& o) const { return coeffs_ == o.coeffs_; }

  /// "2*e - t^2" style rendering using group element labels.
  std::string to_string() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  IntVector coeffs_;
};

/// The ring over which a chain complex is defined.
class RingSpec {
 public:
  enum class Kind { Integers, F2, GroupRing };

  static RingSpec integers() { return RingSpec(Kind::Integers); }
  static RingSpec f2() { return RingSpec(Kind::F2); }
  static RingSpec group_ring(FiniteGroup group);

  Kind kind() const { return kind_; }
  bool is_group_ring() const { return kind_ == Kind::GroupRing; }
  const FiniteGroup& group() const;
  const std::shared_ptr<const FiniteGroup>& group_ptr() const;
  /// Z-rank of a free module of rank one.
  std::size_t multiplier() const { return is_group_ring() ? group_->order() : 1; }
  /// Coefficients used by homology and Q-group computations.
  Coefficients coefficients() const { return kind_ == Kind::F2 ? Coefficients::F2 : Coefficients::Integers; }
  std::string name() const;

  bool operator==(const RingSpec& other) const;

 private:
  explicit RingSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::shared_ptr<const FiniteGroup> group_;
};

/// Z-matrix of the left-module map with A-matrix entries a[i][j], where
/// d(e_j) = sum_i a[i][j] e_i. Row/column index i*|pi| + g stands for g.e_i.
IntMatrix regular_representation(const RingSpec& ring, const std::vector<std::vector<GroupRingElement>>& a,
                                  std::size_t rows, std::size_t cols);

/// Inverse of regular_representation; throws PreconditionError when the
/// Z-matrix does not commute with the left pi-action.
std::vector<std::vector<GroupRingElement>> ring_entries(const RingSpec& ring, const IntMatrix& m);

/// Matrix of the dual map: conjugate transpose of the A-entries, as a Z-matrix.
IntMatrix dual_matrix(const RingSpec& ring, const IntMatrix& m);

}  // namespace hopf
