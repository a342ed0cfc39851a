// Q-groups of a chain complex C over a ring with involution.
//
// With M = C (x)_A C and T the signed transposition, an element of
// Hom_{Z[Z/2]}(W[i,j], M) of degree n is a family phi_s in M_{n+s}
// (i <= s <= j) and an element of W[i,j] (x)_{Z[Z/2]} M of degree n is a
// family psi_s in M_{n-s}. The total differentials are
//
//   (d phi)_s = d_M phi_s + (-1)^{n+s-1} (phi_{s-1} + (-1)^s T phi_{s-1})
//   (d psi)_s = d_M psi_s + (-1)^{n-s-1} (psi_{s+1} + (-1)^{s+1} T psi_{s+1})
//
// Both conventions are fixed in coupling_sign() below and nowhere else.
// Infinite range ends are clipped to the support of M, which loses nothing
// because M is bounded.
#pragma once

#include <climits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopf/chain_complex.hpp"

namespace hopf {

/// Sentinels for unbounded ranges.
inline constexpr int kMinusInfinity = INT_MIN / 4;
inline constexpr int kPlusInfinity = INT_MAX / 4;
bool is_infinite(int bound);
std::string bound_to_string(int bound);

enum class QKind { Symmetric, Quadratic };

/// W[i,j] over Z[Z/2] with d_r = 1 + (-1)^r T.
ChainComplex build_W(int i, int j);

/// The total complex computing Q^*_{[i,j]}(C) or Q_*^{[i,j]}(C).
class QComplex {
 public:
  QComplex(std::shared_ptr<const TensorSquare> square, QKind kind, int i, int j);
  QComplex(const ChainComplex& c, QKind kind, int i, int j);

  QKind kind() const { return kind_; }
  int range_lo() const { return i_; }
  int range_hi() const { return j_; }
  const TensorSquare& square() const { return *square_; }
  const std::shared_ptr<const TensorSquare>& square_ptr() const { return square_; }
  const ChainComplex& base() const { return square_->left(); }
  Coefficients coefficients() const { return square_->complex().ring().coefficients(); }

  /// Degree in M of component s at total degree n.
  int module_degree(int n, int s) const { return kind_ == QKind::Symmetric ? n + s : n - s; }
  /// Components s in [i,j] whose module is nonzero at total degree n.
  std::vector<int> components(int n) const;
  std::size_t dimension(int n) const;
  std::size_t offset(int n, int s) const;

  /// Sign and T-coefficient coupling component `from` of degree n into
  /// component `to` of degree n - 1: the block is sign * (1 + eps T).
  struct Coupling {
    int from;
    int sign;
    int eps;
  };
  Coupling coupling(int n, int to) const;

  IntMatrix differential(int n) const;  // degree n -> n - 1
  /// Applies the differential componentwise without assembling the matrix.
  std::map<int, IntVector> apply_differential(int n, const std::map<int, IntVector>& x) const;

  IntVector pack(int n, const std::map<int, IntVector>& components) const;
  std::map<int, IntVector> unpack(int n, const IntVector& v) const;

  AbelianGroupPresentation homology(int n) const;
  /// Clipped s-range actually used around degree n, as "[a,b]".
  std::string effective_range(int n) const;

 private:
  std::shared_ptr<const TensorSquare> square_;
  QKind kind_;
  int i_;
  int j_;
};

/// An element of a Q-complex (a representative of a Q-group element when it
/// is a cycle). Components absent from the map are zero.
struct QClass {
  std::shared_ptr<const QComplex> complex;
  int n = 0;
  std::map<int, IntVector> components;

  QKind kind() const { return complex->kind(); }
  const IntVector& component(int s) const;
  /// The closure relation: the total differential vanishes.
  bool is_cycle() const;
  /// Throws PreconditionError unless is_cycle().
  void verify() const;
  IntVector packed() const { return complex->pack(n, components); }
};
using SymmetricClass = QClass;
using QuadraticClass = QClass;

/// A computed Q-group with representative cycles for its generators.
struct QGroup {
  std::shared_ptr<const QComplex> complex;
  int n = 0;
  AbelianGroupPresentation group;
  std::vector<QClass> generators;
  std::string effective_range;
};

QGroup symmetric_Q(const ChainComplex& c, int n, int i, int j);
QGroup quadratic_Q(const ChainComplex& c, int n, int i, int j);
/// Q^n_{[-k,k-1]}(C); k = kPlusInfinity gives the full hyperquadratic group.
QGroup hyperquadratic_Q(const ChainComplex& c, int n, int k);
QGroup compute_Q(std::shared_ptr<const QComplex> complex, int n);

/// Coordinates of a cycle in a computed group.
IntVector class_coordinates(const QGroup& group, const QClass& x);

// Structure maps on representatives.

/// (1+T): quadratic [0, k-1] -> symmetric on `target` (range starting at 0).
QClass symmetrization(const QClass& psi, std::shared_ptr<const QComplex> target);
/// J: symmetric [0, ...] -> [i, j] with i < 0, extending by zero.
QClass J_map(const QClass& phi, std::shared_ptr<const QComplex> target);
/// H: symmetric (hyperquadratic) degree n -> quadratic degree n - 1,
/// psi_s = phi_{-1-s}.
QClass H_map(const QClass& phi, std::shared_ptr<const QComplex> target);
/// S: Q^n_{[i,j]}(C) -> Q^{n+1}_{[i+1,j+1]}(SC), (S phi)_{s+1} = sigma(phi_s)
/// with sigma(x (x) y) = (-1)^{|x|} x (x) y.
QClass S_map(const QClass& phi, std::shared_ptr<const QComplex> target);

/// Matrices of the structure maps between total complexes, for induced maps.
IntMatrix symmetrization_matrix(const QComplex& source, int n, const QComplex& target);
IntMatrix J_matrix(const QComplex& source, int n, const QComplex& target);
IntMatrix H_matrix(const QComplex& source, int n, const QComplex& target);
IntMatrix S_matrix(const QComplex& source, int n, const QComplex& target);
/// Restriction/inclusion along nested ranges: keeps common components.
IntMatrix restriction_matrix(const QComplex& source, int n, const QComplex& target, int target_n);
/// Connecting map of the short exact sequence of W's: the boundary of the
/// zero-extension into `ambient`, read off in `target` at degree n - 1.
IntMatrix connecting_matrix(const QComplex& source, int n, const QComplex& ambient, const QComplex& target);

/// Exactness of a three-term piece A -f-> B -g-> C at B.
struct SequenceCheck {
  std::string label;
  bool exact = false;
  std::string diagnostics;
};
SequenceCheck verify_exact_sequence(const std::string& label, const InducedMap& f, const InducedMap& g);

/// Exactness of the sequences of W-truncations (symmetric and quadratic)
/// around degree n, for ranges i <= j <= k.
std::vector<SequenceCheck> check_range_sequences(const ChainComplex& c, int n, int i, int j, int k);
/// Exactness of Q_n -> Q^n -> Q^n-hat -> Q_{n-1} at its three middle terms.
std::vector<SequenceCheck> check_symmetric_quadratic_sequence(const ChainComplex& c, int n);
/// S: Q^n-hat(C) -> Q^{n+1}-hat(SC) is an isomorphism.
SequenceCheck check_hyperquadratic_suspension(const ChainComplex& c, int n);

}  // namespace hopf
