// The chain-level quadratic construction.
//
// A refinement problem compares two symmetric structures along a chain map
// f: C -> D. Its obstruction theta = (f (x) f) phi_C(x) - phi_D(f x) is a
// symmetric class in Q^n_{[0,j]}(D), and a quadratic refinement psi in
// Q_n^{[0,k-1]}(D) with (1 + T) psi ~ theta exists iff theta dies after k
// suspensions. Since S^k identifies Hom(W[-k,j], D (x) D) with
// Hom(W[0,j+k], S^kD (x) S^kD), the null-homotopy is solved in the
// desuspended total complex: find delta of degree n + 1 over [-k, j] with
// d delta = theta (theta extended by zero). Then
//
//   psi_t = (-1)^n delta_{-1-t}      (0 <= t <= k - 1)
//
// is a quadratic cycle and (1 + T) psi - theta = -d(delta restricted to [0, j]).
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/chain_complex.hpp"
#include "hopf/qgroups.hpp"
#include "hopf/quadratic_form.hpp"

namespace hopf {

class IsovariantStructure;

/// A chain map C -> Hom_{Z[Z/2]}(W[0, order - 1], C (x) C): matrices
/// phi_s: C_r -> (C (x) C)_{r+s}, such that x -> {phi_s x} commutes with the
/// differentials of C and of the symmetric Q-complex.
class SymmetricStructure {
 public:
  SymmetricStructure() = default;
  /// A chain map C -> W%C of degree `degree`: component (s, r) sends C_r to
  /// (C (x) C)_{r + degree + s}. Throws PreconditionError if
  /// d phi = (-1)^degree phi d fails.
  SymmetricStructure(ChainComplex c, int order, std::map<std::pair<int, int>, IntMatrix> components, int degree = 0);

  /// phi_0(e_i) = e_i (x) e_i on a complex concentrated in degree m (so degree m).
  static SymmetricStructure diagonal(const ChainComplex& c, int order = 1);
  /// The simplicial symmetric construction, with phi_s on C_r rescaled by (-1)^{rs}.
  static SymmetricStructure from_isovariant(const IsovariantStructure& phi, Coefficients coefficients);

  const ChainComplex& complex() const { return c_; }
  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::shared_ptr<const QComplex>& qcomplex() const { return q_; }
  IntMatrix component(int s, int r) const;

  /// phi(x) as an element of Q^{r + degree}_{[0, order-1]}(C) for x in C_r.
  QClass apply(int r, const IntVector& x) const;

 private:
  ChainComplex c_;
  int order_ = 0;
  int degree_ = 0;
  std::shared_ptr<const QComplex> q_;
  std::map<std::pair<int, int>, IntMatrix> phi_;
};

struct RefinementProblem {
  ChainMap f;
  SymmetricStructure phi_c;
  SymmetricStructure phi_d;
  int n = 0;        // degree of theta
  IntVector cycle;  // in C_{n - structure degree}
  int k = 1;

  /// Checks that the pieces fit together; throws InputError or PreconditionError.
  void verify() const;
};

/// theta_s = (f (x) f) phi_{C,s}(x) - phi_{D,s}(f x), on the symmetric
/// Q-complex of D with range [0, min(order) - 1].
SymmetricClass obstruction_theta(const RefinementProblem& problem);

/// (f (x) f) on (C (x) C)_q -> (D (x) D)_q, over Z or F2.
IntMatrix tensor_square_map(const ChainMap& f, const TensorSquare& source, const TensorSquare& target, int q);

struct NullHomotopyCertificate {
  SymmetricClass theta;
  int k = 0;
  /// Degree n + 1 chain on the symmetric complex of D over [-k, j].
  QClass delta;

  /// d delta equals theta extended by zero.
  bool verify() const;
};

/// Solves d delta = theta in the total complex over [-k, j]. Nonexistence is
/// returned as nullopt.
std::optional<NullHomotopyCertificate> solve_null_homotopy(const SymmetricClass& theta, int k);

/// psi_t = (-1)^n delta_{-1-t}. Verifies that psi is a quadratic cycle and
/// that (1 + T) psi - theta is a boundary; throws PreconditionError otherwise.
QuadraticClass quadratic_from_certificate(const NullHomotopyCertificate& cert);

/// True iff theta maps to zero in the hyperquadratic group, i.e. iff some
/// refinement exists. Requires theta over [0, infinity).
bool hyperquadratic_image_vanishes(const SymmetricClass& theta);

struct RefinementResult {
  std::optional<NullHomotopyCertificate> certificate;
  std::optional<QuadraticClass> psi;
  int k = 0;  // minimal k that succeeded, or the bound tried
  bool hyperquadratic_obstruction = false;
  /// "refined at k = 1" or "obstructed (hyperquadratic class nonzero)".
  std::string status() const;
};

/// Tries k = 1, 2, ..., kmax and reports the minimal k that succeeds.
/// kmax <= 0 selects the default n + 2.
RefinementResult refine(const SymmetricClass& theta, int kmax = 0);
RefinementResult refine(const RefinementProblem& problem, int kmax = 0);

/// The slant map C^{n-*} -> C of an n-cycle in C (x) C: a term a (x) b with
/// b in C_r contributes [b, a] to the component in degree r.
ChainMap slant_map(const TensorSquare& square, int n, const IntVector& element);

/// The ultraquadratic pairing psi_0 \ -: C^{n-*} -> C of a class with range [0, 0].
ChainMap ultraquadratic_pairing(const QuadraticClass& psi);
/// The slant map of (1 + T) psi_0: the symmetrized pairing.
ChainMap symmetrized_pairing(const QuadraticClass& psi);

struct SpectralResult {
  MappingCone cone;
  SymmetricClass theta;  // on D
  SymmetricClass pushed; // (g (x) g) theta on the cone
  RefinementResult refinement;
};
/// The refinement problem of f solved on the mapping cone of f: theta is
/// pushed along g: D -> C(f) and refined there.
SpectralResult spectral_quadratic(const RefinementProblem& problem, int kmax = 0);

struct KernelForm {
  QuadraticForm form;
  std::vector<IntVector> basis;  // cocycles in C^m
  bool torsion_discarded = false;
};
/// lambda(x, y) = <x (x) y, (1 + T) psi_0>, mu(x) = <x (x) x, psi_0> in
/// Q_{(-1)^m}, on a basis of H^m(C) (modulo torsion over Z). Checks the
/// three quadratic form axioms on the basis and pairs of basis vectors.
KernelForm kernel_form(const QuadraticClass& psi, int m);

}  // namespace hopf
