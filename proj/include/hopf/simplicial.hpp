// Finite ordered simplicial complexes and the chain-level symmetric
// construction on their simplicial chains.
//
// A simplex is a strictly increasing list of vertex indices; all sign
// conventions depend on this order. The symmetric construction is built
// from universal elements u_{s,k} in C(D^k) (x) C(D^k) (D^k the standard
// k-simplex): phi_s(sigma) = sigma_* u_{s, dim sigma}. The u_{0,k} are the
// Alexander-Whitney diagonal and u_{s,k} for s >= 1 are found by exact
// linear solving (acyclic models), so the relation
//
//   d phi_s = (-1)^s (phi_s d + phi_{s-1} + (-1)^s T phi_{s-1})
//
// holds identically. Every structure re-verifies it on construction.
#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/chain_complex.hpp"
#include "hopf/qgroups.hpp"

namespace hopf {

using Simplex = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets are vertex-index lists in any order. The optional orientation
  /// gives one sign per facet, relative to the order in which the facet was
  /// listed.
  SimplicialComplex(std::vector<std::string> labels, std::vector<std::vector<int>> facets,
                    std::optional<std::vector<int>> orientation = std::nullopt);

  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  const std::optional<std::vector<int>>& orientation() const { return orientation_; }
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

  std::size_t count(int d) const;
  const std::vector<Simplex>& simplices(int d) const;
  const Simplex& simplex(int d, std::size_t index) const { return simplices_.at(d).at(index); }
  std::optional<std::size_t> find(const Simplex& s) const;
  /// Index of `s` among simplices of its dimension; throws InputError if absent.
  std::size_t index_of(const Simplex& s) const;
  /// Index of the i-th face (vertex i deleted) of simplex `index` of dimension d.
  std::size_t face(int d, std::size_t index, int i) const { return faces_[d][index][i]; }

  /// Boundary matrix from dimension d to d - 1.
  IntMatrix boundary(int d) const;
  ChainComplex chain_complex(Coefficients coefficients = Coefficients::Integers) const;

  /// The fundamental cycle in the top dimension. Over Z the orientation is
  /// required; over F2 it is the sum of all facets. Throws PreconditionError
  /// if the result is not a cycle.
  IntVector fundamental_cycle(Coefficients coefficients) const;

  long euler_characteristic() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> facets_;
  std::optional<std::vector<int>> orientation_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
};

/// A basis element a (x) b of C(K) (x) C(K), with a in dimension p.
struct TensorKey {
  int p;
  std::size_t a;
  int q;
  std::size_t b;
  auto operator<=>(const TensorKey&) const = default;
};
using SparseTensor = std::map<TensorKey, long>;
/// A chain of K in one dimension: simplex index -> coefficient.
using SparseChain = std::map<std::size_t, long>;

/// d(a (x) b) = a (x) db + (-1)^q da (x) b.
SparseTensor tensor_boundary(const SimplicialComplex& k, const SparseTensor& x);
/// T(a (x) b) = (-1)^{pq} b (x) a.
SparseTensor tensor_transpose(const SparseTensor& x);

class IsovariantStructure {
 public:
  /// phi_0, ..., phi_{order-1} on every simplex; throws PreconditionError if
  /// the relation fails anywhere (it cannot for a correct build).
  IsovariantStructure(const SimplicialComplex& k, int order);

  int order() const { return order_; }
  const SimplicialComplex& complex() const { return *k_; }

  const SparseTensor& phi(int s, int d, std::size_t index) const;
  /// phi_s applied to a chain of dimension d.
  SparseTensor evaluate(int s, int d, const SparseChain& chain) const;
  /// The relation residual on one simplex; zero everywhere for a valid structure.
  SparseTensor residual(int s, int d, std::size_t index) const;
  bool verify() const;

  /// Dense matrix of phi_s: C_d -> (C (x) C)_{d+s} in the basis of `square`,
  /// which must be the tensor square of complex().chain_complex(...).
  IntMatrix matrix(int s, int d, const TensorSquare& square) const;

 private:
  std::shared_ptr<const SimplicialComplex> k_;
  int order_;
  std::vector<std::vector<std::vector<SparseTensor>>> phi_;  // [s][d][index]
};

IsovariantStructure symmetric_construction(const SimplicialComplex& k, int order);

/// Universal element u_{s,k}: terms (coefficient, vertex mask of a, vertex
/// mask of b) in C(D^k) (x) C(D^k). Cached; safe to call concurrently.
struct UniversalTerm {
  long coefficient;
  unsigned a;
  unsigned b;
};
const std::vector<UniversalTerm>& universal_element(int s, int k);

// Cochains are dense vectors indexed by the simplices of one dimension.
using Cochain = IntVector;

Cochain coboundary(const SimplicialComplex& k, int r, const Cochain& c);
bool is_cocycle(const SimplicialComplex& k, int r, const Cochain& c, Coefficients coefficients);
Integer evaluate(const Cochain& c, const IntVector& chain);
/// Unit 0-cocycle.
Cochain unit_cocycle(const SimplicialComplex& k);

/// (x u y)(sigma) = <x (x) y, phi_0(sigma)>.
Cochain cup_product(const IsovariantStructure& phi, int p, const Cochain& x, int q, const Cochain& y,
                    Coefficients coefficients);
/// Sq^i x (y) = <x (x) x, phi_{r-i}(y)> mod 2; zero for i > r.
Cochain steenrod_square(const IsovariantStructure& phi, int i, int r, const Cochain& x);
Cochain steenrod_square(const SimplicialComplex& k, int i, int r, const Cochain& x);

/// Representative cocycles of a basis of H^r (generators in SNF order).
std::vector<Cochain> cohomology_basis(const SimplicialComplex& k, int r, Coefficients coefficients);
/// True iff x - y is a coboundary.
bool cohomologous(const SimplicialComplex& k, int r, const Cochain& x, const Cochain& y, Coefficients coefficients);

/// The symmetric Poincare structure of a fundamental cycle.
struct SymmetricPoincare {
  ChainComplex chains;
  std::shared_ptr<const TensorSquare> square;
  std::shared_ptr<const QComplex> qcomplex;  // symmetric, range [0, order - 1]
  QClass phi;                                // phi_s = (-1)^{ns} phi(X)_s([X])
  ChainMap duality;                          // phi_0 cap [X]: C^{n-*} -> C
  bool duality_is_quasi_isomorphism() const { return is_quasi_isomorphism(duality); }
};
SymmetricPoincare symmetric_poincare(const SimplicialComplex& k, const IntVector& fundamental_cycle, int n,
                                     Coefficients coefficients, int order = 1);

long euler_characteristic(const SimplicialComplex& k);
/// Sum of dim H_i(K; F2) for 0 <= i <= (m-1)/2, mod 2; m odd and dim K = m.
int semicharacteristic(const SimplicialComplex& k, int m);

}  // namespace hopf
