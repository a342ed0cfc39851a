// Bounded free chain complexes and their elementary constructions.
//
// A complex over a group ring Z[pi] is stored through its regular
// representation: module rank r in some degree becomes Z-rank r*|pi|, and
// the basis vector with index i*|pi| + g stands for g.e_i.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopf/exact_linalg.hpp"
#include "hopf/ring.hpp"

namespace hopf {

class ChainComplex {
 public:
  ChainComplex() : ring_(RingSpec::integers()) {}
  /// `ranks[k]` is the module rank in degree lo + k; `d[k]` is the Z-matrix of
  /// the differential from degree lo + k + 1 to lo + k. Validates shapes,
  /// equivariance and d^2 = 0.
  ChainComplex(RingSpec ring, int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> d);

  static ChainComplex zero(RingSpec ring = RingSpec::integers());
  /// The ring itself (rank one) placed in degree m.
  static ChainComplex sphere(int m, RingSpec ring = RingSpec::integers());

  const RingSpec& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool is_empty() const { return hi_ < lo_; }

  std::size_t rank(int r) const;
  std::size_t zrank(int r) const { return rank(r) * ring_.multiplier(); }
  /// Differential from degree r to r - 1 (a zero matrix outside the support).
  IntMatrix d(int r) const;

  AbelianGroupPresentation homology(int r) const;
  bool is_acyclic() const;

  /// "ranks [..] in degrees lo..hi" summary.
  std::string describe() const;

 private:
  RingSpec ring_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> d_;
};

/// Degree-preserving chain map (f_r: C_r -> D_r for each r).
class ChainMap {
 public:
  ChainMap() = default;
  /// Verifies d f = f d; throws PreconditionError otherwise.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap scalar(const ChainComplex& c, long k);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  /// Component in degree r (zero where unspecified).
  IntMatrix at(int r) const;

  ChainMap compose_after(const ChainMap& first) const;  // this o first

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, IntMatrix> f_;
};

/// h_r: C_r -> D_{r+1} with f - g = d h + h d.
struct ChainHomotopy {
  std::map<int, IntMatrix> h;
  /// True iff the identity holds in every degree.
  bool verify(const ChainMap& f, const ChainMap& g) const;
};

ChainComplex dual(const ChainComplex& c, int n);
ChainComplex suspension(const ChainComplex& c, int times = 1);

/// C(f) with d = (d_D, (-1)^r f; 0, d_C), plus g = (1; 0): D -> C(f) and
/// h = (0 1): C(f) -> SC.
struct MappingCone {
  ChainComplex complex;
  ChainMap g;
  ChainMap h;
};
MappingCone cone(const ChainMap& f);

/// C (x)_A D as a complex of abelian groups (over F2 when both are F2).
/// Basis order: (p, i, j[, g]) lexicographic, where the element is
/// e_i (x) g.f_j with e_i in C_p and f_j in D_q.
class TensorProduct {
 public:
  TensorProduct(const ChainComplex& left, const ChainComplex& right);

  const ChainComplex& complex() const { return complex_; }
  const ChainComplex& left() const { return left_; }
  const ChainComplex& right() const { return right_; }

  struct Basis {
    int p;
    std::size_t i;
    int q;
    std::size_t j;
    int g;  // group element (identity index for Z and F2)
  };
  std::size_t index(int p, std::size_t i, int q, std::size_t j, int g = 0) const;
  Basis element(int degree, std::size_t index) const;
  /// Offset of the (p, degree - p) block inside degree `degree`.
  std::size_t block_offset(int degree, int p) const;

 private:
  ChainComplex left_;
  ChainComplex right_;
  ChainComplex complex_;
  std::size_t group_order_ = 1;
};

/// C (x)_A C with the signed transposition T(x (x) y) = (-1)^{pq} y (x) x.
class TensorSquare : public TensorProduct {
 public:
  explicit TensorSquare(const ChainComplex& c);
  /// T on degree r.
  const IntMatrix& transposition(int r) const;

 private:
  std::map<int, IntMatrix> t_;
  IntMatrix empty_;
};

TensorProduct tensor(const ChainComplex& c, const ChainComplex& d);
TensorSquare tensor_square_with_involution(const ChainComplex& c);

/// True iff f induces isomorphisms in homology, decided by acyclicity of the
/// cone. Only over Z and F2.
bool is_quasi_isomorphism(const ChainMap& f);

}  // namespace hopf
