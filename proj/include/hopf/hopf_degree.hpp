// Degree calculus of Z/2-equivariant maps of representation spheres and
// the numerical identities of the Hopf invariant.
#pragma once

#include <string>

#include "hopf/exact_linalg.hpp"
#include "hopf/quadratic_form.hpp"
#include "hopf/simplicial.hpp"

namespace hopf {

/// (semidegree a, fixed-point degree b); the total degree is 2a + b.
struct BiDegree {
  Integer a;
  Integer b;
  bool operator==(const BiDegree&) const = default;
  std::string to_string() const;
};

/// ((deg F - deg G) / 2, deg G); PreconditionError unless deg F = deg G mod 2.
BiDegree bidegree_of(const Integer& degree_f, const Integer& degree_g);
/// Total and fixed degrees multiply.
BiDegree bidegree_compose(const BiDegree& p, const BiDegree& q);
/// F on LV (odd degree, fixed degree 1) smashed with G: ((deg F - 1)/2 deg G, deg G).
BiDegree bidegree_smash(const BiDegree& f, const Integer& degree_g);
/// The underlying degree 2a + b.
Integer bidegree_forget(const BiDegree& p);

/// h(d) = d(d-1)/2.
Integer hopf_of_degree(const Integer& d);

/// chi/2 in Z for even m; PreconditionError for odd chi.
QValue curvatura_integra_even(int m, const Integer& chi);
/// chi_{1/2} - Hopf in Z/2 for odd m. A nonzero Hopf term needs m in {1, 3, 7}.
QValue curvatura_integra_odd(int m, const Integer& semicharacteristic, const Integer& hopf);

struct KunnethMu {
  bool duality = false;  // the mod-2 intersection pairing is nonsingular
  int mu = 0;
  int semicharacteristic = 0;
  bool passed() const { return duality && mu == semicharacteristic; }
  std::string detail;
};
/// mu on the Kunneth diagonal class sum_j b_j (x) b_j^* of N x N, computed as
/// sum_{j<j'} lambda(b_j, b_j') lambda(b_j^*, b_j'^*) over a basis of
/// H^*(N; F2) and its Poincare dual basis, compared with chi_{1/2}(N).
KunnethMu kunneth_mu(const SimplicialComplex& k, int n);
bool kunneth_mu_check(const SimplicialComplex& k, int n);

}  // namespace hopf
