// Standard triangulations and simplicial constructions used by the tests,
// the acceptance suite and the CLI.
#pragma once

#include "hopf/simplicial.hpp"

namespace hopf::triangulations {

SimplicialComplex point();
/// The standard n-simplex.
SimplicialComplex simplex(int n);
/// Boundary of the (n+1)-simplex, oriented.
SimplicialComplex sphere(int n);
/// The 7-vertex torus, oriented.
SimplicialComplex torus7();
/// The 6-vertex projective plane.
SimplicialComplex rp2();
/// RP^n as the antipodal quotient of the barycentric subdivision of the
/// boundary of the (n+1)-dimensional cross-polytope. Vertices are sign
/// vectors up to sign; the label lists the representative whose first
/// nonzero entry is positive, e.g. "+0-".
SimplicialComplex projective_space(int n);

/// The generator of H^1(RP^n; F2): the cocycle of the double cover.
Cochain projective_generator(const SimplicialComplex& rp);
/// Mod-2 fundamental cycle of the RP^q sitting on the first q+1 coordinates.
IntVector projective_cycle(const SimplicialComplex& rp, int q);

/// Staircase triangulation of K x L; vertex (v, w) has index v * |L| + w.
SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l);
/// Pullbacks of cochains along the two projections of product(k, l).
Cochain pullback_first(const SimplicialComplex& product, const SimplicialComplex& k, const SimplicialComplex& l,
                       int r, const Cochain& c);
Cochain pullback_second(const SimplicialComplex& product, const SimplicialComplex& k, const SimplicialComplex& l,
                        int r, const Cochain& c);

/// Unreduced suspension with apexes appended after the vertices of K
/// (first the north apex, then the south apex).
SimplicialComplex suspension(const SimplicialComplex& k);
/// c on K to the cochain on SK with value c(t) on [t, north], zero elsewhere.
Cochain suspend_cochain(const SimplicialComplex& k, const SimplicialComplex& sk, int r, const Cochain& c);
/// The suspension [z, north] - [z, south] of a chain of K.
IntVector suspend_chain(const SimplicialComplex& k, const SimplicialComplex& sk, int r, const IntVector& z);

SimplicialComplex disjoint_union(const SimplicialComplex& k, const SimplicialComplex& l);

/// Restriction of a cochain on K to the subcomplex L (matched by labels).
Cochain restrict_cochain(const SimplicialComplex& k, const SimplicialComplex& l, int r, const Cochain& c);

}  // namespace hopf::triangulations
