#include <random>

#include "doctest.h"
#include "hopf/quadratic.hpp"
#include "hopf/random_complex.hpp"
#include "hopf/simplicial.hpp"
#include "hopf/triangulations.hpp"

using namespace hopf;

namespace {

ChainComplex point_complex(int m, std::size_t rank = 1, RingSpec ring = RingSpec::integers()) {
  return ChainComplex(std::move(ring), m, {rank}, {});
}

// The degree-d self map of S^m Z with diagonal structures on both ends.
RefinementProblem degree_problem(long d, int m = 0) {
  const ChainComplex s = point_complex(m);
  RefinementProblem p;
  p.f = ChainMap::scalar(s, d);
  p.phi_c = SymmetricStructure::diagonal(s, 1);
  p.phi_d = SymmetricStructure::diagonal(s, 1);
  p.n = 2 * m;
  p.cycle = to_vector({1});
  return p;
}

// Enumeration oracle for the Hopf invariant of degree d on S^0: the unique
// x in Q_{+1}(Z) = Z with (1 + T) x = 2x = d^2 - d.
long enumerate_hopf(long d) {
  for (long x = -1000; x <= 1000; ++x)
    if (2 * x == d * d - d) return x;
  FAIL("no solution");
  return 0;
}

Integer refined_value(long d) {
  const RefinementResult r = refine(degree_problem(d));
  REQUIRE(r.psi.has_value());
  CHECK(r.k == 1);
  return r.psi->component(0).at(0);
}

// The symmetric class phi_1 = e (x) e on S^m Z, degree 2m - 1.
SymmetricClass odd_sphere_class(int m) {
  const ChainComplex s = point_complex(m);
  auto q = std::make_shared<const QComplex>(s, QKind::Symmetric, 0, kPlusInfinity);
  SymmetricClass theta{q, 2 * m - 1, {}};
  theta.components.emplace(1, to_vector({1}));
  return theta;
}

IntVector random_vector(std::mt19937& rng, std::size_t n) {
  IntVector v(n);
  for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
  return v;
}

}  // namespace

TEST_CASE("symmetric structures") {
  const SymmetricStructure d0 = SymmetricStructure::diagonal(point_complex(0), 3);
  CHECK(d0.apply(0, to_vector({1})).is_cycle());
  // Odd spheres: e (x) e is not a cycle once component 1 is present.
  CHECK_NOTHROW(SymmetricStructure::diagonal(point_complex(1), 1));
  CHECK_THROWS_AS(SymmetricStructure::diagonal(point_complex(1), 2), PreconditionError);
  CHECK_NOTHROW(SymmetricStructure::diagonal(point_complex(2, 2), 4));

  const ChainComplex circle(RingSpec::integers(), 0, {1, 1}, {IntMatrix{{0}}});
  CHECK_THROWS_AS(SymmetricStructure::diagonal(circle), InputError);
  std::map<std::pair<int, int>, IntMatrix> bad;
  bad.emplace(std::make_pair(0, 0), IntMatrix{{1, 0}});
  CHECK_THROWS_AS(SymmetricStructure(point_complex(0), 1, bad), InputError);  // wrong shape

  const SimplicialComplex t = triangulations::torus7();
  const SymmetricStructure st = SymmetricStructure::from_isovariant(IsovariantStructure(t, 3), Coefficients::Integers);
  const QClass fund = st.apply(2, t.fundamental_cycle(Coefficients::Integers));
  CHECK(fund.is_cycle());
  const SimplicialComplex rp = triangulations::rp2();
  const SymmetricStructure srp = SymmetricStructure::from_isovariant(IsovariantStructure(rp, 3), Coefficients::F2);
  CHECK(srp.apply(2, rp.fundamental_cycle(Coefficients::F2)).is_cycle());
}

TEST_CASE("obstruction theta") {
  // f = identity with equal structures.
  RefinementProblem p = degree_problem(1);
  CHECK(is_zero(obstruction_theta(p).packed()));
  // f = 0.
  p = degree_problem(0);
  CHECK(is_zero(obstruction_theta(p).packed()));
  // f = 2 on S^0 and S^2: theta_0 = (4 - 2) generator.
  for (int m : {0, 2}) {
    const SymmetricClass theta = obstruction_theta(degree_problem(2, m));
    CHECK(theta.component(0) == to_vector({2}));
    CHECK(is_infinite(theta.complex->range_hi()));
  }
  // A torus with the identity map and equal simplicial structures.
  const SimplicialComplex t = triangulations::torus7();
  const SymmetricStructure st = SymmetricStructure::from_isovariant(IsovariantStructure(t, 2), Coefficients::Integers);
  RefinementProblem tp{ChainMap::identity(st.complex()), st, st, 2, t.fundamental_cycle(Coefficients::Integers), 1};
  CHECK(is_zero(obstruction_theta(tp).packed()));

  RefinementProblem bad = degree_problem(2);
  bad.cycle = to_vector({1, 0});
  CHECK_THROWS_AS(obstruction_theta(bad), InputError);
  bad = degree_problem(2);
  bad.k = 0;
  CHECK_THROWS_AS(obstruction_theta(bad), InputError);
}

TEST_CASE("refinement of the degree-d map of S^0") {
  for (long d = -10; d <= 10; ++d) {
    CAPTURE(d);
    CHECK(refined_value(d) == enumerate_hopf(d));
  }
  // The refinement as a quadratic class: Q_0^{[0,0]}(S^0 Z) = Z.
  const RefinementResult r = refine(degree_problem(5));
  const QGroup q = quadratic_Q(point_complex(0), 0, 0, 0);
  CHECK(q.group.to_string() == "Z");
  CHECK(abs(class_coordinates(q, *r.psi).at(0)) == 10);
  CHECK(r.status() == "refined at k = 1");
}

TEST_CASE("composition and sum identities") {
  for (long d1 = -10; d1 <= 10; ++d1)
    for (long d2 = -10; d2 <= 10; ++d2) {
      CAPTURE(d1);
      CAPTURE(d2);
      const Integer h1 = enumerate_hopf(d1), h2 = enumerate_hopf(d2);
      CHECK(refined_value(d1 * d2) == h2 * d1 + d2 * d2 * h1);
      if (d1 + d2 >= -10 && d1 + d2 <= 10) CHECK(refined_value(d1 + d2) == h1 + h2 + d1 * d2);
    }
}

TEST_CASE("certificates and the sign table") {
  // theta = 0 gives the zero certificate and psi = 0.
  const ChainComplex s = point_complex(0);
  auto q = std::make_shared<const QComplex>(s, QKind::Symmetric, 0, kPlusInfinity);
  const SymmetricClass zero{q, 0, {}};
  const auto cert = solve_null_homotopy(zero, 2);
  REQUIRE(cert.has_value());
  CHECK(is_zero(cert->delta.packed()));
  CHECK(is_zero(quadratic_from_certificate(*cert).packed()));
  CHECK_THROWS_AS(solve_null_homotopy(zero, 0), InputError);

  // psi_t = (-1)^n delta_{-1-t} and (1 + T) psi - theta = -d(delta on [0, j]).
  std::mt19937 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const ChainComplex c = random_complex(rng);
    for (int n = 0; n <= 4; ++n) {
      const QGroup quad = quadratic_Q(c, n, 0, 1);
      if (quad.generators.empty()) continue;
      auto sym = std::make_shared<const QComplex>(c, QKind::Symmetric, 0, kPlusInfinity);
      // theta = (1 + T) psi + boundary, for a random quadratic cycle psi.
      IntVector packed(quad.complex->dimension(n));
      for (const QClass& g : quad.generators) packed = add(packed, scale(g.packed(), static_cast<long>(rng() % 3) - 1));
      const QClass psi{quad.complex, n, quad.complex->unpack(n, packed)};
      const QClass sym_psi = symmetrization(psi, sym);
      const IntVector beta = random_vector(rng, sym->dimension(n + 1));
      const SymmetricClass theta{sym, n, sym->unpack(n, add(sym_psi.packed(), sym->differential(n + 1) * beta))};
      REQUIRE(theta.is_cycle());

      const auto found = solve_null_homotopy(theta, 2);
      REQUIRE(found.has_value());
      CHECK(found->verify());
      const QuadraticClass refined = quadratic_from_certificate(*found);
      for (int t : refined.complex->components(n)) {
        const IntVector& dt = found->delta.component(-1 - t);
        if (dt.empty()) continue;
        CHECK(refined.component(t) == scale(dt, n % 2 == 0 ? 1 : -1));
      }
      // Oracle: equal classes in Q^n(C) via the SNF presentation.
      const QGroup symq = compute_Q(sym, n);
      CHECK(class_coordinates(symq, symmetrization(refined, sym)) == class_coordinates(symq, theta));
      // The explicit witness.
      QClass upper{sym, n + 1, {}};
      for (int s : sym->components(n + 1)) upper.components.emplace(s, found->delta.component(s));
      const IntVector defect = subtract(symmetrization(refined, sym).packed(), theta.packed());
      CHECK(add(defect, sym->differential(n + 1) * upper.packed()) == IntVector(defect.size()));
    }
  }
}

TEST_CASE("the obstructed odd-sphere class") {
  for (int m : {1, 3, 5}) {
    CAPTURE(m);
    const SymmetricClass theta = odd_sphere_class(m);
    REQUIRE(theta.is_cycle());
    // Oracle: its image generates the hyperquadratic group Z/2.
    const ChainComplex s = point_complex(m);
    const QGroup hat = hyperquadratic_Q(s, 2 * m - 1, kPlusInfinity);
    CHECK(hat.group.to_string() == "Z/2");
    auto hat_complex = hat.complex;
    const QClass image = J_map(theta, hat_complex);
    CHECK(class_coordinates(hat, image) == to_vector({1}));
    CHECK_FALSE(hyperquadratic_image_vanishes(theta));
    for (int k = 1; k <= 8; ++k) CHECK_FALSE(solve_null_homotopy(theta, k).has_value());
    const RefinementResult r = refine(theta, 8);
    CHECK_FALSE(r.certificate.has_value());
    CHECK(r.hyperquadratic_obstruction);
    CHECK(r.status() == "obstructed (hyperquadratic class nonzero)");
  }
  // Twice the class is refinable.
  SymmetricClass twice = odd_sphere_class(1);
  twice.components[1] = to_vector({2});
  CHECK(hyperquadratic_image_vanishes(twice));
  CHECK(refine(twice).certificate.has_value());
}

TEST_CASE("minimal k escalates") {
  // Symmetrized quadratic classes with range [0, 2] are refinable; the solver
  // returns the least k and no smaller k works.
  std::mt19937 rng(5);
  int needed_two = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const ChainComplex c = random_complex(rng);
    for (int n = 0; n <= 4; ++n) {
      const QGroup quad = quadratic_Q(c, n, 0, 2);
      auto sym = std::make_shared<const QComplex>(c, QKind::Symmetric, 0, kPlusInfinity);
      for (const QClass& g : quad.generators) {
        const SymmetricClass theta = symmetrization(g, sym);
        const RefinementResult r = refine(theta, 3);
        REQUIRE(r.certificate.has_value());
        CHECK(r.k <= 3);
        for (int k = 1; k < r.k; ++k) CHECK_FALSE(solve_null_homotopy(theta, k).has_value());
        if (r.k >= 2) ++needed_two;
      }
    }
  }
  MESSAGE("classes needing k >= 2: " << needed_two);
}

TEST_CASE("ultraquadratic pairing") {
  for (int m : {0, 1, 2, 3}) {
    const ChainComplex s = point_complex(m);
    auto q = std::make_shared<const QComplex>(s, QKind::Quadratic, 0, 0);
    const QuadraticClass psi{q, 2 * m, {{0, to_vector({5})}}};
    REQUIRE(psi.is_cycle());
    CHECK(ultraquadratic_pairing(psi).at(m) == IntMatrix{{5}});
    CHECK(symmetrized_pairing(psi).at(m) == IntMatrix{{m % 2 == 0 ? 10 : 0}});
    const QuadraticClass zero{q, 2 * m, {}};
    CHECK(ultraquadratic_pairing(zero).at(m).is_zero());
  }
  // Rank 2: the pairing is a Seifert-type matrix S with lambda = S + (-1)^m S^T.
  for (int m : {1, 2}) {
    const ChainComplex s = point_complex(m, 2);
    auto q = std::make_shared<const QComplex>(s, QKind::Quadratic, 0, 0);
    const TensorSquare& sq = q->square();
    const long entries[2][2] = {{1, 2}, {-3, 4}};
    IntVector v(sq.complex().zrank(2 * m));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) v[sq.index(m, i, m, j)] = entries[i][j];
    const QuadraticClass psi{q, 2 * m, {{0, v}}};
    const IntMatrix pairing = ultraquadratic_pairing(psi).at(m);
    const IntMatrix expected{{entries[0][0], entries[1][0]}, {entries[0][1], entries[1][1]}};
    CHECK(pairing == expected);
    const int eps = m % 2 == 0 ? 1 : -1;
    CHECK(symmetrized_pairing(psi).at(m) == pairing + pairing.transpose().scaled(eps));
  }
  auto wide = std::make_shared<const QComplex>(point_complex(0), QKind::Quadratic, 0, 1);
  CHECK_THROWS_AS(ultraquadratic_pairing(QuadraticClass{wide, 0, {}}), InputError);
}

TEST_CASE("spectral quadratic construction") {
  // f = 0: theta = 0 and psi = 0.
  const SpectralResult zero = spectral_quadratic(degree_problem(0));
  REQUIRE(zero.refinement.psi.has_value());
  CHECK(is_zero(zero.refinement.psi->packed()));
  // f = identity: the cone is acyclic and every class vanishes.
  const SpectralResult id = spectral_quadratic(degree_problem(1));
  CHECK(id.cone.complex.is_acyclic());
  REQUIRE(id.refinement.psi.has_value());
  CHECK(quadratic_Q(id.cone.complex, 0, 0, id.refinement.k - 1).group.is_trivial());
  // f = 2: the Moore complex carries a nonzero torsion class.
  const SpectralResult two = spectral_quadratic(degree_problem(2));
  REQUIRE(two.refinement.psi.has_value());
  const QGroup q = quadratic_Q(two.cone.complex, 0, 0, two.refinement.k - 1);
  CHECK(q.group.free_rank() == 0);
  CHECK_FALSE(q.group.torsion().empty());
  CHECK_FALSE(is_zero(class_coordinates(q, *two.refinement.psi)));
  CHECK(two.pushed.is_cycle());
}

TEST_CASE("kernel forms") {
  // Over F2 with m odd.
  const ChainComplex f2 = point_complex(1, 2, RingSpec::f2());
  auto q = std::make_shared<const QComplex>(f2, QKind::Quadratic, 0, 0);
  const TensorSquare& sq = q->square();
  auto psi_of = [&](long a, long b, long c, long d) {
    IntVector v(sq.complex().zrank(2));
    v[sq.index(1, 0, 1, 0)] = a;
    v[sq.index(1, 0, 1, 1)] = b;
    v[sq.index(1, 1, 1, 0)] = c;
    v[sq.index(1, 1, 1, 1)] = d;
    return QuadraticClass{q, 2, {{0, v}}};
  };
  const KernelForm h = kernel_form(psi_of(0, 1, 0, 0), 1);
  CHECK(h.form.lambda() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(h.form.mu() == std::vector<Integer>{0, 0});
  const KernelForm a = kernel_form(psi_of(1, 1, 0, 1), 1);
  CHECK(a.form.lambda() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(a.form.mu() == std::vector<Integer>{1, 1});
  CHECK(arf(a.form) == 1);
  const KernelForm z = kernel_form(psi_of(0, 0, 0, 0), 1);
  CHECK(z.form.lambda().is_zero());

  // Over Z with m even: lambda = S + S^T, mu = diagonal of S.
  const ChainComplex zc = point_complex(2, 2);
  auto qz = std::make_shared<const QComplex>(zc, QKind::Quadratic, 0, 0);
  const TensorSquare& sz = qz->square();
  IntVector v(sz.complex().zrank(4));
  v[sz.index(2, 0, 2, 0)] = 1;
  v[sz.index(2, 0, 2, 1)] = 1;
  v[sz.index(2, 1, 2, 1)] = 1;
  const KernelForm e = kernel_form(QuadraticClass{qz, 4, {{0, v}}}, 2);
  CHECK(e.form.lambda() == IntMatrix{{2, 1}, {1, 2}});
  CHECK(e.form.mu() == std::vector<Integer>{1, 1});
  CHECK_FALSE(e.torsion_discarded);
  CHECK(signature(e.form) == 2);

  // The refinement of the degree-3 map: mu = h(3) = 3, lambda = 6.
  const RefinementResult r = refine(degree_problem(3));
  const KernelForm k3 = kernel_form(*r.psi, 0);
  CHECK(k3.form.lambda() == IntMatrix{{6}});
  CHECK(k3.form.mu() == std::vector<Integer>{3});

  // Torsion in the middle cohomology is discarded and reported.
  const ChainComplex torsion(RingSpec::integers(), 0, {1, 1}, {IntMatrix{{2}}});
  auto qt = std::make_shared<const QComplex>(torsion, QKind::Quadratic, 0, 0);
  const KernelForm kt = kernel_form(QuadraticClass{qt, 2, {}}, 1);
  CHECK(kt.torsion_discarded);
  CHECK(kt.form.rank() == 0);
  CHECK_THROWS_AS(kernel_form(QuadraticClass{qt, 2, {}}, 2), InputError);
}
