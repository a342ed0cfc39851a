#include <random>

#include "doctest.h"
#include "hopf/simplicial.hpp"
#include "hopf/triangulations.hpp"

using namespace hopf;
namespace tri = hopf::triangulations;

namespace {

std::string homology_string(const SimplicialComplex& k, Coefficients c) {
  const ChainComplex cc = k.chain_complex(c);
  std::string s;
  for (int r = 0; r <= k.dimension(); ++r) s += (r ? "," : "") + cc.homology(r).to_string();
  return s;
}

// Classical Alexander-Whitney cup product, written out directly:
// (x u y)(v_0..v_{p+q}) = (-1)^{pq} x(v_0..v_p) y(v_p..v_{p+q}).
Cochain oracle_cup(const SimplicialComplex& k, int p, const Cochain& x, int q, const Cochain& y) {
  Cochain out(k.count(p + q));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const Simplex& s = k.simplex(p + q, idx);
    const Simplex front(s.begin(), s.begin() + p + 1), back(s.begin() + p, s.end());
    out[idx] = ((p * q) % 2 ? -1 : 1) * x[k.index_of(front)] * y[k.index_of(back)];
  }
  return out;
}

// x^r on an r-simplex: product of x over consecutive edges (mod 2).
Cochain oracle_power(const SimplicialComplex& k, const Cochain& x, int r) {
  Cochain out(k.count(r));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const Simplex& s = k.simplex(r, idx);
    Integer v = 1;
    for (int i = 0; i < r; ++i) v *= x[k.index_of({s[i], s[i + 1]})];
    out[idx] = v % 2;
  }
  return out;
}

Integer mod2(const Integer& v) {
  Integer r = v % 2;
  return r < 0 ? Integer(-r) : r;
}

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// The relation d phi_s = (-1)^s (phi_s d + (1 + (-1)^s T) phi_{s-1}),
// assembled from dense matrices of the tensor square.
bool dense_relation_holds(const SimplicialComplex& k, int order) {
  const ChainComplex c = k.chain_complex();
  const TensorSquare sq(c);
  const IsovariantStructure phi(k, order);
  for (int s = 0; s < order; ++s) {
    for (int d = 0; d <= k.dimension(); ++d) {
      const IntMatrix lhs = sq.complex().d(d + s) * phi.matrix(s, d, sq);
      IntMatrix rhs(lhs.rows(), lhs.cols());
      if (d >= 1) rhs = rhs + phi.matrix(s, d - 1, sq) * c.d(d);
      if (s >= 1) {
        const IntMatrix prev = phi.matrix(s - 1, d, sq);
        const IntMatrix t = sq.transposition(d + s - 1);
        rhs = rhs + prev + (s % 2 ? -(t * prev) : t * prev);
      }
      if (!(lhs == (s % 2 ? -rhs : rhs))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("simplicial complexes and their chains") {
  CHECK(homology_string(tri::sphere(2), Coefficients::Integers) == "Z,0,Z");
  CHECK(homology_string(tri::rp2(), Coefficients::F2) == "Z/2,Z/2,Z/2");
  CHECK(homology_string(tri::rp2(), Coefficients::Integers) == "Z,Z/2,0");
  CHECK(homology_string(tri::point(), Coefficients::Integers) == "Z");
  CHECK(homology_string(tri::torus7(), Coefficients::Integers) == "Z,Z^2,Z");
  CHECK(homology_string(tri::projective_space(3), Coefficients::Integers) == "Z,Z/2,0,Z");
  CHECK(homology_string(tri::projective_space(3), Coefficients::F2) == "Z/2,Z/2,Z/2,Z/2");

  const SimplicialComplex rp4 = tri::projective_space(4);
  CHECK(rp4.count(4) == 1920);
  CHECK(rp4.num_vertices() == 121);
  CHECK(rp4.euler_characteristic() == 1);

  const SimplicialComplex t = tri::torus7();
  CHECK(t.count(0) == 7);
  CHECK(t.count(1) == 21);
  CHECK(t.count(2) == 14);
  CHECK(t.face(2, 0, 0) == t.index_of({t.simplex(2, 0)[1], t.simplex(2, 0)[2]}));
}

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(SimplicialComplex({}, {}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 2}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 1}}, std::vector<int>{1, 1}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 1}}, std::vector<int>{2}), InputError);
  CHECK_THROWS_AS(tri::sphere(1).index_of({0, 5}), InputError);
}

TEST_CASE("fundamental cycles") {
  for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(tri::sphere(n).fundamental_cycle(Coefficients::Integers));
  CHECK_NOTHROW(tri::torus7().fundamental_cycle(Coefficients::Integers));
  CHECK_THROWS_AS(tri::rp2().fundamental_cycle(Coefficients::Integers), InputError);
  CHECK_NOTHROW(tri::rp2().fundamental_cycle(Coefficients::F2));
  // Facets listed out of order carry their orientation through the sort.
  const SimplicialComplex circle({"a", "b", "c"}, {{0, 1}, {2, 1}, {2, 0}}, std::vector<int>{1, -1, 1});
  const IntVector z = circle.fundamental_cycle(Coefficients::Integers);
  CHECK(is_zero(circle.boundary(1) * z));
  const SimplicialComplex bad({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(bad.fundamental_cycle(Coefficients::Integers), PreconditionError);
}

TEST_CASE("Euler characteristic and semicharacteristic") {
  CHECK(euler_characteristic(tri::sphere(2)) == 2);
  CHECK(euler_characteristic(tri::torus7()) == 0);
  CHECK(euler_characteristic(tri::rp2()) == 1);
  CHECK(semicharacteristic(tri::sphere(1), 1) == 1);
  CHECK(semicharacteristic(tri::sphere(3), 3) == 1);
  CHECK(semicharacteristic(tri::projective_space(3), 3) == 0);
  CHECK(semicharacteristic(tri::disjoint_union(tri::sphere(1), tri::sphere(1)), 1) == 0);
  CHECK_THROWS_AS(semicharacteristic(tri::sphere(2), 2), InputError);
  CHECK_THROWS_AS(semicharacteristic(tri::sphere(2), 3), InputError);
}

TEST_CASE("symmetric construction") {
  // Order 1 is Alexander-Whitney, a chain map.
  const SimplicialComplex d2 = tri::simplex(2);
  const IsovariantStructure aw(d2, 1);
  const SparseTensor& top = aw.phi(0, 2, 0);
  CHECK(top.size() == 3);
  CHECK(aw.verify());

  // On the 1-simplex, phi_1 of the edge is +-(e (x) e).
  const SimplicialComplex d1 = tri::simplex(1);
  const IsovariantStructure p1(d1, 2);
  const SparseTensor& e = p1.phi(1, 1, 0);
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == TensorKey{1, 0, 1, 0});
  CHECK((e.begin()->second == 1 || e.begin()->second == -1));
  for (int d = 0; d <= 1; ++d) CHECK(p1.residual(1, d, 0).empty());

  // Universal elements vanish above the dimension and end in +-(sigma (x) sigma).
  for (int k = 0; k <= 4; ++k) {
    CHECK(universal_element(k + 1, k).empty());
    const auto& u = universal_element(k, k);
    REQUIRE(u.size() == 1);
    CHECK(u[0].a == (1U << (k + 1)) - 1);
    CHECK(u[0].b == u[0].a);
  }

  CHECK(dense_relation_holds(tri::rp2(), 3));
  CHECK(dense_relation_holds(tri::torus7(), 3));
  CHECK(dense_relation_holds(tri::simplex(3), 5));
  CHECK(dense_relation_holds(tri::sphere(3), 4));
  CHECK(IsovariantStructure(tri::projective_space(3), 4).verify());
  CHECK_THROWS_AS(IsovariantStructure(d1, 0), InputError);
  CHECK_THROWS_AS(p1.phi(2, 1, 0), InputError);
}

TEST_CASE("cup products") {
  const SimplicialComplex t = tri::torus7();
  const IsovariantStructure phi(t, 1);
  const auto h1 = cohomology_basis(t, 1, Coefficients::Integers);
  REQUIRE(h1.size() == 2);
  const Cochain& a = h1[0];
  const Cochain& b = h1[1];
  const IntVector fund = t.fundamental_cycle(Coefficients::Integers);

  CHECK(cup_product(phi, 0, unit_cocycle(t), 1, a, Coefficients::Integers) == a);
  CHECK(cup_product(phi, 1, a, 0, unit_cocycle(t), Coefficients::Integers) == a);
  const Cochain ab = cup_product(phi, 1, a, 1, b, Coefficients::Integers);
  CHECK(ab == oracle_cup(t, 1, a, 1, b));
  CHECK(abs(evaluate(ab, fund)) == 1);  // generates H^2 = Z
  const Cochain aa = cup_product(phi, 1, a, 1, a, Coefficients::Integers);
  CHECK(cohomologous(t, 2, aa, Cochain(t.count(2)), Coefficients::Integers));
  CHECK(evaluate(aa, fund) == 0);

  // Independence of representatives.
  Cochain y(t.count(0));
  for (std::size_t v = 0; v < y.size(); ++v) y[v] = static_cast<long>(v * v) - 3;
  const Cochain a2 = add(a, coboundary(t, 0, y));
  CHECK(cohomologous(t, 2, cup_product(phi, 1, a2, 1, b, Coefficients::Integers), ab, Coefficients::Integers));

  Cochain not_cocycle(t.count(1));
  not_cocycle[0] = 1;
  CHECK_THROWS_AS(cup_product(phi, 1, not_cocycle, 1, b, Coefficients::Integers), PreconditionError);
  CHECK_THROWS_AS(cup_product(phi, 1, Cochain(3), 1, b, Coefficients::Integers), InputError);

  const SimplicialComplex rp = tri::rp2();
  const IsovariantStructure prp(rp, 1);
  const auto x = cohomology_basis(rp, 1, Coefficients::F2);
  REQUIRE(x.size() == 1);
  const Cochain xx = cup_product(prp, 1, x[0], 1, x[0], Coefficients::F2);
  CHECK(mod2(evaluate(xx, rp.fundamental_cycle(Coefficients::F2))) == 1);
  // Random cocycle pairs on the torus agree with the direct formula.
  std::mt19937 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    Cochain u = add(scale(a, static_cast<long>(rng() % 5) - 2), scale(b, static_cast<long>(rng() % 5) - 2));
    Cochain w = add(b, coboundary(t, 0, y));
    CHECK(cup_product(phi, 1, u, 1, w, Coefficients::Integers) == oracle_cup(t, 1, u, 1, w));
  }
}

TEST_CASE("Steenrod squares on RP^2") {
  const SimplicialComplex rp = tri::rp2();
  const IsovariantStructure phi(rp, 3);
  const Cochain x = cohomology_basis(rp, 1, Coefficients::F2).at(0);
  const IntVector fund = rp.fundamental_cycle(Coefficients::F2);
  const Cochain sq1 = steenrod_square(phi, 1, 1, x);
  CHECK(mod2(evaluate(sq1, fund)) == 1);
  CHECK(is_cocycle(rp, 2, sq1, Coefficients::F2));
  CHECK(sq1 == reduce_mod2(cup_product(phi, 1, x, 1, x, Coefficients::F2)));  // Sq^r = cup square
  CHECK(steenrod_square(rp, 1, 1, x) == sq1);
  // Sq^0 is the identity on classes; Sq^i vanishes above the degree.
  CHECK(cohomologous(rp, 1, steenrod_square(phi, 0, 1, x), x, Coefficients::F2));
  CHECK(is_zero(steenrod_square(phi, 2, 1, x)));
  CHECK(is_zero(steenrod_square(phi, 1, 0, unit_cocycle(rp))));

  // Well defined on classes and additive.
  Cochain y(rp.count(0));
  y[2] = 1;
  y[4] = 1;
  const Cochain x2 = reduce_mod2(add(x, coboundary(rp, 0, y)));
  CHECK(cohomologous(rp, 2, steenrod_square(phi, 1, 1, x2), sq1, Coefficients::F2));
  const Cochain sum = reduce_mod2(add(steenrod_square(phi, 1, 1, x), steenrod_square(phi, 1, 1, x2)));
  CHECK(cohomologous(rp, 2, steenrod_square(phi, 1, 1, reduce_mod2(add(x, x2))), sum, Coefficients::F2));

  // Natural under the inclusion of a subcomplex (same labels, same order).
  const SimplicialComplex sub(rp.labels(), {{0, 1, 2}, {0, 2, 3}, {1, 2, 4}});
  const Cochain xs = tri::restrict_cochain(rp, sub, 1, x);
  CHECK(steenrod_square(sub, 1, 1, xs) == tri::restrict_cochain(rp, sub, 2, sq1));

  CHECK_THROWS_AS(steenrod_square(IsovariantStructure(rp, 1), 0, 1, x), InputError);
}

TEST_CASE("Steenrod squares on RP^4 against the cup-power oracle") {
  const SimplicialComplex rp = tri::projective_space(4);
  const IsovariantStructure phi(rp, 5);
  const Cochain x = tri::projective_generator(rp);
  REQUIRE(is_cocycle(rp, 1, x, Coefficients::F2));
  std::vector<Cochain> power{unit_cocycle(rp), x};
  for (int r = 2; r <= 4; ++r) power.push_back(oracle_power(rp, x, r));
  for (int r = 1; r <= 4; ++r) {
    const IntVector z = tri::projective_cycle(rp, r);
    CHECK(is_zero(reduce_mod2(rp.boundary(r) * z)));
    CHECK(mod2(evaluate(power[r], z)) == 1);  // x^r is nonzero
    if (r >= 2) CHECK(reduce_mod2(cup_product(phi, r - 1, power[r - 1], 1, x, Coefficients::F2)) == power[r]);
  }
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; r + i <= 4; ++i) {
      CAPTURE(r);
      CAPTURE(i);
      const Cochain sq = steenrod_square(phi, i, r, power[r]);
      const IntVector z = tri::projective_cycle(rp, r + i);
      CHECK(mod2(evaluate(sq, z)) == binomial(r, i) % 2);
    }
  }
}

TEST_CASE("Cartan formula on S^1 x RP^2") {
  const SimplicialComplex s1 = tri::sphere(1);
  const SimplicialComplex rp = tri::rp2();
  const SimplicialComplex p = tri::product(s1, rp);
  CHECK(p.dimension() == 3);
  CHECK(homology_string(p, Coefficients::F2) == "Z/2,Z/2 ⊕ Z/2,Z/2 ⊕ Z/2,Z/2");
  const IsovariantStructure phi(p, 3);
  const Cochain a = cohomology_basis(s1, 1, Coefficients::F2).at(0);
  const Cochain x = cohomology_basis(rp, 1, Coefficients::F2).at(0);
  const Cochain pa = tri::pullback_first(p, s1, rp, 1, a);
  const Cochain px = tri::pullback_second(p, s1, rp, 1, x);
  const Cochain cross = reduce_mod2(cup_product(phi, 1, pa, 1, px, Coefficients::F2));
  // Sq^1(a x) = Sq^1 a . x + a . Sq^1 x; Sq^2(a x) = Sq^1 a . Sq^1 x.
  const Cochain lhs1 = steenrod_square(phi, 1, 2, cross);
  const Cochain rhs1 = reduce_mod2(add(cup_product(phi, 2, steenrod_square(phi, 1, 1, pa), 1, px, Coefficients::F2),
                                       cup_product(phi, 1, pa, 2, steenrod_square(phi, 1, 1, px), Coefficients::F2)));
  CHECK(cohomologous(p, 3, lhs1, rhs1, Coefficients::F2));
  CHECK(mod2(evaluate(lhs1, p.fundamental_cycle(Coefficients::F2))) == 1);
  const Cochain lhs0 = steenrod_square(phi, 0, 2, cross);
  CHECK(cohomologous(p, 2, lhs0, cross, Coefficients::F2));
}

TEST_CASE("Sq^1 commutes with suspension on RP^2") {
  const SimplicialComplex rp = tri::rp2();
  const SimplicialComplex srp = tri::suspension(rp);
  CHECK(homology_string(srp, Coefficients::F2) == "Z/2,0,Z/2,Z/2");
  const Cochain x = cohomology_basis(rp, 1, Coefficients::F2).at(0);
  const Cochain sx = tri::suspend_cochain(rp, srp, 1, x);
  REQUIRE(is_cocycle(srp, 2, sx, Coefficients::F2));
  const Cochain lhs = steenrod_square(srp, 1, 2, sx);
  const Cochain rhs = tri::suspend_cochain(rp, srp, 2, steenrod_square(rp, 1, 1, x));
  CHECK(cohomologous(srp, 3, lhs, rhs, Coefficients::F2));
  const IntVector z = tri::suspend_chain(rp, srp, 2, rp.fundamental_cycle(Coefficients::F2));
  CHECK(mod2(evaluate(lhs, z)) == 1);
}

TEST_CASE("symmetric Poincare structures and duality") {
  struct Case {
    SimplicialComplex k;
    Coefficients c;
  };
  const std::vector<Case> cases{{tri::sphere(2), Coefficients::Integers},
                                {tri::torus7(), Coefficients::Integers},
                                {tri::rp2(), Coefficients::F2},
                                {tri::sphere(1), Coefficients::Integers}};
  for (const Case& cs : cases) {
    const int n = cs.k.dimension();
    const SymmetricPoincare sp = symmetric_poincare(cs.k, cs.k.fundamental_cycle(cs.c), n, cs.c, 3);
    CHECK(sp.phi.is_cycle());
    CHECK(sp.duality_is_quasi_isomorphism());
  }
  // Twice the fundamental class is not a duality over Z.
  const SimplicialComplex s2 = tri::sphere(2);
  const SymmetricPoincare twice =
      symmetric_poincare(s2, scale(s2.fundamental_cycle(Coefficients::Integers), 2), 2, Coefficients::Integers);
  CHECK_FALSE(twice.duality_is_quasi_isomorphism());
  IntVector bad(s2.count(2));
  bad[0] = 1;
  CHECK_THROWS_AS(symmetric_poincare(s2, bad, 2, Coefficients::Integers), PreconditionError);
}

TEST_CASE("products, suspensions and unions") {
  const SimplicialComplex t = tri::product(tri::sphere(1), tri::sphere(1));
  CHECK(homology_string(t, Coefficients::Integers) == "Z,Z^2,Z");
  CHECK(t.count(2) == 18);
  const SimplicialComplex ss = tri::suspension(tri::sphere(1));
  CHECK(homology_string(ss, Coefficients::Integers) == "Z,0,Z");
  CHECK_NOTHROW(ss.fundamental_cycle(Coefficients::Integers));
  const SimplicialComplex u = tri::disjoint_union(tri::sphere(1), tri::point());
  CHECK(homology_string(u, Coefficients::Integers) == "Z^2,Z");
  CHECK_THROWS_AS(tri::projective_space(0), InputError);
}
