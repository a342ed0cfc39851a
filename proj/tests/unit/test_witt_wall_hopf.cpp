#include <gmpxx.h>

#include <random>

#include "doctest.h"
#include "hopf/hopf_degree.hpp"
#include "hopf/quadratic_form.hpp"
#include "hopf/triangulations.hpp"
#include "hopf/wall.hpp"

using namespace hopf;

namespace {

// Signature oracle: characteristic polynomial by Faddeev-LeVerrier, then
// Descartes' rule, which is exact because every root is real.
std::vector<mpq_class> char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0)), am(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;  // c[k] is the coefficient of x^k
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (std::size_t l = 0; l < n; ++l) s += mpq_class(a(i, l)) * m[l][j];
        am[i][j] = s;
      }
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    m = am;
  }
  return c;
}

int sign_changes(const std::vector<mpq_class>& coeffs) {
  int changes = 0, last = 0;
  for (const mpq_class& v : coeffs) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long oracle_signature(const IntMatrix& a) {
  std::vector<mpq_class> p = char_poly(a);
  const int positive = sign_changes(p);
  for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
  return positive - sign_changes(p);
}

IntMatrix diag(std::initializer_list<long> entries) {
  IntMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (long e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

IntMatrix random_even_symmetric(std::mt19937& rng, std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2 * (static_cast<long>(rng() % 5) - 2);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = static_cast<long>(rng() % 7) - 3;
  }
  return m;
}

// Arf oracle: the sign of the Gauss sum sum_x (-1)^{mu(x)}, with mu evaluated
// from the definition rather than through the form class.
int oracle_arf(const IntMatrix& lambda, const std::vector<Integer>& mu) {
  const std::size_t n = lambda.rows();
  long gauss = 0;
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    long value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((bits >> i) & 1)) continue;
      value += mu[i].get_si();
      for (std::size_t j = i + 1; j < n; ++j)
        if ((bits >> j) & 1) value += lambda(i, j).get_si();
    }
    gauss += (value % 2 == 0) ? 1 : -1;
  }
  REQUIRE(gauss != 0);
  return gauss > 0 ? 0 : 1;
}

bool f2_invertible(IntMatrix m) {
  const std::size_t n = m.rows();
  for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
    std::size_t piv = row;
    while (piv < n && m(piv, col) % 2 == 0) ++piv;
    if (piv == n) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(row, j));
    for (std::size_t i = 0; i < n; ++i)
      if (i != row && m(i, col) % 2 != 0)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += m(row, j);
  }
  return true;
}

IntMatrix random_f2_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = static_cast<long>(rng() % 2);
    if (f2_invertible(p)) return p;
  }
}

QuadraticForm random_arf_form(std::mt19937& rng, std::size_t pairs) {
  QuadraticForm f = QuadraticForm::hyperbolic(Coefficients::F2, -1);
  if (rng() % 2) f = QuadraticForm::arf_one();
  for (std::size_t i = 1; i < pairs; ++i)
    f = f.orthogonal_sum(rng() % 2 ? QuadraticForm::arf_one() : QuadraticForm::hyperbolic(Coefficients::F2, -1));
  return f.base_change(random_f2_invertible(rng, 2 * pairs));
}

// The relation lattice of Z[pi]/{x - (-1)^m xbar}, built from the group table.
IntMatrix oracle_relations(const FiniteGroup& g, int m) {
  const std::size_t n = g.order();
  IntMatrix rel(n, n);
  const int sign = m % 2 == 0 ? 1 : -1;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t inv = 0;
    while (g.multiply(static_cast<int>(a), static_cast<int>(inv)) != g.identity()) ++inv;
    rel(a, a) += 1;
    rel(inv, a) -= sign * g.w(static_cast<int>(a));
  }
  return rel;
}

bool in_lattice(const IntMatrix& rel, const IntVector& v) { return solve_linear(rel, v).has_value(); }

}  // namespace

TEST_CASE("signature") {
  CHECK(signature(QuadraticForm::e8()) == 8);
  CHECK(oracle_signature(QuadraticForm::e8().lambda()) == 8);
  CHECK(signature(QuadraticForm::hyperbolic(Coefficients::Integers, 1)) == 0);
  CHECK(signature(diag({1, 1, -1})) == 1);
  CHECK(signature(diag({0, 3, -2, -5})) == -1);
  CHECK(signature(IntMatrix(0, 0)) == 0);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix a = random_even_symmetric(rng, n);
    const IntMatrix b = random_even_symmetric(rng, 1 + rng() % 6);
    CAPTURE(a.to_string());
    CHECK(signature(a) == oracle_signature(a));
    CHECK(signature(block_diagonal(a, b)) == signature(a) + signature(b));
    CHECK(signature(a.scaled(-1)) == -signature(a));
  }
  CHECK_THROWS_AS(signature(IntMatrix{{0, 1}, {2, 0}}), InputError);
  CHECK_THROWS_AS(signature(QuadraticForm::hyperbolic(Coefficients::Integers, -1)), PreconditionError);
}

TEST_CASE("quadratic form validation") {
  CHECK_THROWS_AS(QuadraticForm(Coefficients::Integers, 1, IntMatrix{{0, 1}, {2, 0}}, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(QuadraticForm(Coefficients::Integers, 1, IntMatrix{{2}}, std::vector<Integer>{2}), PreconditionError);
  CHECK_THROWS_AS(QuadraticForm(Coefficients::Integers, 1, IntMatrix{{2}}, std::vector<Integer>{1, 1}), InputError);
  CHECK_THROWS_AS(QuadraticForm(Coefficients::Integers, 2, IntMatrix{{2}}, std::nullopt), InputError);
  const QuadraticForm e8 = QuadraticForm::e8();
  CHECK(e8.is_nonsingular());
  CHECK(e8.is_even());
  CHECK(e8.mu_of(to_vector({1, 1, 0, 0, 0, 0, 0, 0})) == QValue(Coefficients::Integers, 1, 1));
  CHECK(QValue(Coefficients::Integers, -1, 3) == QValue(Coefficients::Integers, -1, 1));
  CHECK(QValue(Coefficients::Integers, -1, 3).to_string() == "1 ∈ Z/2");
  CHECK(QValue(Coefficients::Integers, 1, -4).to_string() == "-4 ∈ Z");
  CHECK_FALSE(QuadraticForm(Coefficients::Integers, 1, IntMatrix{{2, 1}, {1, 2}}, std::nullopt).is_nonsingular());
}

TEST_CASE("surgery obstruction groups") {
  const char* pattern[] = {"Z", "0", "Z/2", "0"};
  for (int n = 0; n <= 11; ++n) CHECK(l_group(n) == pattern[n % 4]);
  const LClass e8 = surgery_obstruction(QuadraticForm::e8(), 4);
  CHECK(e8.value == 1);
  CHECK(e8.to_string() == "1 ∈ L_0(Z) = Z");
  CHECK(surgery_obstruction(QuadraticForm::hyperbolic(Coefficients::Integers, 1), 0).value == 0);
  CHECK(surgery_obstruction(QuadraticForm::e8().orthogonal_sum(QuadraticForm::e8().negated()), 8).value == 0);
  CHECK(surgery_obstruction(QuadraticForm::arf_one(), 2).value == 1);
  CHECK(surgery_obstruction(QuadraticForm::arf_one(), 2).to_string() == "1 ∈ L_2(Z) = Z/2");
  CHECK(surgery_obstruction(QuadraticForm::e8(), 3).value == 0);
  const QuadraticForm odd(Coefficients::Integers, 1, diag({1, 1, -1}), std::nullopt);
  CHECK(signature(odd) == 1);
  CHECK_THROWS_AS(surgery_obstruction(odd, 0), PreconditionError);
  const QuadraticForm singular(Coefficients::Integers, 1, IntMatrix{{2, 1}, {1, 2}}, std::nullopt);
  CHECK_THROWS_AS(surgery_obstruction(singular, 4), PreconditionError);
}

TEST_CASE("Arf invariant") {
  const QuadraticForm h = QuadraticForm::hyperbolic(Coefficients::F2, -1);
  CHECK(arf(h) == 0);
  CHECK(arf(QuadraticForm::arf_one()) == 1);
  CHECK(arf(h.orthogonal_sum(QuadraticForm::arf_one())) == 1);
  CHECK(arf(QuadraticForm::arf_one().orthogonal_sum(QuadraticForm::arf_one())) == 0);
  CHECK_THROWS_AS(arf(QuadraticForm(Coefficients::F2, -1, IntMatrix{{0, 0}, {0, 0}}, std::vector<Integer>{0, 1})),
                  PreconditionError);
  std::mt19937 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t pairs = 1 + rng() % 3;
    const QuadraticForm f = random_arf_form(rng, pairs);
    const QuadraticForm g = random_arf_form(rng, 1 + rng() % 3);
    const int a = oracle_arf(f.lambda(), f.mu());
    CHECK(arf(f) == a);
    CHECK(arf_symplectic(f) == a);
    CHECK(arf(f.base_change(random_f2_invertible(rng, 2 * pairs))) == a);
    CHECK(arf(f.orthogonal_sum(g)) == (a + oracle_arf(g.lambda(), g.mu())) % 2);
  }
}

TEST_CASE("Wall self-intersection") {
  auto trivial = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  const WallClass eight = wall_mu_from_double_points(trivial, {{0, 1}}, 1);
  CHECK(eight.trivial_value() == 1);
  CHECK(eight.to_string() == "1 ∈ Z/2");
  CHECK(wall_mu_from_double_points(trivial, {{0, 1}, {0, 1}}, 1).is_zero());
  CHECK(wall_mu_from_double_points(trivial, {{0, 1}, {0, 1}}, 2).trivial_value() == 2);

  auto z3 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  CHECK(wall_mu_from_double_points(z3, {{1, 1}, {2, 1}}, 1).is_zero());
  CHECK_FALSE(wall_mu_from_double_points(z3, {{1, 1}, {2, 1}}, 2).is_zero());
  CHECK_THROWS_AS(wall_mu_from_double_points(z3, {{3, 1}}, 1), InputError);
  CHECK_THROWS_AS(wall_mu_from_double_points(z3, {{1, 2}}, 1), InputError);

  std::vector<std::shared_ptr<const FiniteGroup>> groups{
      trivial, z3, std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4)),
      std::make_shared<const FiniteGroup>(FiniteGroup::cyclic_nonorientable(2)),
      std::make_shared<const FiniteGroup>(FiniteGroup::cyclic_nonorientable(6))};
  std::mt19937 rng(9);
  for (const auto& g : groups)
    for (int m = 0; m < 4; ++m) {
      CAPTURE(g->order());
      CAPTURE(m);
      const IntMatrix rel = oracle_relations(*g, m);
      // Relation generators reduce to zero.
      for (std::size_t a = 0; a < g->order(); ++a) {
        GroupRingElement x(g);
        for (std::size_t i = 0; i < g->order(); ++i) x[static_cast<int>(i)] = rel(i, a);
        CHECK(wall_mu_reduce(x, m).is_zero());
      }
      // The quotient agrees with the SNF of the relation lattice.
      const AbelianGroupPresentation oracle = homology_at(rel, IntMatrix(0, g->order()));
      CHECK(wall_quotient(*g, m).to_string() == oracle.to_string());
      for (int trial = 0; trial < 20; ++trial) {
        GroupRingElement x(g), y(g);
        for (std::size_t i = 0; i < g->order(); ++i) {
          x[static_cast<int>(i)] = static_cast<long>(rng() % 7) - 3;
          y[static_cast<int>(i)] = static_cast<long>(rng() % 7) - 3;
        }
        const WallClass wx = wall_mu_reduce(x, m), wy = wall_mu_reduce(y, m);
        // The lift represents the same coset, and equality is coset equality.
        CHECK(in_lattice(rel, subtract(x.coefficients(), wx.lift().coefficients())));
        CHECK((wx == wy) == in_lattice(rel, subtract(x.coefficients(), y.coefficients())));
        CHECK(wall_mu_reduce(x + y, m) == wall_mu_reduce(wx.lift() + wy.lift(), m));
        CHECK(wall_mu_reduce(wx.lift(), m) == wx);
      }
    }
}

TEST_CASE("lambda mu chi") {
  auto trivial = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  auto mu = [&](long v, int m) { return wall_mu_reduce(GroupRingElement::basis(trivial, 0, v), m); };
  CHECK(lambda_mu_chi_check(8, mu(3, 2), 2, 2));
  CHECK(lambda_mu_chi_check(5, mu(0, 4), 5, 4));
  CHECK_FALSE(lambda_mu_chi_check(7, mu(3, 2), 2, 2));
  CHECK(lambda_mu_chi_check(3, mu(1, 1), 1, 1));
  CHECK_FALSE(lambda_mu_chi_check(2, mu(1, 1), 1, 1));
  CHECK_THROWS_AS(lambda_mu_chi_check(8, mu(3, 2), 2, 1), InputError);
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  CHECK_THROWS_AS(lambda_mu_chi_check(0, wall_mu_reduce(GroupRingElement(z2), 2), 0, 2), InputError);
}

TEST_CASE("bi-degrees") {
  CHECK(bidegree_of(-1, 1) == BiDegree{-1, 1});
  CHECK(bidegree_of(1, 1) == BiDegree{0, 1});
  CHECK(bidegree_of(1, 1).to_string() == "(0, 1)");
  CHECK(bidegree_smash(bidegree_of(3, 1), 2) == BiDegree{2, 2});
  CHECK_THROWS_AS(bidegree_of(2, 1), PreconditionError);
  CHECK_THROWS_AS(bidegree_smash(bidegree_of(3, 3), 2), PreconditionError);
  for (long f1 = -6; f1 <= 6; ++f1)
    for (long g1 = -6; g1 <= 6; ++g1) {
      if ((f1 - g1) % 2 != 0) continue;
      const BiDegree p = bidegree_of(f1, g1);
      CHECK(bidegree_forget(p) == f1);
      for (long f2 = -3; f2 <= 3; ++f2)
        for (long g2 = -3; g2 <= 3; ++g2) {
          if ((f2 - g2) % 2 != 0) continue;
          const BiDegree c = bidegree_compose(p, bidegree_of(f2, g2));
          CHECK(bidegree_forget(c) == f1 * f2);
          CHECK(c.b == g1 * g2);
        }
    }
}

TEST_CASE("Hopf invariant of a degree") {
  CHECK(hopf_of_degree(0) == 0);
  CHECK(hopf_of_degree(-1) == 1);
  CHECK(hopf_of_degree(2) == 1);
  for (long a = -10; a <= 10; ++a)
    for (long b = -10; b <= 10; ++b) {
      long count = 0;  // unordered pairs among the a b sheets, the oracle for h(ab) when positive
      CHECK(hopf_of_degree(a * b) == hopf_of_degree(b) * a + b * b * hopf_of_degree(a));
      CHECK(hopf_of_degree(a + b) == hopf_of_degree(a) + hopf_of_degree(b) + a * b);
      if (a * b > 0) {
        for (long i = 0; i < a * b; ++i) count += i;
        CHECK(hopf_of_degree(a * b) == count);
      }
    }
}

TEST_CASE("curvatura integra") {
  CHECK(curvatura_integra_even(2, 2) == QValue(Coefficients::Integers, 1, 1));
  CHECK(curvatura_integra_even(4, 0).value() == 0);
  CHECK_THROWS_AS(curvatura_integra_even(2, 3), PreconditionError);
  CHECK_THROWS_AS(curvatura_integra_even(3, 2), InputError);
  for (int m : {1, 3, 7}) {
    CHECK(curvatura_integra_odd(m, 1, 0) == QValue(Coefficients::Integers, -1, 1));
    CHECK(curvatura_integra_odd(m, 1, 1) == QValue(Coefficients::Integers, -1, 0));
  }
  CHECK(curvatura_integra_odd(5, 1, 0).to_string() == "1 ∈ Z/2");
  CHECK_THROWS_AS(curvatura_integra_odd(5, 1, 1), PreconditionError);
  CHECK_THROWS_AS(curvatura_integra_odd(2, 1, 0), InputError);
  // chi(S^2) / 2 from a triangulation.
  CHECK(curvatura_integra_even(2, euler_characteristic(triangulations::sphere(2))).value() == 1);
}

TEST_CASE("Kunneth mu and the semicharacteristic") {
  const SimplicialComplex s1 = triangulations::sphere(1);
  const KunnethMu a = kunneth_mu(s1, 1);
  CHECK(a.duality);
  CHECK(a.mu == 1);
  CHECK(a.semicharacteristic == 1);
  CHECK(kunneth_mu_check(triangulations::sphere(3), 3));
  const KunnethMu b = kunneth_mu(triangulations::disjoint_union(s1, s1), 1);
  CHECK(b.passed());
  CHECK(b.mu == 0);
  CHECK(kunneth_mu_check(triangulations::projective_space(3), 3));
  CHECK(semicharacteristic(triangulations::projective_space(3), 3) == 0);
  CHECK_THROWS_AS(kunneth_mu(triangulations::sphere(2), 2), InputError);
  // A circle with a whisker is not a manifold.
  const SimplicialComplex whisker({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, std::nullopt);
  CHECK_FALSE(kunneth_mu(whisker, 1).passed());
}
