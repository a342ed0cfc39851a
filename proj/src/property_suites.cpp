#include "hopf/property_suites.hpp"

#include <fmt/format.h>

#include <functional>
#include <random>
#include <set>

#include "hopf/errors.hpp"
#include "hopf/f2_linalg.hpp"
#include "hopf/hopf_degree.hpp"
#include "hopf/qgroups.hpp"
#include "hopf/quadratic.hpp"
#include "hopf/quadratic_form.hpp"
#include "hopf/random_complex.hpp"
#include "hopf/simplicial.hpp"
#include "hopf/triangulations.hpp"
#include "hopf/wall.hpp"

namespace hopf {

namespace {

namespace tri = triangulations;

class Recorder {
 public:
  Recorder(SuiteResult& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  void check(const std::string& label, bool passed, std::string value, std::string detail = {}) {
    out_.checks.push_back({suite_ + "/" + label, passed, std::move(value), std::move(detail)});
  }
  void expect(const std::string& label, const std::string& actual, const std::string& expected) {
    check(label, actual == expected, actual, actual == expected ? "" : "expected " + expected);
  }
  // Runs body and records an exception as a failure of `label`.
  void guard(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(label, false, "error", e.what());
    }
  }

 private:
  SuiteResult& out_;
  std::string suite_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Integer mod2(const Integer& v) {
  Integer r = v % 2;
  return r < 0 ? Integer(-r) : r;
}

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// ---------------------------------------------------------------------------

void qgroups_suite(SuiteResult& out, unsigned seed) {
  Recorder rec(out, "qgroups");
  for (int j = 0; j <= 4; ++j)
    for (int k = 1; k <= 5; ++k)
      for (int i = 0; i <= j; ++i) {
        const std::string label = fmt::format("stunted j={} k={} i={}", j, k, i);
        rec.guard(label, [&] {
          const std::string expected = i < j ? "0" : ((j % 2 == 0 || k == 1) ? "Z" : "Z/2");
          rec.expect(label, quadratic_Q(ChainComplex::sphere(j), i + j, 0, k - 1).group.to_string(), expected);
        });
      }
  for (int n = 0; n <= 5; ++n) {
    const std::string label = fmt::format("Q_(-1)^n(Z) n={}", n);
    rec.guard(label, [&] {
      rec.expect(label, quadratic_Q(ChainComplex::sphere(n), 2 * n, 0, kPlusInfinity).group.to_string(),
                 n % 2 == 0 ? "Z" : "Z/2");
    });
  }
  std::mt19937 rng(seed);
  for (int t = 0; t < 20; ++t) {
    const ChainComplex c = random_complex(rng);
    for (int n = 0; n <= 7; ++n) {
      const std::string base = fmt::format("random complex {} n={}", t, n);
      rec.guard(base, [&] {
        for (const SequenceCheck& s : check_symmetric_quadratic_sequence(c, n))
          rec.check(base + " " + s.label, s.exact, s.exact ? "exact" : "not exact", s.diagnostics);
        for (const SequenceCheck& s : check_range_sequences(c, n, 0, 1, 2))
          rec.check(base + " " + s.label, s.exact, s.exact ? "exact" : "not exact", s.diagnostics);
        const SequenceCheck s = check_hyperquadratic_suspension(c, n);
        rec.check(base + " " + s.label, s.exact, s.exact ? "iso" : "not iso", s.diagnostics);
      });
    }
  }
}

// ---------------------------------------------------------------------------

void steenrod_suite(SuiteResult& out, unsigned) {
  Recorder rec(out, "steenrod");
  rec.guard("Sq1 on RP2", [&] {
    const SimplicialComplex rp = tri::rp2();
    const IsovariantStructure phi(rp, 3);
    const Cochain x = cohomology_basis(rp, 1, Coefficients::F2).at(0);
    const Cochain sq1 = steenrod_square(phi, 1, 1, x);
    const Integer v = mod2(evaluate(sq1, rp.fundamental_cycle(Coefficients::F2)));
    rec.expect("Sq1 on RP2", v == 1 ? "nonzero" : "zero", "nonzero");
    const Cochain square = reduce_mod2(cup_product(phi, 1, x, 1, x, Coefficients::F2));
    rec.expect("Sq1 x = x^2 on RP2", yes_no(cohomologous(rp, 2, sq1, square, Coefficients::F2)), "yes");
  });

  rec.guard("RP4", [&] {
    const SimplicialComplex rp = tri::projective_space(4);
    const IsovariantStructure phi(rp, 5);
    const Cochain x = tri::projective_generator(rp);
    std::vector<Cochain> power{unit_cocycle(rp), x};
    for (int r = 2; r <= 4; ++r) power.push_back(reduce_mod2(cup_product(phi, r - 1, power.back(), 1, x, Coefficients::F2)));
    for (int r = 1; r <= 4; ++r)
      for (int i = 0; r + i <= 4; ++i) {
        const Cochain sq = steenrod_square(phi, i, r, power[r]);
        const Integer v = mod2(evaluate(sq, tri::projective_cycle(rp, r + i)));
        rec.expect(fmt::format("RP4 Sq^{} x^{}", i, r), v.get_str(), std::to_string(binomial(r, i) % 2));
      }
  });

  rec.guard("suspension", [&] {
    const SimplicialComplex rp = tri::rp2();
    const SimplicialComplex srp = tri::suspension(rp);
    const Cochain x = cohomology_basis(rp, 1, Coefficients::F2).at(0);
    const Cochain lhs = steenrod_square(srp, 1, 2, tri::suspend_cochain(rp, srp, 1, x));
    const Cochain rhs = tri::suspend_cochain(rp, srp, 2, steenrod_square(rp, 1, 1, x));
    rec.expect("Sq1 commutes with suspension on RP2", yes_no(cohomologous(srp, 3, lhs, rhs, Coefficients::F2)),
               "yes");
  });

  struct Case {
    std::string name;
    SimplicialComplex k;
    Coefficients c;
  };
  for (const Case& cs : {Case{"S2", tri::sphere(2), Coefficients::Integers},
                         Case{"T2", tri::torus7(), Coefficients::Integers},
                         Case{"RP2", tri::rp2(), Coefficients::F2}}) {
    const std::string label = "Poincare duality " + cs.name;
    rec.guard(label, [&] {
      const int n = cs.k.dimension();
      const SymmetricPoincare sp = symmetric_poincare(cs.k, cs.k.fundamental_cycle(cs.c), n, cs.c, 2);
      rec.expect(label + " closure", yes_no(sp.phi.is_cycle()), "yes");
      rec.expect(label, sp.duality_is_quasi_isomorphism() ? "quasi-isomorphism" : "not a quasi-isomorphism",
                 "quasi-isomorphism");
    });
  }
}

// ---------------------------------------------------------------------------

RefinementProblem degree_problem(long d) {
  const ChainComplex s = ChainComplex::sphere(0);
  RefinementProblem p;
  p.f = ChainMap::scalar(s, d);
  p.phi_c = SymmetricStructure::diagonal(s);
  p.phi_d = SymmetricStructure::diagonal(s);
  p.n = 0;
  p.cycle = IntVector{Integer(1)};
  return p;
}

void quadratic_suite(SuiteResult& out, unsigned seed) {
  Recorder rec(out, "quadratic");
  std::map<long, Integer> h;
  for (long d = -10; d <= 10; ++d) {
    const std::string label = fmt::format("refinement d={}", d);
    rec.guard(label, [&] {
      const RefinementResult r = refine(degree_problem(d));
      if (!r.psi) {
        rec.check(label, false, "none", r.status());
        return;
      }
      h[d] = r.psi->component(0).at(0);
      rec.expect(label, h[d].get_str(), hopf_of_degree(d).get_str());
    });
  }
  if (h.size() == 21) {
    bool composition = true, sum = true;
    for (long a = -10; a <= 10; ++a)
      for (long b = -10; b <= 10; ++b) {
        if (a * b >= -10 && a * b <= 10) composition = composition && h[a * b] == h[b] * a + b * b * h[a];
        if (a + b >= -10 && a + b <= 10) sum = sum && h[a + b] == h[a] + h[b] + a * b;
      }
    rec.expect("composition identity", yes_no(composition), "yes");
    rec.expect("sum identity", yes_no(sum), "yes");
  }

  for (int m : {1, 3}) {
    const std::string label = fmt::format("obstructed class on S^{}", m);
    rec.guard(label, [&] {
      const ChainComplex s = ChainComplex::sphere(m);
      auto q = std::make_shared<const QComplex>(s, QKind::Symmetric, 0, kPlusInfinity);
      SymmetricClass theta{q, 2 * m - 1, {}};
      theta.components.emplace(1, IntVector{Integer(1)});
      const RefinementResult r = refine(theta, 8);
      rec.expect(label, r.status(), "obstructed (hyperquadratic class nonzero)");
    });
  }

  std::mt19937 rng(seed);
  for (int t = 0; t < 6; ++t) {
    const ChainComplex c = random_complex(rng);
    auto sym = std::make_shared<const QComplex>(c, QKind::Symmetric, 0, kPlusInfinity);
    for (int n = 0; n <= 4; ++n) {
      const std::string label = fmt::format("symmetrized classes refine, complex {} n={}", t, n);
      rec.guard(label, [&] {
        const QGroup quad = quadratic_Q(c, n, 0, 2);
        const QGroup symq = compute_Q(sym, n);
        bool ok = true;
        for (const QClass& g : quad.generators) {
          const SymmetricClass theta = symmetrization(g, sym);
          const RefinementResult r = refine(theta, 3);
          ok = ok && r.certificate && r.certificate->verify() &&
               class_coordinates(symq, symmetrization(*r.psi, sym)) == class_coordinates(symq, theta);
        }
        rec.expect(label, yes_no(ok), "yes");
      });
    }
  }
}

// ---------------------------------------------------------------------------

IntMatrix random_even_symmetric(std::mt19937& rng, std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2 * (static_cast<long>(rng() % 5) - 2);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = static_cast<long>(rng() % 7) - 3;
  }
  return m;
}

IntMatrix random_f2_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = static_cast<long>(rng() % 2);
    if (F2Matrix::from_int(p).rank() == n) return p;
  }
}

void witt_suite(SuiteResult& out, unsigned seed) {
  Recorder rec(out, "witt");
  for (int n = 0; n <= 11; ++n) rec.expect(fmt::format("L_{}(Z)", n), l_group(n), n % 4 == 0 ? "Z" : n % 4 == 2 ? "Z/2" : "0");
  rec.guard("E8", [&] {
    rec.expect("signature E8", std::to_string(signature(QuadraticForm::e8())), "8");
    rec.expect("obstruction E8 n=4", surgery_obstruction(QuadraticForm::e8(), 4).to_string(), "1 ∈ L_0(Z) = Z");
  });
  rec.guard("Arf form", [&] {
    rec.expect("obstruction Arf form n=2", surgery_obstruction(QuadraticForm::arf_one(), 2).to_string(),
               "1 ∈ L_2(Z) = Z/2");
  });

  std::mt19937 rng(seed);
  bool additive = true;
  for (int t = 0; t < 30; ++t) {
    const IntMatrix a = random_even_symmetric(rng, 1 + rng() % 6), b = random_even_symmetric(rng, 1 + rng() % 6);
    additive = additive && signature(block_diagonal(a, b)) == signature(a) + signature(b) &&
               signature(a.scaled(-1)) == -signature(a);
  }
  rec.expect("signature additive and odd under negation", yes_no(additive), "yes");

  bool invariant = true;
  for (int t = 0; t < 50; ++t) {
    const std::size_t pairs = 1 + rng() % 3;
    QuadraticForm f = QuadraticForm::hyperbolic(Coefficients::F2, -1);
    int expected = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const bool one = rng() % 2;
      expected ^= one;
      const QuadraticForm piece = one ? QuadraticForm::arf_one() : QuadraticForm::hyperbolic(Coefficients::F2, -1);
      f = i == 0 ? piece : f.orthogonal_sum(piece);
    }
    invariant = invariant && arf(f.base_change(random_f2_invertible(rng, 2 * pairs))) == expected;
  }
  rec.expect("Arf additive and invariant under base change", yes_no(invariant), "yes");

  auto trivial = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  rec.expect("figure-eight mu", wall_mu_from_double_points(trivial, {{0, 1}}, 1).to_string(), "1 ∈ Z/2");
  auto z3 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  rec.expect("Z/3 t + t^2 at m = 1", yes_no(wall_mu_from_double_points(z3, {{1, 1}, {2, 1}}, 1).is_zero()), "yes");
  bool relations = true;
  for (const auto& g : {trivial, z3, std::make_shared<const FiniteGroup>(FiniteGroup::cyclic_nonorientable(4))})
    for (int m = 0; m < 2; ++m) {
      const IntMatrix rel = wall_relation_matrix(*g, m);
      for (std::size_t a = 0; a < g->order(); ++a) {
        GroupRingElement x(g);
        for (std::size_t i = 0; i < g->order(); ++i) x[static_cast<int>(i)] = rel(i, a);
        relations = relations && wall_mu_reduce(x, m).is_zero();
      }
    }
  rec.expect("relation generators reduce to 0", yes_no(relations), "yes");

  rec.expect("bi-degree of reflection", bidegree_of(-1, 1).to_string(), "(-1, 1)");
  bool bidegrees = true;
  for (long f1 = -5; f1 <= 5; ++f1)
    for (long g1 = -5; g1 <= 5; ++g1) {
      if ((f1 - g1) % 2 != 0) continue;
      const BiDegree p = bidegree_of(f1, g1);
      bidegrees = bidegrees && bidegree_forget(p) == f1;
      for (long f2 = -5; f2 <= 5; ++f2)
        for (long g2 = -5; g2 <= 5; ++g2) {
          if ((f2 - g2) % 2 != 0) continue;
          const BiDegree c = bidegree_compose(p, bidegree_of(f2, g2));
          bidegrees = bidegrees && bidegree_forget(c) == f1 * f2 && c.b == g1 * g2;
          if (g1 == 1 && f1 % 2 != 0) bidegrees = bidegrees && bidegree_smash(p, g2).b == g2;
        }
    }
  rec.expect("bi-degree identities |d| <= 5", yes_no(bidegrees), "yes");
  bool parity = false;
  try {
    bidegree_of(2, 1);
  } catch (const PreconditionError&) {
    parity = true;
  }
  rec.expect("parity congruence enforced", yes_no(parity), "yes");

  rec.expect("curvatura integra S2", curvatura_integra_even(2, euler_characteristic(tri::sphere(2))).to_string(),
             "1 ∈ Z");
  for (int m : {1, 3, 7})
    for (int hopf : {0, 1})
      rec.expect(fmt::format("curvatura integra m={} hopf={}", m, hopf), curvatura_integra_odd(m, 1, hopf).to_string(),
                 hopf == 0 ? "1 ∈ Z/2" : "0 ∈ Z/2");
  for (int n : {1, 3}) {
    const std::string label = fmt::format("Kunneth mu S^{}", n);
    rec.guard(label, [&] {
      const KunnethMu k = kunneth_mu(tri::sphere(n), n);
      rec.check(label, k.passed(), std::to_string(k.mu), k.detail);
    });
  }
}

}  // namespace

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const PropertyCheck& c : checks) n += c.passed ? 0 : 1;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qgroups", "steenrod", "quadratic", "witt"};
  return names;
}

SuiteResult run_property_suite(const std::string& name, unsigned seed) {
  static const std::map<std::string, void (*)(SuiteResult&, unsigned)> suites{
      {"qgroups", qgroups_suite}, {"steenrod", steenrod_suite}, {"quadratic", quadratic_suite}, {"witt", witt_suite}};
  SuiteResult out;
  if (name == "all") {
    for (const std::string& s : suite_names()) suites.at(s)(out, seed);
    return out;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw InputError(fmt::format("unknown suite '{}' (expected qgroups, steenrod, quadratic, witt or all)", name));
  it->second(out, seed);
  return out;
}

void apply_golden(SuiteResult& result, const std::map<std::string, std::string>& golden) {
  std::set<std::string> seen;
  for (PropertyCheck& c : result.checks) {
    auto it = golden.find(c.label);
    if (it == golden.end()) continue;
    seen.insert(c.label);
    if (c.value != it->second) {
      c.passed = false;
      c.detail = fmt::format("golden value {} differs from computed {}", it->second, c.value);
    }
  }
  for (const auto& [label, value] : golden)
    if (!seen.count(label)) result.checks.push_back({label, false, "missing", "golden label was not checked"});
}

}  // namespace hopf
