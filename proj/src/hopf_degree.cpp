#include "hopf/hopf_degree.hpp"

#include <fmt/format.h>

#include "hopf/f2_linalg.hpp"

namespace hopf {

std::string BiDegree::to_string() const { return fmt::format("({}, {})", a.get_str(), b.get_str()); }

BiDegree bidegree_of(const Integer& degree_f, const Integer& degree_g) {
  const Integer diff = degree_f - degree_g;
  if (diff % 2 != 0)
    throw PreconditionError(fmt::format("deg F = {} and deg G = {} differ in parity", degree_f.get_str(), degree_g.get_str()));
  return BiDegree{diff / 2, degree_g};
}

Integer bidegree_forget(const BiDegree& p) { return 2 * p.a + p.b; }

BiDegree bidegree_compose(const BiDegree& p, const BiDegree& q) {
  return bidegree_of(bidegree_forget(p) * bidegree_forget(q), p.b * q.b);
}

BiDegree bidegree_smash(const BiDegree& f, const Integer& degree_g) {
  if (f.b != 1)
    throw PreconditionError(fmt::format("a map of LV has odd degree and fixed degree 1, got bi-degree {}", f.to_string()));
  return BiDegree{(bidegree_forget(f) - 1) / 2 * degree_g, degree_g};
}

Integer hopf_of_degree(const Integer& d) { return d * (d - 1) / 2; }

QValue curvatura_integra_even(int m, const Integer& chi) {
  if (m % 2 != 0) throw InputError(fmt::format("the Euler characteristic formula is for even m, got {}", m));
  if (chi % 2 != 0) throw PreconditionError(fmt::format("odd Euler characteristic {} for even m", chi.get_str()));
  return QValue(Coefficients::Integers, 1, chi / 2);
}

QValue curvatura_integra_odd(int m, const Integer& semicharacteristic, const Integer& hopf) {
  if (m % 2 == 0) throw InputError(fmt::format("the semicharacteristic formula is for odd m, got {}", m));
  if (hopf % 2 != 0 && m != 1 && m != 3 && m != 7)
    throw PreconditionError(fmt::format("Hopf(M, b) vanishes unless m is 1, 3 or 7 (m = {})", m));
  return QValue(Coefficients::Integers, -1, semicharacteristic - hopf);
}

KunnethMu kunneth_mu(const SimplicialComplex& k, int n) {
  if (n % 2 == 0 || k.dimension() != n)
    throw InputError(fmt::format("kunneth_mu needs an odd-dimensional complex of dimension n = {}", n));
  KunnethMu out;
  out.semicharacteristic = semicharacteristic(k, n);
  IntVector fundamental;
  try {
    fundamental = k.fundamental_cycle(Coefficients::F2);
  } catch (const PreconditionError& e) {
    out.detail = e.what();
    return out;
  }
  const IsovariantStructure phi(k, 1);
  struct Element {
    int degree;
    Cochain cocycle;
  };
  std::vector<Element> basis;
  for (int p = 0; p <= n; ++p)
    for (Cochain& c : cohomology_basis(k, p, Coefficients::F2)) basis.push_back({p, std::move(c)});
  const std::size_t total = basis.size();
  F2Matrix pairing(total, total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) {
      if (basis[i].degree + basis[j].degree != n) continue;
      const Cochain cup = cup_product(phi, basis[i].degree, basis[i].cocycle, basis[j].degree, basis[j].cocycle,
                                      Coefficients::F2);
      pairing.set(i, j, evaluate(cup, fundamental) % 2 != 0);
    }
  if (pairing.rank() != total) {
    out.detail = "the mod-2 intersection pairing is singular";
    return out;
  }
  out.duality = true;
  // b_j^* = sum_l C_jl b_l with C = (P^{-1})^T; lambda(b_j^*, b_j'^*) = (C P C^T)_jj'.
  const F2Matrix c = pairing.inverse().transpose();
  const F2Matrix dual_pairing = c * pairing * c.transpose();
  int mu = 0;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j) mu ^= static_cast<int>(pairing.get(i, j) && dual_pairing.get(i, j));
  out.mu = mu;
  out.detail = fmt::format("mu = {}, semicharacteristic = {}", out.mu, out.semicharacteristic);
  return out;
}

bool kunneth_mu_check(const SimplicialComplex& k, int n) { return kunneth_mu(k, n).passed(); }

}  // namespace hopf
