#include "hopf/quadratic.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "hopf/f2_linalg.hpp"
#include "hopf/simplicial.hpp"

namespace hopf {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

IntVector normalize(Coefficients c, IntVector v) { return c == Coefficients::F2 ? reduce_mod2(v) : v; }
IntMatrix normalize(Coefficients c, const IntMatrix& m) { return c == Coefficients::F2 ? m.reduced_mod2() : m; }

std::optional<IntVector> solve_in(Coefficients c, const IntMatrix& m, const IntVector& b) {
  if (c == Coefficients::Integers) return solve_linear(m, b);
  if (m.rows() == 0) return IntVector(m.cols());
  auto x = F2Matrix::from_int(m).solve(to_bits(reduce_mod2(b)));
  if (!x) return std::nullopt;
  return from_bits(*x);
}

bool same_complex(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.ring() == b.ring()) || a.is_empty() != b.is_empty()) return false;
  if (a.is_empty()) return true;
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int r = a.lo(); r <= a.hi(); ++r) {
    if (a.rank(r) != b.rank(r)) return false;
    if (r > a.lo() && !(a.d(r) == b.d(r))) return false;
  }
  return true;
}

void require_plain_ring(const ChainComplex& c, const char* what) {
  if (c.ring().is_group_ring())
    throw UnsupportedError(fmt::format("{} is implemented over Z and F2 only", what));
}

IntVector component_or_zero(const QClass& x, int s) {
  const IntVector& v = x.component(s);
  if (!v.empty()) return v;
  const int deg = x.complex->module_degree(x.n, s);
  return IntVector(x.complex->square().complex().zrank(deg));
}

// Moves theta onto the [0, infinity) complex when it is still a cycle there.
QClass widen_if_complete(const QClass& theta) {
  if (is_infinite(theta.complex->range_hi())) return theta;
  auto wide = std::make_shared<const QComplex>(theta.complex->square_ptr(), QKind::Symmetric, 0, kPlusInfinity);
  const int top = theta.complex->range_hi();
  QClass out{wide, theta.n, {}};
  for (int s : wide->components(theta.n))
    out.components.emplace(s, s <= top ? component_or_zero(theta, s) : component_or_zero(out, s));
  return out.is_cycle() ? out : theta;
}

}  // namespace

// ---------------------------------------------------------------------------

SymmetricStructure::SymmetricStructure(ChainComplex c, int order, std::map<std::pair<int, int>, IntMatrix> components,
                                       int degree)
    : c_(std::move(c)), order_(order), degree_(degree), phi_(std::move(components)) {
  if (order < 1) throw InputError("a symmetric structure needs order >= 1");
  q_ = std::make_shared<const QComplex>(c_, QKind::Symmetric, 0, order - 1);
  const Coefficients cf = c_.ring().coefficients();
  const ChainComplex& m = q_->square().complex();
  for (auto& [key, mat] : phi_) {
    const auto [s, r] = key;
    if (s < 0 || s >= order) throw InputError(fmt::format("structure component {} outside [0,{}]", s, order - 1));
    if (mat.rows() != m.zrank(r + degree + s) || mat.cols() != c_.zrank(r))
      throw InputError(fmt::format("structure component ({},{}) has shape {}x{}, expected {}x{}", s, r, mat.rows(),
                                   mat.cols(), m.zrank(r + degree + s), c_.zrank(r)));
    mat = normalize(cf, mat);
  }
  if (c_.is_empty()) return;
  auto packed = [&](int r) {
    IntMatrix p(q_->dimension(r + degree), c_.zrank(r));
    for (int s : q_->components(r + degree)) p.paste(q_->offset(r + degree, s), 0, component(s, r));
    return p;
  };
  for (int r = c_.lo(); r <= c_.hi() + 1; ++r) {
    const IntMatrix lhs = q_->differential(r + degree) * packed(r);
    const IntMatrix rhs = (degree % 2 == 0 ? packed(r - 1) : -packed(r - 1)) * c_.d(r);
    if (!(normalize(cf, lhs - rhs).is_zero()))
      throw PreconditionError(fmt::format("symmetric structure is not a chain map in degree {}", r));
  }
}

SymmetricStructure SymmetricStructure::diagonal(const ChainComplex& c, int order) {
  std::vector<int> degrees;
  if (!c.is_empty())
    for (int r = c.lo(); r <= c.hi(); ++r)
      if (c.rank(r) > 0) degrees.push_back(r);
  if (degrees.size() > 1) throw InputError("the diagonal structure needs a complex concentrated in one degree");
  std::map<std::pair<int, int>, IntMatrix> comps;
  if (!degrees.empty()) {
    require_plain_ring(c, "the diagonal structure");
    const int m = degrees.front();
    const TensorSquare sq(c);
    IntMatrix phi0(sq.complex().zrank(2 * m), c.zrank(m));
    for (std::size_t i = 0; i < c.zrank(m); ++i) phi0(sq.index(m, i, m, i), i) = 1;
    comps.emplace(std::make_pair(0, m), phi0);
    return SymmetricStructure(c, order, std::move(comps), m);
  }
  return SymmetricStructure(c, order, std::move(comps));
}

SymmetricStructure SymmetricStructure::from_isovariant(const IsovariantStructure& phi, Coefficients coefficients) {
  const SimplicialComplex& k = phi.complex();
  ChainComplex c = k.chain_complex(coefficients);
  const TensorSquare sq(c);
  std::map<std::pair<int, int>, IntMatrix> comps;
  for (int s = 0; s < phi.order(); ++s)
    for (int r = 0; r <= k.dimension(); ++r) {
      const IntMatrix m = phi.matrix(s, r, sq);
      comps.emplace(std::make_pair(s, r), parity_sign(static_cast<long>(r) * s) == 1 ? m : -m);
    }
  return SymmetricStructure(std::move(c), phi.order(), std::move(comps));
}

IntMatrix SymmetricStructure::component(int s, int r) const {
  auto it = phi_.find({s, r});
  if (it != phi_.end()) return it->second;
  return IntMatrix(q_->square().complex().zrank(r + degree_ + s), c_.zrank(r));
}

QClass SymmetricStructure::apply(int r, const IntVector& x) const {
  if (x.size() != c_.zrank(r)) throw InputError(fmt::format("chain has length {}, expected {}", x.size(), c_.zrank(r)));
  QClass out{q_, r + degree_, {}};
  const Coefficients cf = c_.ring().coefficients();
  for (int s : q_->components(r + degree_)) out.components.emplace(s, normalize(cf, component(s, r) * x));
  return out;
}

// ---------------------------------------------------------------------------

void RefinementProblem::verify() const {
  require_plain_ring(f.source(), "the quadratic construction");
  if (!same_complex(f.source(), phi_c.complex()))
    throw InputError("the source structure is not defined on the source of f");
  if (!same_complex(f.target(), phi_d.complex()))
    throw InputError("the target structure is not defined on the target of f");
  if (k < 1) throw InputError("the stabilization order k must be >= 1");
  if (phi_c.degree() != phi_d.degree())
    throw InputError(fmt::format("structures of degrees {} and {} do not match", phi_c.degree(), phi_d.degree()));
  const ChainComplex& c = f.source();
  const int r = n - phi_c.degree();
  if (cycle.size() != c.zrank(r))
    throw InputError(fmt::format("cycle has length {}, expected {}", cycle.size(), c.zrank(r)));
  if (!is_zero(normalize(c.ring().coefficients(), c.d(r) * cycle)))
    throw PreconditionError(fmt::format("the given {}-chain is not a cycle", r));
}

IntMatrix tensor_square_map(const ChainMap& f, const TensorSquare& source, const TensorSquare& target, int q) {
  require_plain_ring(f.source(), "(f (x) f)");
  IntMatrix out(target.complex().zrank(q), source.complex().zrank(q));
  std::map<int, IntMatrix> cache;
  auto at = [&](int r) -> const IntMatrix& {
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, f.at(r)).first;
    return it->second;
  };
  for (std::size_t idx = 0; idx < out.cols(); ++idx) {
    const auto e = source.element(q, idx);
    const IntMatrix& fp = at(e.p);
    const IntMatrix& fq = at(e.q);
    for (std::size_t a = 0; a < fp.rows(); ++a) {
      if (fp(a, e.i) == 0) continue;
      for (std::size_t b = 0; b < fq.rows(); ++b)
        if (fq(b, e.j) != 0) out(target.index(e.p, a, e.q, b), idx) += fp(a, e.i) * fq(b, e.j);
    }
  }
  return out;
}

SymmetricClass obstruction_theta(const RefinementProblem& problem) {
  problem.verify();
  const int order = std::min(problem.phi_c.order(), problem.phi_d.order());
  std::shared_ptr<const QComplex> target = problem.phi_d.qcomplex();
  if (target->range_hi() != order - 1)
    target = std::make_shared<const QComplex>(target->square_ptr(), QKind::Symmetric, 0, order - 1);
  const Coefficients cf = problem.f.source().ring().coefficients();
  const int r = problem.n - problem.phi_c.degree();
  const QClass pc = problem.phi_c.apply(r, problem.cycle);
  const QClass pd = problem.phi_d.apply(r, normalize(cf, problem.f.at(r) * problem.cycle));
  SymmetricClass theta{target, problem.n, {}};
  for (int s : target->components(problem.n)) {
    const int deg = problem.n + s;
    const IntMatrix ff = tensor_square_map(problem.f, problem.phi_c.qcomplex()->square(), target->square(), deg);
    const IntVector pushed = pc.component(s).empty() ? IntVector(ff.rows()) : ff * pc.component(s);
    theta.components.emplace(s, normalize(cf, subtract(pushed, component_or_zero(pd, s))));
  }
  theta.verify();
  return widen_if_complete(theta);
}

// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const QComplex> extended_complex(const SymmetricClass& theta, int k) {
  return std::make_shared<const QComplex>(theta.complex->square_ptr(), QKind::Symmetric, -k,
                                          theta.complex->range_hi());
}

void require_theta(const SymmetricClass& theta) {
  if (theta.kind() != QKind::Symmetric || theta.complex->range_lo() != 0)
    throw InputError("theta must be a symmetric class over a range [0, j]");
  theta.verify();
}

}  // namespace

bool NullHomotopyCertificate::verify() const {
  const QComplex& ambient = *delta.complex;
  const Coefficients cf = ambient.coefficients();
  const IntVector lhs = ambient.differential(delta.n) * delta.packed();
  const IntVector rhs = J_matrix(*theta.complex, theta.n, ambient) * theta.packed();
  return delta.n == theta.n + 1 && is_zero(normalize(cf, subtract(lhs, rhs)));
}

std::optional<NullHomotopyCertificate> solve_null_homotopy(const SymmetricClass& theta, int k) {
  if (k < 1) throw InputError("the stabilization order k must be >= 1");
  require_theta(theta);
  auto ambient = extended_complex(theta, k);
  const IntVector rhs = J_matrix(*theta.complex, theta.n, *ambient) * theta.packed();
  const auto x = solve_in(ambient->coefficients(), ambient->differential(theta.n + 1), rhs);
  if (!x) return std::nullopt;
  NullHomotopyCertificate cert{theta, k, QClass{ambient, theta.n + 1, ambient->unpack(theta.n + 1, *x)}};
  if (!cert.verify()) throw std::logic_error("null-homotopy solution fails its own identity");
  return cert;
}

QuadraticClass quadratic_from_certificate(const NullHomotopyCertificate& cert) {
  if (!cert.verify()) throw PreconditionError("the null-homotopy certificate does not verify");
  const SymmetricClass& theta = cert.theta;
  const int n = theta.n;
  const Coefficients cf = theta.complex->coefficients();
  auto target = std::make_shared<const QComplex>(theta.complex->square_ptr(), QKind::Quadratic, 0, cert.k - 1);
  QuadraticClass psi{target, n, {}};
  for (int t : target->components(n)) {
    const IntVector d = component_or_zero(cert.delta, -1 - t);
    psi.components.emplace(t, normalize(cf, scale(d, parity_sign(n))));
  }
  psi.verify();
  const SymmetricClass sym = symmetrization(psi, theta.complex);
  const IntVector diff = normalize(cf, subtract(sym.packed(), theta.packed()));
  if (!solve_in(cf, theta.complex->differential(n + 1), diff))
    throw PreconditionError("(1 + T) psi - theta is not a boundary");
  return psi;
}

bool hyperquadratic_image_vanishes(const SymmetricClass& theta) {
  require_theta(theta);
  if (!is_infinite(theta.complex->range_hi()))
    throw InputError("the hyperquadratic image needs theta over [0, infinity)");
  auto ambient = std::make_shared<const QComplex>(theta.complex->square_ptr(), QKind::Symmetric, kMinusInfinity,
                                                  kPlusInfinity);
  const IntVector rhs = J_matrix(*theta.complex, theta.n, *ambient) * theta.packed();
  return solve_in(ambient->coefficients(), ambient->differential(theta.n + 1), rhs).has_value();
}

std::string RefinementResult::status() const {
  if (certificate) return fmt::format("refined at k = {}", k);
  if (hyperquadratic_obstruction) return "obstructed (hyperquadratic class nonzero)";
  return fmt::format("no refinement for k <= {}", k);
}

RefinementResult refine(const SymmetricClass& theta, int kmax) {
  require_theta(theta);
  if (kmax <= 0) kmax = std::max(1, theta.n + 2);
  RefinementResult out;
  for (int k = 1; k <= kmax; ++k) {
    out.k = k;
    out.certificate = solve_null_homotopy(theta, k);
    if (out.certificate) {
      out.psi = quadratic_from_certificate(*out.certificate);
      return out;
    }
  }
  if (is_infinite(theta.complex->range_hi())) out.hyperquadratic_obstruction = !hyperquadratic_image_vanishes(theta);
  return out;
}

RefinementResult refine(const RefinementProblem& problem, int kmax) { return refine(obstruction_theta(problem), kmax); }

// ---------------------------------------------------------------------------

ChainMap slant_map(const TensorSquare& square, int n, const IntVector& element) {
  const ChainComplex& c = square.left();
  require_plain_ring(c, "the slant map");
  if (element.size() != square.complex().zrank(n))
    throw InputError(fmt::format("element has length {}, expected {}", element.size(), square.complex().zrank(n)));
  ChainComplex dual_complex = dual(c, n);
  std::map<int, IntMatrix> comps;
  if (!c.is_empty())
    for (int r = std::max(c.lo(), n - c.hi()); r <= std::min(c.hi(), n - c.lo()); ++r)
      comps.emplace(r, IntMatrix(c.zrank(r), c.zrank(n - r)));
  for (std::size_t idx = 0; idx < element.size(); ++idx) {
    if (element[idx] == 0) continue;
    const auto e = square.element(n, idx);
    comps.at(e.q)(e.j, e.i) += element[idx];
  }
  const Coefficients cf = c.ring().coefficients();
  for (auto& [r, m] : comps) m = normalize(cf, m);
  return ChainMap(std::move(dual_complex), c, std::move(comps));
}

namespace {

void require_ultra(const QuadraticClass& psi) {
  if (psi.kind() != QKind::Quadratic || psi.complex->range_lo() != 0 || psi.complex->range_hi() != 0)
    throw InputError("the ultraquadratic pairing needs a quadratic class with range [0,0] (k = 1)");
}

}  // namespace

ChainMap ultraquadratic_pairing(const QuadraticClass& psi) {
  require_ultra(psi);
  return slant_map(psi.complex->square(), psi.n, component_or_zero(psi, 0));
}

ChainMap symmetrized_pairing(const QuadraticClass& psi) {
  require_ultra(psi);
  const TensorSquare& sq = psi.complex->square();
  const IntVector p = component_or_zero(psi, 0);
  return slant_map(sq, psi.n, add(p, sq.transposition(psi.n) * p));
}

// ---------------------------------------------------------------------------

SpectralResult spectral_quadratic(const RefinementProblem& problem, int kmax) {
  SymmetricClass theta = obstruction_theta(problem);
  MappingCone mc = cone(problem.f);
  auto square = std::make_shared<const TensorSquare>(mc.complex);
  auto target = std::make_shared<const QComplex>(square, QKind::Symmetric, 0, theta.complex->range_hi());
  const Coefficients cf = theta.complex->coefficients();
  SymmetricClass pushed{target, theta.n, {}};
  for (int s : target->components(theta.n)) {
    const IntMatrix gg = tensor_square_map(mc.g, theta.complex->square(), *square, theta.n + s);
    pushed.components.emplace(s, normalize(cf, gg * component_or_zero(theta, s)));
  }
  pushed.verify();
  RefinementResult r = refine(pushed, kmax);
  return SpectralResult{std::move(mc), std::move(theta), std::move(pushed), std::move(r)};
}

// ---------------------------------------------------------------------------

KernelForm kernel_form(const QuadraticClass& psi, int m) {
  if (psi.kind() != QKind::Quadratic) throw InputError("kernel_form needs a quadratic class");
  if (psi.n != 2 * m) throw InputError(fmt::format("kernel_form: class of degree {} is not of degree 2m = {}", psi.n, 2 * m));
  const TensorSquare& sq = psi.complex->square();
  const ChainComplex& c = sq.left();
  require_plain_ring(c, "kernel_form");
  const Coefficients cf = c.ring().coefficients();
  const int eps = m % 2 == 0 ? 1 : -1;

  KernelForm out;
  const std::size_t dim = c.zrank(m);
  if (dim > 0) {
    const AbelianGroupPresentation h = homology_at(c.d(m).transpose(), c.d(m + 1).transpose(), cf);
    const std::size_t count = cf == Coefficients::F2 ? h.num_generators() : h.free_rank();
    out.torsion_discarded = cf == Coefficients::Integers && !h.torsion().empty();
    for (std::size_t g = 0; g < count; ++g) out.basis.push_back(h.generator(g));
  }

  const IntVector psi0 = component_or_zero(psi, 0);
  const IntVector phi0 = add(psi0, sq.transposition(psi.n) * psi0);
  auto pair = [&](const IntVector& element, const IntVector& x, const IntVector& y) {
    Integer v = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (y[j] != 0) v += x[i] * y[j] * element[sq.index(m, i, m, j)];
    }
    return v;
  };
  auto mu = [&](const IntVector& x) { return QValue(cf, eps, pair(psi0, x, x)); };

  const std::size_t r = out.basis.size();
  IntMatrix lambda(r, r);
  std::vector<Integer> mus;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) lambda(a, b) = pair(phi0, out.basis[a], out.basis[b]);
    mus.push_back(mu(out.basis[a]).value());
  }
  out.form = QuadraticForm(cf, eps, lambda, mus);

  // The axioms, evaluated on the chain-level representatives.
  for (std::size_t a = 0; a < r; ++a) {
    const IntVector& x = out.basis[a];
    const QValue mx = mu(x);
    Integer diag_defect = lambda(a, a) - (1 + eps) * mx.value();
    if (cf == Coefficients::F2) diag_defect %= 2;
    if (diag_defect != 0)
      throw PreconditionError("kernel form violates lambda(x,x) = (1 + eps) mu(x)");
    for (long s : {-1L, 2L, 3L})
      if (!(mu(scale(x, s)) == QValue(cf, eps, s * s * mx.value())))
        throw PreconditionError("kernel form violates mu(ax) = a^2 mu(x)");
    for (std::size_t b = a + 1; b < r; ++b) {
      const QValue lhs = mu(add(x, out.basis[b]));
      const QValue rhs = mx + mu(out.basis[b]) + QValue(cf, eps, lambda(a, b));
      if (!(lhs == rhs)) throw PreconditionError("kernel form violates mu(x + y) = mu(x) + mu(y) + lambda(x, y)");
    }
  }
  return out;
}

}  // namespace hopf
