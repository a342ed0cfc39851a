#include "hopf/qgroups.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>

namespace hopf {

bool is_infinite(int bound) { return bound <= kMinusInfinity || bound >= kPlusInfinity; }

std::string bound_to_string(int bound) {
  if (bound <= kMinusInfinity) return "-inf";
  if (bound >= kPlusInfinity) return "inf";
  return std::to_string(bound);
}

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

ChainComplex build_W(int i, int j) {
  if (is_infinite(i) || is_infinite(j)) throw InputError("build_W needs finite bounds");
  if (i > j) throw InputError(fmt::format("build_W: empty range [{},{}]", i, j));
  const RingSpec ring = RingSpec::group_ring(FiniteGroup::cyclic(2));
  const auto& g = ring.group_ptr();
  const auto one = GroupRingElement::basis(g, 0);
  const auto t = GroupRingElement::basis(g, 1);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(j - i + 1), 1);
  std::vector<IntMatrix> d;
  for (int r = i + 1; r <= j; ++r) d.push_back(regular_representation(ring, {{one + t.scaled(parity_sign(r))}}, 1, 1));
  return ChainComplex(ring, i, std::move(ranks), std::move(d));
}

// ---------------------------------------------------------------------------

QComplex::QComplex(std::shared_ptr<const TensorSquare> square, QKind kind, int i, int j)
    : square_(std::move(square)), kind_(kind), i_(i), j_(j) {
  if (i > j) throw InputError(fmt::format("empty Q-group range [{},{}]", bound_to_string(i), bound_to_string(j)));
}

QComplex::QComplex(const ChainComplex& c, QKind kind, int i, int j)
    : QComplex(std::make_shared<const TensorSquare>(c), kind, i, j) {}

std::vector<int> QComplex::components(int n) const {
  const ChainComplex& m = square_->complex();
  std::vector<int> out;
  if (m.is_empty()) return out;
  int lo, hi;
  if (kind_ == QKind::Symmetric) {
    lo = m.lo() - n;
    hi = m.hi() - n;
  } else {
    lo = n - m.hi();
    hi = n - m.lo();
  }
  lo = std::max(lo, i_);
  hi = std::min(hi, j_);
  for (int s = lo; s <= hi; ++s)
    if (m.zrank(module_degree(n, s)) > 0) out.push_back(s);
  return out;
}

std::size_t QComplex::dimension(int n) const {
  std::size_t total = 0;
  for (int s : components(n)) total += square_->complex().zrank(module_degree(n, s));
  return total;
}

std::size_t QComplex::offset(int n, int s) const {
  std::size_t off = 0;
  for (int t : components(n)) {
    if (t == s) return off;
    off += square_->complex().zrank(module_degree(n, t));
  }
  throw InputError(fmt::format("component {} is not present in degree {}", s, n));
}

QComplex::Coupling QComplex::coupling(int n, int to) const {
  if (kind_ == QKind::Symmetric) return {to - 1, parity_sign(static_cast<long>(n) + to - 1), parity_sign(to)};
  return {to + 1, parity_sign(static_cast<long>(n) - to - 1), parity_sign(static_cast<long>(to) + 1)};
}

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

IntMatrix one_plus_eps_t(const TensorSquare& sq, int degree, int sign, int eps) {
  const std::size_t dim = sq.complex().zrank(degree);
  IntMatrix block = IntMatrix::identity(dim) + sq.transposition(degree).scaled(eps);
  return sign == 1 ? block : -block;
}

}  // namespace

IntMatrix QComplex::differential(int n) const {
  const std::vector<int> src = components(n), dst = components(n - 1);
  IntMatrix out(dimension(n - 1), dimension(n));
  const ChainComplex& m = square_->complex();
  for (int t : dst) {
    const int deg = module_degree(n - 1, t);
    const std::size_t row = offset(n - 1, t);
    if (contains(src, t)) out.paste(row, offset(n, t), m.d(deg + 1));
    const Coupling c = coupling(n, t);
    if (contains(src, c.from)) out.paste(row, offset(n, c.from), one_plus_eps_t(*square_, deg, c.sign, c.eps));
  }
  return out;
}

std::map<int, IntVector> QComplex::apply_differential(int n, const std::map<int, IntVector>& x) const {
  std::map<int, IntVector> out;
  const ChainComplex& m = square_->complex();
  for (int t : components(n - 1)) {
    const int deg = module_degree(n - 1, t);
    IntVector acc(m.zrank(deg));
    auto it = x.find(t);
    if (it != x.end()) acc = add(acc, m.d(deg + 1) * it->second);
    const Coupling c = coupling(n, t);
    auto jt = x.find(c.from);
    if (jt != x.end() && c.from >= i_ && c.from <= j_) {
      const IntVector tv = square_->transposition(deg) * jt->second;
      IntVector term = add(jt->second, scale(tv, c.eps));
      acc = add(acc, scale(term, c.sign));
    }
    if (!is_zero(acc)) out.emplace(t, std::move(acc));
  }
  return out;
}

IntVector QComplex::pack(int n, const std::map<int, IntVector>& comps) const {
  IntVector v(dimension(n));
  for (const auto& [s, x] : comps) {
    if (is_zero(x)) continue;
    if (s < i_ || s > j_) throw InputError(fmt::format("component {} outside the range of the Q-complex", s));
    const std::size_t dim = square_->complex().zrank(module_degree(n, s));
    if (x.size() != dim) throw InputError(fmt::format("component {} has length {}, expected {}", s, x.size(), dim));
    const std::size_t off = offset(n, s);
    for (std::size_t k = 0; k < dim; ++k) v[off + k] = x[k];
  }
  return v;
}

std::map<int, IntVector> QComplex::unpack(int n, const IntVector& v) const {
  if (v.size() != dimension(n)) throw InputError("unpack: vector has wrong length");
  std::map<int, IntVector> out;
  std::size_t off = 0;
  for (int s : components(n)) {
    const std::size_t dim = square_->complex().zrank(module_degree(n, s));
    IntVector x(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + dim));
    if (!is_zero(x)) out.emplace(s, std::move(x));
    off += dim;
  }
  return out;
}

AbelianGroupPresentation QComplex::homology(int n) const {
  return homology_at(differential(n + 1), differential(n), coefficients());
}

std::string QComplex::effective_range(int n) const {
  std::vector<int> all;
  for (int k = n - 1; k <= n + 1; ++k)
    for (int s : components(k)) all.push_back(s);
  if (all.empty()) return "empty";
  const auto [lo, hi] = std::minmax_element(all.begin(), all.end());
  return fmt::format("[{},{}]", *lo, *hi);
}

// ---------------------------------------------------------------------------

const IntVector& QClass::component(int s) const {
  static const IntVector empty;
  auto it = components.find(s);
  return it == components.end() ? empty : it->second;
}

bool QClass::is_cycle() const {
  const auto d = complex->apply_differential(n, components);
  return std::all_of(d.begin(), d.end(), [&](const auto& kv) {
    return complex->coefficients() == Coefficients::F2 ? is_zero(reduce_mod2(kv.second)) : is_zero(kv.second);
  });
}

void QClass::verify() const {
  if (!is_cycle())
    throw PreconditionError(fmt::format("{} class of degree {} violates the closure relation",
                                        kind() == QKind::Symmetric ? "symmetric" : "quadratic", n));
}

QGroup compute_Q(std::shared_ptr<const QComplex> complex, int n) {
  QGroup q;
  q.complex = complex;
  q.n = n;
  q.group = complex->homology(n);
  q.effective_range = complex->effective_range(n);
  for (std::size_t g = 0; g < q.group.num_generators(); ++g)
    q.generators.push_back(QClass{complex, n, complex->unpack(n, q.group.generator(g))});
  return q;
}

QGroup symmetric_Q(const ChainComplex& c, int n, int i, int j) {
  return compute_Q(std::make_shared<const QComplex>(c, QKind::Symmetric, i, j), n);
}

QGroup quadratic_Q(const ChainComplex& c, int n, int i, int j) {
  return compute_Q(std::make_shared<const QComplex>(c, QKind::Quadratic, i, j), n);
}

QGroup hyperquadratic_Q(const ChainComplex& c, int n, int k) {
  if (k < 1) throw InputError("hyperquadratic Q-groups need k >= 1");
  if (is_infinite(k)) return symmetric_Q(c, n, kMinusInfinity, kPlusInfinity);
  return symmetric_Q(c, n, -k, k - 1);
}

IntVector class_coordinates(const QGroup& group, const QClass& x) {
  if (x.n != group.n) throw InputError("class degree does not match the group");
  return group.group.coordinates(group.complex->pack(x.n, x.components));
}

// ---------------------------------------------------------------------------

namespace {

using BlockFn = std::function<void(int s, const std::function<void(int t, const IntMatrix& block)>& emit)>;

IntMatrix assemble(const QComplex& source, int n, const QComplex& target, int tn, const BlockFn& fn) {
  IntMatrix out(target.dimension(tn), source.dimension(n));
  const std::vector<int> dst = target.components(tn);
  for (int s : source.components(n)) {
    fn(s, [&](int t, const IntMatrix& block) {
      if (!contains(dst, t)) {
        if (block.is_zero()) return;
        throw InputError(fmt::format("structure map leaves the target range (component {})", t));
      }
      out.paste(target.offset(tn, t), source.offset(n, s), block);
    });
  }
  return out;
}

void require_same_base(const QComplex& a, const QComplex& b) {
  if (a.square_ptr() != b.square_ptr() && !(a.base().describe() == b.base().describe()))
    throw InputError("structure map between Q-complexes of different chain complexes");
}

QClass apply_matrix(const IntMatrix& m, const QClass& x, std::shared_ptr<const QComplex> target, int tn) {
  const IntVector v = m * x.packed();
  return QClass{target, tn, target->unpack(tn, v)};
}

}  // namespace

IntMatrix symmetrization_matrix(const QComplex& source, int n, const QComplex& target) {
  if (source.kind() != QKind::Quadratic || target.kind() != QKind::Symmetric)
    throw InputError("symmetrization maps quadratic to symmetric complexes");
  if (source.range_lo() != 0 || target.range_lo() > 0 || target.range_hi() < 0)
    throw InputError("symmetrization needs a quadratic range [0, k-1] and a symmetric range containing 0");
  require_same_base(source, target);
  return assemble(source, n, target, n, [&](int s, const auto& emit) {
    if (s == 0) emit(0, one_plus_eps_t(source.square(), n, 1, 1));
  });
}

IntMatrix restriction_matrix(const QComplex& source, int n, const QComplex& target, int target_n) {
  if (source.kind() != target.kind()) throw InputError("restriction between Q-complexes of different kinds");
  require_same_base(source, target);
  const int lo = target.range_lo(), hi = target.range_hi();
  const auto& m = source.square().complex();
  return assemble(source, n, target, target_n, [&](int s, const auto& emit) {
    if (s >= lo && s <= hi) emit(s, IntMatrix::identity(m.zrank(source.module_degree(n, s))));
  });
}

IntMatrix J_matrix(const QComplex& source, int n, const QComplex& target) {
  if (source.kind() != QKind::Symmetric || target.kind() != QKind::Symmetric)
    throw InputError("J maps symmetric complexes");
  if (target.range_lo() > source.range_lo() || target.range_hi() < source.range_hi())
    throw InputError("J: target range must contain the source range");
  return restriction_matrix(source, n, target, n);
}

IntMatrix H_matrix(const QComplex& source, int n, const QComplex& target) {
  if (source.kind() != QKind::Symmetric || target.kind() != QKind::Quadratic)
    throw InputError("H maps symmetric (hyperquadratic) to quadratic complexes");
  require_same_base(source, target);
  const auto& m = source.square().complex();
  return assemble(source, n, target, n - 1, [&](int s, const auto& emit) {
    const int t = -1 - s;
    if (t >= target.range_lo() && t <= target.range_hi())
      emit(t, IntMatrix::identity(m.zrank(source.module_degree(n, s))));
  });
}

IntMatrix S_matrix(const QComplex& source, int n, const QComplex& target) {
  if (source.kind() != QKind::Symmetric || target.kind() != QKind::Symmetric)
    throw InputError("S maps symmetric complexes");
  const TensorSquare& a = source.square();
  const TensorSquare& b = target.square();
  const ChainComplex& c = a.left();
  const ChainComplex& sc = b.left();
  if (!(c.ring() == sc.ring()) || (!c.is_empty() && sc.lo() != c.lo() + 1))
    throw InputError("S: target must be built on the suspension of the source complex");
  return assemble(source, n, target, n + 1, [&](int s, const auto& emit) {
    const int deg = n + s;
    IntMatrix block(b.complex().zrank(deg + 2), a.complex().zrank(deg));
    for (std::size_t idx = 0; idx < block.cols(); ++idx) {
      const auto e = a.element(deg, idx);
      block(b.index(e.p + 1, e.i, e.q + 1, e.j, e.g), idx) = parity_sign(e.p);
    }
    emit(s + 1, block);
  });
}

IntMatrix connecting_matrix(const QComplex& source, int n, const QComplex& ambient, const QComplex& target) {
  const IntMatrix extend = restriction_matrix(source, n, ambient, n);
  const IntMatrix boundary = ambient.differential(n) * extend;
  return restriction_matrix(ambient, n - 1, target, n - 1) * boundary;
}

QClass symmetrization(const QClass& psi, std::shared_ptr<const QComplex> target) {
  return apply_matrix(symmetrization_matrix(*psi.complex, psi.n, *target), psi, target, psi.n);
}

QClass J_map(const QClass& phi, std::shared_ptr<const QComplex> target) {
  return apply_matrix(J_matrix(*phi.complex, phi.n, *target), phi, target, phi.n);
}

QClass H_map(const QClass& phi, std::shared_ptr<const QComplex> target) {
  return apply_matrix(H_matrix(*phi.complex, phi.n, *target), phi, target, phi.n - 1);
}

QClass S_map(const QClass& phi, std::shared_ptr<const QComplex> target) {
  return apply_matrix(S_matrix(*phi.complex, phi.n, *target), phi, target, phi.n + 1);
}

// ---------------------------------------------------------------------------

SequenceCheck verify_exact_sequence(const std::string& label, const InducedMap& f, const InducedMap& g) {
  const ExactnessReport r = verify_exact(f, g);
  return {label, r.exact, r.diagnostics};
}

std::vector<SequenceCheck> check_range_sequences(const ChainComplex& c, int n, int i, int j, int k) {
  if (!(i <= j && j <= k)) throw InputError("range sequence needs i <= j <= k");
  const auto sq = std::make_shared<const TensorSquare>(c);
  std::vector<SequenceCheck> out;
  for (QKind kind : {QKind::Symmetric, QKind::Quadratic}) {
    const bool sym = kind == QKind::Symmetric;
    const std::string tag = sym ? "symmetric" : "quadratic";
    const QComplex low(sq, kind, i, j), high(sq, kind, j + 1, k + 1), all(sq, kind, i, k + 1);
    // Symmetric: high -> all -> low -> high[n-1]; quadratic: low -> all -> high -> low[n-1].
    const QComplex& first = sym ? high : low;
    const QComplex& third = sym ? low : high;
    auto group = [](const QComplex& q, int deg) { return q.homology(deg); };
    const auto a = group(first, n), b = group(all, n), cc = group(third, n), a1 = group(first, n - 1);
    const auto b1 = group(all, n - 1);
    const auto a_plus = group(third, n + 1);
    const InducedMap inc = induced_map(a, b, restriction_matrix(first, n, all, n));
    const InducedMap res = induced_map(b, cc, restriction_matrix(all, n, third, n));
    const InducedMap con = induced_map(cc, a1, connecting_matrix(third, n, all, first));
    const InducedMap inc1 = induced_map(a1, b1, restriction_matrix(first, n - 1, all, n - 1));
    const InducedMap con_prev = induced_map(a_plus, a, connecting_matrix(third, n + 1, all, first));
    const std::string where = fmt::format("{} [{},{}] c [{},{}] at n={}", tag, i, j, i, k + 1, n);
    out.push_back(verify_exact_sequence(where + " (connecting, inclusion)", con_prev, inc));
    out.push_back(verify_exact_sequence(where + " (inclusion, restriction)", inc, res));
    out.push_back(verify_exact_sequence(where + " (restriction, connecting)", res, con));
    out.push_back(verify_exact_sequence(where + " (connecting, inclusion; n-1)", con, inc1));
  }
  return out;
}

std::vector<SequenceCheck> check_symmetric_quadratic_sequence(const ChainComplex& c, int n) {
  const auto sq = std::make_shared<const TensorSquare>(c);
  const QComplex quad(sq, QKind::Quadratic, 0, kPlusInfinity);
  const QComplex sym(sq, QKind::Symmetric, 0, kPlusInfinity);
  const QComplex hyp(sq, QKind::Symmetric, kMinusInfinity, kPlusInfinity);
  const auto qn = quad.homology(n), sn = sym.homology(n), hn = hyp.homology(n), qn1 = quad.homology(n - 1),
             sn1 = sym.homology(n - 1);
  const InducedMap one_t = induced_map(qn, sn, symmetrization_matrix(quad, n, sym));
  const InducedMap j = induced_map(sn, hn, J_matrix(sym, n, hyp));
  const InducedMap h = induced_map(hn, qn1, H_matrix(hyp, n, quad));
  const InducedMap one_t1 = induced_map(qn1, sn1, symmetrization_matrix(quad, n - 1, sym));
  return {
      verify_exact_sequence(fmt::format("Q_{0} -> Q^{0} -> Qhat^{0}", n), one_t, j),
      verify_exact_sequence(fmt::format("Q^{0} -> Qhat^{0} -> Q_{1}", n, n - 1), j, h),
      verify_exact_sequence(fmt::format("Qhat^{0} -> Q_{1} -> Q^{1}", n, n - 1), h, one_t1),
  };
}

SequenceCheck check_hyperquadratic_suspension(const ChainComplex& c, int n) {
  const QComplex a(c, QKind::Symmetric, kMinusInfinity, kPlusInfinity);
  const QComplex b(suspension(c), QKind::Symmetric, kMinusInfinity, kPlusInfinity);
  const auto ha = a.homology(n), hb = b.homology(n + 1);
  const ExactnessReport r = verify_isomorphism(induced_map(ha, hb, S_matrix(a, n, b)));
  return {fmt::format("S: Qhat^{}(C) -> Qhat^{}(SC)", n, n + 1), r.exact, r.diagnostics};
}

}  // namespace hopf
