#include "hopf/chain_complex.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace hopf {

namespace {

IntMatrix normalize_entries(const RingSpec& ring, const IntMatrix& m) {
  return ring.kind() == RingSpec::Kind::F2 ? m.reduced_mod2() : m;
}

bool vanishes(const RingSpec& ring, const IntMatrix& m) {
  return ring.kind() == RingSpec::Kind::F2 ? m.reduced_mod2().is_zero() : m.is_zero();
}

}  // namespace

ChainComplex::ChainComplex(RingSpec ring, int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> d)
    : ring_(std::move(ring)) {
  if (ranks.size() > 1 && d.size() != ranks.size() - 1)
    throw InputError(fmt::format("chain complex: expected {} differentials, got {}", ranks.size() - 1, d.size()));
  // Trim zero modules at both ends so that lo/hi describe the support.
  std::size_t a = 0, b = ranks.size();
  while (a < b && ranks[a] == 0) ++a;
  while (b > a && ranks[b - 1] == 0) --b;
  if (a == b) return;
  ranks_.assign(ranks.begin() + static_cast<std::ptrdiff_t>(a), ranks.begin() + static_cast<std::ptrdiff_t>(b));
  d = std::vector<IntMatrix>(std::make_move_iterator(d.begin() + static_cast<std::ptrdiff_t>(a)),
                             std::make_move_iterator(d.begin() + static_cast<std::ptrdiff_t>(b - 1)));
  lo_ = lo + static_cast<int>(a);
  hi_ = lo_ + static_cast<int>(ranks_.size()) - 1;

  const std::size_t mult = ring_.multiplier();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].rows() != ranks_[k] * mult || d[k].cols() != ranks_[k + 1] * mult)
      throw InputError(fmt::format("differential from degree {} has shape {}x{}, expected {}x{}", lo_ + k + 1,
                                   d[k].rows(), d[k].cols(), ranks_[k] * mult, ranks_[k + 1] * mult));
    d[k] = normalize_entries(ring_, d[k]);
    if (ring_.is_group_ring()) ring_entries(ring_, d[k]);  // throws if not equivariant
  }
  d_ = std::move(d);
  for (std::size_t k = 0; k + 1 < d_.size(); ++k)
    if (!vanishes(ring_, d_[k] * d_[k + 1]))
      throw PreconditionError(fmt::format("not a complex: d_{} d_{} != 0", lo_ + k + 1, lo_ + k + 2));
}

ChainComplex ChainComplex::zero(RingSpec ring) { return ChainComplex(std::move(ring), 0, {}, {}); }

ChainComplex ChainComplex::sphere(int m, RingSpec ring) { return ChainComplex(std::move(ring), m, {1}, {}); }

std::size_t ChainComplex::rank(int r) const {
  if (r < lo_ || r > hi_) return 0;
  return ranks_[static_cast<std::size_t>(r - lo_)];
}

IntMatrix ChainComplex::d(int r) const {
  if (r <= lo_ || r > hi_) return IntMatrix(zrank(r - 1), zrank(r));
  return d_[static_cast<std::size_t>(r - lo_ - 1)];
}

AbelianGroupPresentation ChainComplex::homology(int r) const {
  return homology_at(d(r + 1), d(r), ring_.coefficients());
}

bool ChainComplex::is_acyclic() const {
  for (int r = lo_; r <= hi_; ++r)
    if (!homology(r).is_trivial()) return false;
  return true;
}

std::string ChainComplex::describe() const {
  if (is_empty()) return fmt::format("zero complex over {}", ring_.name());
  std::string ranks;
  for (std::size_t k = 0; k < ranks_.size(); ++k) ranks += (k ? "," : "") + std::to_string(ranks_[k]);
  return fmt::format("complex over {} in degrees {}..{} with ranks [{}]", ring_.name(), lo_, hi_, ranks);
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.ring() == target_.ring())) throw InputError("chain map between complexes over different rings");
  const RingSpec& ring = source_.ring();
  for (auto& [r, m] : components) {
    if (m.rows() != target_.zrank(r) || m.cols() != source_.zrank(r))
      throw InputError(fmt::format("chain map component in degree {} has the wrong shape", r));
    if (ring.is_group_ring()) ring_entries(ring, m);
    if (!vanishes(ring, m)) f_.emplace(r, normalize_entries(ring, m));
  }
  const int lo = std::min(source_.lo(), target_.lo());
  const int hi = std::max(source_.hi(), target_.hi()) + 1;
  for (int r = lo; r <= hi; ++r)
    if (!vanishes(ring, target_.d(r) * at(r) - at(r - 1) * source_.d(r)))
      throw PreconditionError(fmt::format("not a chain map: d f != f d in degree {}", r));
}

ChainMap ChainMap::identity(const ChainComplex& c) { return scalar(c, 1); }

ChainMap ChainMap::scalar(const ChainComplex& c, long k) {
  std::map<int, IntMatrix> f;
  for (int r = c.lo(); r <= c.hi(); ++r) f.emplace(r, IntMatrix::identity(c.zrank(r)).scaled(k));
  return ChainMap(c, c, std::move(f));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) { return ChainMap(source, target, {}); }

IntMatrix ChainMap::at(int r) const {
  auto it = f_.find(r);
  if (it != f_.end()) return it->second;
  return IntMatrix(target_.zrank(r), source_.zrank(r));
}

ChainMap ChainMap::compose_after(const ChainMap& first) const {
  std::map<int, IntMatrix> f;
  for (int r = first.source().lo(); r <= first.source().hi(); ++r) f.emplace(r, at(r) * first.at(r));
  return ChainMap(first.source(), target_, std::move(f));
}

bool ChainHomotopy::verify(const ChainMap& f, const ChainMap& g) const {
  const ChainComplex& c = f.source();
  const ChainComplex& d = f.target();
  auto h_at = [&](int r) {
    auto it = h.find(r);
    return it != h.end() ? it->second : IntMatrix(d.zrank(r + 1), c.zrank(r));
  };
  for (int r = c.lo(); r <= c.hi(); ++r) {
    const IntMatrix lhs = f.at(r) - g.at(r);
    const IntMatrix rhs = d.d(r + 1) * h_at(r) + h_at(r - 1) * c.d(r);
    if (!vanishes(c.ring(), lhs - rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ChainComplex dual(const ChainComplex& c, int n) {
  if (c.is_empty()) return ChainComplex::zero(c.ring());
  // (C^{n-*})_r = C^{n-r}; degrees run over n - hi .. n - lo.
  const int lo = n - c.hi(), hi = n - c.lo();
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int r = lo; r <= hi; ++r) ranks.push_back(c.rank(n - r));
  for (int r = lo + 1; r <= hi; ++r) {
    const IntMatrix m = dual_matrix(c.ring(), c.d(n - r + 1));
    d.push_back(r % 2 == 0 ? m : -m);
  }
  return ChainComplex(c.ring(), lo, std::move(ranks), std::move(d));
}

ChainComplex suspension(const ChainComplex& c, int times) {
  if (c.is_empty()) return c;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int r = c.lo(); r <= c.hi(); ++r) ranks.push_back(c.rank(r));
  for (int r = c.lo() + 1; r <= c.hi(); ++r) d.push_back(c.d(r));
  return ChainComplex(c.ring(), c.lo() + times, std::move(ranks), std::move(d));
}

MappingCone cone(const ChainMap& f) {
  const ChainComplex& c = f.source();
  const ChainComplex& dd = f.target();
  const RingSpec& ring = c.ring();
  const ChainComplex sc = suspension(c);
  int lo = std::min(dd.is_empty() ? sc.lo() : dd.lo(), sc.is_empty() ? dd.lo() : sc.lo());
  int hi = std::max(dd.is_empty() ? sc.hi() : dd.hi(), sc.is_empty() ? dd.hi() : sc.hi());
  if (dd.is_empty() && sc.is_empty()) {
    const ChainComplex z = ChainComplex::zero(ring);
    return {z, ChainMap(dd, z, {}), ChainMap(z, sc, {})};
  }

  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int r = lo; r <= hi; ++r) ranks.push_back(dd.rank(r) + c.rank(r - 1));
  for (int r = lo + 1; r <= hi; ++r) {
    IntMatrix m(dd.zrank(r - 1) + c.zrank(r - 2), dd.zrank(r) + c.zrank(r - 1));
    m.paste(0, 0, dd.d(r));
    const IntMatrix fr = f.at(r - 1);
    m.paste(0, dd.zrank(r), r % 2 == 0 ? fr : -fr);
    m.paste(dd.zrank(r - 1), dd.zrank(r), c.d(r - 1));
    d.push_back(std::move(m));
  }
  ChainComplex cf(ring, lo, std::move(ranks), std::move(d));

  std::map<int, IntMatrix> g, h;
  for (int r = lo; r <= hi; ++r) {
    IntMatrix gr(cf.zrank(r), dd.zrank(r));
    gr.paste(0, 0, IntMatrix::identity(dd.zrank(r)));
    g.emplace(r, std::move(gr));
    IntMatrix hr(c.zrank(r - 1), cf.zrank(r));
    hr.paste(0, dd.zrank(r), IntMatrix::identity(c.zrank(r - 1)));
    h.emplace(r, std::move(hr));
  }
  return {cf, ChainMap(dd, cf, std::move(g)), ChainMap(cf, sc, std::move(h))};
}

// ---------------------------------------------------------------------------

namespace {

RingSpec tensor_ring(const ChainComplex& c, const ChainComplex& d) {
  if (!(c.ring() == d.ring())) throw InputError("tensor product of complexes over different rings");
  return c.ring().is_group_ring() ? RingSpec::integers() : c.ring();
}

}  // namespace

std::size_t TensorProduct::block_offset(int degree, int p) const {
  std::size_t off = 0;
  for (int a = left_.lo(); a < p; ++a) off += left_.rank(a) * right_.rank(degree - a) * group_order_;
  return off;
}

std::size_t TensorProduct::index(int p, std::size_t i, int q, std::size_t j, int g) const {
  return block_offset(p + q, p) + (i * right_.rank(q) + j) * group_order_ + static_cast<std::size_t>(g);
}

TensorProduct::Basis TensorProduct::element(int degree, std::size_t idx) const {
  for (int p = left_.lo(); p <= left_.hi(); ++p) {
    const int q = degree - p;
    const std::size_t size = left_.rank(p) * right_.rank(q) * group_order_;
    if (idx < size) {
      const std::size_t pair = idx / group_order_;
      const std::size_t rq = right_.rank(q);
      return {p, pair / rq, q, pair % rq, static_cast<int>(idx % group_order_)};
    }
    idx -= size;
  }
  throw InputError("tensor basis index out of range");
}

TensorProduct::TensorProduct(const ChainComplex& left, const ChainComplex& right)
    : left_(left), right_(right), group_order_(left.ring().multiplier()) {
  const RingSpec ring = tensor_ring(left, right);
  if (left.is_empty() || right.is_empty()) {
    complex_ = ChainComplex::zero(ring);
    return;
  }
  const int lo = left.lo() + right.lo(), hi = left.hi() + right.hi();
  auto zdim = [&](int n) {
    std::size_t s = 0;
    for (int p = left.lo(); p <= left.hi(); ++p) s += left.rank(p) * right.rank(n - p);
    return s * group_order_;
  };
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(zdim(n));

  const bool grp = left.ring().is_group_ring();
  const std::size_t ng = group_order_;
  const FiniteGroup* group = grp ? &left.ring().group() : nullptr;
  const int e = grp ? group->identity() : 0;

  std::vector<IntMatrix> ds;
  for (int n = lo + 1; n <= hi; ++n) {
    IntMatrix m(zdim(n - 1), zdim(n));
    for (int p = left.lo(); p <= left.hi(); ++p) {
      const int q = n - p;
      if (right.rank(q) == 0 || left.rank(p) == 0) continue;
      const IntMatrix dl = left.d(p), dr = right.d(q);
      const long sign = (q % 2 == 0) ? 1 : -1;
      for (std::size_t i = 0; i < left.rank(p); ++i)
        for (std::size_t j = 0; j < right.rank(q); ++j)
          for (std::size_t g = 0; g < ng; ++g) {
            const std::size_t col = index(p, i, q, j, static_cast<int>(g));
            // x (x) dy
            for (std::size_t k = 0; k < right.rank(q - 1); ++k)
              for (std::size_t h = 0; h < ng; ++h) {
                const Integer& c = dr(k * ng + h, j * ng + g);
                if (sgn(c) != 0) m(index(p, i, q - 1, k, static_cast<int>(h)), col) += c;
              }
            // (-1)^q dx (x) y, moving the coefficient across the tensor sign.
            for (std::size_t k = 0; k < left.rank(p - 1); ++k)
              for (std::size_t h = 0; h < ng; ++h) {
                const Integer& c = dl(k * ng + h, i * ng + static_cast<std::size_t>(e));
                if (sgn(c) == 0) continue;
                int target_g = static_cast<int>(g);
                long w = 1;
                if (grp) {
                  target_g = group->multiply(group->inverse(static_cast<int>(h)), static_cast<int>(g));
                  w = group->w(static_cast<int>(h));
                }
                m(index(p - 1, k, q, j, target_g), col) += sign * w * c;
              }
          }
    }
    ds.push_back(std::move(m));
  }
  complex_ = ChainComplex(ring, lo, std::move(ranks), std::move(ds));
}

TensorSquare::TensorSquare(const ChainComplex& c) : TensorProduct(c, c) {
  const ChainComplex& sq = complex();
  if (sq.is_empty()) return;
  const bool grp = c.ring().is_group_ring();
  const FiniteGroup* group = grp ? &c.ring().group() : nullptr;
  const bool f2 = c.ring().kind() == RingSpec::Kind::F2;
  for (int n = sq.lo(); n <= sq.hi(); ++n) {
    IntMatrix t(sq.zrank(n), sq.zrank(n));
    for (std::size_t idx = 0; idx < sq.zrank(n); ++idx) {
      const Basis b = element(n, idx);
      long sign = ((b.p * b.q) % 2 == 0) ? 1 : -1;
      int g = b.g;
      if (grp) {
        sign *= group->w(b.g);
        g = group->inverse(b.g);
      }
      t(index(b.q, b.j, b.p, b.i, g), idx) = f2 ? 1 : sign;
    }
    t_.emplace(n, std::move(t));
  }
}

const IntMatrix& TensorSquare::transposition(int r) const {
  auto it = t_.find(r);
  if (it == t_.end()) return empty_;
  return it->second;
}

TensorProduct tensor(const ChainComplex& c, const ChainComplex& d) { return TensorProduct(c, d); }

TensorSquare tensor_square_with_involution(const ChainComplex& c) { return TensorSquare(c); }

bool is_quasi_isomorphism(const ChainMap& f) {
  if (f.source().ring().is_group_ring())
    throw UnsupportedError("quasi-isomorphism test over a group ring is not implemented");
  return cone(f).complex.is_acyclic();
}

}  // namespace hopf
