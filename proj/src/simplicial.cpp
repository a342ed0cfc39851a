#include "hopf/simplicial.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <mutex>
#include <set>

#include "hopf/f2_linalg.hpp"

namespace hopf {

namespace {

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

// Sign of the permutation sorting `v` (entries distinct).
int sorting_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

void erase_zeros(SparseTensor& t) { std::erase_if(t, [](const auto& kv) { return kv.second == 0; }); }

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<std::vector<int>> facets,
                                     std::optional<std::vector<int>> orientation)
    : labels_(std::move(labels)), facets_(std::move(facets)), orientation_(std::move(orientation)) {
  if (labels_.empty()) throw InputError("a simplicial complex needs at least one vertex");
  if (orientation_ && orientation_->size() != facets_.size())
    throw InputError(fmt::format("orientation has {} signs for {} facets", orientation_->size(), facets_.size()));
  if (orientation_)
    for (int s : *orientation_)
      if (s != 1 && s != -1) throw InputError("orientation signs must be +1 or -1");

  std::vector<std::set<Simplex>> all;
  std::set<Simplex> seen;
  auto add = [&](const Simplex& s) {
    const std::size_t d = s.size() - 1;
    if (all.size() <= d) all.resize(d + 1);
    all[d].insert(s);
  };
  for (std::size_t v = 0; v < labels_.size(); ++v) add({static_cast<int>(v)});
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    Simplex s = facets_[f];
    if (s.empty()) throw InputError(fmt::format("facet {} is empty", f));
    if (s.size() > 24) throw InputError(fmt::format("facet {} has dimension above 23", f));
    for (int v : s)
      if (v < 0 || static_cast<std::size_t>(v) >= labels_.size())
        throw InputError(fmt::format("facet {} refers to vertex {} of {}", f, v, labels_.size()));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError(fmt::format("facet {} repeats a vertex", f));
    if (!seen.insert(s).second) throw InputError(fmt::format("facet {} is listed twice", f));
    const unsigned n = static_cast<unsigned>(s.size());
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      Simplex face;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1U << i)) face.push_back(s[i]);
      add(face);
    }
  }
  simplices_.resize(all.size());
  index_.resize(all.size());
  faces_.resize(all.size());
  for (std::size_t d = 0; d < all.size(); ++d) {
    simplices_[d].assign(all[d].begin(), all[d].end());
    for (std::size_t i = 0; i < simplices_[d].size(); ++i) index_[d].emplace(simplices_[d][i], i);
  }
  for (std::size_t d = 1; d < all.size(); ++d) {
    faces_[d].resize(simplices_[d].size());
    for (std::size_t idx = 0; idx < simplices_[d].size(); ++idx) {
      const Simplex& s = simplices_[d][idx];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        faces_[d][idx].push_back(index_[d - 1].at(f));
      }
    }
  }
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return simplices_[d].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d > dimension()) return none;
  return simplices_[d];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty() || static_cast<int>(s.size()) - 1 > dimension()) return std::nullopt;
  const auto& m = index_[s.size() - 1];
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  if (auto i = find(s)) return *i;
  std::string text;
  for (int v : s) text += (text.empty() ? "" : ",") + std::to_string(v);
  throw InputError(fmt::format("[{}] is not a simplex of the complex", text));
}

IntMatrix SimplicialComplex::boundary(int d) const {
  IntMatrix m(count(d - 1), count(d));
  if (d < 1 || d > dimension()) return m;
  for (std::size_t idx = 0; idx < count(d); ++idx)
    for (int i = 0; i <= d; ++i) m(face(d, idx, i), idx) += sign_of(i);
  return m;
}

ChainComplex SimplicialComplex::chain_complex(Coefficients coefficients) const {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
  for (int r = 0; r <= dimension(); ++r) ranks.push_back(count(r));
  for (int r = 1; r <= dimension(); ++r) d.push_back(boundary(r));
  const RingSpec ring = coefficients == Coefficients::F2 ? RingSpec::f2() : RingSpec::integers();
  return ChainComplex(ring, 0, std::move(ranks), std::move(d));
}

IntVector SimplicialComplex::fundamental_cycle(Coefficients coefficients) const {
  const int n = dimension();
  IntVector z(count(n));
  if (coefficients == Coefficients::F2) {
    for (auto& x : z) x = 1;
  } else {
    if (!orientation_) throw InputError("an integral fundamental cycle needs a facet orientation");
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (static_cast<int>(facets_[f].size()) - 1 != n) continue;
      Simplex s = facets_[f];
      std::sort(s.begin(), s.end());
      z[index_of(s)] = (*orientation_)[f] * sorting_sign(facets_[f]);
    }
  }
  IntVector dz = boundary(n) * z;
  if (coefficients == Coefficients::F2) dz = reduce_mod2(dz);
  if (!is_zero(dz)) throw PreconditionError("the fundamental chain is not a cycle");
  return z;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += sign_of(d) * static_cast<long>(count(d));
  return chi;
}

long euler_characteristic(const SimplicialComplex& k) { return k.euler_characteristic(); }

int semicharacteristic(const SimplicialComplex& k, int m) {
  if (m % 2 == 0) throw InputError("the semicharacteristic is defined for odd m");
  if (k.dimension() != m) throw InputError(fmt::format("complex has dimension {}, expected {}", k.dimension(), m));
  const ChainComplex c = k.chain_complex(Coefficients::F2);
  std::size_t total = 0;
  for (int i = 0; i <= (m - 1) / 2; ++i) total += c.homology(i).num_generators();
  return static_cast<int>(total % 2);
}

// ---------------------------------------------------------------------------

SparseTensor tensor_boundary(const SimplicialComplex& k, const SparseTensor& x) {
  SparseTensor out;
  for (const auto& [key, c] : x) {
    if (key.q >= 1)
      for (int i = 0; i <= key.q; ++i) out[{key.p, key.a, key.q - 1, k.face(key.q, key.b, i)}] += c * sign_of(i);
    if (key.p >= 1)
      for (int i = 0; i <= key.p; ++i)
        out[{key.p - 1, k.face(key.p, key.a, i), key.q, key.b}] += c * sign_of(i + key.q);
  }
  erase_zeros(out);
  return out;
}

SparseTensor tensor_transpose(const SparseTensor& x) {
  SparseTensor out;
  for (const auto& [key, c] : x) out[{key.q, key.b, key.p, key.a}] += c * sign_of(static_cast<long>(key.p) * key.q);
  erase_zeros(out);
  return out;
}

namespace {

unsigned mask_of(const Simplex& s) {
  unsigned m = 0;
  for (int v : s) m |= 1U << v;
  return m;
}

Simplex vertices_of(unsigned mask) {
  Simplex s;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) s.push_back(v);
  return s;
}

// Face inclusion D^{k-1} -> D^k missing vertex i, on vertex masks.
unsigned coface(unsigned mask, int i) {
  const unsigned low = mask & ((1U << i) - 1);
  const unsigned high = mask & ~((1U << i) - 1);
  return low | (high << 1);
}

SparseTensor to_sparse(const SimplicialComplex& delta, const std::vector<UniversalTerm>& u) {
  SparseTensor t;
  for (const auto& term : u) {
    const Simplex a = vertices_of(term.a), b = vertices_of(term.b);
    t[{static_cast<int>(a.size()) - 1, delta.index_of(a), static_cast<int>(b.size()) - 1, delta.index_of(b)}] +=
        term.coefficient;
  }
  erase_zeros(t);
  return t;
}

SimplicialComplex standard_simplex(int k) {
  std::vector<std::string> labels;
  std::vector<int> all;
  for (int v = 0; v <= k; ++v) {
    labels.push_back(std::to_string(v));
    all.push_back(v);
  }
  return SimplicialComplex(std::move(labels), {all});
}

std::vector<UniversalTerm> solve_universal(int s, int k) {
  const SimplicialComplex delta = standard_simplex(k);
  // Right-hand side (-1)^s (sum_i (-1)^i (d_i)_* u_{s,k-1} + (1 + (-1)^s T) u_{s-1,k}).
  std::vector<UniversalTerm> pushed;
  for (int i = 0; i <= k; ++i)
    for (const auto& t : universal_element(s, k - 1))
      pushed.push_back({t.coefficient * sign_of(i), coface(t.a, i), coface(t.b, i)});
  SparseTensor rhs = to_sparse(delta, pushed);
  const SparseTensor prev = to_sparse(delta, universal_element(s - 1, k));
  for (const auto& [key, c] : prev) rhs[key] += c;
  for (const auto& [key, c] : tensor_transpose(prev)) rhs[key] += c * sign_of(s);
  erase_zeros(rhs);

  const TensorSquare sq(delta.chain_complex());
  const int deg = k + s;
  IntVector b(sq.complex().zrank(deg - 1));
  for (const auto& [key, c] : rhs) b[sq.index(key.p, key.a, key.q, key.b)] = c * sign_of(s);
  const IntMatrix d = sq.complex().d(deg);

  const unsigned full = (1U << (k + 1)) - 1;
  std::vector<std::size_t> shaped;
  for (std::size_t idx = 0; idx < d.cols(); ++idx) {
    const auto e = sq.element(deg, idx);
    if ((mask_of(delta.simplex(e.p, e.i)) | mask_of(delta.simplex(e.q, e.j))) == full) shaped.push_back(idx);
  }
  std::vector<IntVector> cols;
  for (std::size_t idx : shaped) cols.push_back(d.column(idx));
  std::optional<IntVector> x = solve_linear(IntMatrix::from_columns(cols, d.rows()), b);
  std::vector<std::size_t> support = shaped;
  if (!x) {
    x = solve_linear(d, b);
    support.clear();
    for (std::size_t idx = 0; idx < d.cols(); ++idx) support.push_back(idx);
  }
  if (!x) throw std::logic_error(fmt::format("no universal cup-{} element on the {}-simplex", s, k));

  std::vector<UniversalTerm> u;
  for (std::size_t t = 0; t < support.size(); ++t) {
    if ((*x)[t] == 0) continue;
    const auto e = sq.element(deg, support[t]);
    u.push_back({(*x)[t].get_si(), mask_of(delta.simplex(e.p, e.i)), mask_of(delta.simplex(e.q, e.j))});
  }
  return u;
}

}  // namespace

const std::vector<UniversalTerm>& universal_element(int s, int k) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<int, int>, std::vector<UniversalTerm>> cache;
  static const std::vector<UniversalTerm> none;
  if (s < 0 || k < 0 || s > k) return none;
  if (k > 20) throw UnsupportedError("cup-i products above dimension 20");
  std::lock_guard lock(mutex);
  auto it = cache.find({s, k});
  if (it != cache.end()) return it->second;
  std::vector<UniversalTerm> u;
  if (s == 0) {
    // Alexander-Whitney with the sign making it a chain map for
    // d(x (x) y) = x (x) dy + (-1)^{|y|} dx (x) y.
    for (int i = 0; i <= k; ++i) {
      const unsigned front = (1U << (i + 1)) - 1;
      const unsigned back = ((1U << (k + 1)) - 1) & ~((1U << i) - 1);
      u.push_back({sign_of(static_cast<long>(i) * (k - i)), front, back});
    }
  } else {
    u = solve_universal(s, k);
  }
  return cache.emplace(std::pair{s, k}, std::move(u)).first->second;
}

// ---------------------------------------------------------------------------

IsovariantStructure::IsovariantStructure(const SimplicialComplex& k, int order)
    : k_(std::make_shared<const SimplicialComplex>(k)), order_(order) {
  if (order < 1) throw InputError("the symmetric construction needs order k >= 1");
  const int dim = k.dimension();
  phi_.assign(order, std::vector<std::vector<SparseTensor>>(dim + 1));
  for (int s = 0; s < order; ++s) {
    for (int d = 0; d <= dim; ++d) {
      const auto& u = universal_element(s, d);
      auto& out = phi_[s][d];
      out.resize(k.count(d));
      for (std::size_t idx = 0; idx < k.count(d); ++idx) {
        const Simplex& sigma = k.simplex(d, idx);
        auto restrict = [&](unsigned mask) {
          Simplex face;
          for (int v = 0; mask; ++v, mask >>= 1)
            if (mask & 1U) face.push_back(sigma[v]);
          return face;
        };
        for (const auto& t : u) {
          const Simplex a = restrict(t.a), b = restrict(t.b);
          out[idx][{static_cast<int>(a.size()) - 1, k.index_of(a), static_cast<int>(b.size()) - 1, k.index_of(b)}] +=
              t.coefficient;
        }
        erase_zeros(out[idx]);
      }
    }
  }
  if (!verify()) throw PreconditionError("symmetric construction violates the isovariant relation");
}

const SparseTensor& IsovariantStructure::phi(int s, int d, std::size_t index) const {
  static const SparseTensor none;
  if (s < 0 || s >= order_) throw InputError(fmt::format("phi_{} requested from a structure of order {}", s, order_));
  if (d < 0 || d > k_->dimension()) return none;
  return phi_[s][d].at(index);
}

SparseTensor IsovariantStructure::evaluate(int s, int d, const SparseChain& chain) const {
  SparseTensor out;
  for (const auto& [idx, c] : chain)
    for (const auto& [key, v] : phi(s, d, idx)) out[key] += c * v;
  erase_zeros(out);
  return out;
}

SparseTensor IsovariantStructure::residual(int s, int d, std::size_t index) const {
  SparseTensor r = tensor_boundary(*k_, phi(s, d, index));
  SparseTensor rhs;
  if (d >= 1)
    for (int i = 0; i <= d; ++i)
      for (const auto& [key, v] : phi(s, d - 1, k_->face(d, index, i))) rhs[key] += v * sign_of(i);
  if (s >= 1) {
    const SparseTensor& prev = phi(s - 1, d, index);
    for (const auto& [key, v] : prev) rhs[key] += v;
    for (const auto& [key, v] : tensor_transpose(prev)) rhs[key] += v * sign_of(s);
  }
  for (const auto& [key, v] : rhs) r[key] -= v * sign_of(s);
  erase_zeros(r);
  return r;
}

bool IsovariantStructure::verify() const {
  for (int s = 0; s < order_; ++s)
    for (int d = 0; d <= k_->dimension(); ++d)
      for (std::size_t idx = 0; idx < k_->count(d); ++idx)
        if (!residual(s, d, idx).empty()) return false;
  return true;
}

IntMatrix IsovariantStructure::matrix(int s, int d, const TensorSquare& square) const {
  IntMatrix m(square.complex().zrank(d + s), k_->count(d));
  for (std::size_t idx = 0; idx < k_->count(d); ++idx)
    for (const auto& [key, v] : phi(s, d, idx)) m(square.index(key.p, key.a, key.q, key.b), idx) += v;
  return m;
}

IsovariantStructure symmetric_construction(const SimplicialComplex& k, int order) {
  return IsovariantStructure(k, order);
}

// ---------------------------------------------------------------------------

namespace {

void require_length(const SimplicialComplex& k, int r, const Cochain& c) {
  if (c.size() != k.count(r))
    throw InputError(fmt::format("cochain of degree {} has length {}, expected {}", r, c.size(), k.count(r)));
}

void require_cocycle(const SimplicialComplex& k, int r, const Cochain& c, Coefficients coefficients) {
  if (!is_cocycle(k, r, c, coefficients)) throw PreconditionError(fmt::format("not a cocycle in degree {}", r));
}

}  // namespace

Cochain coboundary(const SimplicialComplex& k, int r, const Cochain& c) {
  require_length(k, r, c);
  Cochain out(k.count(r + 1));
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    for (int i = 0; i <= r + 1; ++i) out[idx] += sign_of(i) * c[k.face(r + 1, idx, i)];
  return out;
}

bool is_cocycle(const SimplicialComplex& k, int r, const Cochain& c, Coefficients coefficients) {
  const Cochain d = coboundary(k, r, c);
  return coefficients == Coefficients::F2 ? is_zero(reduce_mod2(d)) : is_zero(d);
}

Integer evaluate(const Cochain& c, const IntVector& chain) {
  if (c.size() != chain.size()) throw InputError("cochain and chain have different lengths");
  Integer total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) total += c[i] * chain[i];
  return total;
}

Cochain unit_cocycle(const SimplicialComplex& k) { return Cochain(k.count(0), 1); }

Cochain cup_product(const IsovariantStructure& phi, int p, const Cochain& x, int q, const Cochain& y,
                    Coefficients coefficients) {
  const SimplicialComplex& k = phi.complex();
  require_length(k, p, x);
  require_length(k, q, y);
  require_cocycle(k, p, x, coefficients);
  require_cocycle(k, q, y, coefficients);
  Cochain out(k.count(p + q));
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    for (const auto& [key, v] : phi.phi(0, p + q, idx))
      if (key.p == p) out[idx] += v * x[key.a] * y[key.b];
  return coefficients == Coefficients::F2 ? reduce_mod2(out) : out;
}

Cochain steenrod_square(const IsovariantStructure& phi, int i, int r, const Cochain& x) {
  const SimplicialComplex& k = phi.complex();
  if (i < 0) throw InputError("Sq^i needs i >= 0");
  require_length(k, r, x);
  require_cocycle(k, r, x, Coefficients::F2);
  Cochain out(k.count(r + i));
  if (i > r || out.empty()) return out;
  const int s = r - i;
  if (s >= phi.order())
    throw InputError(fmt::format("Sq^{} in degree {} needs phi_{}, structure has order {}", i, r, s, phi.order()));
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    for (const auto& [key, v] : phi.phi(s, r + i, idx))
      if (key.p == r) out[idx] += v * x[key.a] * x[key.b];
  return reduce_mod2(out);
}

Cochain steenrod_square(const SimplicialComplex& k, int i, int r, const Cochain& x) {
  const int order = std::max(1, std::min(r - i + 1, k.dimension() + 1));
  return steenrod_square(IsovariantStructure(k, order), i, r, x);
}

std::vector<Cochain> cohomology_basis(const SimplicialComplex& k, int r, Coefficients coefficients) {
  const auto h = homology_at(k.boundary(r).transpose(), k.boundary(r + 1).transpose(), coefficients);
  std::vector<Cochain> out;
  for (std::size_t g = 0; g < h.num_generators(); ++g) out.push_back(h.generator(g));
  return out;
}

bool cohomologous(const SimplicialComplex& k, int r, const Cochain& x, const Cochain& y, Coefficients coefficients) {
  require_length(k, r, x);
  require_length(k, r, y);
  const IntVector diff = subtract(x, y);
  const IntMatrix delta = k.boundary(r).transpose();  // C^{r-1} -> C^r
  if (coefficients == Coefficients::F2) return F2Matrix::from_int(delta).solve(to_bits(diff)).has_value();
  return solve_linear(delta, diff).has_value();
}

// ---------------------------------------------------------------------------

SymmetricPoincare symmetric_poincare(const SimplicialComplex& k, const IntVector& fundamental_cycle, int n,
                                     Coefficients coefficients, int order) {
  if (fundamental_cycle.size() != k.count(n))
    throw InputError(fmt::format("fundamental cycle has length {}, expected {}", fundamental_cycle.size(), k.count(n)));
  IntVector dz = k.boundary(n) * fundamental_cycle;
  if (coefficients == Coefficients::F2) dz = reduce_mod2(dz);
  if (!is_zero(dz)) throw PreconditionError(fmt::format("the given {}-chain is not a cycle", n));

  SymmetricPoincare out;
  out.chains = k.chain_complex(coefficients);
  out.square = std::make_shared<const TensorSquare>(out.chains);
  out.qcomplex = std::make_shared<const QComplex>(out.square, QKind::Symmetric, 0, order - 1);
  const IsovariantStructure structure(k, order);

  SparseChain x;
  for (std::size_t i = 0; i < fundamental_cycle.size(); ++i)
    if (fundamental_cycle[i] != 0) x[i] = fundamental_cycle[i].get_si();

  out.phi = QClass{out.qcomplex, n, {}};
  SparseTensor phi0;
  for (int s = 0; s < order; ++s) {
    const SparseTensor t = structure.evaluate(s, n, x);
    if (s == 0) phi0 = t;
    if (t.empty()) continue;
    IntVector v(out.square->complex().zrank(n + s));
    for (const auto& [key, c] : t) v[out.square->index(key.p, key.a, key.q, key.b)] += c * sign_of(static_cast<long>(n) * s);
    out.phi.components.emplace(s, coefficients == Coefficients::F2 ? reduce_mod2(v) : v);
  }
  out.phi.verify();

  // phi_0 cap [X]: f in C^{n-r} goes to sum f(a) b over terms a (x) b.
  const ChainComplex dual_complex = dual(out.chains, n);
  std::map<int, IntMatrix> components;
  for (int r = 0; r <= n; ++r) components.emplace(r, IntMatrix(k.count(r), k.count(n - r)));
  for (const auto& [key, c] : phi0)
    if (key.p + key.q == n) components.at(key.q)(key.b, key.a) += c;
  out.duality = ChainMap(dual_complex, out.chains, std::move(components));
  return out;
}

}  // namespace hopf
