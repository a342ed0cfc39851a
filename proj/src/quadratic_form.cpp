#include "hopf/quadratic_form.hpp"

#include <fmt/format.h>
#include <gmpxx.h>

#include <cstdint>

#include "hopf/f2_linalg.hpp"

namespace hopf {

namespace {

Integer mod2(const Integer& v) {
  Integer r = v % 2;
  if (r < 0) r += 2;
  return r;
}

void require_square(const IntMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw InputError(fmt::format("{} must be square, got {}x{}", what, m.rows(), m.cols()));
}

}  // namespace

QValue::QValue(Coefficients ring, int epsilon, Integer value) : ring_(ring), epsilon_(epsilon), value_(std::move(value)) {
  if (epsilon != 1 && epsilon != -1) throw InputError(fmt::format("epsilon must be +1 or -1, got {}", epsilon));
  if (is_mod2()) value_ = mod2(value_);
}

void QValue::check_compatible(const QValue& o) const {
  if (ring_ != o.ring_ || epsilon_ != o.epsilon_) throw InputError("values live in different groups Q_eps");
}

QValue QValue::operator+(const QValue& o) const {
  check_compatible(o);
  return QValue(ring_, epsilon_, value_ + o.value_);
}
QValue QValue::operator-(const QValue& o) const {
  check_compatible(o);
  return QValue(ring_, epsilon_, value_ - o.value_);
}
QValue QValue::operator-() const { return QValue(ring_, epsilon_, -value_); }
bool QValue::operator==(const QValue& o) const {
  return ring_ == o.ring_ && epsilon_ == o.epsilon_ && value_ == o.value_;
}
std::string QValue::to_string() const { return value_.get_str() + (is_mod2() ? " ∈ Z/2" : " ∈ Z"); }

QuadraticForm::QuadraticForm(Coefficients ring, int epsilon, IntMatrix lambda, std::optional<std::vector<Integer>> mu)
    : ring_(ring), epsilon_(epsilon), lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (epsilon != 1 && epsilon != -1) throw InputError(fmt::format("epsilon must be +1 or -1, got {}", epsilon));
  require_square(lambda_, "lambda");
  const std::size_t r = lambda_.rows();
  if (ring_ == Coefficients::F2) lambda_ = lambda_.reduced_mod2();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Integer diff = lambda_(i, j) - epsilon_ * lambda_(j, i);
      if (ring_ == Coefficients::F2) diff = mod2(diff);
      if (diff != 0) throw PreconditionError(fmt::format("lambda is not {}-symmetric at ({},{})", epsilon_ > 0 ? "+" : "-", i, j));
    }
  if (!mu_) return;
  if (mu_->size() != r) throw InputError(fmt::format("mu has {} values for a rank {} form", mu_->size(), r));
  const bool mod2_values = ring_ == Coefficients::F2 || epsilon_ == -1;
  for (std::size_t i = 0; i < r; ++i) {
    if (mod2_values) (*mu_)[i] = mod2((*mu_)[i]);
    Integer diff = lambda_(i, i) - (1 + epsilon_) * (*mu_)[i];
    if (ring_ == Coefficients::F2) diff = mod2(diff);
    if (diff != 0)
      throw PreconditionError(fmt::format("lambda(e_{0},e_{0}) = {1} is not (1 + eps) mu(e_{0})", i, lambda_(i, i).get_str()));
  }
}

QuadraticForm QuadraticForm::hyperbolic(Coefficients ring, int epsilon) {
  IntMatrix l(2, 2);
  l(0, 1) = 1;
  l(1, 0) = epsilon;
  return QuadraticForm(ring, epsilon, l, std::vector<Integer>{0, 0});
}

QuadraticForm QuadraticForm::e8() {
  // Cartan matrix of E8: a path 0-1-2-3-4-5-6 with vertex 7 attached to 4.
  IntMatrix l(8, 8);
  for (std::size_t i = 0; i < 8; ++i) l(i, i) = 2;
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (const auto& e : edges) {
    l(e[0], e[1]) = -1;
    l(e[1], e[0]) = -1;
  }
  return QuadraticForm(Coefficients::Integers, 1, l, std::vector<Integer>(8, 1));
}

QuadraticForm QuadraticForm::arf_one() {
  return QuadraticForm(Coefficients::F2, -1, IntMatrix{{0, 1}, {1, 0}}, std::vector<Integer>{1, 1});
}

const std::vector<Integer>& QuadraticForm::mu() const {
  if (!mu_) throw PreconditionError("the form carries no quadratic refinement mu");
  return *mu_;
}

Integer QuadraticForm::lambda_of(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw InputError("vector length does not match the rank of the form");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * lambda_(i, j) * y[j];
  return ring_ == Coefficients::F2 ? mod2(s) : s;
}

QValue QuadraticForm::mu_of(const IntVector& x) const {
  if (x.size() != rank()) throw InputError("vector length does not match the rank of the form");
  const std::vector<Integer>& m = mu();
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    s += x[i] * x[i] * m[i];
    for (std::size_t j = i + 1; j < rank(); ++j) s += x[i] * x[j] * lambda_(i, j);
  }
  return QValue(ring_, epsilon_, s);
}

bool QuadraticForm::is_nonsingular() const {
  if (ring_ == Coefficients::F2) return F2Matrix::from_int(lambda_).rank() == rank();
  const SmithForm snf = smith_normal_form(lambda_);
  if (snf.rank != rank()) return false;
  for (const Integer& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

bool QuadraticForm::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mod2(lambda_(i, i)) != 0) return false;
  return true;
}

QuadraticForm QuadraticForm::orthogonal_sum(const QuadraticForm& o) const {
  if (ring_ != o.ring_ || epsilon_ != o.epsilon_) throw InputError("orthogonal sum of forms of different type");
  std::optional<std::vector<Integer>> m;
  if (mu_ && o.mu_) {
    m = *mu_;
    m->insert(m->end(), o.mu_->begin(), o.mu_->end());
  }
  return QuadraticForm(ring_, epsilon_, block_diagonal(lambda_, o.lambda_), m);
}

QuadraticForm QuadraticForm::negated() const {
  std::optional<std::vector<Integer>> m;
  if (mu_) {
    m = *mu_;
    for (Integer& v : *m) v = -v;
  }
  return QuadraticForm(ring_, epsilon_, -lambda_, m);
}

QuadraticForm QuadraticForm::base_change(const IntMatrix& p) const {
  if (p.rows() != rank()) throw InputError("base change matrix has the wrong number of rows");
  std::optional<std::vector<Integer>> m;
  if (mu_) {
    m.emplace();
    for (std::size_t j = 0; j < p.cols(); ++j) m->push_back(mu_of(p.column(j)).value());
  }
  return QuadraticForm(ring_, epsilon_, p.transpose() * lambda_ * p, m);
}

QuadraticForm QuadraticForm::reduced_mod2() const {
  std::optional<std::vector<Integer>> m;
  if (mu_) {
    m = *mu_;
    for (Integer& v : *m) v = mod2(v);
  }
  return QuadraticForm(Coefficients::F2, epsilon_, lambda_.reduced_mod2(), m);
}

std::string QuadraticForm::to_string() const {
  std::string s = fmt::format("{} form over {}, rank {}", epsilon_ > 0 ? "(+1)" : "(-1)",
                              ring_ == Coefficients::F2 ? "F2" : "Z", rank());
  s += "\nlambda = " + lambda_.to_string();
  if (mu_) {
    s += "\nmu = [";
    for (std::size_t i = 0; i < mu_->size(); ++i) s += (i ? ", " : "") + (*mu_)[i].get_str();
    s += "]";
  }
  return s;
}

long signature(const IntMatrix& symmetric) {
  require_square(symmetric, "signature input");
  const std::size_t n = symmetric.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric(i, j) != symmetric(j, i)) throw InputError("signature requires a symmetric matrix");
      a[i][j] = mpq_class(symmetric(i, j));
    }
  // Congruence diagonalization: every step replaces a by P^T a P.
  long sig = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
      } else {
        j = i + 1;
        while (j < n && a[i][j] == 0) ++j;
        if (j == n) continue;  // row i vanishes: a zero eigenvalue
        // e_i -> e_i + e_j makes the pivot 2 a_ij.
        for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
        for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
      }
    }
    const mpq_class p = a[i][i];
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      const mpq_class f = a[r][i] / p;
      for (std::size_t k = i; k < n; ++k) a[r][k] -= f * a[i][k];
      for (std::size_t k = i; k < n; ++k) a[k][r] -= f * a[k][i];
    }
    sig += sgn(p);
  }
  return sig;
}

long signature(const QuadraticForm& form) {
  if (form.ring() != Coefficients::Integers || form.epsilon() != 1)
    throw PreconditionError("the signature is defined for symmetric forms over Z");
  return signature(form.lambda());
}

namespace {

QuadraticForm arf_input(const QuadraticForm& form) {
  if (form.ring() == Coefficients::Integers && form.epsilon() != -1)
    throw PreconditionError("the Arf invariant is defined for (-1)-quadratic forms");
  const QuadraticForm f = form.ring() == Coefficients::F2 ? form : form.reduced_mod2();
  f.mu();
  if (!f.is_nonsingular()) throw PreconditionError("the form is singular over F2");
  return f;
}

}  // namespace

int arf_symplectic(const QuadraticForm& form) {
  const QuadraticForm f = arf_input(form);
  const std::size_t r = f.rank();
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r);
    e[i] = 1;
    basis.push_back(e);
  }
  int result = 0;
  while (!basis.empty()) {
    const IntVector a = basis.front();
    basis.erase(basis.begin());
    std::size_t partner = 0;
    while (partner < basis.size() && f.lambda_of(a, basis[partner]) == 0) ++partner;
    if (partner == basis.size()) throw PreconditionError("the form is singular over F2");
    const IntVector b = basis[partner];
    basis.erase(basis.begin() + static_cast<long>(partner));
    result ^= static_cast<int>(Integer(f.mu_of(a).value() * f.mu_of(b).value()).get_si() & 1);
    for (IntVector& v : basis) {
      const Integer va = f.lambda_of(v, a), vb = f.lambda_of(v, b);
      v = reduce_mod2(add(v, add(scale(a, vb), scale(b, va))));
    }
  }
  return result;
}

int arf(const QuadraticForm& form) {
  const QuadraticForm f = arf_input(form);
  const std::size_t r = f.rank();
  if (r > 20) return arf_symplectic(f);
  // mu(x) as a bit: sum over set bits of mu_i plus lambda_ij over set pairs.
  std::vector<std::uint32_t> row(r, 0);
  std::uint32_t diag = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (f.mu()[i] != 0) diag |= 1U << i;
    for (std::size_t j = i + 1; j < r; ++j)
      if (f.lambda()(i, j) != 0) row[i] |= 1U << j;
  }
  std::uint64_t ones = 0;
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t x = 0; x < total; ++x) {
    const auto bits = static_cast<std::uint32_t>(x);
    unsigned v = static_cast<unsigned>(__builtin_popcount(bits & diag));
    for (std::size_t i = 0; i < r; ++i)
      if (bits >> i & 1U) v += static_cast<unsigned>(__builtin_popcount(row[i] & bits));
    ones += v & 1U;
  }
  const int democratic = 2 * ones > total ? 1 : 0;
  if (r <= 6 && democratic != arf_symplectic(f))
    throw std::logic_error("Arf invariant: democratic count and symplectic reduction disagree");
  return democratic;
}

std::string l_group(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return "Z";
    case 2:
      return "Z/2";
    default:
      return "0";
  }
}

std::string LClass::to_string() const {
  return fmt::format("{} ∈ L_{}(Z) = {}", value.get_str(), ((n % 4) + 4) % 4, group);
}

LClass surgery_obstruction(const QuadraticForm& form, int n) {
  LClass out{n, l_group(n), 0};
  const int residue = ((n % 4) + 4) % 4;
  if (residue % 2 == 1) return out;
  const int eps = residue == 0 ? 1 : -1;
  if (residue == 0) {
    if (form.ring() != Coefficients::Integers || form.epsilon() != eps)
      throw PreconditionError(fmt::format("L_{}(Z) needs a symmetric form over Z", n));
    if (!form.is_nonsingular()) throw PreconditionError("the form is singular");
    if (!form.is_even()) throw PreconditionError("the form is not even; it has no class in L_0(Z)");
    const long sig = signature(form.lambda());
    if (sig % 8 != 0) throw PreconditionError(fmt::format("signature {} of an even form is not divisible by 8", sig));
    out.value = sig / 8;
    return out;
  }
  if (form.ring() == Coefficients::Integers && form.epsilon() != eps)
    throw PreconditionError(fmt::format("L_{}(Z) needs a (-1)-quadratic form", n));
  out.value = arf(form);
  return out;
}

}  // namespace hopf
