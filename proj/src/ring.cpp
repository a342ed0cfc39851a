#include "hopf/ring.hpp"

#include <fmt/format.h>

namespace hopf {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table, int identity,
                         std::vector<int> w)
    : elements_(std::move(elements)), table_(std::move(table)), identity_(identity), w_(std::move(w)) {
  const int n = static_cast<int>(elements_.size());
  if (n == 0) throw InputError("group has no elements");
  if (static_cast<int>(table_.size()) != n) throw InputError("multiplication table has wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("multiplication table row has wrong length");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("multiplication table entry out of range");
  }
  if (identity_ < 0 || identity_ >= n) throw InputError("identity index out of range");
  if (static_cast<int>(w_.size()) != n) throw InputError("orientation character has wrong length");
  for (int x : w_)
    if (x != 1 && x != -1) throw InputError("orientation character values must be +1 or -1");

  for (int a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw PreconditionError("identity element does not act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw PreconditionError("multiplication table is not associative");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0 || table_[inverse_[a]][a] != identity_)
      throw PreconditionError("group element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w_[table_[a][b]] != w_[a] * w_[b])
        throw PreconditionError("orientation character is not a homomorphism");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"1"}, {{0}}, 0, {1}); }

namespace {

FiniteGroup make_cyclic(int n, bool twisted) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  if (twisted && n % 2 != 0) throw InputError("nonorientable character needs even order");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> w(n);
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a));
    w[a] = (twisted && a % 2 == 1) ? -1 : 1;
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(table), 0, std::move(w));
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(int n) { return make_cyclic(n, false); }
FiniteGroup FiniteGroup::cyclic_nonorientable(int n) { return make_cyclic(n, true); }

GroupRingElement::GroupRingElement(std::shared_ptr<const FiniteGroup> group)
    : group_(std::move(group)), coeffs_(group_->order()) {}

GroupRingElement GroupRingElement::basis(std::shared_ptr<const FiniteGroup> group, int g, const Integer& coeff) {
  GroupRingElement e(std::move(group));
  if (g < 0 || g >= static_cast<int>(e.coeffs_.size())) throw InputError("group element index out of range");
  e.coeffs_[g] = coeff;
  return e;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r(*this);
  r.coeffs_ = add(coeffs_, o.coeffs_);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r(*this);
  r.coeffs_ = subtract(coeffs_, o.coeffs_);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r(group_);
  const int n = static_cast<int>(coeffs_.size());
  for (int a = 0; a < n; ++a) {
    if (sgn(coeffs_[a]) == 0) continue;
    for (int b = 0; b < n; ++b)
      if (sgn(o.coeffs_[b]) != 0) r.coeffs_[group_->multiply(a, b)] += coeffs_[a] * o.coeffs_[b];
  }
  return r;
}

GroupRingElement GroupRingElement::scaled(const Integer& c) const {
  GroupRingElement r(*this);
  r.coeffs_ = scale(coeffs_, c);
  return r;
}

GroupRingElement GroupRingElement::conjugate() const {
  GroupRingElement r(group_);
  for (int a = 0; a < static_cast<int>(coeffs_.size()); ++a)
    r.coeffs_[group_->inverse(a)] += group_->w(a) * coeffs_[a];
  return r;
}

std::string GroupRingElement::to_string() const {
  std::string s;
  for (int g = 0; g < static_cast<int>(coeffs_.size()); ++g) {
    const Integer& c = coeffs_[g];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (s.empty()) s += sgn(c) < 0 ? "-" : "";
    else s += sgn(c) < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    s += group_->elements()[g];
  }
  return s.empty() ? "0" : s;
}

RingSpec RingSpec::group_ring(FiniteGroup group) {
  RingSpec r(Kind::GroupRing);
  r.group_ = std::make_shared<const FiniteGroup>(std::move(group));
  return r;
}

const FiniteGroup& RingSpec::group() const {
  if (!group_) throw InputError("ring is not a group ring");
  return *group_;
}

const std::shared_ptr<const FiniteGroup>& RingSpec::group_ptr() const {
  if (!group_) throw InputError("ring is not a group ring");
  return group_;
}

std::string RingSpec::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::F2:
      return "F2";
    case Kind::GroupRing:
      return fmt::format("Z[pi], |pi| = {}", group_->order());
  }
  return "?";
}

bool RingSpec::operator==(const RingSpec& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::GroupRing) return true;
  return group_ == other.group_ || *group_ == *other.group_;
}

IntMatrix regular_representation(const RingSpec& ring, const std::vector<std::vector<GroupRingElement>>& a,
                                  std::size_t rows, std::size_t cols) {
  const FiniteGroup& grp = ring.group();
  const std::size_t n = grp.order();
  IntMatrix m(rows * n, cols * n);
  if (a.size() != rows) throw InputError("ring matrix has wrong number of rows");
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw InputError("ring matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t g = 0; g < n; ++g) {
        const GroupRingElement ga = GroupRingElement::basis(ring.group_ptr(), static_cast<int>(g)) * a[i][j];
        for (std::size_t h = 0; h < n; ++h) m(i * n + h, j * n + g) = ga[static_cast<int>(h)];
      }
  }
  return m;
}

std::vector<std::vector<GroupRingElement>> ring_entries(const RingSpec& ring, const IntMatrix& m) {
  const FiniteGroup& grp = ring.group();
  const std::size_t n = grp.order();
  if (m.rows() % n != 0 || m.cols() % n != 0) throw InputError("matrix size is not a multiple of |pi|");
  const std::size_t rows = m.rows() / n, cols = m.cols() / n;
  const auto e = static_cast<std::size_t>(grp.identity());
  std::vector<std::vector<GroupRingElement>> a(rows, std::vector<GroupRingElement>(cols, GroupRingElement(ring.group_ptr())));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t h = 0; h < n; ++h) a[i][j][static_cast<int>(h)] = m(i * n + h, j * n + e);
  if (!(regular_representation(ring, a, rows, cols) == m))
    throw PreconditionError("matrix is not equivariant for the left group action");
  return a;
}

IntMatrix dual_matrix(const RingSpec& ring, const IntMatrix& m) {
  if (!ring.is_group_ring()) return m.transpose();
  const auto a = ring_entries(ring, m);
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols() / ring.multiplier();
  std::vector<std::vector<GroupRingElement>> b(cols, std::vector<GroupRingElement>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b[j][i] = a[i][j].conjugate();
  return regular_representation(ring, b, cols, rows);
}

}  // namespace hopf
