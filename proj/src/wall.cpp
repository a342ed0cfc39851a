#include "hopf/wall.hpp"

#include <fmt/format.h>

namespace hopf {

namespace {

int m_sign(int m) { return m % 2 == 0 ? 1 : -1; }

}  // namespace

IntMatrix wall_relation_matrix(const FiniteGroup& group, int m) {
  const std::size_t n = group.order();
  IntMatrix rel(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    const int gi = static_cast<int>(g);
    rel(g, g) += 1;
    rel(static_cast<std::size_t>(group.inverse(gi)), g) -= m_sign(m) * group.w(gi);
  }
  return rel;
}

AbelianGroupPresentation wall_quotient(const FiniteGroup& group, int m) {
  return homology_at(wall_relation_matrix(group, m), IntMatrix(0, group.order()));
}

WallClass wall_mu_reduce(const GroupRingElement& x, int m) {
  const FiniteGroup& g = x.group();
  WallClass out;
  out.group_ = std::make_shared<const FiniteGroup>(g);
  out.m_ = m;
  out.lift_ = GroupRingElement(out.group_);
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    const int inv = g.inverse(a);
    if (inv < a) continue;  // handled at the representative
    const int e = m_sign(m) * g.w(a);
    if (inv == a) {
      out.lift_[a] = x[a];
      if (e == -1) {
        Integer r = x[a] % 2;
        if (r < 0) r += 2;
        out.lift_[a] = r;
      }
    } else {
      out.lift_[a] = x[a] + e * x[inv];
    }
  }
  return out;
}

Integer WallClass::trivial_value() const {
  if (group_->order() != 1) throw InputError("trivial_value needs the trivial group");
  return lift_[0];
}

std::string WallClass::to_string() const {
  const char* sign = m_ % 2 == 0 ? "-" : "+";
  if (group_->order() == 1) return lift_[0].get_str() + (m_ % 2 == 0 ? " ∈ Z" : " ∈ Z/2");
  return fmt::format("{} ∈ Z[π]/{{x {} x̄}}", lift_.to_string(), sign);
}

WallClass wall_mu_from_double_points(std::shared_ptr<const FiniteGroup> group, const std::vector<DoublePoint>& points,
                                     int m) {
  GroupRingElement x(group);
  for (const DoublePoint& p : points) {
    if (p.g < 0 || p.g >= static_cast<int>(group->order()))
      throw InputError(fmt::format("double point group element {} out of range", p.g));
    if (p.sign != 1 && p.sign != -1) throw InputError(fmt::format("double point sign {} is not +-1", p.sign));
    x[p.g] += p.sign;
  }
  return wall_mu_reduce(x, m);
}

bool lambda_mu_chi_check(const Integer& lambda_ff, const WallClass& mu, const Integer& chi_nu, int m) {
  if (((mu.m() % 2) + 2) % 2 != ((m % 2) + 2) % 2) throw InputError("mu was reduced with a different parity of m");
  if (m % 2 == 0) return lambda_ff == 2 * mu.trivial_value() + chi_nu;
  mu.trivial_value();
  Integer diff = (lambda_ff - chi_nu) % 2;
  return diff == 0;
}

}  // namespace hopf
