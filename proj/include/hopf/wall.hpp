// Wall self-intersection arithmetic: Z[pi] / {x - (-1)^m xbar}, where
// xbar = sum a_g w(g) g^{-1}.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopf/exact_linalg.hpp"
#include "hopf/ring.hpp"

namespace hopf {

/// Columns g - (-1)^m w(g) g^{-1}, one per group element.
IntMatrix wall_relation_matrix(const FiniteGroup& group, int m);
/// The quotient group Z^|pi| / relations, computed by Smith normal form.
AbelianGroupPresentation wall_quotient(const FiniteGroup& group, int m);

/// An element of Z[pi] / {x - (-1)^m xbar}. Each orbit {g, g^{-1}} contributes
/// one coordinate, read at its smaller index: g^{-1} = (-1)^m w(g) g in the
/// quotient, so the coordinate is x_g + (-1)^m w(g) x_{g^{-1}} (Z when the
/// orbit has two elements or (-1)^m w(g) = 1, Z/2 otherwise).
class WallClass {
 public:
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  int m() const { return m_; }

  /// The canonical lift: orbit coordinates at the orbit representatives,
  /// torsion coordinates in {0, 1}, zero elsewhere.
  const GroupRingElement& lift() const { return lift_; }
  bool is_zero() const { return lift_.is_zero(); }
  bool operator==(const WallClass& o) const { return m_ == o.m_ && lift_ == o.lift_; }

  /// The value in Z (m even) or Z/2 (m odd) for the trivial group.
  Integer trivial_value() const;
  std::string to_string() const;

  friend WallClass wall_mu_reduce(const GroupRingElement& x, int m);

 private:
  std::shared_ptr<const FiniteGroup> group_;
  int m_ = 0;
  GroupRingElement lift_;
};

WallClass wall_mu_reduce(const GroupRingElement& x, int m);

struct DoublePoint {
  int g;
  int sign;
};
/// mu(f) = sum of sign * g over the double points, reduced.
WallClass wall_mu_from_double_points(std::shared_ptr<const FiniteGroup> group, const std::vector<DoublePoint>& points,
                                     int m);

/// lambda(f, f) = (1 + (-1)^m) mu(f) + chi(nu_f) for the trivial group. For
/// odd m the mu-term vanishes and the identity is checked mod 2.
bool lambda_mu_chi_check(const Integer& lambda_ff, const WallClass& mu, const Integer& chi_nu, int m);

}  // namespace hopf
