#pragma once

#include <utility>
#include <vector>

#include "covering/body.hpp"

namespace covering {

/// Minimum-norm element of a convex hull together with convex weights that
/// express it in terms of the input points.
struct MinNormPoint {
  Vec point;
  double distance = 0.0;
  std::vector<double> weights;
};

/// Wolfe's active-set method (exact face enumeration for up to three
/// points). Throws NoConvergence after 1e5 major cycles.
MinNormPoint min_norm_point(const std::vector<Vec>& points);

/// Bound on ||x - y|| when ||x|| = 1 + eps and the hyperplane
/// {<h, y> = ||y||^2} separates x from the unit ball: sqrt((1+eps)^2 - 1).
double separ_bound(double eps);

/// W = intersection over v in directions of {h : <h - center, v> < r^2 + slack}.
/// Every direction has norm `inradius`.
struct OuterPolytope {
  Vec center;
  std::vector<Vec> directions;
  double inradius = 0.0;
  double slack = 0.0;

  double threshold() const { return inradius * inradius + slack; }
  /// Closed version of W as a halfspace list.
  Polytope as_polytope() const;
  /// Membership in the open polytope W.
  bool contains(const Vec& point) const;
};

/// Outer polytope whose direction set surrounds the incenter exactly
/// (hull distance 0) and whose halfspaces all contain the body. Both
/// properties are re-checked before returning; a failed check throws
/// CertificateFailure.
OuterPolytope build_outer(const Body& body, double eps);

/// r(W intersected with B) for each eps in the schedule.
std::vector<std::pair<double, double>> check_outer_shrink(const Body& body,
                                                          const std::vector<double>& eps_schedule);

}  // namespace covering
