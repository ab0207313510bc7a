#pragma once

// Convex projection onto intersections of halfspaces and a centered ball by
// Dykstra's alternating projections, plus the feasibility test built on it.

#include <optional>

#include "covering/vec.hpp"

namespace covering {

struct DykstraOptions {
  int max_sweeps = 100000;
  /// Stop once a full sweep moves the iterate and every correction term by
  /// less than this (scaled by max(1, ||target||)).
  double tolerance = 1e-13;
};

struct DykstraResult {
  Vec point;
  bool converged = false;
  int sweeps = 0;
};

/// Rows of `normals` must be unit vectors. The ball {||x|| <= radius} is
/// included when `radius` is set. The intersection must be nonempty.
DykstraResult dykstra(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                      std::optional<double> radius, const Vec& target,
                      const DykstraOptions& options = {});

/// Nearest point of {normals x <= offsets} to the origin, or nullopt when
/// the polyhedron is empty.
std::optional<Vec> nearest_to_origin(const Eigen::MatrixXd& normals,
                                     const Eigen::VectorXd& offsets);

/// Does {normals x <= offsets} meet {||x|| <= radius}? On success the
/// returned point is the polyhedron's nearest point to the origin.
std::optional<Vec> meet_ball(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                             double radius);

/// Largest violation max_i (<x, n_i> - a_i), floored at zero.
double max_violation(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                     const Vec& x);

}  // namespace covering
