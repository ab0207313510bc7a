#include "covering/projection.hpp"

#include <algorithm>
#include <cmath>

#include "covering/simplex.hpp"

namespace covering {

double max_violation(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                     const Vec& x) {
  if (normals.rows() == 0) return 0.0;
  return std::max(0.0, (normals * x - offsets).maxCoeff());
}

DykstraResult dykstra(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                      std::optional<double> radius, const Vec& target,
                      const DykstraOptions& options) {
  const Eigen::Index m = normals.rows();
  const Eigen::Index d = target.size();
  const Eigen::Index sets = m + (radius ? 1 : 0);

  DykstraResult out;
  out.point = target;
  if (sets == 0) {
    out.converged = true;
    return out;
  }

  Eigen::MatrixXd corr = Eigen::MatrixXd::Zero(d, sets);
  Eigen::MatrixXd corr_prev(d, sets);
  const double tol = options.tolerance * std::max(1.0, target.norm());
  Vec& x = out.point;

  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    const Vec x_prev = x;
    corr_prev = corr;
    for (Eigen::Index k = 0; k < sets; ++k) {
      Vec y = x + corr.col(k);
      if (k < m) {
        const double excess = normals.row(k).dot(y) - offsets[k];
        x = excess > 0.0 ? Vec(y - excess * normals.row(k).transpose()) : y;
      } else {
        const double ny = y.norm();
        x = ny > *radius ? Vec(y * (*radius / ny)) : y;
      }
      corr.col(k) = y - x;
    }
    const double change =
        std::max((x - x_prev).lpNorm<Eigen::Infinity>(),
                 (corr - corr_prev).lpNorm<Eigen::Infinity>());
    if (change <= tol) {
      out.converged = true;
      out.sweeps = sweep;
      return out;
    }
  }
  out.sweeps = options.max_sweeps;
  return out;
}

std::optional<Vec> nearest_to_origin(const Eigen::MatrixXd& normals,
                                     const Eigen::VectorXd& offsets) {
  const Vec origin = Vec::Zero(normals.cols());
  if (normals.rows() == 0) return origin;
  if (!lp::feasible(normals, offsets)) return std::nullopt;
  return dykstra(normals, offsets, std::nullopt, origin).point;
}

std::optional<Vec> meet_ball(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets,
                             double radius) {
  const Vec origin = Vec::Zero(normals.cols());
  if (normals.rows() == 0) return origin;
  if (!lp::feasible(normals, offsets)) return std::nullopt;
  // An unconverged run means the polyhedron is empty up to LP tolerance or
  // badly conditioned; either way it is reported as not meeting the ball.
  auto res = dykstra(normals, offsets, std::nullopt, origin);
  if (!res.converged || res.point.norm() > radius + 1e-12) return std::nullopt;
  return res.point;
}

}  // namespace covering
