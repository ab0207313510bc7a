#include "covering/inradius.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "covering/projection.hpp"
#include "covering/simplex.hpp"

namespace covering {
namespace {

constexpr double kBisectionTol = 1e-10;

InscribedBall lens_inradius(const BallBody& ball) {
  const Vec& c = ball.center();
  const double rho = ball.radius();
  const double t = c.norm();
  if (t + rho <= 1.0) return {c, rho, {0}};
  if (t + 1.0 <= rho) return {Vec::Zero(c.size()), 1.0, {1}};
  if (t >= 1.0 + rho) throw Error(ErrorKind::EmptyInterior, "clipped ball has empty interior");
  // The lens is thinnest along the line of centers.
  const Vec chat = c / t;
  const double near = t - rho;
  return {chat * (0.5 * (near + 1.0)), 0.5 * (1.0 - near), {0, 1}};
}

std::vector<std::size_t> touching_constraints(const Eigen::MatrixXd& N, const Eigen::VectorXd& a,
                                              const Vec& center, double radius) {
  std::vector<std::size_t> out;
  for (Eigen::Index i = 0; i < N.rows(); ++i) {
    if (a[i] - N.row(i).dot(center) - radius <= kTouchTol) out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

InscribedBall inradius_polytope(const Polytope& p) {
  if (!p.bounded()) {
    throw Error(ErrorKind::Unbounded, "inradius_polytope: polytope is unbounded");
  }
  const Eigen::Index d = p.dimension();
  const Eigen::MatrixXd N = p.unit_normals();
  const Eigen::VectorXd a = p.unit_offsets();

  Eigen::MatrixXd A(N.rows(), d + 1);
  A.leftCols(d) = N;
  A.col(d).setOnes();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(d + 1);
  c[d] = 1.0;
  std::vector<bool> free_vars(d + 1, true);
  free_vars[d] = false;

  const auto r = lp::maximize(A, a, c, free_vars);
  if (r.status == lp::LpStatus::Unbounded) {
    throw Error(ErrorKind::Unbounded, "inradius_polytope: inscribed radius is unbounded");
  }
  if (r.status == lp::LpStatus::Infeasible || r.objective <= 1e-12) {
    throw Error(ErrorKind::EmptyInterior, "inradius_polytope: empty interior");
  }
  InscribedBall out;
  out.center = r.x.head(d);
  out.radius = r.objective;
  out.touching = touching_constraints(N, a, out.center, out.radius);
  return out;
}

InscribedBall inradius_body(const Body& b) {
  if (b.is_ball()) {
    if (b.clipped()) return lens_inradius(b.ball());
    return {b.ball().center(), b.ball().radius(), {0}};
  }
  if (b.is_plank() && !b.clipped()) {
    return {b.plank().base(), b.plank().width() / 2.0, {0, 1}};
  }
  const Polytope p = b.halfspace_form();
  if (!b.clipped()) return inradius_polytope(p);
  if (p.bounded()) {
    auto ib = inradius_polytope(p);
    if (ib.center.norm() + ib.radius <= 1.0) return ib;
  }
  return inradius_clipped(p);
}

Vec project_point(const Polytope& p, double ball_radius, const Vec& target) {
  require_dim(target, p.dimension(), "project_point");
  if (!(ball_radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "project_point: ball_radius must be positive");
  const Eigen::MatrixXd N = p.unit_normals();
  const Eigen::VectorXd a = p.unit_offsets();
  if (!meet_ball(N, a, ball_radius)) {
    throw Error(ErrorKind::EmptyIntersection, "project_point: polytope misses the ball");
  }
  auto res = dykstra(N, a, ball_radius, target);
  if (!res.converged) throw Error(ErrorKind::NoConvergence, "project_point: iteration cap reached");
  return res.point;
}

InscribedBall inradius_clipped(const Polytope& p) {
  const Eigen::MatrixXd N = p.unit_normals();
  const Eigen::VectorXd a = p.unit_offsets();
  const Eigen::Index d = p.dimension();
  const auto shrunk_feasible = [&](double rho) -> std::optional<Vec> {
    return meet_ball(N, (a.array() - rho).matrix(), 1.0 - rho);
  };

  auto center = shrunk_feasible(0.0);
  if (!center) throw Error(ErrorKind::EmptyInterior, "inradius_clipped: polytope misses the unit ball");

  double lo = 0.0;
  double hi = 1.0;
  if (N.rows() == 0 || a.minCoeff() >= 1.0) {
    center = Vec::Zero(d);
    lo = 1.0;
  }
  while (hi - lo > kBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    if (auto c = shrunk_feasible(mid)) {
      lo = mid;
      center = std::move(c);
    } else {
      hi = mid;
    }
  }

  InscribedBall out;
  out.center = *center;
  double certified = 1.0 - out.center.norm();
  if (N.rows() > 0) certified = std::min(certified, (a - N * out.center).minCoeff());
  out.radius = std::max(0.0, std::min(certified, lo));
  if (out.radius <= 1e-12) throw Error(ErrorKind::EmptyInterior, "inradius_clipped: empty interior");
  out.touching = touching_constraints(N, a, out.center, out.radius);
  if (1.0 - out.center.norm() - out.radius <= kTouchTol) out.touching.push_back(static_cast<std::size_t>(N.rows()));
  return out;
}

}  // namespace covering
