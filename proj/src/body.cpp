#include "covering/body.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "covering/projection.hpp"
#include "covering/simplex.hpp"

namespace covering {
namespace {

void require_finite(const Vec& v, const char* what) {
  if (v.size() < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": empty vector");
  if (!all_finite(v)) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": non-finite coordinate");
}

void require_direction(const Vec& u) {
  if (!all_finite(u) || u.norm() <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "support_value: direction must be nonzero and finite");
  }
}

bool recession_cone_trivial(const Eigen::MatrixXd& normals, Eigen::Index dim) {
  const Eigen::Index m = normals.rows();
  Eigen::MatrixXd A(m + 2 * dim, dim);
  Eigen::VectorXd b(m + 2 * dim);
  A.topRows(m) = normals;
  b.head(m).setZero();
  A.block(m, 0, dim, dim) = Eigen::MatrixXd::Identity(dim, dim);
  A.block(m + dim, 0, dim, dim) = -Eigen::MatrixXd::Identity(dim, dim);
  b.tail(2 * dim).setOnes();
  const std::vector<bool> free_vars(dim, true);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
      c[k] = sign;
      const auto r = lp::maximize(A, b, c, free_vars);
      if (r.status != lp::LpStatus::Optimal || r.objective > 1e-9) return false;
    }
  }
  return true;
}

double polytope_support(const Polytope& p, const Vec& u) {
  const auto r = lp::maximize(p.unit_normals(), p.unit_offsets(), u,
                              std::vector<bool>(p.dimension(), true));
  switch (r.status) {
    case lp::LpStatus::Optimal: return r.objective;
    case lp::LpStatus::Unbounded:
      throw Error(ErrorKind::UnboundedSupport, "support_value: polytope unbounded in direction");
    case lp::LpStatus::Infeasible: break;
  }
  throw Error(ErrorKind::EmptyInterior, "support_value: polytope is empty");
}

double plank_support(const Plank& pl, const Vec& u) {
  const double along = u.dot(pl.direction());
  const Vec across = u - along * pl.direction();
  if (across.norm() > 1e-12 * u.norm()) {
    throw Error(ErrorKind::UnboundedSupport, "support_value: plank unbounded in direction");
  }
  return along * pl.median_offset() + std::abs(along) * pl.width() / 2.0;
}

// sup of <h, u> over B(c, rho) intersected with the unit ball.
double lens_support(const BallBody& ball, const Vec& u) {
  const Vec& c = ball.center();
  const double rho = ball.radius();
  const double t = c.norm();
  const double un = u.norm();
  const Vec uhat = u / un;
  if (t + rho <= 1.0) return c.dot(u) + rho * un;
  if (t + 1.0 <= rho) return un;
  if (t > 1.0 + rho) throw Error(ErrorKind::EmptyIntersection, "clipped ball is empty");
  if ((uhat - c).norm() <= rho) return un;
  const Vec top = c + rho * uhat;
  if (top.norm() <= 1.0) return c.dot(u) + rho * un;
  // Maximum is attained on the sphere where the two boundaries meet.
  const Vec chat = c / t;
  const double s = (1.0 + t * t - rho * rho) / (2.0 * t);
  const double q = std::sqrt(std::max(0.0, 1.0 - s * s));
  const double along = uhat.dot(chat);
  const double across = (uhat - along * chat).norm();
  return un * (s * along + q * across);
}

}  // namespace

Halfspace::Halfspace(Vec normal, double offset) : normal_(std::move(normal)), offset_(offset) {
  require_finite(normal_, "Halfspace normal");
  if (!std::isfinite(offset_)) throw Error(ErrorKind::InvalidArgument, "Halfspace offset not finite");
  if (normal_.norm() <= 0.0) throw Error(ErrorKind::InvalidArgument, "Halfspace normal must be nonzero");
}

Halfspace Halfspace::normalized() const {
  const double n = normal_.norm();
  return Halfspace(normal_ / n, offset_ / n);
}

Polytope::Polytope(Eigen::Index dimension, std::vector<Halfspace> halfspaces)
    : dim_(dimension), halfspaces_(std::move(halfspaces)), bounded_(false) {
  if (dim_ < 1) throw Error(ErrorKind::InvalidArgument, "Polytope dimension must be >= 1");
  for (const auto& h : halfspaces_) require_dim(h.normal(), dim_, "Polytope halfspace");
  bounded_ = !halfspaces_.empty() && recession_cone_trivial(unit_normals(), dim_);
}

Polytope Polytope::with(const Halfspace& extra) const {
  auto hs = halfspaces_;
  hs.push_back(extra);
  return Polytope(dim_, std::move(hs));
}

Eigen::MatrixXd Polytope::unit_normals() const {
  Eigen::MatrixXd n(static_cast<Eigen::Index>(halfspaces_.size()), dim_);
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    const auto& h = halfspaces_[i];
    n.row(static_cast<Eigen::Index>(i)) = h.normal().transpose() / h.normal().norm();
  }
  return n;
}

Eigen::VectorXd Polytope::unit_offsets() const {
  Eigen::VectorXd a(static_cast<Eigen::Index>(halfspaces_.size()));
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    const auto& h = halfspaces_[i];
    a[static_cast<Eigen::Index>(i)] = h.offset() / h.normal().norm();
  }
  return a;
}

Polytope Polytope::box(const Vec& lo, const Vec& hi) {
  require_dim(hi, lo.size(), "Polytope::box");
  std::vector<Halfspace> hs;
  for (Eigen::Index k = 0; k < lo.size(); ++k) {
    Vec e = Vec::Zero(lo.size());
    e[k] = 1.0;
    hs.emplace_back(e, hi[k]);
    hs.emplace_back(-e, -lo[k]);
  }
  return Polytope(lo.size(), std::move(hs));
}

BallBody::BallBody(Vec center, double radius) : center_(std::move(center)), radius_(radius) {
  require_finite(center_, "Ball center");
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw Error(ErrorKind::InvalidArgument, "Ball radius must be positive");
  }
}

Plank::Plank(Vec base, Vec direction, double width)
    : base_(std::move(base)), direction_(std::move(direction)), width_(width) {
  require_finite(base_, "Plank base");
  require_finite(direction_, "Plank direction");
  require_dim(direction_, base_.size(), "Plank direction");
  if (std::abs(direction_.norm() - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "Plank direction must be a unit vector");
  }
  if (!(width_ > 0.0) || !std::isfinite(width_)) {
    throw Error(ErrorKind::InvalidArgument, "Plank width must be positive");
  }
}

Polytope Plank::as_polytope() const {
  const double s = median_offset();
  return Polytope(dimension(), {Halfspace(direction_, s + width_ / 2.0),
                                Halfspace(-direction_, -s + width_ / 2.0)});
}

Eigen::Index Body::dimension() const {
  return std::visit([](const auto& s) { return s.dimension(); }, shape_);
}

Polytope Body::halfspace_form() const {
  if (is_polytope()) return polytope();
  if (is_plank()) return plank().as_polytope();
  throw Error(ErrorKind::UnsupportedBody, "ball has no halfspace form");
}

bool contains(const Body& body, const Vec& point, double tolerance) {
  require_dim(point, body.dimension(), "contains");
  if (!(tolerance >= 0.0)) throw Error(ErrorKind::InvalidArgument, "contains: tolerance must be >= 0");
  if (body.clipped() && point.norm() > 1.0 + tolerance) return false;
  if (body.is_polytope()) {
    for (const auto& h : body.polytope().halfspaces()) {
      if (point.dot(h.normal()) > h.offset() + tolerance) return false;
    }
    return true;
  }
  if (body.is_ball()) {
    const auto& b = body.ball();
    return (point - b.center()).norm() <= b.radius() + tolerance;
  }
  const auto& pl = body.plank();
  return std::abs((point - pl.base()).dot(pl.direction())) <= pl.width() / 2.0 + tolerance;
}

double depth(const Body& body, const Vec& point) {
  require_dim(point, body.dimension(), "depth");
  double out = std::numeric_limits<double>::infinity();
  if (body.is_polytope()) {
    for (const auto& h : body.polytope().halfspaces()) {
      out = std::min(out, (h.offset() - point.dot(h.normal())) / h.normal().norm());
    }
  } else if (body.is_ball()) {
    const auto& b = body.ball();
    out = b.radius() - (point - b.center()).norm();
  } else {
    const auto& pl = body.plank();
    out = pl.width() / 2.0 - std::abs((point - pl.base()).dot(pl.direction()));
  }
  if (body.clipped()) out = std::min(out, 1.0 - point.norm());
  return out;
}

double clipped_support(const Polytope& p, double radius, const Vec& direction) {
  require_dim(direction, p.dimension(), "clipped_support");
  require_direction(direction);
  const Eigen::MatrixXd N = p.unit_normals();
  const Eigen::VectorXd a = p.unit_offsets();
  const auto start = meet_ball(N, a, radius);
  if (!start) throw Error(ErrorKind::EmptyIntersection, "polytope misses the ball");

  const double un = direction.norm();
  const Vec uhat = direction / un;
  if (max_violation(N, a, radius * uhat) <= 0.0) return radius * un;

  double lo = start->dot(uhat);
  double hi = radius;
  if (p.bounded()) hi = std::min(hi, polytope_support(p, uhat));

  Eigen::MatrixXd N2(N.rows() + 1, N.cols());
  Eigen::VectorXd a2(a.size() + 1);
  N2.topRows(N.rows()) = N;
  N2.row(N.rows()) = -uhat.transpose();
  a2.head(a.size()) = a;
  for (int iter = 0; iter < 80 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    a2[a.size()] = -mid;
    if (meet_ball(N2, a2, radius)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi * un;
}

double support_value(const Body& body, const Vec& direction) {
  require_dim(direction, body.dimension(), "support_value");
  require_direction(direction);
  if (body.is_ball()) {
    const auto& b = body.ball();
    if (body.clipped()) return lens_support(b, direction);
    return b.center().dot(direction) + b.radius() * direction.norm();
  }
  if (body.clipped()) return clipped_support(body.halfspace_form(), 1.0, direction);
  if (body.is_plank()) return plank_support(body.plank(), direction);
  return polytope_support(body.polytope(), direction);
}

}  // namespace covering
