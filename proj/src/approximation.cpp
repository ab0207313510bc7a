#include "covering/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "covering/inradius.hpp"

namespace covering {
namespace {

constexpr int kMaxIterations = 100000;
constexpr double kWeightTol = 1e-14;

// Minimum-norm point of the affine hull of points[idx...]. Weights sum to 1
// but may be negative.
std::pair<Vec, std::vector<double>> affine_min_norm(const std::vector<Vec>& points,
                                                    const std::vector<std::size_t>& idx) {
  const Vec& p0 = points[idx[0]];
  std::vector<double> w(idx.size(), 0.0);
  if (idx.size() == 1) {
    w[0] = 1.0;
    return {p0, w};
  }
  Eigen::MatrixXd B(p0.size(), static_cast<Eigen::Index>(idx.size() - 1));
  for (std::size_t k = 1; k < idx.size(); ++k) {
    B.col(static_cast<Eigen::Index>(k - 1)) = points[idx[k]] - p0;
  }
  const Eigen::VectorXd mu = B.completeOrthogonalDecomposition().solve(-p0);
  w[0] = 1.0 - mu.sum();
  for (std::size_t k = 1; k < idx.size(); ++k) w[k] = mu[static_cast<Eigen::Index>(k - 1)];
  return {p0 + B * mu, w};
}

Vec combine(const std::vector<Vec>& points, const std::vector<double>& weights) {
  Vec q = Vec::Zero(points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (weights[i] != 0.0) q += weights[i] * points[i];
  }
  return q;
}

// Clamps tiny negatives and renormalizes; false if a weight is clearly negative.
bool clean_weights(std::vector<double>& w) {
  for (double& x : w) {
    if (x < -kWeightTol) return false;
    x = std::max(0.0, x);
  }
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  if (s <= 0.0) return false;
  for (double& x : w) x /= s;
  return true;
}

MinNormPoint enumerate_faces(const std::vector<Vec>& points) {
  const std::size_t n = points.size();
  MinNormPoint best;
  best.distance = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    auto [q, w] = affine_min_norm(points, idx);
    if (!clean_weights(w)) continue;
    std::vector<double> full(n, 0.0);
    for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = w[k];
    q = combine(points, full);
    if (q.norm() < best.distance) {
      best = {q, q.norm(), std::move(full)};
    }
  }
  return best;
}

// Wolfe's active-set method: S stays affinely independent and the norm
// strictly decreases, so it terminates after finitely many major cycles.
MinNormPoint wolfe(const std::vector<Vec>& points) {
  const std::size_t n = points.size();
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, p.squaredNorm());
  const double gap_tol = 1e-14 * std::max(scale, 1e-300);

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i].squaredNorm() < points[start].squaredNorm()) start = i;
  }
  std::vector<std::size_t> S{start};
  std::vector<double> lambda{1.0};
  Vec x = points[start];

  for (int major = 0; major < kMaxIterations; ++major) {
    const double xx = x.squaredNorm();
    std::size_t j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double g = x.dot(points[i]);
      if (g < best) {
        best = g;
        j = i;
      }
    }
    if (xx - best <= gap_tol || std::find(S.begin(), S.end(), j) != S.end()) break;
    S.push_back(j);
    lambda.push_back(0.0);

    for (;;) {
      auto [y, mu] = affine_min_norm(points, S);
      bool positive = true;
      for (double m : mu) positive = positive && m > kWeightTol;
      if (positive) {
        x = y;
        lambda = mu;
        break;
      }
      double theta = 1.0;
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (mu[k] <= kWeightTol && lambda[k] - mu[k] > 0.0) {
          theta = std::min(theta, lambda[k] / (lambda[k] - mu[k]));
        }
      }
      for (std::size_t k = 0; k < S.size(); ++k) lambda[k] = theta * mu[k] + (1.0 - theta) * lambda[k];
      // drop the vanished weights (at least the one attaining theta)
      std::size_t drop = 0;
      for (std::size_t k = 1; k < S.size(); ++k) {
        if (lambda[k] < lambda[drop]) drop = k;
      }
      std::vector<std::size_t> S2;
      std::vector<double> l2;
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (k == drop || lambda[k] <= kWeightTol) continue;
        S2.push_back(S[k]);
        l2.push_back(lambda[k]);
      }
      S = std::move(S2);
      lambda = std::move(l2);
      const double s = std::accumulate(lambda.begin(), lambda.end(), 0.0);
      for (double& l : lambda) l /= s;
      std::vector<double> full(n, 0.0);
      for (std::size_t k = 0; k < S.size(); ++k) full[S[k]] = lambda[k];
      x = combine(points, full);
      if (S.size() == 1) break;
    }
  }
  std::vector<double> full(n, 0.0);
  for (std::size_t k = 0; k < S.size(); ++k) full[S[k]] = lambda[k];
  x = combine(points, full);
  return {x, x.norm(), full};
}

void append_axis_directions(std::vector<Vec>& out, Eigen::Index dim, double r) {
  for (Eigen::Index k = 0; k < dim; ++k) {
    Vec e = Vec::Zero(dim);
    e[k] = r;
    out.push_back(e);
    out.push_back(-e);
  }
}

}  // namespace

MinNormPoint min_norm_point(const std::vector<Vec>& points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "min_norm_point: empty point set");
  for (const auto& p : points) require_dim(p, points.front().size(), "min_norm_point");
  if (points.size() <= 3) return enumerate_faces(points);
  return wolfe(points);
}

double separ_bound(double eps) {
  if (!(eps >= 0.0)) throw Error(ErrorKind::InvalidArgument, "separ_bound: eps must be >= 0");
  return std::sqrt(eps * (2.0 + eps));
}

Polytope OuterPolytope::as_polytope() const {
  std::vector<Halfspace> hs;
  hs.reserve(directions.size());
  for (const auto& v : directions) hs.emplace_back(v, threshold() + center.dot(v));
  return Polytope(center.size(), std::move(hs));
}

bool OuterPolytope::contains(const Vec& point) const {
  require_dim(point, center.size(), "OuterPolytope::contains");
  return std::all_of(directions.begin(), directions.end(),
                     [&](const Vec& v) { return (point - center).dot(v) < threshold(); });
}

OuterPolytope build_outer(const Body& body, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "build_outer: eps must be positive");
  const Eigen::Index d = body.dimension();
  OuterPolytope out;
  out.slack = eps;

  if (body.is_ball()) {
    const InscribedBall ib = inradius_body(body);
    out.center = ib.center;
    out.inradius = ib.radius;
    const bool lens = body.clipped() && ib.touching.size() == 2;
    if (lens) {
      const Vec axis = body.ball().center().normalized();
      out.directions = {ib.radius * axis, -ib.radius * axis};
    } else {
      append_axis_directions(out.directions, d, ib.radius);
    }
  } else if (body.is_plank() && !body.clipped()) {
    const Plank& pl = body.plank();
    out.center = pl.base();
    out.inradius = pl.width() / 2.0;
    out.directions = {out.inradius * pl.direction(), -out.inradius * pl.direction()};
  } else {
    const Polytope p = body.halfspace_form();
    if (!body.clipped() && !p.bounded()) {
      throw Error(ErrorKind::UnsupportedBody, "build_outer: polytope must be bounded");
    }
    const InscribedBall ib = inradius_body(body);
    const Eigen::MatrixXd N = p.unit_normals();
    out.center = ib.center;
    out.inradius = ib.radius;
    for (std::size_t i : ib.touching) {
      if (i < p.size()) {
        out.directions.push_back(ib.radius * N.row(static_cast<Eigen::Index>(i)).transpose());
      } else if (ib.center.norm() > 1e-9) {
        out.directions.push_back(ib.radius * ib.center.normalized());
      } else {
        append_axis_directions(out.directions, d, ib.radius);
      }
    }
  }
  if (out.directions.empty()) {
    throw Error(ErrorKind::CertificateFailure, "build_outer: no touching constraints");
  }

  for (const auto& v : out.directions) {
    const double reach = support_value(body, v) - out.center.dot(v);
    if (reach > out.threshold()) {
      throw Error(ErrorKind::CertificateFailure,
                  "build_outer: body leaves W along a direction (excess " +
                      std::to_string(reach - out.threshold()) + ")");
    }
  }
  const double hull_gap = min_norm_point(out.directions).distance;
  if (hull_gap > eps) {
    throw Error(ErrorKind::CertificateFailure,
                "build_outer: dist(conv V, 0) = " + std::to_string(hull_gap) + " exceeds eps");
  }
  return out;
}

std::vector<std::pair<double, double>> check_outer_shrink(const Body& body,
                                                          const std::vector<double>& eps_schedule) {
  std::vector<std::pair<double, double>> out;
  out.reserve(eps_schedule.size());
  for (double eps : eps_schedule) {
    const OuterPolytope w = build_outer(body, eps);
    out.emplace_back(eps, inradius_clipped(w.as_polytope()).radius);
  }
  return out;
}

}  // namespace covering
