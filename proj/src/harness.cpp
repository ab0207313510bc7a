#include "covering/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "covering/inradius.hpp"

namespace covering {
namespace {

constexpr double kMembershipTol = 1e-9;
constexpr double kMinCellRadius = 1e-6;
constexpr int kCutRetries = 100;
constexpr double kMinTargetRadius = 0.05;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// Vertices in counter-clockwise order (Andrew's monotone chain).
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  const auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : k);
  return hull;
}

Polytope polygon_from_ccw(const std::vector<Vec>& v) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec& a = v[i];
    const Vec& b = v[(i + 1) % v.size()];
    const Vec n = make_vec({b[1] - a[1], a[0] - b[0]});
    hs.emplace_back(n, n.dot(a));
  }
  return Polytope(2, std::move(hs));
}

// Facets from barycentric coordinates: lambda(x) = M^{-1} [x; 1] >= 0.
Polytope simplex_from_vertices(const std::vector<Vec>& v) {
  const Eigen::Index d = v.front().size();
  Eigen::MatrixXd M(d + 1, d + 1);
  for (Eigen::Index j = 0; j <= d; ++j) {
    M.col(j).head(d) = v[static_cast<std::size_t>(j)];
    M(d, j) = 1.0;
  }
  const Eigen::MatrixXd inv = M.inverse();
  std::vector<Halfspace> hs;
  for (Eigen::Index i = 0; i <= d; ++i) {
    hs.emplace_back(Vec(-inv.row(i).head(d).transpose()), inv(i, d));
  }
  return Polytope(d, std::move(hs));
}

double safe_inradius(const Polytope& p) {
  try {
    return inradius_polytope(p).radius;
  } catch (const Error&) {
    return 0.0;
  }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& w : state_) {
    s = splitmix64(s);
    w = s;
  }
}

std::uint64_t Rng::next() {
  // xoshiro256**
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec Rng::unit_vector(Eigen::Index dim) {
  for (;;) {
    Vec v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) v[k] = normal();
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

std::size_t Rng::index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double halton(std::uint64_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::vector<unsigned> halton_bases(Eigen::Index dim) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; static_cast<Eigen::Index>(primes.size()) < dim; ++c) {
    if (std::all_of(primes.begin(), primes.end(), [c](unsigned p) { return c % p != 0; })) {
      primes.push_back(c);
    }
  }
  return primes;
}

std::pair<Vec, Vec> bounding_box(const Body& body) {
  const Eigen::Index d = body.dimension();
  Vec lo = Vec::Constant(d, -1.0);
  Vec hi = Vec::Constant(d, 1.0);
  if (body.is_ball()) {
    const auto& b = body.ball();
    const Vec blo = b.center().array() - b.radius();
    const Vec bhi = b.center().array() + b.radius();
    if (!body.clipped()) return {blo, bhi};
    return {lo.cwiseMax(blo), hi.cwiseMin(bhi)};
  }
  if (body.is_plank() || !body.polytope().bounded()) {
    if (!body.clipped()) throw Error(ErrorKind::Unbounded, "bounding_box: body is unbounded");
    return {lo, hi};
  }
  const Body open(body.polytope());
  for (Eigen::Index k = 0; k < d; ++k) {
    Vec e = Vec::Zero(d);
    e[k] = 1.0;
    const double top = support_value(open, e);
    const double bottom = -support_value(open, -e);
    hi[k] = body.clipped() ? std::min(1.0, top) : top;
    lo[k] = body.clipped() ? std::max(-1.0, bottom) : bottom;
  }
  return {lo, hi};
}

std::pair<Polytope, Polytope> split(const Polytope& cell, const Vec& point, const Vec& normal) {
  const double offset = point.dot(normal);
  return {cell.with(Halfspace(normal, offset)), cell.with(Halfspace(-normal, -offset))};
}

Scenario generate_partition(const Polytope& target, int cuts, std::uint64_t seed) {
  if (cuts < 0) throw Error(ErrorKind::InvalidArgument, "generate_partition: cuts must be >= 0");
  if (!target.bounded()) throw Error(ErrorKind::InvalidArgument, "generate_partition: target must be bounded");
  inradius_polytope(target);  // throws on empty interior

  Rng rng(seed);
  const Eigen::Index d = target.dimension();
  std::vector<Polytope> cells{target};
  for (int c = 0; c < cuts; ++c) {
    bool done = false;
    for (int attempt = 0; attempt < kCutRetries && !done; ++attempt) {
      const std::size_t i = rng.index(cells.size());
      const InscribedBall ib = inradius_polytope(cells[i]);
      const double reach = 0.9 * ib.radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
      const Vec point = ib.center + reach * rng.unit_vector(d);
      const Vec normal = rng.unit_vector(d);
      auto [first, second] = split(cells[i], point, normal);
      if (safe_inradius(first) < kMinCellRadius || safe_inradius(second) < kMinCellRadius) continue;
      cells[i] = std::move(first);
      cells.push_back(std::move(second));
      done = true;
    }
    if (!done) throw Error(ErrorKind::DegenerateCell, "generate_partition: could not place a cut");
  }

  std::vector<Body> pieces;
  for (auto& cell : cells) pieces.emplace_back(std::move(cell));
  return Scenario{Body(target), std::move(pieces), seed, "hyperplane-partition"};
}

VerificationResult verify_covering(const Scenario& s, int samples) {
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "verify_covering: samples must be >= 1");
  const Eigen::Index d = s.target.dimension();
  for (const auto& p : s.pieces) {
    if (p.dimension() != d) throw Error(ErrorKind::DimensionMismatch, "verify_covering: piece dimension");
  }
  VerificationResult out;
  out.r_target = inradius_body(s.target).radius;
  for (const auto& p : s.pieces) {
    out.piece_radii.push_back(inradius_body(p).radius);
    out.sum_radii += out.piece_radii.back();
  }

  const auto [lo, hi] = bounding_box(s.target);
  const auto bases = halton_bases(d);
  const std::uint64_t cap = static_cast<std::uint64_t>(samples) * 1000;
  int accepted = 0;
  out.covered = true;
  for (std::uint64_t i = 1; i <= cap && accepted < samples; ++i) {
    Vec pt(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      pt[k] = lo[k] + (hi[k] - lo[k]) * halton(i, bases[static_cast<std::size_t>(k)]);
    }
    if (!contains(s.target, pt, 0.0)) continue;
    ++accepted;
    const bool hit = std::any_of(s.pieces.begin(), s.pieces.end(),
                                 [&](const Body& p) { return contains(p, pt, kMembershipTol); });
    if (!hit) {
      out.covered = false;
      out.uncovered_sample = pt;
      break;
    }
  }
  out.inequality_holds = !out.covered || out.sum_radii >= out.r_target - 1e-7;
  return out;
}

std::optional<Vec> grid_uncovered_oracle(const Scenario& s, double step) {
  const Eigen::Index d = s.target.dimension();
  if (d > 3) throw Error(ErrorKind::InvalidArgument, "grid_uncovered_oracle: dimension must be <= 3");
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid_uncovered_oracle: step must be positive");
  const auto [lo, hi] = bounding_box(s.target);
  const Vec mid = 0.5 * (lo + hi);
  std::vector<long> reach(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    reach[static_cast<std::size_t>(k)] = static_cast<long>(std::floor(0.5 * (hi[k] - lo[k]) / step + 1e-12));
  }
  std::vector<long> idx(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = -reach[k];
  for (;;) {
    Vec p(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      p[k] = mid[k] + static_cast<double>(idx[static_cast<std::size_t>(k)]) * step;
    }
    if (depth(s.target, p) >= kMembershipTol &&
        std::none_of(s.pieces.begin(), s.pieces.end(),
                     [&](const Body& piece) { return contains(piece, p, kMembershipTol); })) {
      return p;
    }
    std::size_t k = idx.size();
    while (k-- > 0) {
      if (++idx[k] <= reach[k]) break;
      idx[k] = -reach[k];
    }
    if (k == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

Polytope random_target(Eigen::Index dim, Rng& rng) {
  if (dim < 2) throw Error(ErrorKind::InvalidArgument, "random_target: dimension must be >= 2");
  for (;;) {
    if (dim == 2) {
      const std::size_t count = 3 + rng.index(2);
      std::vector<Vec> pts;
      for (std::size_t i = 0; i < count; ++i) {
        pts.push_back(make_vec({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}));
      }
      const auto hull = convex_hull_2d(pts);
      if (hull.size() < 3) continue;
      Polytope p = polygon_from_ccw(hull);
      if (safe_inradius(p) >= kMinTargetRadius) return p;
    } else {
      std::vector<Vec> pts;
      for (Eigen::Index i = 0; i <= dim; ++i) {
        Vec v(dim);
        for (Eigen::Index k = 0; k < dim; ++k) v[k] = rng.uniform(-1.0, 1.0);
        pts.push_back(v);
      }
      Eigen::MatrixXd M(dim, dim);
      for (Eigen::Index j = 0; j < dim; ++j) M.col(j) = pts[static_cast<std::size_t>(j + 1)] - pts[0];
      if (std::abs(M.determinant()) < 1e-6) continue;
      Polytope p = simplex_from_vertices(pts);
      if (safe_inradius(p) >= kMinTargetRadius) return p;
    }
  }
}

std::vector<SweepRow> sweep(int trials, std::uint64_t seed, Eigen::Index dim, int max_cuts,
                            int samples) {
  if (trials < 0 || max_cuts < 0) throw Error(ErrorKind::InvalidArgument, "sweep: negative count");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Rng rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(t) + 1)));
    const Polytope target = random_target(dim, rng);
    const int cuts = static_cast<int>(rng.index(static_cast<std::size_t>(max_cuts) + 1));
    const Scenario s = generate_partition(target, cuts, rng.next());
    const VerificationResult v = verify_covering(s, samples);
    rows.push_back({t, v.sum_radii, v.r_target, v.sum_radii - v.r_target, v.inequality_holds});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "trial,sum_r,r_target,margin\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.trial, r.sum_r, r.r_target, r.margin);
    out += buf;
  }
  return out;
}

}  // namespace covering
