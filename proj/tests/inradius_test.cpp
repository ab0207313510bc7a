#include <gtest/gtest.h>

#include <cmath>

#include "covering/approximation.hpp"
#include "covering/harness.hpp"
#include "covering/inradius.hpp"
#include "support/oracles.hpp"

using namespace covering;

namespace {

Polytope triangle() {
  return Polytope(2, {Halfspace(make_vec({-1, 0}), 0), Halfspace(make_vec({0, -1}), 0),
                      Halfspace(make_vec({3, 4}), 12)});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorKind::InvalidArgument;
}

// Polygon circumscribed about a circle: k tangent lines at sorted random
// angles with every angular gap below pi.
Polytope tangential_polygon(Rng& rng, Vec& center, double& radius) {
  for (;;) {
    center = make_vec({rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)});
    radius = rng.uniform(0.05, 0.3);
    const std::size_t k = 3 + rng.index(4);
    std::vector<double> angles;
    for (std::size_t i = 0; i < k; ++i) angles.push_back(rng.uniform(0, 2 * M_PI));
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + 2 * M_PI - angles.back();
    for (std::size_t i = 1; i < k; ++i) max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    if (max_gap > 0.8 * M_PI) continue;
    std::vector<Halfspace> hs;
    for (double t : angles) {
      const Vec n = make_vec({std::cos(t), std::sin(t)});
      hs.emplace_back(n, n.dot(center) + radius);
    }
    return Polytope(2, std::move(hs));
  }
}

// Nearest feasible point to target over a 2-D set, by repeated grid
// refinement around the incumbent.
Vec grid_nearest(const std::function<bool(const Vec&)>& inside, const Vec& target, double half) {
  Vec best = make_vec({0, 0});
  double best_d = 1e300;
  Vec center = make_vec({0, 0});
  for (int level = 0; level < 12; ++level) {
    const double step = half / 50.0;
    for (int i = -50; i <= 50; ++i) {
      for (int j = -50; j <= 50; ++j) {
        const Vec p = center + make_vec({i * step, j * step});
        if (!inside(p)) continue;
        const double d = (p - target).norm();
        if (d < best_d) {
          best_d = d;
          best = p;
        }
      }
    }
    center = best;
    half /= 5.0;
  }
  return best;
}

}  // namespace

TEST(InradiusPolytope, SquareAndTriangle) {
  const auto sq = inradius_polytope(Polytope::box(make_vec({-1, -1}), make_vec({1, 1})));
  EXPECT_NEAR(sq.radius, 1.0, 1e-12);
  EXPECT_NEAR(sq.center.norm(), 0.0, 1e-12);

  const auto tri = inradius_polytope(triangle());
  const double area_over_semi =
      oracle::triangle_inradius(make_vec({0, 0}), make_vec({4, 0}), make_vec({0, 3}));
  EXPECT_NEAR(tri.radius, area_over_semi, 1e-9);
  EXPECT_NEAR(tri.center[0], 1.0, 1e-9);
  EXPECT_NEAR(tri.center[1], 1.0, 1e-9);
  EXPECT_EQ(tri.touching, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(InradiusPolytope, PlankAsHalfspacesIsUnbounded) {
  const Plank pl(make_vec({0, 0}), make_vec({1, 0}), 1.0);
  EXPECT_EQ(kind_of([&] { inradius_polytope(pl.as_polytope()); }), ErrorKind::Unbounded);
  EXPECT_NEAR(inradius_body(Body(pl)).radius, 0.5, 1e-15);
}

TEST(InradiusPolytope, EmptyInteriorIsAnError) {
  // the segment [0,1] x {0}
  const Polytope flat(2, {Halfspace(make_vec({0, 1}), 0), Halfspace(make_vec({0, -1}), 0),
                          Halfspace(make_vec({1, 0}), 1), Halfspace(make_vec({-1, 0}), 0)});
  EXPECT_EQ(kind_of([&] { inradius_polytope(flat); }), ErrorKind::EmptyInterior);
  const Polytope empty(1, {Halfspace(make_vec({1}), -1), Halfspace(make_vec({-1}), -1)});
  EXPECT_EQ(kind_of([&] { inradius_polytope(empty); }), ErrorKind::EmptyInterior);
}

TEST(InradiusPolytope, RectangleHasSomeMaximalCenter) {
  const Polytope rect = Polytope::box(make_vec({0, 0}), make_vec({2, 1}));
  const auto ib = inradius_polytope(rect);
  EXPECT_NEAR(ib.radius, 0.5, 1e-12);
  EXPECT_NEAR(ib.center[1], 0.5, 1e-12);
  EXPECT_GE(ib.center[0], 0.5 - 1e-12);
  EXPECT_LE(ib.center[0], 1.5 + 1e-12);
}

TEST(InradiusBody, ClosedForms) {
  const auto ball = inradius_body(Body(BallBody(make_vec({3, 3}), 0.25)));
  EXPECT_DOUBLE_EQ(ball.radius, 0.25);
  EXPECT_EQ(ball.center, make_vec({3, 3}));
  const auto plank = inradius_body(Body(Plank(make_vec({0.1, 0}), make_vec({1, 0}), 0.4)));
  EXPECT_DOUBLE_EQ(plank.radius, 0.2);
  EXPECT_NEAR((plank.center - make_vec({0.1, 0})).dot(make_vec({1, 0})), 0.0, 1e-15);
  EXPECT_NEAR(inradius_body(Body(Polytope::box(make_vec({-1, -1}), make_vec({1, 1})))).radius, 1.0, 1e-12);
}

TEST(InradiusBody, ClippedBall) {
  // lens of B((0.9, 0), 0.5) and B: thickness along the axis is 1 - 0.4
  const auto lens = inradius_body(Body(BallBody(make_vec({0.9, 0}), 0.5), true));
  EXPECT_NEAR(lens.radius, 0.3, 1e-15);
  EXPECT_NEAR(lens.center[0], 0.7, 1e-15);
  const auto inside = inradius_body(Body(BallBody(make_vec({0.2, 0}), 0.5), true));
  EXPECT_DOUBLE_EQ(inside.radius, 0.5);
  const auto swallowing = inradius_body(Body(BallBody(make_vec({0.2, 0}), 5.0), true));
  EXPECT_DOUBLE_EQ(swallowing.radius, 1.0);
}

TEST(InradiusPolytope, MatchesGridOracleOnRandomPolygons) {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Vec c;
    double rho = 0;
    const Polytope p = tangential_polygon(rng, c, rho);
    const auto ib = inradius_polytope(p);
    EXPECT_NEAR(ib.radius, rho, 1e-9);
    const Body b(p);
    const auto [lo, hi] = bounding_box(b);
    const double grid = oracle::grid_inradius_2d(p.unit_normals(), p.unit_offsets(), lo[0], hi[0],
                                                 lo[1], hi[1], 2e-3);
    EXPECT_NEAR(ib.radius, grid, 3e-3);
    EXPECT_LE(grid, ib.radius + 1e-12);
  }
}

TEST(InradiusPolytope, InscribedBallLiesInsideAndTouchesCertify) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Vec c;
    double rho = 0;
    Polytope p = tangential_polygon(rng, c, rho);
    // an extra non-touching halfspace
    const Vec n = rng.unit_vector(2);
    p = p.with(Halfspace(n, n.dot(c) + rho + rng.uniform(0.01, 0.5)));
    const auto ib = inradius_polytope(p);
    const Body b(p);
    EXPECT_TRUE(contains(b, ib.center, 1e-9));
    const Eigen::MatrixXd N = p.unit_normals();
    const Eigen::VectorXd a = p.unit_offsets();
    for (Eigen::Index i = 0; i < N.rows(); ++i) {
      // sup over the ball of <x, n_i> = <c, n_i> + r
      EXPECT_LE(N.row(i).dot(ib.center) + ib.radius, a[i] + 1e-7);
    }
    std::vector<Vec> normals;
    for (std::size_t i : ib.touching) {
      EXPECT_NEAR(a[i] - N.row(i).dot(ib.center), ib.radius, 1e-7);
      normals.push_back(N.row(i).transpose());
    }
    ASSERT_FALSE(normals.empty());
    EXPECT_LE(min_norm_point(normals).distance, 1e-6);
  }
}

TEST(InradiusPolytope, AddingHalfspaceNeverIncreasesRadius) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Vec c;
    double rho = 0;
    const Polytope p = tangential_polygon(rng, c, rho);
    const double before = inradius_polytope(p).radius;
    const Vec n = rng.unit_vector(2);
    const Polytope q = p.with(Halfspace(n, n.dot(c) + rng.uniform(-0.5 * rho, rho)));
    EXPECT_LE(inradius_polytope(q).radius, before + 1e-12);
  }
}

TEST(ProjectPoint, SpecExamples) {
  const Polytope left(2, {Halfspace(make_vec({1, 0}), 0)});
  const Vec a = project_point(left, 1.0, make_vec({2, 0}));
  EXPECT_NEAR((a - make_vec({0, 0})).norm(), 0.0, 1e-8);

  const Polytope everything(2, {});
  const Vec b = project_point(everything, 1.0, make_vec({3, 4}));
  EXPECT_NEAR((b - make_vec({0.6, 0.8})).norm(), 0.0, 1e-8);

  const Polytope corner(2, {Halfspace(make_vec({1, 0}), -0.5), Halfspace(make_vec({0, 1}), -0.5)});
  const Vec c = project_point(corner, 1.0, make_vec({1, 1}));
  const Vec grid = grid_nearest(
      [](const Vec& p) { return p[0] <= -0.5 && p[1] <= -0.5 && p.norm() <= 1.0; }, make_vec({1, 1}), 1.0);
  EXPECT_NEAR((c - grid).norm(), 0.0, 1e-6);
  EXPECT_NEAR((c - make_vec({-0.5, -0.5})).norm(), 0.0, 1e-8);
}

TEST(ProjectPoint, MatchesActiveSetEnumeration) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(2));
    const std::size_t m = 1 + rng.index(5);
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < m; ++i) hs.emplace_back(rng.unit_vector(d), rng.uniform(0.0, 1.0));
    const Polytope p(d, hs);
    Vec target(d);
    for (Eigen::Index k = 0; k < d; ++k) target[k] = rng.uniform(-3, 3);
    // origin is feasible (offsets >= 0); a huge ball leaves only the polyhedron
    const auto exact = oracle::project_polyhedron_by_active_sets(p.unit_normals(), p.unit_offsets(), target);
    ASSERT_TRUE(exact.has_value());
    const Vec got = project_point(p, 1e6, target);
    EXPECT_NEAR((got - *exact).norm(), 0.0, 1e-8) << "trial " << trial;
  }
}

TEST(ProjectPoint, BallAndHalfspacesAgainstGrid) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Halfspace> hs;
    for (int i = 0; i < 2; ++i) hs.emplace_back(rng.unit_vector(2), rng.uniform(-0.3, 0.5));
    const Polytope p(2, hs);
    const Vec target = make_vec({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    Vec got;
    try {
      got = project_point(p, 1.0, target);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::EmptyIntersection);
      continue;
    }
    const Body clipped(p, true);
    const Vec grid = grid_nearest([&](const Vec& x) { return contains(clipped, x, 0.0); }, target, 2.0);
    // grid points are feasible, so the grid distance can only be larger
    EXPECT_LE((got - target).norm(), (grid - target).norm() + 1e-9);
    EXPECT_NEAR((got - target).norm(), (grid - target).norm(), 2e-5);
    EXPECT_TRUE(contains(clipped, got, 1e-9));
  }
}

TEST(ProjectPoint, EmptyIntersection) {
  const Polytope far(2, {Halfspace(make_vec({-1, 0}), -2)});
  EXPECT_EQ(kind_of([&] { project_point(far, 1.0, make_vec({0, 0})); }), ErrorKind::EmptyIntersection);
  const Polytope empty(1, {Halfspace(make_vec({1}), -1), Halfspace(make_vec({-1}), -1)});
  EXPECT_EQ(kind_of([&] { project_point(empty, 1.0, make_vec({0})); }), ErrorKind::EmptyIntersection);
}

TEST(InradiusClipped, SpecExamples) {
  const auto whole = inradius_clipped(Polytope(2, {}));
  EXPECT_NEAR(whole.radius, 1.0, 1e-7);
  EXPECT_NEAR(whole.center.norm(), 0.0, 1e-7);

  // symmetry reduces to max over c in [0,1] of min(c, 1 - c)
  double oracle_r = 0.0;
  for (double cc = 0.0; cc <= 1.0; cc += 1e-4) oracle_r = std::max(oracle_r, std::min(cc, 1.0 - cc));
  const auto half = inradius_clipped(Polytope(2, {Halfspace(make_vec({1, 0}), 0)}));
  EXPECT_NEAR(half.radius, oracle_r, 1e-4);
  EXPECT_NEAR(half.radius, 0.5, 1e-7);
  EXPECT_NEAR((half.center - make_vec({-0.5, 0})).norm(), 0.0, 1e-6);
  EXPECT_EQ(half.touching, (std::vector<std::size_t>{0, 1}));

  const auto slab = inradius_clipped(
      Polytope(2, {Halfspace(make_vec({1, 0}), 0), Halfspace(make_vec({-1, 0}), 0.2)}));
  EXPECT_NEAR(slab.radius, 0.1, 1e-7);
}

TEST(InradiusClipped, NeverExceedsUnclippedOrOne) {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Vec c;
    double rho = 0;
    const Polytope p = tangential_polygon(rng, c, rho);
    const Polytope shifted(2, [&] {
      std::vector<Halfspace> hs;
      const Vec shift = rng.unit_vector(2) * rng.uniform(0.0, 0.9);
      for (const auto& h : p.halfspaces()) hs.emplace_back(h.normal(), h.offset() + h.normal().dot(shift));
      return hs;
    }());
    const auto clipped = inradius_clipped(shifted);
    EXPECT_LE(clipped.radius, std::min(inradius_polytope(shifted).radius, 1.0) + 1e-7);
    EXPECT_TRUE(contains(Body(shifted, true), clipped.center, 1e-9));
    EXPECT_GE(depth(Body(shifted, true), clipped.center), clipped.radius - 1e-9);
  }
}

TEST(InradiusClipped, DisjointFromBallIsEmptyInterior) {
  const Polytope far(2, {Halfspace(make_vec({-1, 0}), -2)});
  EXPECT_EQ(kind_of([&] { inradius_clipped(far); }), ErrorKind::EmptyInterior);
}
