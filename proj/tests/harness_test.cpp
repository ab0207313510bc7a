#include <gtest/gtest.h>

#include <cmath>

#include "covering/harness.hpp"
#include "covering/inradius.hpp"
#include "covering/json_io.hpp"
#include "support/oracles.hpp"

using namespace covering;

namespace {

Polytope triangle() {
  return Polytope(2, {Halfspace(make_vec({-1, 0}), 0), Halfspace(make_vec({0, -1}), 0),
                      Halfspace(make_vec({3, 4}), 12)});
}

Polytope square() { return Polytope::box(make_vec({-1, -1}), make_vec({1, 1})); }

}  // namespace

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
  Rng r(7);
  double mean = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    mean += u / 10000;
    EXPECT_LT(r.index(5), 5u);
    EXPECT_NEAR(r.unit_vector(3).norm(), 1.0, 1e-12);
  }
  EXPECT_NEAR(mean, 0.5, 0.02);
}

TEST(Halton, RadicalInverse) {
  EXPECT_DOUBLE_EQ(halton(1, 2), 0.5);
  EXPECT_DOUBLE_EQ(halton(2, 2), 0.25);
  EXPECT_DOUBLE_EQ(halton(3, 2), 0.75);
  EXPECT_DOUBLE_EQ(halton(1, 3), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(halton(5, 3), 2.0 / 3.0 + 1.0 / 9.0);
  EXPECT_EQ(halton_bases(4), (std::vector<unsigned>{2, 3, 5, 7}));
}

TEST(Split, SquareThroughOrigin) {
  const auto [left, right] = split(square(), make_vec({0, 0}), make_vec({1, 0}));
  EXPECT_NEAR(inradius_polytope(left).radius, 0.5, 1e-12);
  EXPECT_NEAR(inradius_polytope(right).radius, 0.5, 1e-12);
  EXPECT_TRUE(contains(Body(left), make_vec({-0.5, 0.9})));
  EXPECT_FALSE(contains(Body(left), make_vec({0.5, 0.9})));
  EXPECT_TRUE(contains(Body(right), make_vec({0.5, -0.9})));
}

TEST(GeneratePartition, ZeroCutsIsIdentity) {
  const auto s = generate_partition(triangle(), 0, 1);
  ASSERT_EQ(s.pieces.size(), 1u);
  EXPECT_EQ(s.generator, "hyperplane-partition");
  EXPECT_EQ(s.pieces[0].polytope().size(), 3u);
  EXPECT_NEAR(inradius_body(s.pieces[0]).radius, 1.0, 1e-9);
}

TEST(GeneratePartition, CellsPartitionTheTarget) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = generate_partition(square(), 4, seed);
    EXPECT_EQ(s.pieces.size(), 5u);
    EXPECT_EQ(s.seed, seed);
    Rng rng(seed + 100);
    for (int i = 0; i < 300; ++i) {
      const Vec p = make_vec({rng.uniform(-1, 1), rng.uniform(-1, 1)});
      int hits = 0;
      for (const auto& c : s.pieces) hits += contains(c, p, 0.0) ? 1 : 0;
      EXPECT_GE(hits, 1);
      for (const auto& c : s.pieces) EXPECT_GE(inradius_body(c).radius, 1e-6);
    }
  }
}

TEST(GeneratePartition, Deterministic) {
  const auto a = io::to_json(generate_partition(triangle(), 3, 99)).dump();
  const auto b = io::to_json(generate_partition(triangle(), 3, 99)).dump();
  const auto c = io::to_json(generate_partition(triangle(), 3, 100)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(GeneratePartition, Errors) {
  EXPECT_THROW(generate_partition(triangle(), -1, 0), Error);
  const Polytope half(2, {Halfspace(make_vec({1, 0}), 0)});
  EXPECT_THROW(generate_partition(half, 1, 0), Error);
}

TEST(VerifyCovering, SelfCovering) {
  Scenario s{Body(triangle()), {Body(triangle())}, 0, "manual"};
  const auto v = verify_covering(s, 500);
  EXPECT_TRUE(v.covered);
  EXPECT_TRUE(v.inequality_holds);
  EXPECT_NEAR(v.sum_radii, v.r_target, 1e-12);
  EXPECT_NEAR(v.r_target, 1.0, 1e-9);
  EXPECT_FALSE(v.uncovered_sample.has_value());
}

TEST(VerifyCovering, TriangleCutAtXEqualsOne) {
  const auto [left, right] = split(triangle(), make_vec({1, 0}), make_vec({1, 0}));
  Scenario s{Body(triangle()), {Body(left), Body(right)}, 0, "manual"};
  const auto v = verify_covering(s, 1000);
  EXPECT_TRUE(v.covered);
  EXPECT_TRUE(v.inequality_holds);
  EXPECT_GE(v.sum_radii, 1.0 - 1e-7);
  ASSERT_EQ(v.piece_radii.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const Polytope& p = i == 0 ? left : right;
    const double grid = oracle::grid_inradius_2d(p.unit_normals(), p.unit_offsets(), 0, 4, 0, 3, 2e-3);
    EXPECT_NEAR(v.piece_radii[i], grid, 3e-3);
  }
}

TEST(VerifyCovering, FourQuadrants) {
  Scenario s{Body(square()), {}, 0, "manual"};
  for (double x : {-1.0, 0.0}) {
    for (double y : {-1.0, 0.0}) {
      s.pieces.emplace_back(Polytope::box(make_vec({x, y}), make_vec({x + 1, y + 1})));
    }
  }
  const auto v = verify_covering(s, 1000);
  EXPECT_NEAR(v.sum_radii, 2.0, 1e-9);
  EXPECT_NEAR(v.r_target, 1.0, 1e-9);
  EXPECT_TRUE(v.covered);
  EXPECT_TRUE(v.inequality_holds);
}

TEST(VerifyCovering, GapIsDetected) {
  Scenario s{Body(square()), {Body(Polytope::box(make_vec({-1, -1}), make_vec({0, 1})))}, 0, "manual"};
  const auto v = verify_covering(s, 200);
  EXPECT_FALSE(v.covered);
  ASSERT_TRUE(v.uncovered_sample.has_value());
  EXPECT_GT((*v.uncovered_sample)[0], 0.0);
  EXPECT_TRUE(v.inequality_holds);  // vacuous: not a covering
  EXPECT_THROW(verify_covering(s, 0), Error);
}

TEST(GridOracle, DiskAndPlank) {
  Scenario s{Body(BallBody(make_vec({0, 0}), 1.0)), {Body(Plank(make_vec({0, 0}), make_vec({1, 0}), 0.4))}, 0, "manual"};
  const auto p = grid_uncovered_oracle(s, 0.05);
  ASSERT_TRUE(p.has_value());
  EXPECT_GT(std::abs((*p)[0]), 0.2);
  EXPECT_LT(p->norm(), 1.0);
}

TEST(GridOracle, SelfCoverAndCoarseGrid) {
  Scenario s{Body(triangle()), {Body(triangle())}, 0, "manual"};
  EXPECT_FALSE(grid_uncovered_oracle(s, 0.05).has_value());
  // a single probe at the box center (0, 0)
  Scenario gap{Body(square()), {Body(Polytope::box(make_vec({0.5, 0.5}), make_vec({1, 1})))}, 0, "manual"};
  const auto p = grid_uncovered_oracle(gap, 100.0);
  ASSERT_TRUE(p.has_value());
  EXPECT_NEAR(p->norm(), 0.0, 1e-12);
  Scenario none{Body(square()), {Body(Polytope::box(make_vec({-0.1, -0.1}), make_vec({0.1, 0.1})))}, 0, "manual"};
  EXPECT_FALSE(grid_uncovered_oracle(none, 100.0).has_value());
}

TEST(Sweep, InequalityHoldsAndCsvIsDeterministic) {
  const auto rows = sweep(60, 5, 2, 4);
  ASSERT_EQ(rows.size(), 60u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.inequality_holds);
    EXPECT_GE(r.margin, -1e-7);
    EXPECT_NEAR(r.margin, r.sum_r - r.r_target, 1e-15);
  }
  const std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv, sweep_csv(sweep(60, 5, 2, 4)));
  EXPECT_EQ(csv.rfind("trial,sum_r,r_target,margin\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 61);
}
