#pragma once

#include <cstddef>
#include <vector>

#include "covering/body.hpp"

namespace covering {

/// A maximal inscribed ball: center + radius * B lies in the body and no
/// larger ball does. `touching` lists the constraints active at the optimum.
/// For clipped bodies the index one past the last halfspace denotes the
/// unit sphere; for a ball body index 0 is its own boundary.
struct InscribedBall {
  Vec center;
  double radius = 0.0;
  std::vector<std::size_t> touching;
};

/// Tolerance on normalized slack for a constraint to count as touching.
inline constexpr double kTouchTol = 1e-7;

/// Chebyshev-center LP: maximize r s.t. <x, w_i> + r ||w_i|| <= a_i.
/// Throws Unbounded for unbounded polytopes, EmptyInterior when r <= 0.
InscribedBall inradius_polytope(const Polytope& p);

/// Closed forms for balls and planks, the LP for polytopes, and the
/// clipped solver when the body is intersected with the unit ball.
InscribedBall inradius_body(const Body& b);

/// Nearest point of p intersected with {||x|| <= ball_radius} to target.
/// Throws EmptyIntersection or NoConvergence.
Vec project_point(const Polytope& p, double ball_radius, const Vec& target);

/// Inscribed ball of p intersected with the closed unit ball, by bisection
/// on the radius with a projection-based feasibility test.
InscribedBall inradius_clipped(const Polytope& p);

}  // namespace covering
