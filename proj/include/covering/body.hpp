#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "covering/vec.hpp"

namespace covering {

/// The closed halfspace {h : <h, normal> <= offset}.
class Halfspace {
 public:
  Halfspace(Vec normal, double offset);

  const Vec& normal() const { return normal_; }
  double offset() const { return offset_; }
  Eigen::Index dimension() const { return normal_.size(); }

  /// Same set with a unit normal.
  Halfspace normalized() const;

 private:
  Vec normal_;
  double offset_;
};

/// Intersection of finitely many halfspaces. Boundedness is computed on
/// construction (recession cone test), emptiness is left to the solvers.
class Polytope {
 public:
  Polytope(Eigen::Index dimension, std::vector<Halfspace> halfspaces);

  Eigen::Index dimension() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  std::size_t size() const { return halfspaces_.size(); }
  bool bounded() const { return bounded_; }

  Polytope with(const Halfspace& extra) const;

  /// Rows of unit normals and matching offsets.
  Eigen::MatrixXd unit_normals() const;
  Eigen::VectorXd unit_offsets() const;

  /// [-1,1]^d style box  lo <= x <= hi.
  static Polytope box(const Vec& lo, const Vec& hi);

 private:
  Eigen::Index dim_;
  std::vector<Halfspace> halfspaces_;
  bool bounded_;
};

class BallBody {
 public:
  BallBody(Vec center, double radius);
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  Eigen::Index dimension() const { return center_.size(); }

 private:
  Vec center_;
  double radius_;
};

/// {h : |<h - base, direction>| <= width / 2} with a unit direction.
class Plank {
 public:
  Plank(Vec base, Vec direction, double width);
  const Vec& base() const { return base_; }
  const Vec& direction() const { return direction_; }
  double width() const { return width_; }
  Eigen::Index dimension() const { return base_.size(); }

  /// <base, direction>: position of the median hyperplane along direction.
  double median_offset() const { return base_.dot(direction_); }
  Polytope as_polytope() const;

 private:
  Vec base_;
  Vec direction_;
  double width_;
};

using Shape = std::variant<Polytope, BallBody, Plank>;

/// A convex body: one of the supported shapes, optionally intersected with
/// the closed unit ball.
class Body {
 public:
  Body(Shape shape, bool clip_to_unit_ball = false)
      : shape_(std::move(shape)), clipped_(clip_to_unit_ball) {}

  const Shape& shape() const { return shape_; }
  bool clipped() const { return clipped_; }
  Eigen::Index dimension() const;

  bool is_polytope() const { return std::holds_alternative<Polytope>(shape_); }
  bool is_ball() const { return std::holds_alternative<BallBody>(shape_); }
  bool is_plank() const { return std::holds_alternative<Plank>(shape_); }
  const Polytope& polytope() const { return std::get<Polytope>(shape_); }
  const BallBody& ball() const { return std::get<BallBody>(shape_); }
  const Plank& plank() const { return std::get<Plank>(shape_); }

  /// Halfspace description of the unclipped shape (planks become two
  /// halfspaces). Throws UnsupportedBody for balls.
  Polytope halfspace_form() const;

 private:
  Shape shape_;
  bool clipped_;
};

/// True iff point satisfies every defining inequality within the additive
/// tolerance (and ||point|| <= 1 + tolerance for clipped bodies).
bool contains(const Body& body, const Vec& point, double tolerance = kGeomTol);

/// Euclidean depth of point: the largest t with point + tB inside the body
/// when positive, minus a lower bound on the distance to it otherwise.
double depth(const Body& body, const Vec& point);

/// sup over the body of <h, direction>.
double support_value(const Body& body, const Vec& direction);

/// sup over {Wx <= a} intersected with the ball of given radius about the
/// origin. Throws EmptyIntersection when that set is empty.
double clipped_support(const Polytope& p, double radius, const Vec& direction);

}  // namespace covering
