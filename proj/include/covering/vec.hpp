#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <string>

#include "covering/error.hpp"

namespace covering {

/// A point or direction in R^d.
using Vec = Eigen::VectorXd;

/// Default additive tolerance for geometric predicates.
inline constexpr double kGeomTol = 1e-9;

inline Vec make_vec(std::initializer_list<double> coords) {
  Vec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v[i++] = c;
  return v;
}

inline bool all_finite(const Vec& v) { return v.allFinite(); }

inline void require_dim(const Vec& v, Eigen::Index dim, const char* what) {
  if (v.size() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": expected dimension " + std::to_string(dim) +
                    ", got " + std::to_string(v.size()));
  }
}

}  // namespace covering
