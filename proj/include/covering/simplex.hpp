#pragma once

// Dense two-phase tableau simplex with Bland's anti-cycling rule. The
// problems solved here have a handful of variables and at most a few dozen
// rows, so a full tableau is the simplest thing that is exact enough.

#include <Eigen/Dense>

#include <vector>

namespace covering::lp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

/// maximize c'x  subject to  A x <= b, x >= 0.
LpResult maximize_nonneg(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                         const Eigen::VectorXd& c);

/// maximize c'x  subject to  A x <= b, where x[j] is free when free_vars[j]
/// is true and nonnegative otherwise. Free columns are split into x+ - x-.
LpResult maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const std::vector<bool>& free_vars);

/// True when {x free : A x <= b} is nonempty (up to the pivot tolerance).
bool feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace covering::lp
