#include "covering/simplex.hpp"

#include <cmath>
#include <limits>

#include "covering/error.hpp"

namespace covering::lp {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr int kMaxPivots = 50000;

// Full tableau. Rows 0..m-1 hold constraints, row m holds reduced costs
// (maximization: a positive entry may enter). The last column is the RHS;
// the objective row's RHS stores minus the current objective value.
class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(static_cast<int>(A.rows())),
        n_(static_cast<int>(A.cols())),
        cols_(n_ + m_ + 1),
        t_(Eigen::MatrixXd::Zero(m_ + 1, cols_ + 1)),
        basis_(m_),
        blocked_(cols_, false) {
    t_.topLeftCorner(m_, n_) = A;
    for (int i = 0; i < m_; ++i) {
      t_(i, n_ + i) = 1.0;
      t_(i, cols_) = b[i];
      basis_[i] = n_ + i;
    }
  }

  int artificial() const { return n_ + m_; }

  // Phase 1: returns false when the system is infeasible.
  bool make_feasible() {
    int worst = -1;
    double worst_b = -kPivotTol;
    for (int i = 0; i < m_; ++i) {
      if (t_(i, cols_) < worst_b) {
        worst_b = t_(i, cols_);
        worst = i;
      }
    }
    const int art = artificial();
    if (worst < 0) {
      blocked_[art] = true;
      return true;
    }
    for (int i = 0; i < m_; ++i) t_(i, art) = -1.0;
    t_.row(m_).setZero();
    t_(m_, art) = -1.0;  // maximize -x_art
    pivot(worst, art);
    if (!run()) {
      // The phase-1 objective is bounded by zero; failing here is numerical.
      throw Error(ErrorKind::NoConvergence, "simplex phase 1 reported unbounded");
    }
    if (-t_(m_, cols_) < -1e-9) return false;

    for (int i = 0; i < m_; ++i) {
      if (basis_[i] != art) continue;
      int col = -1;
      for (int j = 0; j < cols_; ++j) {
        if (j != art && std::abs(t_(i, j)) > kPivotTol) {
          col = j;
          break;
        }
      }
      if (col >= 0) pivot(i, col);
    }
    t_.col(art).setZero();
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] == art) t_(i, art) = 1.0;
    }
    blocked_[art] = true;
    return true;
  }

  void set_objective(const Eigen::VectorXd& c) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_) = c.transpose();
    for (int i = 0; i < m_; ++i) {
      const int bv = basis_[i];
      const double cb = bv < n_ ? c[bv] : 0.0;
      if (cb != 0.0) t_.row(m_) -= cb * t_.row(i);
    }
  }

  // Returns false when the objective is unbounded.
  bool run() {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!blocked_[j] && t_(m_, j) > kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotTol) continue;
        const double ratio = t_(i, cols_) / a;
        if (ratio < best_ratio - 1e-14 ||
            (std::abs(ratio - best_ratio) <= 1e-14 && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error(ErrorKind::NoConvergence, "simplex pivot limit reached");
  }

  double objective() const { return -t_(m_, cols_); }

  Eigen::VectorXd primal() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, t_(i, cols_));
    }
    return x;
  }

 private:
  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  int m_;
  int n_;
  int cols_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  std::vector<bool> blocked_;
};

}  // namespace

LpResult maximize_nonneg(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                         const Eigen::VectorXd& c) {
  if (A.rows() != b.size() || A.cols() != c.size()) {
    throw Error(ErrorKind::DimensionMismatch, "lp: inconsistent problem shape");
  }
  LpResult result;
  Tableau tab(A, b);
  if (!tab.make_feasible()) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  tab.set_objective(c);
  if (!tab.run()) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.objective = tab.objective();
  result.x = tab.primal();
  return result;
}

LpResult maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const std::vector<bool>& free_vars) {
  const Eigen::Index n = A.cols();
  if (static_cast<Eigen::Index>(free_vars.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "lp: free_vars size");
  }
  std::vector<Eigen::Index> split_col(n, -1);
  Eigen::Index extra = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (free_vars[j]) split_col[j] = n + extra++;
  }
  Eigen::MatrixXd A2(A.rows(), n + extra);
  Eigen::VectorXd c2(n + extra);
  A2.leftCols(n) = A;
  c2.head(n) = c;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (split_col[j] < 0) continue;
    A2.col(split_col[j]) = -A.col(j);
    c2[split_col[j]] = -c[j];
  }
  LpResult r = maximize_nonneg(A2, b, c2);
  if (r.status == LpStatus::Optimal) {
    Eigen::VectorXd x = r.x.head(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (split_col[j] >= 0) x[j] -= r.x[split_col[j]];
    }
    r.x = std::move(x);
  }
  return r;
}

bool feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  const Eigen::VectorXd c = Eigen::VectorXd::Zero(A.cols());
  return maximize(A, b, c, std::vector<bool>(A.cols(), true)).status != LpStatus::Infeasible;
}

}  // namespace covering::lp
