#pragma once

// Constructive core of the covering theorem: bodies with small total
// inradius cannot cover the unit ball, and an uncovered point is produced
// explicitly from outer polytopes of the bodies.
//
// For an assignment g = (g_1..g_N), g_n in V_n, the auxiliary vector
//   f(g) = sum_n (1 + delta_n)(g_n + U_n g_n) - U_n o_n
// lives in H + H_1 + ... + H_N (orthogonal copies of R^d). It is never
// materialized; its norm splits blockwise as
//   ||f||^2 = ||sum_n (1 + delta_n) g_n||^2 + sum_n ||(1 + delta_n) g_n - o_n||^2.
// At a coordinate-maximal assignment x, the point sum_n (1 + delta_n) x_n lies
// in the open unit ball and outside every outer polytope W_n.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covering/approximation.hpp"
#include "covering/body.hpp"

namespace covering {

/// One body's outer-polytope data together with its parameters.
struct InstanceBody {
  Vec center;
  std::vector<Vec> directions;
  double inradius = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
};

struct CoveringInstance {
  Eigen::Index dimension = 0;
  std::vector<InstanceBody> bodies;

  std::size_t size() const { return bodies.size(); }
  /// Throws InvalidInstance unless every invariant needed by the theorem
  /// holds: the (1 + delta) weighted radius sum, the epsilon condition, the
  /// hull certificate, direction norms and centers in the unit ball.
  void validate() const;
};

/// Index of the chosen direction for each body.
struct Assignment {
  std::vector<std::size_t> choices;
};

struct WitnessReport {
  Vec witness;
  Assignment assignment;
  double objective = 0.0;  ///< ||f||^2 at the assignment
  double norm_x = 0.0;
  std::vector<double> margins;     ///< <x - o_j, x_j> - (r_j^2 + eps_j)
  std::vector<double> aux_bounds;  ///< ||y_j||
  bool valid = false;
};

enum class SearchMode { Ascent, Exhaustive };

struct Parameters {
  std::vector<double> deltas;
  std::vector<double> epsilons;
};

/// Uniform delta with (1 + delta) sum r = 1 - margin (1 - sum r), and
/// eps_n at half the largest value the epsilon condition admits.
Parameters choose_parameters(const std::vector<double>& inradii, double margin);

/// ||f(g)||^2, evaluated blockwise.
double objective(const CoveringInstance& instance, const Assignment& a);

/// Product size |V_1| * ... * |V_N|, saturating at UINT64_MAX.
std::uint64_t product_size(const CoveringInstance& instance);

/// Maximizer of the objective over V_1 x ... x V_N. Exhaustive mode returns
/// the lexicographically first global maximizer (and refuses products above
/// 1e6); ascent mode returns a coordinate-maximal assignment.
Assignment maximize(const CoveringInstance& instance, SearchMode mode);

/// Report for a given assignment without the validity contract check.
WitnessReport evaluate_assignment(const CoveringInstance& instance, const Assignment& a);

/// Witness point. Throws WitnessError when the report is not valid.
WitnessReport witness(const CoveringInstance& instance, SearchMode mode = SearchMode::Ascent);

class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, WitnessReport report)
      : Error(ErrorKind::WitnessInvalid, what), report_(std::move(report)) {}
  const WitnessReport& report() const { return report_; }

 private:
  WitnessReport report_;
};

/// The intermediate inequalities of the witness argument, re-evaluated at a
/// report's assignment. The slack fields hold the worst value over all
/// bodies (>= -1e-9 means the step holds).
struct ProofStepCheck {
  double coordinate_max_slack = 0.0;  ///< min over j, v of lin_j(x_j) - lin_j(v)
  double averaged_slack = 0.0;        ///< min over j of lin_j(x_j) + 2 eps_j (1+delta_j) ||y_j||
  double hull_average_slack = 0.0;    ///< min over j of lin_j(x_j) - lin_j(sum_v alpha_v v)
  double aux_norm_ratio = 0.0;        ///< max over j of ||y_j|| / (3N)
  bool coordinate_maximal = true;
  bool averaged_bound = true;
  bool aux_norm_bound = true;
};

ProofStepCheck check_proof_steps(const CoveringInstance& instance, const WitnessReport& report);

/// Instance body from an outer polytope and its parameters.
InstanceBody make_instance_body(const OuterPolytope& w, double delta);

struct PlankWitness {
  WitnessReport report;
  /// Planks after restriction to the unit ball (those missing it dropped).
  std::vector<Plank> effective;
  bool outside_original = false;
};

/// Uncovered point of the unit ball for planks with total half-width below
/// one. With widths_check the hypothesis is tested on the given widths;
/// otherwise on the widths of the planks restricted to the ball.
PlankWitness bang_plank_witness(const std::vector<Plank>& planks, bool widths_check = true);

}  // namespace covering
