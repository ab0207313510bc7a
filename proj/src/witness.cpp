#include "covering/witness.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

namespace covering {
namespace {

constexpr double kSwapGain = 1e-12;
constexpr double kMarginTol = 1e-9;
constexpr std::uint64_t kMaxProduct = 1000000;

const Vec& chosen(const CoveringInstance& inst, const Assignment& a, std::size_t n) {
  return inst.bodies[n].directions[a.choices[n]];
}

// ||f||^2 restricted to the first `count` bodies.
double partial_objective(const CoveringInstance& inst, const Assignment& a, std::size_t count) {
  Vec sum = Vec::Zero(inst.dimension);
  double blocks = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    const auto& b = inst.bodies[n];
    const Vec scaled = (1.0 + b.delta) * chosen(inst, a, n);
    sum += scaled;
    blocks += (scaled - b.center).squaredNorm();
  }
  return sum.squaredNorm() + blocks;
}

void check_assignment(const CoveringInstance& inst, const Assignment& a) {
  if (a.choices.size() != inst.size()) {
    throw Error(ErrorKind::InvalidArgument, "assignment length does not match the instance");
  }
  for (std::size_t n = 0; n < inst.size(); ++n) {
    if (a.choices[n] >= inst.bodies[n].directions.size()) {
      throw Error(ErrorKind::InvalidArgument, "assignment index out of range");
    }
  }
}

// Replaces coordinate j by the best direction when that gains more than
// kSwapGain. Scans directions in input order; ties keep the earlier one.
bool improve_coordinate(const CoveringInstance& inst, Assignment& a, std::size_t j,
                        std::size_t count) {
  const std::size_t incumbent = a.choices[j];
  const double current = partial_objective(inst, a, count);
  double best = current;
  std::size_t best_index = incumbent;
  for (std::size_t k = 0; k < inst.bodies[j].directions.size(); ++k) {
    if (k == incumbent) continue;
    a.choices[j] = k;
    const double value = partial_objective(inst, a, count);
    if (value > best) {
      best = value;
      best_index = k;
    }
  }
  if (best_index != incumbent && best - current > kSwapGain) {
    a.choices[j] = best_index;
    return true;
  }
  a.choices[j] = incumbent;
  return false;
}

Assignment ascent(const CoveringInstance& inst) {
  const std::size_t N = inst.size();
  Assignment a;
  a.choices.assign(N, 0);
  for (std::size_t n = 0; n < N; ++n) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t k = 0; k < inst.bodies[n].directions.size(); ++k) {
      a.choices[n] = k;
      const double value = partial_objective(inst, a, n + 1);
      if (value > best) {
        best = value;
        best_index = k;
      }
    }
    a.choices[n] = best_index;
  }
  // Terminates: K is finite and every accepted swap strictly increases the
  // objective.
  bool changed = N > 0;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < N; ++j) {
      if (improve_coordinate(inst, a, j, N)) changed = true;
    }
  }
  return a;
}

Assignment exhaustive(const CoveringInstance& inst) {
  const std::uint64_t total = product_size(inst);
  if (total > kMaxProduct) {
    throw Error(ErrorKind::ProductTooLarge,
                "exhaustive search over " + std::to_string(total) + " assignments");
  }
  const std::size_t N = inst.size();
  Assignment cur;
  cur.choices.assign(N, 0);
  Assignment best = cur;
  double best_value = partial_objective(inst, cur, N);
  for (std::uint64_t step = 1; step < total; ++step) {
    // Odometer in lexicographic order, last coordinate fastest.
    for (std::size_t j = N; j-- > 0;) {
      if (++cur.choices[j] < inst.bodies[j].directions.size()) break;
      cur.choices[j] = 0;
    }
    const double value = partial_objective(inst, cur, N);
    if (value > best_value) {
      best_value = value;
      best = cur;
    }
  }
  return best;
}

double aux_norm(const CoveringInstance& inst, const Assignment& a, const Vec& x, std::size_t j) {
  const auto& bj = inst.bodies[j];
  double sq = (x - (1.0 + bj.delta) * chosen(inst, a, j)).squaredNorm() + bj.center.squaredNorm();
  for (std::size_t n = 0; n < inst.size(); ++n) {
    if (n == j) continue;
    const auto& b = inst.bodies[n];
    sq += ((1.0 + b.delta) * chosen(inst, a, n) - b.center).squaredNorm();
  }
  return std::sqrt(sq);
}

}  // namespace

void CoveringInstance::validate() const {
  const auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidInstance, what); };
  if (dimension < 1) fail("dimension must be >= 1");
  const double N = static_cast<double>(bodies.size());
  double weighted = 0.0;
  for (std::size_t n = 0; n < bodies.size(); ++n) {
    const auto& b = bodies[n];
    const std::string tag = "body " + std::to_string(n) + ": ";
    if (b.center.size() != dimension) fail(tag + "center dimension");
    if (!(b.inradius > 0.0) || !(b.epsilon > 0.0) || !(b.delta > 0.0)) {
      fail(tag + "inradius, epsilon and delta must be positive");
    }
    if (b.directions.empty()) fail(tag + "empty direction set");
    for (const auto& v : b.directions) {
      if (v.size() != dimension) fail(tag + "direction dimension");
      if (std::abs(v.norm() - b.inradius) > 1e-9) fail(tag + "direction norm differs from inradius");
    }
    if (b.center.norm() > 1.0 + 1e-9) fail(tag + "center outside the unit ball");
    const double r2 = b.inradius * b.inradius;
    if ((1.0 + b.delta) * (r2 - 6.0 * N * b.epsilon) < r2 + b.epsilon - 1e-12) {
      fail(tag + "epsilon condition (1+delta)(r^2 - 6N eps) >= r^2 + eps fails");
    }
    if (min_norm_point(b.directions).distance > b.epsilon + 1e-12) {
      fail(tag + "dist(conv V, 0) exceeds epsilon");
    }
    weighted += (1.0 + b.delta) * b.inradius;
  }
  if (weighted > 1.0 - 1e-9) fail("sum of (1+delta) r is not below 1");
}

Parameters choose_parameters(const std::vector<double>& inradii, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "choose_parameters: margin must lie in (0,1)");
  }
  Parameters out;
  if (inradii.empty()) return out;
  double sum = 0.0;
  for (double r : inradii) {
    if (!(r > 0.0 && r <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "choose_parameters: inradii must lie in (0,1]");
    }
    sum += r;
  }
  if (sum >= 1.0) {
    throw Error(ErrorKind::InfeasibleSum, "sum of inradii " + std::to_string(sum) + " >= 1");
  }
  const double N = static_cast<double>(inradii.size());
  const double delta = (1.0 - margin) * (1.0 / sum - 1.0);
  out.deltas.assign(inradii.size(), delta);
  for (double r : inradii) {
    out.epsilons.push_back(0.5 * delta * r * r / (1.0 + 6.0 * N * (1.0 + delta)));
  }

  double weighted = 0.0;
  for (std::size_t n = 0; n < inradii.size(); ++n) {
    const double r2 = inradii[n] * inradii[n];
    const double e = out.epsilons[n];
    if (!(e > 0.0) || (1.0 + delta) * (r2 - 6.0 * N * e) < r2 + e) {
      throw Error(ErrorKind::InfeasibleSum, "choose_parameters: epsilon condition fails");
    }
    weighted += (1.0 + delta) * inradii[n];
  }
  if (!(delta > 0.0) || weighted > 1.0 - 1e-9) {
    throw Error(ErrorKind::InfeasibleSum, "choose_parameters: sum of inradii too close to 1");
  }
  return out;
}

double objective(const CoveringInstance& instance, const Assignment& a) {
  check_assignment(instance, a);
  return partial_objective(instance, a, instance.size());
}

std::uint64_t product_size(const CoveringInstance& instance) {
  std::uint64_t total = 1;
  for (const auto& b : instance.bodies) {
    const std::uint64_t k = b.directions.size();
    if (k != 0 && total > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= k;
  }
  return total;
}

Assignment maximize(const CoveringInstance& instance, SearchMode mode) {
  for (const auto& b : instance.bodies) {
    if (b.directions.empty()) throw Error(ErrorKind::InvalidInstance, "maximize: empty direction set");
  }
  return mode == SearchMode::Exhaustive ? exhaustive(instance) : ascent(instance);
}

WitnessReport evaluate_assignment(const CoveringInstance& instance, const Assignment& a) {
  check_assignment(instance, a);
  WitnessReport r;
  r.assignment = a;
  r.witness = Vec::Zero(instance.dimension);
  for (std::size_t n = 0; n < instance.size(); ++n) {
    r.witness += (1.0 + instance.bodies[n].delta) * chosen(instance, a, n);
  }
  r.norm_x = r.witness.norm();
  r.objective = partial_objective(instance, a, instance.size());
  bool margins_ok = true;
  for (std::size_t j = 0; j < instance.size(); ++j) {
    const auto& b = instance.bodies[j];
    const double m = (r.witness - b.center).dot(chosen(instance, a, j)) -
                     (b.inradius * b.inradius + b.epsilon);
    r.margins.push_back(m);
    r.aux_bounds.push_back(aux_norm(instance, a, r.witness, j));
    if (m < -kMarginTol) margins_ok = false;
  }
  r.valid = r.norm_x < 1.0 - 1e-12 && margins_ok;
  return r;
}

WitnessReport witness(const CoveringInstance& instance, SearchMode mode) {
  instance.validate();
  WitnessReport r = evaluate_assignment(instance, maximize(instance, mode));
  if (!r.valid) {
    std::ostringstream msg;
    msg << "witness contract violated: ||x|| = " << r.norm_x << ", margins =";
    for (double m : r.margins) msg << ' ' << m;
    throw WitnessError(msg.str(), std::move(r));
  }
  return r;
}

ProofStepCheck check_proof_steps(const CoveringInstance& instance, const WitnessReport& report) {
  ProofStepCheck out;
  out.coordinate_max_slack = std::numeric_limits<double>::infinity();
  out.averaged_slack = std::numeric_limits<double>::infinity();
  out.hull_average_slack = std::numeric_limits<double>::infinity();
  const double N = static_cast<double>(instance.size());
  const Vec& x = report.witness;
  for (std::size_t j = 0; j < instance.size(); ++j) {
    const auto& b = instance.bodies[j];
    const double scale = 1.0 + b.delta;
    const Vec& xj = chosen(instance, report.assignment, j);
    // <y_j, (1+delta_j)(v + U_j v)> with y_j = (x - (1+delta_j) x_j) + U_j(-o_j) + ...
    const Vec pairing = x - scale * xj - b.center;
    const auto lin = [&](const Vec& v) { return scale * pairing.dot(v); };
    const double at_choice = lin(xj);
    for (const auto& v : b.directions) {
      out.coordinate_max_slack = std::min(out.coordinate_max_slack, at_choice - lin(v));
    }
    const MinNormPoint mn = min_norm_point(b.directions);
    out.hull_average_slack = std::min(out.hull_average_slack, at_choice - lin(mn.point));
    const double y_norm = report.aux_bounds[j];
    out.averaged_slack =
        std::min(out.averaged_slack, at_choice + 2.0 * b.epsilon * scale * y_norm);
    out.aux_norm_ratio = std::max(out.aux_norm_ratio, y_norm / (3.0 * N));
  }
  if (instance.size() == 0) {
    out.coordinate_max_slack = out.averaged_slack = out.hull_average_slack = 0.0;
  }
  out.coordinate_maximal = out.coordinate_max_slack >= -kMarginTol &&
                           out.hull_average_slack >= -kMarginTol;
  out.averaged_bound = out.averaged_slack >= -kMarginTol;
  out.aux_norm_bound = out.aux_norm_ratio <= 1.0;
  return out;
}

InstanceBody make_instance_body(const OuterPolytope& w, double delta) {
  return {w.center, w.directions, w.inradius, w.slack, delta};
}

PlankWitness bang_plank_witness(const std::vector<Plank>& planks, bool widths_check) {
  if (planks.empty()) throw Error(ErrorKind::InvalidArgument, "bang_plank_witness: no planks");
  const Eigen::Index d = planks.front().dimension();
  double half_widths = 0.0;
  for (const auto& p : planks) {
    require_dim(p.base(), d, "bang_plank_witness");
    half_widths += p.width() / 2.0;
  }
  if (widths_check && half_widths >= 1.0) {
    throw Error(ErrorKind::InfeasibleSum,
                "planks have total width " + std::to_string(2.0 * half_widths) + " >= 2");
  }

  PlankWitness out;
  for (const auto& p : planks) {
    // Only the slab's trace on [-1, 1] along its direction matters inside B.
    const double s = p.median_offset();
    const double lo = std::max(s - p.width() / 2.0, -1.0);
    const double hi = std::min(s + p.width() / 2.0, 1.0);
    if (hi - lo <= 1e-12) continue;
    out.effective.emplace_back(0.5 * (lo + hi) * p.direction(), p.direction(), hi - lo);
  }

  std::vector<double> radii;
  for (const auto& p : out.effective) radii.push_back(p.width() / 2.0);
  const Parameters params = choose_parameters(radii, 0.5);

  CoveringInstance instance;
  instance.dimension = d;
  for (std::size_t n = 0; n < out.effective.size(); ++n) {
    const OuterPolytope w = build_outer(Body(out.effective[n]), params.epsilons[n]);
    instance.bodies.push_back(make_instance_body(w, params.deltas[n]));
  }
  out.report = witness(instance, SearchMode::Ascent);
  out.outside_original = true;
  for (const auto& p : planks) {
    if (contains(Body(p), out.report.witness, kGeomTol)) out.outside_original = false;
  }
  if (!out.outside_original) {
    out.report.valid = false;
    throw WitnessError("witness lies inside an original plank", out.report);
  }
  return out;
}

}  // namespace covering
