#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covering/body.hpp"

namespace covering {

struct Scenario {
  Body target;
  std::vector<Body> pieces;
  std::uint64_t seed = 0;
  std::string generator;
};

struct VerificationResult {
  double r_target = 0.0;
  std::vector<double> piece_radii;
  double sum_radii = 0.0;
  bool covered = false;  ///< no sampled point of the target escaped the pieces
  bool inequality_holds = false;
  std::optional<Vec> uncovered_sample;
};

/// Deterministic 64-bit generator; uniform doubles are built from the top
/// 53 bits so results do not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();                     ///< [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Vec unit_vector(Eigen::Index dim);
  std::size_t index(std::size_t n);     ///< [0, n)

 private:
  std::uint64_t state_[4];
};

std::uint64_t splitmix64(std::uint64_t x);

/// Radical inverse of `index` in the given base.
double halton(std::uint64_t index, unsigned base);
/// First `dim` primes used as Halton bases (2, 3, 5, 7, ...).
std::vector<unsigned> halton_bases(Eigen::Index dim);

/// Axis-aligned bounding box of a bounded body.
std::pair<Vec, Vec> bounding_box(const Body& body);

/// cell split by {<h, normal> <= <point, normal>} and its complement.
std::pair<Polytope, Polytope> split(const Polytope& cell, const Vec& point, const Vec& normal);

/// Recursively cuts a bounded target by random hyperplanes through random
/// interior points of randomly chosen cells.
Scenario generate_partition(const Polytope& target, int cuts, std::uint64_t seed);

/// Inradius inequality check plus a Halton-sampled coverage verdict.
VerificationResult verify_covering(const Scenario& s, int samples);

/// First grid point (pitch `step`, centered on the target's bounding box)
/// lying strictly inside the target and outside every piece.
std::optional<Vec> grid_uncovered_oracle(const Scenario& s, double step);

/// Random triangle or quadrilateral (d = 2) or simplex (d >= 3).
Polytope random_target(Eigen::Index dim, Rng& rng);

struct SweepRow {
  int trial = 0;
  double sum_r = 0.0;
  double r_target = 0.0;
  double margin = 0.0;
  bool inequality_holds = false;
};

/// Runs `trials` generated partitions (each with up to `max_cuts` cuts)
/// through verify_covering.
std::vector<SweepRow> sweep(int trials, std::uint64_t seed, Eigen::Index dim, int max_cuts,
                            int samples = 256);

/// CSV with header trial,sum_r,r_target,margin and 17 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace covering
