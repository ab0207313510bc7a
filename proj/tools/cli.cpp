#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>

#include "covering/approximation.hpp"
#include "covering/harness.hpp"
#include "covering/inradius.hpp"
#include "covering/json_io.hpp"
#include "covering/witness.hpp"

namespace covering::cli {
namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidArgument:
      return kBadInput;
    default:
      return kViolation;
  }
}

void emit(std::ostream& out, const io::Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inscribed balls, outer polytopes and covering witnesses"};
  app.require_subcommand(1);

  std::string body_path;
  auto* inradius_cmd = app.add_subcommand("inradius", "Maximal inscribed ball of a body");
  inradius_cmd->add_option("body", body_path, "Body JSON file")->required();

  double eps = 0.0;
  auto* approx_cmd = app.add_subcommand("approximate", "Outer polytope with hull certificate");
  approx_cmd->add_option("body", body_path, "Body JSON file")->required();
  approx_cmd->add_option("--eps", eps, "Slack of the outer polytope")->required();

  std::string instance_path;
  std::string mode_name = "ascent";
  auto* witness_cmd = app.add_subcommand("witness", "Uncovered point for a covering instance");
  witness_cmd->add_option("instance", instance_path, "Instance JSON file")->required();
  witness_cmd->add_option("--mode", mode_name, "Search mode")
      ->check(CLI::IsMember({"ascent", "exhaustive"}));

  std::string planks_path;
  bool no_widths_check = false;
  auto* planks_cmd = app.add_subcommand("planks", "Uncovered point of the unit ball for planks");
  planks_cmd->add_option("planks", planks_path, "Planks JSON file")->required();
  planks_cmd->add_flag("--no-widths-check", no_widths_check,
                       "Test the width hypothesis on the planks restricted to the ball");

  std::string scenario_path;
  int samples = 1000;
  auto* verify_cmd = app.add_subcommand("verify", "Check the inradius covering inequality");
  verify_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  verify_cmd->add_option("--samples", samples, "Coverage samples")->check(CLI::PositiveNumber);

  std::string target_path;
  int cuts = 0;
  std::uint64_t seed = 0;
  auto* generate_cmd = app.add_subcommand("generate", "Random hyperplane partition of a polytope");
  generate_cmd->add_option("--target", target_path, "Target polytope JSON file")->required();
  generate_cmd->add_option("--cuts", cuts, "Number of cuts")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--seed", seed, "Random seed");

  int trials = 100;
  int dim = 2;
  int sweep_cuts = 4;
  std::uint64_t sweep_seed = 0;
  int sweep_samples = 256;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify many generated partitions, CSV summary");
  sweep_cmd->add_option("--trials", trials, "Number of scenarios")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sweep_seed, "Random seed");
  sweep_cmd->add_option("--dim", dim, "Dimension")->check(CLI::Range(2, 16));
  sweep_cmd->add_option("--cuts", sweep_cuts, "Maximum cuts per scenario")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--samples", sweep_samples, "Coverage samples per scenario")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    if (*inradius_cmd) {
      emit(out, io::to_json(inradius_body(io::body_from_json(io::read_file(body_path)))));
      return kOk;
    }
    if (*approx_cmd) {
      emit(out, io::to_json(build_outer(io::body_from_json(io::read_file(body_path)), eps)));
      return kOk;
    }
    if (*witness_cmd) {
      const auto instance = io::instance_from_json(io::read_file(instance_path));
      const auto mode = mode_name == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Ascent;
      try {
        emit(out, io::to_json(witness(instance, mode)));
        return kOk;
      } catch (const WitnessError& e) {
        emit(out, io::to_json(e.report()));
        err << e.what() << '\n';
        return kViolation;
      }
    }
    if (*planks_cmd) {
      const auto planks = io::planks_from_json(io::read_file(planks_path));
      try {
        const auto result = bang_plank_witness(planks, !no_widths_check);
        auto j = io::to_json(result.report);
        j["outside_original"] = result.outside_original;
        emit(out, j);
        return kOk;
      } catch (const WitnessError& e) {
        emit(out, io::to_json(e.report()));
        err << e.what() << '\n';
        return kViolation;
      }
    }
    if (*verify_cmd) {
      const auto result = verify_covering(io::scenario_from_json(io::read_file(scenario_path)), samples);
      emit(out, io::to_json(result));
      if (!result.inequality_holds) err << "covering inequality violated\n";
      return result.inequality_holds ? kOk : kViolation;
    }
    if (*generate_cmd) {
      const Body target = io::body_from_json(io::read_file(target_path));
      if (!target.is_polytope() || target.clipped()) {
        err << "generate: target must be an unclipped polytope\n";
        return kBadInput;
      }
      emit(out, io::to_json(generate_partition(target.polytope(), cuts, seed)));
      return kOk;
    }
    if (*sweep_cmd) {
      const auto rows = sweep(trials, sweep_seed, dim, sweep_cuts, sweep_samples);
      out << sweep_csv(rows);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.inequality_holds; });
      if (!ok) err << "covering inequality violated in at least one trial\n";
      return ok ? kOk : kViolation;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kBadInput;
}

}  // namespace covering::cli
