// minkcurves: Bertrand-couple analysis from a JSON config.
//
//   minkcurves analyze <config> [--samples N] [--tol T] [--step H]
//   minkcurves example          [--samples N] [--tol T] [--step H]
//   minkcurves tables <config> --out <dir>
//
// Exit codes: 0 ok, 1 IO, 2 parse/validation, 3 math domain.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mink/pipeline.hpp"

namespace {

struct Overrides {
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<double> step;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--samples", samples, "number of sample points");
    cmd->add_option("--tol", tol, "geodesic tolerance");
    cmd->add_option("--step", step, "use finite differences with this step for the base-curve frames");
  }

  void apply(mink::AnalysisConfig& cfg) const {
    if (samples) cfg.n_samples = *samples;
    if (tol) cfg.tol.geodesic = *tol;
    if (step) {
      cfg.h = *step;
      cfg.derivatives = mink::DiffMode::FiniteDifference;
    }
    if (cfg.n_samples < 2) throw mink::Error(mink::ErrorCode::ValidationError, "--samples must be at least 2");
    if (!(cfg.tol.geodesic > 0.0)) throw mink::Error(mink::ErrorCode::ValidationError, "--tol must be positive");
    if (!(cfg.h > 0.0)) throw mink::Error(mink::ErrorCode::ValidationError, "--step must be positive");
  }
};

int exit_code(mink::ErrorCode code) {
  if (mink::is_input_error(code)) return 2;
  if (code == mink::ErrorCode::IoError) return 1;
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bertrand couples of timelike curves in Minkowski 3-space"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  Overrides over;

  auto* analyze = app.add_subcommand("analyze", "run the analysis and print the summary");
  analyze->add_option("config", config_path, "JSON config")->required();
  over.add_to(analyze);

  auto* example = app.add_subcommand("example", "analyze the reference helix with lambda = 4/3");
  over.add_to(example);

  auto* tables = app.add_subcommand("tables", "write curve, lift and summary tables");
  tables->add_option("config", config_path, "JSON config")->required();
  tables->add_option("--out", out_dir, "output directory");
  over.add_to(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    mink::AnalysisConfig cfg = example->parsed() ? mink::example_config() : mink::load_config(config_path);
    over.apply(cfg);
    const mink::AnalysisReport report = mink::run_pipeline(cfg);
    if (tables->parsed()) {
      const std::string dir = !out_dir.empty() ? out_dir : (!cfg.output.empty() ? cfg.output : "out");
      for (const auto& p : mink::emit_tables(report, dir)) std::cout << p.string() << '\n';
    } else {
      std::cout << mink::summary_json(report);
    }
  } catch (const mink::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
