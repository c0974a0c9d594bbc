#pragma once

// Analysis configuration document (JSON).
//
//   {
//     "source": {"generator": "example"}
//             | {"generator": "circular_helix" | "hyperbolic_helix", "kappa": k, "tau": t}
//             | {"samples": [[s, x1, x2, x3], ...]}
//             | {"samples_file": "rows.csv"},
//     "lambda": 1.3333333333333333,
//     "n_samples": 50,
//     "h": 1e-4,
//     "derivatives": "taylor" | "finite_difference",
//     "interval": [s_min, s_max],
//     "tolerances": {"classification": 1e-9, "geodesic": 1e-6, "helix": 1e-6,
//                    "collinear": 1e-6, "angle": 1e-7, "membership": 1e-6},
//     "output": "out"
//   }
//
// "h" is the step of the finite-difference mode, which only the base-curve
// frames use; every other stage differentiates Taylor series.
//
// Sample files use the emitted table layout: comma separated, one row per
// line, an optional header line.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mink/frenet.hpp"

namespace mink {

enum class Generator { Example, CircularHelix, HyperbolicHelix };

const char* to_string(Generator g);
const char* to_string(DiffMode m);

struct SourceConfig {
  std::optional<Generator> generator;
  double kappa = 0.0;
  double tau = 0.0;
  std::vector<SampleRow> samples;  // inline rows or the loaded samples_file
  std::string samples_file;
};

struct Tolerances {
  double classification = kCausalTol;
  double geodesic = 1e-6;
  double helix = 1e-6;
  double collinear = 1e-6;
  double angle = 1e-7;
  double membership = 1e-6;
};

struct AnalysisConfig {
  SourceConfig source;
  std::optional<double> lambda;  // defaults to 4/3 for the example source
  int n_samples = 50;
  double h = kDefaultStep;
  DiffMode derivatives = DiffMode::Taylor;
  std::optional<Interval> interval;  // defaults to the curve's nominal interval
  Tolerances tol;
  std::string output;

  double effective_lambda() const;
};

inline constexpr double kExampleLambda = 4.0 / 3.0;

/// Parses and validates. ParseError carries line/column or the offending field;
/// ValidationError covers contradictory or out-of-range values.
/// Relative samples_file paths resolve against base_dir.
AnalysisConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

AnalysisConfig load_config(const std::filesystem::path& file);

/// Full document with every default written out.
std::string emit_config(const AnalysisConfig& cfg);

AnalysisConfig example_config();

/// Reads rows of s,x1,x2,x3; skips blank lines and a non-numeric header.
std::vector<SampleRow> parse_sample_rows(std::string_view text, const std::string& origin);

/// Builds the curve the source selects.
Curve make_source_curve(const SourceConfig& src);

}  // namespace mink
