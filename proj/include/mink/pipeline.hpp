#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mink/config.hpp"
#include "mink/lift.hpp"

namespace mink {

/// A measured quantity next to the tolerance it was checked against.
struct Checked {
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
};

inline Checked check_at_most(double value, double tol) { return {value, tol, value <= tol}; }

struct IndicatrixReport {
  IndicatrixKind kind = IndicatrixKind::Tangent;
  Surface surface = Surface::S12;
  std::vector<double> grid;
  std::vector<LorentzVec> points;
  LiftedCurve lift;  // velocities in the base parameter

  Checked membership;         // max |g(p,p) - eps|
  double speed_mean = 0.0;
  Checked speed_constancy;    // max deviation of the speed from its mean
  double speed_formula = 0.0; // signed prediction from kappa, tau and the frame relation
  Checked speed_formula_gap;  // | |formula| - measured |
  std::optional<Checked> collinearity;  // t || N of alpha (tangent and binormal kinds)

  GeodesicReport geodesic;
  Checked spray_defect;       // unit-speed lift vs geodesic spray
  bool verdicts_agree = false;
  AlgebraicCondition condition;
};

struct AnalysisReport {
  AnalysisConfig config;
  std::string curve_name;
  std::vector<double> grid;

  std::vector<FrenetFrame> alpha_frames;
  std::vector<LorentzVec> alpha_points;
  double kappa_mean = 0.0;
  double tau_mean = 0.0;
  Checked kappa_constancy;
  Checked tau_constancy;
  Checked frame_orthonormality;
  Checked unit_speed;  // max | |alpha'| - 1 |; informational for non-unit-speed sources

  DarbouxData darboux;  // at the first sample
  Checked phi_constancy;
  Checked phi_rate;     // max |phi'|

  HelixVerdict helix;
  std::optional<WCurveClass> w_class;

  double lambda = 0.0;
  std::vector<LorentzVec> beta_points;
  CoupleAngle angle;
  Checked angle_constancy;
  Checked normal_collinearity;
  FrameRelationCheck relation;

  std::array<IndicatrixReport, 3> indicatrices;

  const IndicatrixReport& indicatrix(IndicatrixKind k) const {
    return indicatrices[static_cast<std::size_t>(k)];
  }
};

/// frames -> Darboux -> helix / W-class -> mate -> couple angle ->
/// indicatrices -> lifts -> residuals -> algebraic conditions.
/// Errors carry the failing stage and parameter value.
AnalysisReport run_pipeline(const AnalysisConfig& cfg);

/// Structured scalar summary (JSON text, newline-terminated).
std::string summary_json(const AnalysisReport& report);

/// Delimited table: header then one row per sample, 17 significant digits.
std::string curve_table(const std::vector<double>& grid, const std::vector<LorentzVec>& points);
std::string lift_table(const LiftedCurve& lift);

/// Writes alpha, beta, the three indicatrices, their lifts and summary.json.
/// Returns the written paths in a fixed order.
std::vector<std::filesystem::path> emit_tables(const AnalysisReport& report,
                                               const std::filesystem::path& dir);

}  // namespace mink
