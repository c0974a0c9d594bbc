#include "mink/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mink {

namespace {

std::string where(const std::string& op, double s) {
  std::ostringstream os;
  os << op << " at s=" << s;
  return os.str();
}

template <typename F>
auto stage(const std::string& op, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.with_context(op);
  }
}

double max_deviation(const std::vector<double>& xs, double& mean) {
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(x - mean));
  return worst;
}

IndicatrixReport analyze_indicatrix(const BertrandCouple& couple, IndicatrixKind kind,
                                    const std::vector<FrenetFrame>& alpha_frames,
                                    const FrameRelationCheck& relation, double phi_rate,
                                    const AnalysisConfig& cfg, double kappa, double tau) {
  const std::string tag = std::string(to_string(kind)) + " indicatrix";
  const Tolerances& tol = cfg.tol;
  IndicatrixReport r;
  r.kind = kind;

  const CurveOnPseudosphere ind =
      stage("spherical_indicatrix(" + tag + ")", [&] { return spherical_indicatrix(couple, kind); });
  r.surface = ind.surface;
  r.grid = ind.grid;
  r.points = ind.points;
  r.membership = check_at_most(ind.max_membership_error, tol.membership);

  std::vector<double> speeds;
  double worst_rejection = 0.0;
  for (std::size_t i = 0; i < ind.grid.size(); ++i) {
    const double s = ind.grid[i];
    const IndicatrixTangent t =
        stage(where("indicatrix_tangent(" + tag + ")", s), [&] { return indicatrix_tangent(ind, s); });
    speeds.push_back(t.speed);
    worst_rejection = std::max(worst_rejection, rejection_from_normal(t.t_unit, alpha_frames[i]));
  }
  r.speed_constancy = check_at_most(max_deviation(speeds, r.speed_mean), tol.helix);
  if (kind != IndicatrixKind::PrincipalNormal) r.collinearity = check_at_most(worst_rejection, tol.collinear);

  r.speed_formula = indicatrix_speed_formula(kind, alpha_frames.front(), relation.mean);
  r.speed_formula_gap = check_at_most(std::abs(std::abs(r.speed_formula) - speeds.front()), tol.helix);

  r.geodesic = stage("geodesic_residual(" + tag + ")", [&] { return geodesic_residual(ind, tol.geodesic); });
  const LiftedCurve unit = stage("unit_speed_lift(" + tag + ")", [&] { return unit_speed_lift(ind); });
  r.spray_defect = stage("is_integral_curve_of_spray(" + tag + ")", [&] {
    return check_at_most(spray_defect(unit, surface_context(ind.surface)), tol.geodesic);
  });
  r.verdicts_agree = r.spray_defect.pass == r.geodesic.is_geodesic;
  r.lift = stage("natural_lift(" + tag + ")", [&] { return natural_lift(ind); });

  r.condition = geodesic_condition_algebraic(kappa, tau, couple.sinh_theta(), couple.cosh_theta(),
                                             phi_rate, kind, tol.geodesic);
  r.geodesic.condition_values[r.condition.equation] = r.condition.value;
  return r;
}

}  // namespace

AnalysisReport run_pipeline(const AnalysisConfig& cfg) {
  AnalysisReport rep;
  rep.config = cfg;
  const Tolerances& tol = cfg.tol;

  const Curve alpha = stage("source", [&] { return make_source_curve(cfg.source); });
  rep.curve_name = alpha.name();
  rep.grid = linspace(cfg.interval.value_or(alpha.nominal()), cfg.n_samples);

  // Frenet apparatus of the base curve.
  const FrenetOptions fo{tol.classification, cfg.derivatives, cfg.h};
  std::vector<double> kappas, taus, ratios;
  double ortho = 0.0, speed_dev = 0.0;
  for (double s : rep.grid) {
    const FrenetFrame f = stage(where("frenet_apparatus(alpha)", s), [&] { return frenet_apparatus(alpha, s, fo); });
    if (f.tangent != Causal::Timelike) {
      throw Error(ErrorCode::ValidationError, where("frenet_apparatus(alpha)", s) + ": base curve is not timelike");
    }
    rep.alpha_frames.push_back(f);
    rep.alpha_points.push_back(alpha(s));
    kappas.push_back(f.kappa);
    taus.push_back(f.tau);
    ratios.push_back(f.tau / f.kappa);
    ortho = std::max(ortho, orthonormality_error(f));
    speed_dev = std::max(speed_dev, std::abs(f.speed - 1.0));
  }
  rep.kappa_constancy = check_at_most(max_deviation(kappas, rep.kappa_mean), tol.helix);
  rep.tau_constancy = check_at_most(max_deviation(taus, rep.tau_mean), tol.helix);
  rep.frame_orthonormality = check_at_most(ortho, tol.collinear);
  rep.unit_speed = check_at_most(speed_dev, tol.helix);

  // Darboux data.
  std::vector<double> phis;
  double phi_rate = 0.0;
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    const double s = rep.grid[i];
    const DarbouxData d = stage(where("darboux_decomposition", s),
                                [&] { return darboux_decomposition(rep.alpha_frames[i], tol.classification); });
    if (i == 0) rep.darboux = d;
    phis.push_back(d.phi);
    phi_rate = std::max(phi_rate, std::abs(stage(where("darboux_angle_rate", s), [&] {
                          return darboux_angle_rate(alpha, s, tol.classification);
                        })));
  }
  double phi_mean = 0.0;
  rep.phi_constancy = check_at_most(max_deviation(phis, phi_mean), tol.helix);
  rep.phi_rate = check_at_most(phi_rate, tol.geodesic);

  // Helix and W-curve class.
  rep.helix.max_deviation = max_deviation(ratios, rep.helix.mean_ratio);
  rep.helix.is_helix = rep.helix.max_deviation <= tol.helix;
  if (rep.kappa_constancy.pass && rep.tau_constancy.pass) {
    rep.w_class = stage("classify_w_curve",
                        [&] { return classify_w_curve(rep.kappa_mean, rep.tau_mean, tol.classification); });
  }

  // Mate and couple.
  rep.lambda = cfg.effective_lambda();
  const BertrandCouple couple = stage("bertrand_mate", [&] {
    return make_couple(alpha, rep.lambda, rep.grid,
                       CoupleOptions{tol.classification, tol.collinear, tol.angle});
  });
  for (double s : rep.grid) rep.beta_points.push_back(couple.beta(s));
  rep.angle = couple.angle;
  rep.angle_constancy = check_at_most(couple.angle.max_deviation, tol.angle);
  rep.normal_collinearity = check_at_most(couple.angle.max_rejection, tol.collinear);
  rep.relation = stage("frame_relation_matrix", [&] { return check_frame_relation(couple, tol.classification); });

  // Indicatrices, lifts, residuals, conditions.
  for (auto kind : {IndicatrixKind::Tangent, IndicatrixKind::PrincipalNormal, IndicatrixKind::Binormal}) {
    rep.indicatrices[static_cast<std::size_t>(kind)] = analyze_indicatrix(
        couple, kind, rep.alpha_frames, rep.relation, phi_rate, cfg, rep.kappa_mean, rep.tau_mean);
  }
  return rep;
}

// Output ----------------------------------------------------------------------

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ojson checked(const Checked& c) { return {{"value", c.value}, {"tol", c.tol}, {"pass", c.pass}}; }

ojson vec(const LorentzVec& v) { return ojson::array({v(0), v(1), v(2)}); }

ojson matrix(const Eigen::Matrix3d& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

std::string table_stem(IndicatrixKind k) { return to_string(k); }

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + p.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + p.string());
}

}  // namespace

std::string curve_table(const std::vector<double>& grid, const std::vector<LorentzVec>& points) {
  std::string out = "s,x1,x2,x3\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += fmt17(grid[i]) + ',' + fmt17(points[i](0)) + ',' + fmt17(points[i](1)) + ',' + fmt17(points[i](2)) + '\n';
  }
  return out;
}

std::string lift_table(const LiftedCurve& lift) {
  std::string out = "s,x1,x2,x3,v1,v2,v3\n";
  for (const auto& smp : lift.samples) {
    out += fmt17(smp.s);
    for (int i = 0; i < 3; ++i) out += ',' + fmt17(smp.point(i));
    for (int i = 0; i < 3; ++i) out += ',' + fmt17(smp.velocity(i));
    out += '\n';
  }
  return out;
}

std::string summary_json(const AnalysisReport& r) {
  ojson doc;
  doc["curve"] = r.curve_name;
  doc["n_samples"] = r.grid.size();
  doc["derivatives"] = to_string(r.config.derivatives);
  doc["interval"] = {r.grid.front(), r.grid.back()};

  ojson frenet;
  frenet["kappa_mean"] = r.kappa_mean;
  frenet["tau_mean"] = r.tau_mean;
  frenet["kappa_constancy"] = checked(r.kappa_constancy);
  frenet["tau_constancy"] = checked(r.tau_constancy);
  frenet["orthonormality"] = checked(r.frame_orthonormality);
  frenet["unit_speed"] = checked(r.unit_speed);
  doc["frenet"] = frenet;

  ojson darboux;
  darboux["case"] = to_string(r.darboux.darboux_case);
  darboux["norm_w"] = r.darboux.norm_w;
  darboux["phi"] = r.darboux.phi;
  darboux["w"] = vec(r.darboux.w);
  darboux["c"] = vec(r.darboux.c);
  darboux["phi_constancy"] = checked(r.phi_constancy);
  darboux["phi_rate"] = checked(r.phi_rate);
  doc["darboux"] = darboux;

  doc["general_helix"] = {{"is_helix", r.helix.is_helix},
                          {"ratio_mean", r.helix.mean_ratio},
                          {"ratio_deviation", {{"value", r.helix.max_deviation},
                                               {"tol", r.config.tol.helix},
                                               {"pass", r.helix.is_helix}}}};
  if (r.w_class) {
    doc["w_curve"] = {{"class", to_string(r.w_class->kind)}, {"K", r.w_class->K}};
  } else {
    doc["w_curve"] = nullptr;
  }

  ojson couple;
  couple["lambda"] = r.lambda;
  couple["sinh_theta"] = r.angle.sinh_theta;
  couple["cosh_theta"] = r.angle.cosh_theta;
  couple["sigma_B"] = r.angle.sigma_B;
  couple["sigma_N"] = r.angle.sigma_N;
  couple["angle_constancy"] = checked(r.angle_constancy);
  couple["normal_collinearity"] = checked(r.normal_collinearity);
  couple["frame_relation"] = {
      {"matrix", matrix(r.relation.mean)},
      {"entry_deviation", r.relation.max_entry_deviation},
      {"pattern_error", r.relation.max_pattern_error},
      {"hyperbolic_identity_error", r.relation.hyperbolic_identity_error},
      {"binormal_identity_error", r.relation.binormal_identity_error},
      {"map_residual", r.relation.max_map_residual},
  };
  doc["couple"] = couple;

  ojson inds = ojson::object();
  for (const auto& ind : r.indicatrices) {
    ojson j;
    j["surface"] = to_string(ind.surface);
    j["membership"] = checked(ind.membership);
    j["speed_mean"] = ind.speed_mean;
    j["speed_constancy"] = checked(ind.speed_constancy);
    j["speed_formula"] = ind.speed_formula;
    j["speed_formula_gap"] = checked(ind.speed_formula_gap);
    j["collinearity_with_N"] = ind.collinearity ? checked(*ind.collinearity) : ojson(nullptr);
    j["geodesic_residual"] = {{"value", ind.geodesic.max_residual},
                              {"tol", ind.geodesic.tol},
                              {"pass", ind.geodesic.is_geodesic}};
    j["spray_defect"] = checked(ind.spray_defect);
    j["verdicts_agree"] = ind.verdicts_agree;
    j["condition"] = {{"equation", ind.condition.equation},
                      {"value", ind.condition.value},
                      {"tol", r.config.tol.geodesic},
                      {"pass", ind.condition.satisfied}};
    inds[table_stem(ind.kind)] = j;
  }
  doc["indicatrices"] = inds;
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_tables(const AnalysisReport& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::pair<std::filesystem::path, std::string>> files;
  files.emplace_back(dir / "alpha.csv", curve_table(r.grid, r.alpha_points));
  files.emplace_back(dir / "beta.csv", curve_table(r.grid, r.beta_points));
  for (const auto& ind : r.indicatrices)
    files.emplace_back(dir / (table_stem(ind.kind) + "_indicatrix.csv"), curve_table(ind.grid, ind.points));
  for (const auto& ind : r.indicatrices)
    files.emplace_back(dir / (table_stem(ind.kind) + "_lift.csv"), lift_table(ind.lift));
  files.emplace_back(dir / "summary.json", summary_json(r));

  std::vector<std::filesystem::path> written;
  for (const auto& [path, text] : files) {
    write_file(path, text);
    written.push_back(path);
  }
  return written;
}

}  // namespace mink
