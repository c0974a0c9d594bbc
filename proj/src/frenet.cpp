#include "mink/frenet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mink {

FrenetFrame FrenetJet::at(double s) const {
  FrenetFrame f;
  f.s = s;
  f.T = value_of(T);
  f.N = value_of(N);
  f.B = value_of(B);
  f.kappa = kappa.value();
  f.tau = tau.value();
  f.speed = speed.value();
  f.tangent = tangent;
  f.normal = normal;
  return f;
}

FrenetJet frenet_jet(const JetVec& gamma, double tol) {
  const int m = order_of(gamma);
  if (m < 3) throw Error(ErrorCode::ValidationError, "frame needs a third-order expansion");

  FrenetJet out;
  const JetVec d1 = differentiated(gamma);
  const Jet g11 = metric(d1, d1);
  if (std::abs(g11.value()) <= tol) {
    std::ostringstream os;
    os << "g(gamma', gamma') = " << g11.value();
    throw Error(ErrorCode::NullTangent, os.str());
  }
  out.tangent = g11.value() < 0.0 ? Causal::Timelike : Causal::Spacelike;
  out.speed = sqrt(abs(g11));
  const JetVec T = d1 / out.speed;

  const JetVec dT = differentiated(T) / out.speed.truncated(m - 2);
  const Jet gtt = metric(dT, dT);
  if (std::sqrt(std::abs(gtt.value())) <= tol) {
    std::ostringstream os;
    os << "curvature " << std::sqrt(std::abs(gtt.value())) << " at or below " << tol;
    throw Error(ErrorCode::DegenerateCurvature, os.str());
  }
  out.normal = gtt.value() < 0.0 ? Causal::Timelike : Causal::Spacelike;
  out.kappa = sqrt(abs(gtt));
  out.N = dT / out.kappa;
  out.T = truncated(T, m - 2);
  out.speed = out.speed.truncated(m - 2);
  out.B = -lorentz_cross(out.T, out.N);

  const JetVec dB = differentiated(out.B) / out.speed.truncated(m - 3);
  const double sign_n = out.normal == Causal::Timelike ? -1.0 : 1.0;
  out.tau = metric(dB, truncated(out.N, m - 3)) * sign_n;
  return out;
}

FrenetJet frenet_jet(const Curve& curve, double s, int order, double tol) {
  FrenetJet fj = frenet_jet(curve.taylor(s, std::max(order + 2, 3)), tol);
  if (fj.order() > order) {
    fj.T = truncated(fj.T, order);
    fj.N = truncated(fj.N, order);
    fj.B = truncated(fj.B, order);
    fj.kappa = fj.kappa.truncated(order);
    fj.speed = fj.speed.truncated(order);
    fj.tau = fj.tau.truncated(order);
  }
  return fj;
}

namespace {

JetVec fd_expansion(const Curve& curve, double s, double h) {
  const auto d = derivatives(curve, s, 3, h);
  const LorentzVec p = curve(s);
  JetVec out;
  for (int i = 0; i < 3; ++i) {
    Jet j = Jet::zero(3);
    j[0] = p(i);
    j[1] = d[0](i);
    j[2] = d[1](i) / 2.0;
    j[3] = d[2](i) / 6.0;
    out(i) = j;
  }
  return out;
}

}  // namespace

FrenetFrame frenet_apparatus(const Curve& curve, double s, const FrenetOptions& opts) {
  const JetVec gamma =
      opts.mode == DiffMode::Taylor ? curve.taylor(s, 3) : fd_expansion(curve, s, opts.h);
  return frenet_jet(gamma, opts.tol).at(s);
}

std::vector<FrenetFrame> frenet_on_grid(const Curve& curve, const std::vector<double>& grid,
                                        const FrenetOptions& opts) {
  std::vector<FrenetFrame> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back(frenet_apparatus(curve, s, opts));
  return out;
}

double orthonormality_error(const FrenetFrame& f) {
  const std::array<const LorentzVec*, 3> e{&f.T, &f.N, &f.B};
  const std::array<double, 3> sig{f.sign_T(), f.sign_N(), f.sign_B()};
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      worst = std::max(worst, std::abs(metric(*e[i], *e[j]) - (i == j ? sig[i] : 0.0)));
  return worst;
}

double frame_identity_error(const FrenetFrame& f) {
  const double a = (lorentz_cross(f.T, f.N) + f.B).cwiseAbs().maxCoeff();
  const double b = (lorentz_cross(f.N, f.B) - f.T).cwiseAbs().maxCoeff();
  const double c = (lorentz_cross(f.B, f.T) + f.N).cwiseAbs().maxCoeff();
  return std::max({a, b, c});
}

// Darboux -------------------------------------------------------------------

const char* to_string(DarbouxCase c) { return c == DarbouxCase::CaseI ? "CaseI" : "CaseII"; }

namespace {

void require_non_lightlike(double kappa, double tau, double tol) {
  if (std::abs(std::abs(kappa) - std::abs(tau)) <= tol * std::max(1.0, std::abs(kappa))) {
    std::ostringstream os;
    os << "|kappa| = |tau| (" << kappa << ", " << tau << "): lightlike Darboux vector, no timelike general helix";
    throw Error(ErrorCode::LightlikeDarboux, os.str());
  }
}

}  // namespace

DarbouxData darboux_decomposition(const FrenetFrame& frame, double tol) {
  const double kappa = std::abs(frame.kappa);
  const double tau = std::abs(frame.tau);
  require_non_lightlike(kappa, tau, tol);

  DarbouxData d;
  d.w = frame.tau * frame.T - frame.kappa * frame.B;
  d.norm_w = std::sqrt(std::abs(kappa * kappa - tau * tau));
  if (kappa > tau) {
    d.darboux_case = DarbouxCase::CaseI;
    d.phi = std::atanh(tau / kappa);
  } else {
    d.darboux_case = DarbouxCase::CaseII;
    d.phi = std::atanh(kappa / tau);
  }
  d.c = d.w / d.norm_w;
  return d;
}

LorentzVec reconstruct_darboux(const DarbouxData& d, const FrenetFrame& frame) {
  const double sgn = frame.tau < 0.0 ? -1.0 : 1.0;
  const double ch = std::cosh(d.phi), sh = std::sinh(d.phi);
  if (d.darboux_case == DarbouxCase::CaseI) return d.norm_w * (sgn * sh * frame.T - ch * frame.B);
  return d.norm_w * (sgn * ch * frame.T - sh * frame.B);
}

double darboux_angle_rate(const Curve& curve, double s, double tol) {
  const FrenetJet fj = frenet_jet(curve, s, 2, tol);
  const Jet kappa = abs(fj.kappa.truncated(1));
  const Jet tau = abs(fj.tau.truncated(1));
  require_non_lightlike(kappa.value(), tau.value(), tol);
  const Jet phi = kappa.value() > tau.value() ? atanh(tau / kappa) : atanh(kappa / tau);
  return phi[1] / fj.speed.value();
}

// Helices -------------------------------------------------------------------

HelixVerdict is_general_helix(const Curve& curve, int n_samples, double tol, const FrenetOptions& opts) {
  if (n_samples < 2) throw Error(ErrorCode::ValidationError, "need at least 2 samples");
  std::vector<double> ratios;
  for (double s : linspace(curve.nominal(), n_samples)) {
    const FrenetFrame f = frenet_apparatus(curve, s, opts);
    ratios.push_back(f.tau / f.kappa);
  }
  HelixVerdict v;
  v.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(ratios.size());
  for (double r : ratios) v.max_deviation = std::max(v.max_deviation, std::abs(r - v.mean_ratio));
  v.is_helix = v.max_deviation <= tol;
  return v;
}

const char* to_string(WCurveKind k) {
  switch (k) {
    case WCurveKind::PlanarTimelike: return "PlanarTimelike";
    case WCurveKind::OrthogonalHyperbola: return "OrthogonalHyperbola";
    case WCurveKind::TimelikeCircularHelix: return "TimelikeCircularHelix";
    case WCurveKind::TimelikeHyperbolicHelix: return "TimelikeHyperbolicHelix";
  }
  return "unknown";
}

WCurveClass classify_w_curve(double kappa, double tau, double tol) {
  if (kappa < -tol) throw Error(ErrorCode::ValidationError, "curvature must be non-negative");
  const double K = std::abs(tau * tau - kappa * kappa);
  if (kappa <= tol) return {WCurveKind::PlanarTimelike, K};
  if (std::abs(tau) <= tol) return {WCurveKind::OrthogonalHyperbola, K};
  require_non_lightlike(kappa, tau, tol);
  if (std::abs(tau) > kappa) return {WCurveKind::TimelikeCircularHelix, K};
  return {WCurveKind::TimelikeHyperbolicHelix, K};
}

Curve generate_w_curve(WCurveKind kind, double kappa, double tau, double tol) {
  if (kappa > tol && std::abs(tau) > tol) require_non_lightlike(kappa, tau, tol);
  switch (kind) {
    case WCurveKind::TimelikeCircularHelix: return timelike_circular_helix(kappa, tau);
    case WCurveKind::TimelikeHyperbolicHelix: return timelike_hyperbolic_helix(kappa, tau);
    default: break;
  }
  throw Error(ErrorCode::ClassMismatch, std::string("no generator for ") + to_string(kind));
}

}  // namespace mink
