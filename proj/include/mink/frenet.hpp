#pragma once

#include <vector>

#include "mink/curve.hpp"

namespace mink {

enum class DiffMode {
  Taylor,            // exact series propagation through Jet
  FiniteDifference,  // 5-point stencils on point evaluations
};

struct FrenetOptions {
  double tol = kCausalTol;  // regularity / curvature threshold
  DiffMode mode = DiffMode::Taylor;
  double h = kDefaultStep;
};

/// Frenet apparatus at one parameter value. `speed` is ||gamma'(s)||, so
/// derivatives with respect to arc length are d/ds divided by speed.
struct FrenetFrame {
  double s = 0.0;
  LorentzVec T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
  double speed = 1.0;
  Causal tangent = Causal::Timelike;
  Causal normal = Causal::Spacelike;

  /// g(X, X) expected for T, N, B.
  double sign_T() const { return tangent == Causal::Timelike ? -1.0 : 1.0; }
  double sign_N() const { return normal == Causal::Timelike ? -1.0 : 1.0; }
  double sign_B() const { return -sign_T() * sign_N(); }
};

/// Frame fields as series in the curve parameter around one point.
/// T, N, B, kappa and speed share one order; tau is one order lower.
struct FrenetJet {
  JetVec T, N, B;
  Jet kappa, tau, speed;
  Causal tangent = Causal::Timelike;
  Causal normal = Causal::Spacelike;

  int order() const { return kappa.order(); }
  FrenetFrame at(double s) const;
};

/// Frame series from a Taylor expansion of the curve of order m >= 3.
/// Result order is m - 2 (tau: m - 3).
///   T = gamma'/|gamma'|, N = (dT/ds_arc)/kappa, B = -(T x N), tau = g(dB/ds_arc, N) g(N, N).
FrenetJet frenet_jet(const JetVec& gamma, double tol = kCausalTol);

/// Frame series of `curve` at s truncated to `order` (tau may be one lower).
FrenetJet frenet_jet(const Curve& curve, double s, int order, double tol = kCausalTol);

FrenetFrame frenet_apparatus(const Curve& curve, double s, const FrenetOptions& opts = {});

std::vector<FrenetFrame> frenet_on_grid(const Curve& curve, const std::vector<double>& grid,
                                        const FrenetOptions& opts = {});

/// Largest |g(X, Y) - expected| over the frame's Gram table.
double orthonormality_error(const FrenetFrame& f);

/// Largest component error in t x n = -b, n x b = t, b x t = -n (timelike frames).
double frame_identity_error(const FrenetFrame& f);

// Darboux vector ----------------------------------------------------------

enum class DarbouxCase {
  CaseI,   // |kappa| > |tau|, w spacelike
  CaseII,  // |kappa| < |tau|, w timelike
};

const char* to_string(DarbouxCase c);

struct DarbouxData {
  LorentzVec w;
  double norm_w = 0.0;
  DarbouxCase darboux_case = DarbouxCase::CaseI;
  double phi = 0.0;
  LorentzVec c;
};

/// w = tau T - kappa B with the angle solved from (kappa, |tau|).
///   Case I:  kappa = |w| cosh(phi), |tau| = |w| sinh(phi)
///   Case II: kappa = |w| sinh(phi), |tau| = |w| cosh(phi)
/// Throws LightlikeDarboux when |kappa| = |tau| within tol (relative to max(1, kappa)).
DarbouxData darboux_decomposition(const FrenetFrame& frame, double tol = kCausalTol);

/// w rebuilt from (phi, |w|, sign(tau), T, B).
LorentzVec reconstruct_darboux(const DarbouxData& d, const FrenetFrame& frame);

/// d(phi)/d(arc length) of the Darboux angle at s.
double darboux_angle_rate(const Curve& curve, double s, double tol = kCausalTol);

// Helices and W-curves ----------------------------------------------------

struct HelixVerdict {
  bool is_helix = false;
  double max_deviation = 0.0;  // of tau/kappa from its mean
  double mean_ratio = 0.0;
};

/// tau/kappa constant over n_samples points of the curve's nominal interval.
HelixVerdict is_general_helix(const Curve& curve, int n_samples, double tol,
                              const FrenetOptions& opts = {});

enum class WCurveKind {
  PlanarTimelike,
  OrthogonalHyperbola,
  TimelikeCircularHelix,
  TimelikeHyperbolicHelix,
};

const char* to_string(WCurveKind k);

struct WCurveClass {
  WCurveKind kind = WCurveKind::PlanarTimelike;
  double K = 0.0;  // |tau^2 - kappa^2|
};

WCurveClass classify_w_curve(double kappa, double tau, double tol = kCausalTol);

/// Unit-speed timelike helix of the requested class.
Curve generate_w_curve(WCurveKind kind, double kappa, double tau, double tol = kCausalTol);

}  // namespace mink
