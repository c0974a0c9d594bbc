#pragma once

#include <map>
#include <string>
#include <vector>

#include "mink/indicatrix.hpp"

namespace mink {

/// One point of a natural lift: the base point, its velocity, and the
/// ambient derivative of the velocity along the curve.
struct LiftSample {
  double s = 0.0;
  LorentzVec point;
  LorentzVec velocity;
  LorentzVec acceleration;
};

struct LiftedCurve {
  std::vector<LiftSample> samples;
  bool unit_speed = false;
};

/// Lift with velocities taken in the curve's own parameter.
LiftedCurve natural_lift(const Curve& curve, const std::vector<double>& grid);
LiftedCurve natural_lift(const CurveOnPseudosphere& ind);

/// Local Taylor expansion of the curve in pseudo-arc-length u around s
/// (u = 0 at s), by reverting the series u(s) = integral of |gamma'|.
JetVec unit_speed_expansion(const Curve& curve, double s, int order, double tol = kCausalTol);

/// Lift of the unit-speed reparametrization; velocity and acceleration are
/// d/du and d^2/du^2. The samples keep the original parameter s.
LiftedCurve unit_speed_lift(const Curve& curve, const std::vector<double>& grid,
                            double tol = kCausalTol);
LiftedCurve unit_speed_lift(const CurveOnPseudosphere& ind, double tol = kCausalTol);

/// Ambient surface data for the unit pseudospheres: xi(p) = p, S(v) = -v.
struct SurfaceContext {
  Surface surface = Surface::S12;
  double epsilon = 1.0;  // g(xi, xi)
  double membership_tol = kMembershipTol;

  LorentzVec normal(const LorentzVec& p) const { return p; }
  LorentzVec shape_operator(const LorentzVec& v) const { return -v; }
};

SurfaceContext surface_context(Surface s);

/// X(v) = eps g(v, S(v)) xi = -eps g(v, v) p.
/// Throws OffSurface / NonTangentVelocity outside the tangent bundle.
LorentzVec geodesic_spray(const LorentzVec& point, const LorentzVec& velocity,
                          const SurfaceContext& ctx);

/// Gauss split of the unit-speed acceleration: ambient = tangential + normal_coeff xi,
/// normal_coeff = eps g(ambient, xi).
struct GaussSplit {
  LorentzVec ambient;
  LorentzVec tangential;
  double normal_coeff = 0.0;
};

/// Uses the chain rule on s-derivatives:
///   d^2p/du^2 = (p'' - g(p', p'')/g(p', p') p') / |g(p', p')|.
GaussSplit tangential_acceleration(const CurveOnPseudosphere& ind, double s,
                                   double tol = kCausalTol);

inline constexpr double kGeodesicTol = 1e-6;

struct GeodesicReport {
  double max_residual = 0.0;
  std::vector<double> residuals;
  bool is_geodesic = false;
  double tol = kGeodesicTol;
  std::map<std::string, double> condition_values;
};

/// Pseudo-norm of the tangential acceleration over the grid.
GeodesicReport geodesic_residual(const CurveOnPseudosphere& ind, double tol = kGeodesicTol);

/// True iff every lift sample's acceleration equals the spray within tol
/// (pseudo-norm of the difference). Meaningful for constant-speed lifts.
bool is_integral_curve_of_spray(const LiftedCurve& lift, const SurfaceContext& ctx,
                                double tol = kGeodesicTol);

/// Largest pseudo-norm of acceleration - spray over the lift.
double spray_defect(const LiftedCurve& lift, const SurfaceContext& ctx);

struct AlgebraicCondition {
  std::string equation;
  double value = 0.0;
  bool satisfied = false;
};

/// Left-hand side of the geodesic condition for each mate indicatrix:
///   tangent:          kappa cosh(theta) + tau sinh(theta)
///   principal normal: phi'
///   binormal:         kappa sinh(theta) + tau cosh(theta)
AlgebraicCondition geodesic_condition_algebraic(double kappa, double tau, double sinh_theta,
                                                double cosh_theta, double phi_prime,
                                                IndicatrixKind kind, double tol = kGeodesicTol);

}  // namespace mink
