#include "mink/lift.hpp"

#include <cmath>
#include <sstream>

namespace mink {

namespace {

LiftSample sample_from(double s, const JetVec& j) {
  return {s, value_of(j), derivative_of(j, 1), derivative_of(j, 2)};
}

/// sum_k c_k x^k by Horner; x must have zero constant term.
Jet compose(const Jet& c, const Jet& x) {
  Jet acc(c[c.order()]);
  for (int k = c.order() - 1; k >= 0; --k) acc = acc * x + Jet(c[k]);
  return acc.truncated(x.order());
}

}  // namespace

LiftedCurve natural_lift(const Curve& curve, const std::vector<double>& grid) {
  LiftedCurve out;
  out.samples.reserve(grid.size());
  for (double s : grid) out.samples.push_back(sample_from(s, curve.taylor(s, 2)));
  return out;
}

LiftedCurve natural_lift(const CurveOnPseudosphere& ind) { return natural_lift(ind.curve, ind.grid); }

JetVec unit_speed_expansion(const Curve& curve, double s, int order, double tol) {
  const JetVec p = curve.taylor(s, order);
  const JetVec d = differentiated(p);
  const Jet speed = pseudo_norm(d);
  if (speed.value() <= tol) {
    std::ostringstream os;
    os << curve.name() << " is stationary at s = " << s;
    throw Error(ErrorCode::StationaryPoint, os.str());
  }
  // u(s0 + e) = a_1 e + a_2 e^2 + ...; solve e(u) by fixed-point iteration,
  // each pass fixes one more coefficient.
  const Jet arc = speed.integrated(0.0);
  const Jet u = Jet::variable(0.0, order);
  Jet higher = arc;
  higher[1] = 0.0;
  Jet e = u / arc[1];
  for (int pass = 0; pass < order; ++pass) e = (u - compose(higher, e)) / arc[1];
  return JetVec(compose(p(0), e), compose(p(1), e), compose(p(2), e));
}

LiftedCurve unit_speed_lift(const Curve& curve, const std::vector<double>& grid, double tol) {
  LiftedCurve out;
  out.unit_speed = true;
  out.samples.reserve(grid.size());
  for (double s : grid) out.samples.push_back(sample_from(s, unit_speed_expansion(curve, s, 2, tol)));
  return out;
}

LiftedCurve unit_speed_lift(const CurveOnPseudosphere& ind, double tol) {
  return unit_speed_lift(ind.curve, ind.grid, tol);
}

SurfaceContext surface_context(Surface s) { return {s, surface_sign(s), kMembershipTol}; }

LorentzVec geodesic_spray(const LorentzVec& point, const LorentzVec& velocity, const SurfaceContext& ctx) {
  const double g = metric(point, point);
  if (std::abs(g - ctx.epsilon) > ctx.membership_tol) {
    std::ostringstream os;
    os << "g(p,p) = " << g << " but " << to_string(ctx.surface) << " needs " << ctx.epsilon;
    throw Error(ErrorCode::OffSurface, os.str());
  }
  const double scale = std::max(1.0, velocity.cwiseAbs().maxCoeff());
  if (std::abs(metric(point, velocity)) > ctx.membership_tol * scale) {
    std::ostringstream os;
    os << "g(p, v) = " << metric(point, velocity) << ": velocity not tangent";
    throw Error(ErrorCode::NonTangentVelocity, os.str());
  }
  const LorentzVec xi = ctx.normal(point);
  return ctx.epsilon * metric(velocity, ctx.shape_operator(velocity)) * xi;
}

GaussSplit tangential_acceleration(const CurveOnPseudosphere& ind, double s, double tol) {
  const JetVec j = ind.curve.taylor(s, 2);
  const LorentzVec p = value_of(j);
  const LorentzVec d1 = derivative_of(j, 1);
  const LorentzVec d2 = derivative_of(j, 2);
  const double g11 = metric(d1, d1);
  if (std::sqrt(std::abs(g11)) <= tol) {
    std::ostringstream os;
    os << ind.curve.name() << " is stationary at s = " << s;
    throw Error(ErrorCode::StationaryPoint, os.str());
  }
  GaussSplit out;
  out.ambient = (d2 - (metric(d1, d2) / g11) * d1) / std::abs(g11);
  const LorentzVec xi = p;
  const double eps = ind.epsilon();
  out.normal_coeff = eps * metric(out.ambient, xi);
  out.tangential = out.ambient - out.normal_coeff * xi;
  return out;
}

GeodesicReport geodesic_residual(const CurveOnPseudosphere& ind, double tol) {
  GeodesicReport r;
  r.tol = tol;
  r.residuals.reserve(ind.grid.size());
  for (double s : ind.grid) {
    const double res = pseudo_norm(tangential_acceleration(ind, s).tangential);
    r.residuals.push_back(res);
    r.max_residual = std::max(r.max_residual, res);
  }
  r.is_geodesic = r.max_residual <= tol;
  return r;
}

double spray_defect(const LiftedCurve& lift, const SurfaceContext& ctx) {
  double worst = 0.0;
  for (const auto& smp : lift.samples) {
    const LorentzVec x = geodesic_spray(smp.point, smp.velocity, ctx);
    worst = std::max(worst, pseudo_norm(LorentzVec(smp.acceleration - x)));
  }
  return worst;
}

bool is_integral_curve_of_spray(const LiftedCurve& lift, const SurfaceContext& ctx, double tol) {
  return spray_defect(lift, ctx) <= tol;
}

AlgebraicCondition geodesic_condition_algebraic(double kappa, double tau, double sinh_theta,
                                                double cosh_theta, double phi_prime,
                                                IndicatrixKind kind, double tol) {
  AlgebraicCondition c;
  switch (kind) {
    case IndicatrixKind::Tangent:
      c.equation = "kappa*cosh(theta) + tau*sinh(theta) = 0";
      c.value = kappa * cosh_theta + tau * sinh_theta;
      break;
    case IndicatrixKind::PrincipalNormal:
      c.equation = "phi' = 0";
      c.value = phi_prime;
      break;
    case IndicatrixKind::Binormal:
      c.equation = "kappa*sinh(theta) + tau*cosh(theta) = 0";
      c.value = kappa * sinh_theta + tau * cosh_theta;
      break;
  }
  c.satisfied = std::abs(c.value) <= tol;
  return c;
}

}  // namespace mink
