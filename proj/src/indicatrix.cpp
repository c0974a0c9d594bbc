#include "mink/indicatrix.hpp"

#include <cmath>
#include <sstream>

namespace mink {

const char* to_string(IndicatrixKind k) {
  switch (k) {
    case IndicatrixKind::Tangent: return "tangent";
    case IndicatrixKind::PrincipalNormal: return "principal_normal";
    case IndicatrixKind::Binormal: return "binormal";
  }
  return "unknown";
}

const char* to_string(Surface s) { return s == Surface::S12 ? "S12" : "H02"; }

std::optional<Surface> pseudosphere_membership(const LorentzVec& p, double tol) {
  const double g = metric(p, p);
  if (std::abs(g - 1.0) <= tol) return Surface::S12;
  if (std::abs(g + 1.0) <= tol) return Surface::H02;
  return std::nullopt;
}

Curve frame_field(const Curve& base, IndicatrixKind kind, double tol) {
  static constexpr const char* tags[] = {"T", "N", "B"};
  const std::string name = std::string(tags[static_cast<int>(kind)]) + "[" + base.name() + "]";
  return Curve(CurveSource::Composite, name, base.domain(), base.nominal(),
               [base, kind, tol](double s, int order) -> JetVec {
                 const FrenetJet fj = frenet_jet(base, s, order, tol);
                 switch (kind) {
                   case IndicatrixKind::Tangent: return fj.T;
                   case IndicatrixKind::PrincipalNormal: return fj.N;
                   default: return fj.B;
                 }
               });
}

CurveOnPseudosphere on_pseudosphere(const Curve& curve, const std::vector<double>& grid,
                                    std::optional<IndicatrixKind> kind, double tol) {
  if (grid.empty()) throw Error(ErrorCode::ValidationError, "empty sample grid");
  CurveOnPseudosphere out{kind, Surface::S12, curve, grid, {}, 0.0};
  out.points.reserve(grid.size());
  std::optional<Surface> surface;
  for (double s : grid) {
    const LorentzVec p = curve(s);
    const double g = metric(p, p);
    const Surface here = g >= 0.0 ? Surface::S12 : Surface::H02;
    const double err = std::abs(g - surface_sign(here));
    if (err > tol || (surface && *surface != here)) {
      std::ostringstream os;
      os << curve.name() << " leaves the unit pseudosphere at s = " << s << " (g(p,p) = " << g << ")";
      throw Error(ErrorCode::MembershipViolation, os.str());
    }
    surface = here;
    out.max_membership_error = std::max(out.max_membership_error, err);
    out.points.push_back(p);
  }
  out.surface = *surface;
  return out;
}

CurveOnPseudosphere frame_indicatrix(const Curve& base, IndicatrixKind kind,
                                     const std::vector<double>& grid, double tol) {
  return on_pseudosphere(frame_field(base, kind, tol), grid, kind);
}

CurveOnPseudosphere spherical_indicatrix(const BertrandCouple& couple, IndicatrixKind kind) {
  return frame_indicatrix(couple.beta, kind, couple.grid);
}

IndicatrixTangent indicatrix_tangent(const CurveOnPseudosphere& ind, double s, double tol) {
  const LorentzVec d = derivative_of(ind.curve.taylor(s, 1), 1);
  const double speed = pseudo_norm(d);
  if (speed <= tol) {
    std::ostringstream os;
    os << ind.curve.name() << " is stationary at s = " << s;
    throw Error(ErrorCode::StationaryPoint, os.str());
  }
  return {d / speed, speed};
}

double indicatrix_speed_formula(IndicatrixKind kind, const FrenetFrame& a, const Eigen::Matrix3d& M) {
  switch (kind) {
    case IndicatrixKind::Tangent: return (a.kappa * M(0, 0) + a.tau * M(0, 2)) * a.speed;
    case IndicatrixKind::Binormal: return (a.kappa * M(2, 0) + a.tau * M(2, 2)) * a.speed;
    case IndicatrixKind::PrincipalNormal:
      return std::sqrt(std::abs(a.tau * a.tau - a.kappa * a.kappa)) * a.speed;
  }
  return 0.0;
}

}  // namespace mink
