#pragma once

#include <optional>
#include <vector>

#include "mink/bertrand.hpp"

namespace mink {

enum class IndicatrixKind { Tangent, PrincipalNormal, Binormal };

const char* to_string(IndicatrixKind k);

/// Unit pseudospheres: S12 = {g(p,p) = +1} (de Sitter), H02 = {g(p,p) = -1}.
enum class Surface { S12, H02 };

const char* to_string(Surface s);

/// g(xi, xi) for the outward normal xi(p) = p.
inline double surface_sign(Surface s) { return s == Surface::S12 ? 1.0 : -1.0; }

inline constexpr double kMembershipTol = 1e-6;

/// A curve lying on S12 or H02, sampled on `grid`.
struct CurveOnPseudosphere {
  std::optional<IndicatrixKind> kind;  // empty for curves not built from a frame
  Surface surface = Surface::S12;
  Curve curve;
  std::vector<double> grid;
  std::vector<LorentzVec> points;
  double max_membership_error = 0.0;

  double epsilon() const { return surface_sign(surface); }
};

/// S12 if |g(p,p) - 1| <= tol, H02 if |g(p,p) + 1| <= tol.
std::optional<Surface> pseudosphere_membership(const LorentzVec& p, double tol = kMembershipTol);

/// s -> T(s), N(s) or B(s) of `base` as a curve.
Curve frame_field(const Curve& base, IndicatrixKind kind, double tol = kCausalTol);

/// Samples any curve onto its pseudosphere; the surface is read off the sign
/// of g(p,p). Throws MembershipViolation if |g(p,p)| is not 1 within tol.
CurveOnPseudosphere on_pseudosphere(const Curve& curve, const std::vector<double>& grid,
                                    std::optional<IndicatrixKind> kind = std::nullopt,
                                    double tol = kMembershipTol);

/// Indicatrix of a frame vector of `base` (not necessarily part of a couple).
CurveOnPseudosphere frame_indicatrix(const Curve& base, IndicatrixKind kind,
                                     const std::vector<double>& grid, double tol = kCausalTol);

/// T*, N* or B* of the mate, sampled on the couple's grid.
CurveOnPseudosphere spherical_indicatrix(const BertrandCouple& couple, IndicatrixKind kind);

struct IndicatrixTangent {
  LorentzVec t_unit;
  double speed = 0.0;  // pseudo-norm of d(point)/ds
};

/// Throws StationaryPoint when the speed is at or below tol.
IndicatrixTangent indicatrix_tangent(const CurveOnPseudosphere& ind, double s,
                                     double tol = kCausalTol);

/// Speed of a mate indicatrix predicted from the base curve and the frame
/// relation matrix M (rows T*, N*, B* in the basis T, N, B):
///   T*: (kappa M00 + tau M02) |alpha'|,  B*: (kappa M20 + tau M22) |alpha'|,
///   N*: |w| |alpha'|.
/// Signed for T* and B*.
double indicatrix_speed_formula(IndicatrixKind kind, const FrenetFrame& alpha_frame,
                                const Eigen::Matrix3d& M);

}  // namespace mink
