#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "mink/lorentz.hpp"

namespace mink {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double s) const { return s >= lo && s <= hi; }
  bool contains(double a, double b) const { return a >= lo && b <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  double length() const { return hi - lo; }
};

/// n evenly spaced values including both endpoints (n == 1 gives lo).
std::vector<double> linspace(const Interval& iv, int n);

enum class CurveSource {
  TimelikeCircularHelix,
  TimelikeHyperbolicHelix,
  ReferenceHelix,  // the kappa = 1, tau = 2 circular helix in closed form
  ReferenceMate,   // its mate family in closed form
  Custom,          // user-supplied analytic function
  SampledTable,
  Composite,       // built from another curve (mate, indicatrix, frame field)
};

const char* to_string(CurveSource source);

struct SampleRow {
  double s;
  LorentzVec point;
};

/// An evaluable parametric curve s -> R^3_1.
///
/// Every curve can produce its local Taylor expansion at s (exact for analytic
/// sources, the local quintic interpolant for tables). Derived curves request
/// a higher order from their parent and differentiate the series.
class Curve {
 public:
  using TaylorFn = std::function<JetVec(double s, int order)>;

  Curve(CurveSource source, std::string name, Interval domain, Interval nominal, TaylorFn taylor);

  CurveSource source() const { return source_; }
  const std::string& name() const { return name_; }
  /// Where the curve may be evaluated.
  const Interval& domain() const { return domain_; }
  /// Finite interval used for default sampling grids.
  const Interval& nominal() const { return nominal_; }

  /// Taylor coefficients of the curve around s up to `order`.
  JetVec taylor(double s, int order) const;

  LorentzVec operator()(double s) const;

  /// Point evaluator with any local interpolation window frozen at `center`,
  /// so finite-difference stencils never straddle a window switch.
  std::function<LorentzVec(double)> local_evaluator(double center) const;

  const std::vector<SampleRow>* table() const { return table_.get(); }

  Curve renamed(std::string name) const;

 private:
  friend Curve sampled_table(std::vector<SampleRow> rows, std::string name);

  CurveSource source_;
  std::string name_;
  Interval domain_;
  Interval nominal_;
  TaylorFn taylor_;
  std::shared_ptr<const std::vector<SampleRow>> table_;
};

/// Wraps a generic callable `f(const Scalar& s) -> Vec3<Scalar>` as a curve.
template <typename F>
Curve make_analytic(CurveSource source, std::string name, F f, Interval nominal,
                    Interval domain = {}) {
  return Curve(source, std::move(name), domain, nominal, [f](double s, int order) -> JetVec {
    if (order == 0) {
      const Vec3<double> p = f(s);
      return JetVec(Jet(p(0)).truncated(0), Jet(p(1)).truncated(0), Jet(p(2)).truncated(0));
    }
    return truncated(f(Jet::variable(s, order)), order);
  });
}

/// Rows must be strictly increasing in s, finite, and at least 7 in number.
Curve sampled_table(std::vector<SampleRow> rows, std::string name = "table");

/// Timelike circular helix with K = tau^2 - kappa^2 > 0.
Curve timelike_circular_helix(double kappa, double tau);
/// Timelike hyperbolic helix with K = kappa^2 - tau^2 > 0.
Curve timelike_hyperbolic_helix(double kappa, double tau);

/// (2/sqrt3 s, 1/3 cos(sqrt3 s), 1/3 sin(sqrt3 s)): unit speed, kappa = 1, tau = 2.
Curve reference_helix();
/// (2/sqrt3 s, (1/3 - lambda) cos(sqrt3 s), (1/3 - lambda) sin(sqrt3 s)).
Curve reference_mate(double lambda);

/// One period of the reference helix.
Interval reference_period();

// Finite differences ------------------------------------------------------

inline constexpr double kDefaultStep = 1e-4;

/// Derivatives of order 1..max_order (max_order <= 3) at s by 5-point central
/// stencils with one Richardson refinement. The step for order k is
/// h * max(1, |s|) * {1, 10, 30}[k-1]; the whole stencil must lie within
/// 5 steps of s inside the domain.
std::vector<LorentzVec> derivatives(const Curve& curve, double s, int max_order,
                                    double h = kDefaultStep);

/// Same stencils applied to an arbitrary vector function; no domain check.
std::vector<LorentzVec> fd_derivatives(const std::function<LorentzVec(double)>& f, double s,
                                       int max_order, double h = kDefaultStep);

}  // namespace mink
