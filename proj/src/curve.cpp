#include "mink/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mink {

std::vector<double> linspace(const Interval& iv, int n) {
  std::vector<double> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(iv.lo);
    return out;
  }
  const double step = iv.length() / (n - 1);
  for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? iv.hi : iv.lo + i * step);
  return out;
}

const char* to_string(CurveSource source) {
  switch (source) {
    case CurveSource::TimelikeCircularHelix: return "timelike_circular_helix";
    case CurveSource::TimelikeHyperbolicHelix: return "timelike_hyperbolic_helix";
    case CurveSource::ReferenceHelix: return "reference_helix";
    case CurveSource::ReferenceMate: return "reference_mate";
    case CurveSource::Custom: return "custom";
    case CurveSource::SampledTable: return "sampled_table";
    case CurveSource::Composite: return "composite";
  }
  return "unknown";
}

Curve::Curve(CurveSource source, std::string name, Interval domain, Interval nominal, TaylorFn taylor)
    : source_(source),
      name_(std::move(name)),
      domain_(domain),
      nominal_(nominal),
      taylor_(std::move(taylor)) {}

JetVec Curve::taylor(double s, int order) const {
  if (!domain_.contains(s)) {
    std::ostringstream os;
    os << name_ << ": s = " << s << " outside [" << domain_.lo << ", " << domain_.hi << "]";
    throw Error(ErrorCode::DomainExceeded, os.str());
  }
  if (order < 0 || order > kMaxJetOrder) {
    std::ostringstream os;
    os << name_ << ": Taylor order " << order << " outside [0, " << kMaxJetOrder << "]";
    throw Error(ErrorCode::DomainExceeded, os.str());
  }
  JetVec j = taylor_(s, order);
  for (int i = 0; i < 3; ++i) {
    if (!isfinite(j(i))) {
      std::ostringstream os;
      os << name_ << ": non-finite Taylor coefficients at s = " << s;
      throw Error(ErrorCode::NonFinite, os.str());
    }
  }
  return j;
}

LorentzVec Curve::operator()(double s) const { return value_of(taylor(s, 0)); }

Curve Curve::renamed(std::string name) const {
  Curve c = *this;
  c.name_ = std::move(name);
  return c;
}

// Sampled tables ----------------------------------------------------------

namespace {

constexpr int kWindow = 6;  // quintic

std::size_t window_start(const std::vector<SampleRow>& rows, double s) {
  auto it = std::upper_bound(rows.begin(), rows.end(), s,
                             [](double v, const SampleRow& r) { return v < r.s; });
  const auto upper = static_cast<std::ptrdiff_t>(it - rows.begin());
  const auto last = static_cast<std::ptrdiff_t>(rows.size()) - kWindow;
  return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(upper - 3, 0, last));
}

/// Lagrange form of the interpolant through rows[start .. start+5], evaluated on any scalar.
template <typename Scalar>
Vec3<Scalar> lagrange(const std::vector<SampleRow>& rows, std::size_t start, const Scalar& s) {
  Vec3<Scalar> acc(Scalar(0.0), Scalar(0.0), Scalar(0.0));
  for (std::size_t j = start; j < start + kWindow; ++j) {
    Scalar basis(1.0);
    for (std::size_t m = start; m < start + kWindow; ++m) {
      if (m == j) continue;
      basis = basis * ((s - rows[m].s) * (1.0 / (rows[j].s - rows[m].s)));
    }
    for (int i = 0; i < 3; ++i) acc(i) = acc(i) + basis * rows[j].point(i);
  }
  return acc;
}

}  // namespace

Curve sampled_table(std::vector<SampleRow> rows, std::string name) {
  if (rows.size() < 7) {
    std::ostringstream os;
    os << name << ": " << rows.size() << " rows, at least 7 required";
    throw Error(ErrorCode::InsufficientSamples, os.str());
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!std::isfinite(rows[i].s) || !rows[i].point.allFinite()) {
      std::ostringstream os;
      os << name << ": non-finite value in row " << i;
      throw Error(ErrorCode::NonFinite, os.str());
    }
    if (i > 0 && !(rows[i].s > rows[i - 1].s)) {
      std::ostringstream os;
      os << name << ": parameter not strictly increasing at row " << i;
      throw Error(ErrorCode::ValidationError, os.str());
    }
  }
  auto table = std::make_shared<const std::vector<SampleRow>>(std::move(rows));
  const Interval dom{table->front().s, table->back().s};
  Curve c(CurveSource::SampledTable, std::move(name), dom, dom, [table](double s, int order) -> JetVec {
    const std::size_t start = window_start(*table, s);
    if (order == 0) {
      const LorentzVec p = lagrange(*table, start, s);
      return JetVec(Jet(p(0)).truncated(0), Jet(p(1)).truncated(0), Jet(p(2)).truncated(0));
    }
    return lagrange(*table, start, Jet::variable(s, order));
  });
  c.table_ = table;
  return c;
}

std::function<LorentzVec(double)> Curve::local_evaluator(double center) const {
  if (table_) {
    auto table = table_;
    const std::size_t start = window_start(*table, center);
    return [table, start](double s) { return lagrange(*table, start, s); };
  }
  return [c = *this](double s) { return c(s); };
}

// Analytic generators -----------------------------------------------------

Curve timelike_circular_helix(double kappa, double tau) {
  const double K = tau * tau - kappa * kappa;
  if (!(K > 0.0) || !(kappa > 0.0)) {
    std::ostringstream os;
    os << "circular helix needs |tau| > kappa > 0 (kappa = " << kappa << ", tau = " << tau << ")";
    throw Error(ErrorCode::ClassMismatch, os.str());
  }
  const double rk = std::sqrt(K);
  const double axial = std::sqrt(tau * tau * K) / K;
  const double radius = kappa / K;
  auto f = [=](const auto& s) {
    using std::cos;
    using std::sin;
    using S = std::decay_t<decltype(s)>;
    const S arg = s * rk;
    return Vec3<S>(s * axial, cos(arg) * radius, sin(arg) * radius);
  };
  std::ostringstream name;
  name << "circular_helix(kappa=" << kappa << ",tau=" << tau << ")";
  return make_analytic(CurveSource::TimelikeCircularHelix, name.str(), f,
                       Interval{0.0, 2.0 * std::numbers::pi / rk});
}

Curve timelike_hyperbolic_helix(double kappa, double tau) {
  const double K = kappa * kappa - tau * tau;
  if (!(K > 0.0) || !(kappa > 0.0) || tau == 0.0) {
    std::ostringstream os;
    os << "hyperbolic helix needs kappa > |tau| > 0 (kappa = " << kappa << ", tau = " << tau << ")";
    throw Error(ErrorCode::ClassMismatch, os.str());
  }
  const double rk = std::sqrt(K);
  const double axial = std::sqrt(tau * tau * K) / K;
  const double radius = kappa / K;
  auto f = [=](const auto& s) {
    using std::cosh;
    using std::sinh;
    using S = std::decay_t<decltype(s)>;
    const S arg = s * rk;
    return Vec3<S>(sinh(arg) * radius, s * axial, cosh(arg) * radius);
  };
  std::ostringstream name;
  name << "hyperbolic_helix(kappa=" << kappa << ",tau=" << tau << ")";
  return make_analytic(CurveSource::TimelikeHyperbolicHelix, name.str(), f,
                       Interval{-1.0 / rk, 1.0 / rk});
}

Interval reference_period() { return {0.0, 2.0 * std::numbers::pi / std::sqrt(3.0)}; }

Curve reference_helix() {
  const double r3 = std::sqrt(3.0);
  auto f = [r3](const auto& s) {
    using std::cos;
    using std::sin;
    using S = std::decay_t<decltype(s)>;
    const S arg = s * r3;
    return Vec3<S>(s * (2.0 * r3 / 3.0), cos(arg) * (1.0 / 3.0), sin(arg) * (1.0 / 3.0));
  };
  return make_analytic(CurveSource::ReferenceHelix, "reference_helix", f, reference_period());
}

Curve reference_mate(double lambda) {
  const double r3 = std::sqrt(3.0);
  const double radius = 1.0 / 3.0 - lambda;
  auto f = [r3, radius](const auto& s) {
    using std::cos;
    using std::sin;
    using S = std::decay_t<decltype(s)>;
    const S arg = s * r3;
    return Vec3<S>(s * (2.0 * r3 / 3.0), cos(arg) * radius, sin(arg) * radius);
  };
  std::ostringstream name;
  name << "reference_mate(lambda=" << lambda << ")";
  return make_analytic(CurveSource::ReferenceMate, name.str(), f, reference_period());
}

// Finite differences ------------------------------------------------------

namespace {

constexpr std::array<double, 3> kStepMultiplier{1.0, 10.0, 30.0};

LorentzVec stencil(const std::function<LorentzVec(double)>& f, double s, int order, double h) {
  const LorentzVec fm2 = f(s - 2 * h), fm1 = f(s - h), fp1 = f(s + h), fp2 = f(s + 2 * h);
  switch (order) {
    case 1: return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    case 2: return (-fp2 + 16.0 * fp1 - 30.0 * f(s) + 16.0 * fm1 - fm2) / (12.0 * h * h);
    default: return (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
  }
}

// Leading error terms: O(h^4) for orders 1-2, O(h^2) for order 3.
LorentzVec richardson(const std::function<LorentzVec(double)>& f, double s, int order, double h) {
  const LorentzVec fine = stencil(f, s, order, h);
  const LorentzVec coarse = stencil(f, s, order, 2.0 * h);
  const double r = order == 3 ? 4.0 : 16.0;
  return (r * fine - coarse) / (r - 1.0);
}

double step_for(double s, int order, double h) {
  return h * std::max(1.0, std::abs(s)) * kStepMultiplier[static_cast<std::size_t>(order - 1)];
}

void check_order(int max_order, double h) {
  if (max_order < 1 || max_order > 3) throw Error(ErrorCode::ValidationError, "derivative order must be 1..3");
  if (!(h > 0.0)) throw Error(ErrorCode::ValidationError, "finite-difference step must be positive");
}

}  // namespace

std::vector<LorentzVec> fd_derivatives(const std::function<LorentzVec(double)>& f, double s,
                                       int max_order, double h) {
  check_order(max_order, h);
  std::vector<LorentzVec> out;
  for (int k = 1; k <= max_order; ++k) out.push_back(richardson(f, s, k, step_for(s, k, h)));
  return out;
}

std::vector<LorentzVec> derivatives(const Curve& curve, double s, int max_order, double h) {
  check_order(max_order, h);
  const double reach = 5.0 * step_for(s, max_order, h);
  if (!curve.domain().contains(s - reach, s + reach)) {
    std::ostringstream os;
    os << curve.name() << ": stencil [" << s - reach << ", " << s + reach << "] leaves ["
       << curve.domain().lo << ", " << curve.domain().hi << "]";
    throw Error(ErrorCode::DomainExceeded, os.str());
  }
  return fd_derivatives(curve.local_evaluator(s), s, max_order, h);
}

}  // namespace mink
