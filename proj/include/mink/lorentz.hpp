#pragma once

// Lorentzian linear algebra on R^3_1 with signature (-,+,+).
// Component 0 is the timelike axis.

#include <Eigen/Core>

#include <cmath>
#include <utility>

#include "mink/error.hpp"
#include "mink/jet.hpp"

namespace mink {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using LorentzVec = Vec3<double>;
using JetVec = Vec3<Jet>;

inline constexpr double kCausalTol = 1e-9;

template <typename Scalar>
Scalar metric(const Vec3<Scalar>& u, const Vec3<Scalar>& v) {
  return -u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

/// Cross product satisfying t x n = -b, n x b = t, b x t = -n for a timelike frame.
/// The result is metric-orthogonal to both inputs.
template <typename Scalar>
Vec3<Scalar> lorentz_cross(const Vec3<Scalar>& u, const Vec3<Scalar>& v) {
  return Vec3<Scalar>(u(2) * v(1) - u(1) * v(2), u(2) * v(0) - u(0) * v(2),
                      u(0) * v(1) - u(1) * v(0));
}

/// sqrt|g(v, v)|
inline double pseudo_norm(const LorentzVec& v) { return std::sqrt(std::abs(metric(v, v))); }

inline Jet pseudo_norm(const JetVec& v) { return sqrt(abs(metric(v, v))); }

enum class Causal { Timelike, Spacelike, Null };

struct CausalCharacter {
  Causal kind = Causal::Spacelike;
  bool positive = false;  // meaningful for Timelike only: x1 > 0

  friend bool operator==(const CausalCharacter&, const CausalCharacter&) = default;
};

const char* to_string(Causal c);

/// Zero vector is reported Spacelike.
CausalCharacter causal_character(const LorentzVec& v, double tol = kCausalTol);

struct Normalized {
  LorentzVec unit;
  double norm;
};

/// v / ||v||; throws NullVector when |g(v,v)| <= tol.
Normalized normalize(const LorentzVec& v, double tol = kCausalTol);

struct HyperbolicAngle {
  double theta;
  double cosh_theta;
};

/// theta = asinh(sinh_val), cosh(theta) = sqrt(1 + sinh_val^2).
HyperbolicAngle solve_hyperbolic_angle(double sinh_val);

inline bool all_finite(const LorentzVec& v) { return v.allFinite(); }

/// Throws NonFinite naming `where` if any component is NaN or infinite.
void require_finite(const LorentzVec& v, const char* where);

/// Componentwise map from a Jet vector to its values.
inline LorentzVec value_of(const JetVec& v) { return {v(0).value(), v(1).value(), v(2).value()}; }

/// Componentwise k-th derivative.
inline LorentzVec derivative_of(const JetVec& v, int k) {
  return {v(0).derivative(k), v(1).derivative(k), v(2).derivative(k)};
}

inline JetVec differentiated(const JetVec& v) {
  return {v(0).differentiated(), v(1).differentiated(), v(2).differentiated()};
}

inline JetVec truncated(const JetVec& v, int order) {
  return {v(0).truncated(order), v(1).truncated(order), v(2).truncated(order)};
}

inline int order_of(const JetVec& v) {
  return std::min({v(0).order(), v(1).order(), v(2).order()});
}

}  // namespace mink
