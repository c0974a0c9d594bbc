#pragma once

// Closed forms and helpers shared by the unit and acceptance tests.
// Everything here is written out by hand; none of it calls into the library
// beyond the vector type.

#include <cmath>
#include <functional>
#include <random>

#include "mink/error.hpp"
#include "mink/lorentz.hpp"

namespace oracle {

using mink::LorentzVec;

inline const double kR3 = std::sqrt(3.0);
inline const double kR5 = std::sqrt(5.0);
inline const double kR15 = std::sqrt(15.0);
inline const double kPi = std::acos(-1.0);

// alpha(s) = (2/sqrt3 s, 1/3 cos(sqrt3 s), 1/3 sin(sqrt3 s)), kappa = 1, tau = 2.
inline LorentzVec alpha(double s) {
  return {2.0 / kR3 * s, std::cos(kR3 * s) / 3.0, std::sin(kR3 * s) / 3.0};
}
inline LorentzVec alpha_d1(double s) {
  return {2.0 / kR3, -std::sin(kR3 * s) / kR3, std::cos(kR3 * s) / kR3};
}
inline LorentzVec alpha_d2(double s) { return {0.0, -std::cos(kR3 * s), -std::sin(kR3 * s)}; }
inline LorentzVec alpha_d3(double s) { return {0.0, kR3 * std::sin(kR3 * s), -kR3 * std::cos(kR3 * s)}; }

inline LorentzVec alpha_T(double s) { return alpha_d1(s); }
inline LorentzVec alpha_N(double s) { return alpha_d2(s); }
inline LorentzVec alpha_B(double s) {
  return {1.0 / kR3, -2.0 / kR3 * std::sin(kR3 * s), 2.0 / kR3 * std::cos(kR3 * s)};
}

// Mate for lambda = 4/3 and its frame.
inline LorentzVec beta(double s) { return {2.0 / kR3 * s, -std::cos(kR3 * s), -std::sin(kR3 * s)}; }
inline LorentzVec beta_T(double s) {
  return {2.0 / kR5, 3.0 / kR5 * std::sin(kR3 * s), -3.0 / kR5 * std::cos(kR3 * s)};
}
inline LorentzVec beta_N(double s) { return {0.0, std::cos(kR3 * s), std::sin(kR3 * s)}; }
inline LorentzVec beta_B(double s) {
  return {3.0 / kR5, 2.0 / kR5 * std::sin(kR3 * s), -2.0 / kR5 * std::cos(kR3 * s)};
}

// s-derivatives of the mate frame vectors (velocities of the natural lifts).
inline LorentzVec beta_T_dot(double s) {
  return {0.0, 3.0 * kR3 / kR5 * std::cos(kR3 * s), 3.0 * kR3 / kR5 * std::sin(kR3 * s)};
}
inline LorentzVec beta_N_dot(double s) { return {0.0, -kR3 * std::sin(kR3 * s), kR3 * std::cos(kR3 * s)}; }
inline LorentzVec beta_B_dot(double s) {
  return {0.0, 2.0 * kR3 / kR5 * std::cos(kR3 * s), 2.0 * kR3 / kR5 * std::sin(kR3 * s)};
}

inline const double kSinhTheta = 7.0 / kR15;
inline const double kCoshTheta = 8.0 / kR15;

// Mate relation for a W-curve couple with constant (kappa, tau):
//   beta' = (1 + lambda kappa) T - lambda tau B,  T* = a T + c B.
struct WCouple {
  double kappa, tau, lambda;
  double n() const { return std::sqrt(lambda * lambda * tau * tau - std::pow(1.0 + lambda * kappa, 2)); }
  double a() const { return (1.0 + lambda * kappa) / n(); }
  double c() const { return -lambda * tau / n(); }
  double sinh_theta() const { return a(); }
  double speed_T() const { return std::abs(a() * kappa + c() * tau); }
  double speed_B() const { return std::abs(c() * kappa + a() * tau); }
  double residual_T() const {
    return std::sqrt(std::abs((tau * tau - kappa * kappa) / std::pow(a() * kappa + c() * tau, 2) - 1.0));
  }
  double residual_B() const {
    return std::sqrt(std::abs((tau * tau - kappa * kappa) / std::pow(c() * kappa + a() * tau, 2) + 1.0));
  }
};

inline bool spacelike_mate(double kappa, double tau, double lambda) {
  return std::abs(lambda * tau) > std::abs(1.0 + lambda * kappa);
}

inline double max_abs(const LorentzVec& v) { return v.cwiseAbs().maxCoeff(); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

}  // namespace oracle

// Runs `stmt` and checks that it throws mink::Error with `code`.
#define EXPECT_MINK_ERROR(stmt, expected_code)                                   \
  do {                                                                          \
    bool caught_ = false;                                                       \
    try {                                                                       \
      stmt;                                                                     \
    } catch (const mink::Error& e_) {                                           \
      caught_ = true;                                                           \
      EXPECT_EQ(e_.code(), expected_code) << e_.what();                         \
    }                                                                           \
    EXPECT_TRUE(caught_) << "no mink::Error from " #stmt;                       \
  } while (0)
