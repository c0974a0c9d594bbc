#pragma once

#include <Eigen/Core>

#include <vector>

#include "mink/frenet.hpp"

namespace mink {

inline constexpr int kDefaultSamples = 50;

struct MateOptions {
  double tol = kCausalTol;
  bool require_spacelike = false;  // raise NotSpacelikeMate instead of reporting
};

struct Mate {
  Curve beta;
  Causal character = Causal::Spacelike;  // of beta' over the check grid
};

/// beta(s) = alpha(s) + lambda N(s), checked on `grid`.
/// Throws DegenerateMate when beta' is null or beta has no curvature somewhere.
Mate bertrand_mate(const Curve& alpha, double lambda, const std::vector<double>& grid,
                   const MateOptions& opts = {});
/// Same, checked on kDefaultSamples points of alpha's nominal interval.
Mate bertrand_mate(const Curve& alpha, double lambda, const MateOptions& opts = {});

struct CoupleOptions {
  double tol = kCausalTol;
  double collinear_tol = 1e-6;
  double angle_tol = 1e-7;
};

struct CoupleAngle {
  double sinh_theta = 0.0;
  double cosh_theta = 1.0;
  int sigma_B = 1;  // sign of the cosh(theta) entry of T* along B
  int sigma_N = 1;  // N* = sigma_N N
  double max_deviation = 0.0;  // of -g(T, T*) from its mean
  double max_rejection = 0.0;  // of N* from span{N}
};

/// sinh(theta) = -g(T, T*) averaged over the grid, after checking that N and
/// N* are collinear everywhere and that the angle does not drift.
CoupleAngle couple_angle(const Curve& alpha, const Curve& beta, const std::vector<double>& grid,
                         const CoupleOptions& opts = {});

struct BertrandCouple {
  Curve alpha;
  double lambda = 0.0;
  Curve beta;
  std::vector<double> grid;
  CoupleAngle angle;

  double sinh_theta() const { return angle.sinh_theta; }
  double cosh_theta() const { return angle.cosh_theta; }
};

/// Mate + angle; beta must be spacelike.
BertrandCouple make_couple(const Curve& alpha, double lambda, const std::vector<double>& grid,
                           const CoupleOptions& opts = {});

/// Size of the part of v outside span{N} of `frame`, measured by the
/// Euclidean length of its (T, B) frame coordinates.
double rejection_from_normal(const LorentzVec& v, const FrenetFrame& frame);

/// Rows are the coordinates of (T*, N*, B*) in the basis (T, N, B):
/// M(i, j) = g(Y_i, X_j) / g(X_j, X_j).
struct FrameRelationMatrix {
  double s = 0.0;
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
};

FrameRelationMatrix frame_relation_matrix(const BertrandCouple& couple, double s,
                                          double tol = kCausalTol);

/// Largest entry that should vanish, or |M(1,1) - sigma_N|.
double pattern_error(const Eigen::Matrix3d& M, int sigma_N);

/// (T*, N*, B*) predicted by M from the alpha frame, as rows of a matrix.
Eigen::Matrix3d apply_relation(const Eigen::Matrix3d& M, const FrenetFrame& alpha_frame);

struct FrameRelationCheck {
  Eigen::Matrix3d mean = Eigen::Matrix3d::Zero();
  double max_entry_deviation = 0.0;  // over the grid
  double max_pattern_error = 0.0;
  double hyperbolic_identity_error = 0.0;  // |-a^2 + b^2 - 1| for row 0
  double binormal_identity_error = 0.0;    // |-b'^2 + a'^2 - g(B*, B*)| for row 2
  double max_map_residual = 0.0;           // |mean M (T,N,B) - (T*,N*,B*)|
};

FrameRelationCheck check_frame_relation(const BertrandCouple& couple, double tol = kCausalTol);

}  // namespace mink
