#include "mink/bertrand.hpp"

#include <cmath>
#include <sstream>

namespace mink {

namespace {

std::string at_s(const char* what, double s) {
  std::ostringstream os;
  os << what << " at s = " << s;
  return os.str();
}

Eigen::Matrix3d rows_of(const FrenetFrame& f) {
  Eigen::Matrix3d m;
  m.row(0) = f.T.transpose();
  m.row(1) = f.N.transpose();
  m.row(2) = f.B.transpose();
  return m;
}

}  // namespace

Mate bertrand_mate(const Curve& alpha, double lambda, const std::vector<double>& grid,
                   const MateOptions& opts) {
  const double tol = opts.tol;
  std::ostringstream name;
  name << "mate(" << alpha.name() << ", lambda=" << lambda << ")";
  Curve beta(CurveSource::Composite, name.str(), alpha.domain(), alpha.nominal(),
             [alpha, lambda, tol](double s, int order) -> JetVec {
               const FrenetJet fj = frenet_jet(alpha, s, order, tol);
               return truncated(alpha.taylor(s, order), order) + lambda * fj.N;
             });

  Mate out{beta, Causal::Spacelike};
  for (double s : grid) {
    try {
      const JetVec d = differentiated(beta.taylor(s, 1));
      const LorentzVec v = value_of(d);
      const double g = metric(v, v);
      if (std::sqrt(std::abs(g)) <= tol) throw Error(ErrorCode::NullTangent, "beta' is null");
      frenet_apparatus(beta, s, FrenetOptions{tol});
      if (g < 0.0 && out.character == Causal::Spacelike) out.character = Causal::Timelike;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NullTangent && e.code() != ErrorCode::DegenerateCurvature) throw;
      throw Error(ErrorCode::DegenerateMate,
                  at_s("mate collapses", s) + " (" + std::string(to_string(e.code())) + ")");
    }
  }
  if (opts.require_spacelike && out.character != Causal::Spacelike) {
    throw Error(ErrorCode::NotSpacelikeMate, name.str() + " is " + to_string(out.character));
  }
  return out;
}

Mate bertrand_mate(const Curve& alpha, double lambda, const MateOptions& opts) {
  return bertrand_mate(alpha, lambda, linspace(alpha.nominal(), kDefaultSamples), opts);
}

double rejection_from_normal(const LorentzVec& v, const FrenetFrame& frame) {
  const double along_T = metric(v, frame.T) / frame.sign_T();
  const double along_B = metric(v, frame.B) / frame.sign_B();
  return std::hypot(along_T, along_B);
}

CoupleAngle couple_angle(const Curve& alpha, const Curve& beta, const std::vector<double>& grid,
                         const CoupleOptions& opts) {
  if (grid.empty()) throw Error(ErrorCode::ValidationError, "empty sample grid");
  const FrenetOptions fo{opts.tol};
  std::vector<double> sinhs;
  double sum_bt = 0.0, sum_nn = 0.0;
  CoupleAngle out;
  for (double s : grid) {
    const FrenetFrame a = frenet_apparatus(alpha, s, fo);
    const FrenetFrame b = frenet_apparatus(beta, s, fo);
    if (b.tangent != Causal::Spacelike) {
      throw Error(ErrorCode::NotSpacelikeMate, at_s("mate tangent is timelike", s));
    }
    const double rej = rejection_from_normal(b.N, a);
    out.max_rejection = std::max(out.max_rejection, rej);
    if (rej > opts.collinear_tol) {
      std::ostringstream os;
      os << "N and N* not collinear (rejection " << rej << ")";
      throw Error(ErrorCode::NotBertrand, at_s(os.str().c_str(), s));
    }
    sinhs.push_back(-metric(a.T, b.T));
    sum_bt += metric(a.B, b.T);
    sum_nn += metric(a.N, b.N);
  }
  double mean = 0.0;
  for (double v : sinhs) mean += v;
  mean /= static_cast<double>(sinhs.size());
  for (double v : sinhs) out.max_deviation = std::max(out.max_deviation, std::abs(v - mean));
  if (out.max_deviation > opts.angle_tol) {
    std::ostringstream os;
    os << "-g(T, T*) varies by " << out.max_deviation << " > " << opts.angle_tol;
    throw Error(ErrorCode::NonConstantAngle, os.str());
  }
  out.sinh_theta = mean;
  out.cosh_theta = solve_hyperbolic_angle(mean).cosh_theta;
  out.sigma_B = sum_bt < 0.0 ? -1 : 1;
  out.sigma_N = sum_nn < 0.0 ? -1 : 1;
  return out;
}

BertrandCouple make_couple(const Curve& alpha, double lambda, const std::vector<double>& grid,
                           const CoupleOptions& opts) {
  Mate m = bertrand_mate(alpha, lambda, grid, MateOptions{opts.tol, true});
  CoupleAngle angle = couple_angle(alpha, m.beta, grid, opts);
  return BertrandCouple{alpha, lambda, m.beta, grid, angle};
}

FrameRelationMatrix frame_relation_matrix(const BertrandCouple& couple, double s, double tol) {
  const FrenetFrame a = frenet_apparatus(couple.alpha, s, FrenetOptions{tol});
  const FrenetFrame b = frenet_apparatus(couple.beta, s, FrenetOptions{tol});
  const std::array<const LorentzVec*, 3> X{&a.T, &a.N, &a.B};
  const std::array<double, 3> gx{a.sign_T(), a.sign_N(), a.sign_B()};
  const std::array<const LorentzVec*, 3> Y{&b.T, &b.N, &b.B};
  FrameRelationMatrix out;
  out.s = s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.M(i, j) = metric(*Y[static_cast<std::size_t>(i)], *X[static_cast<std::size_t>(j)]) / gx[static_cast<std::size_t>(j)];
  return out;
}

double pattern_error(const Eigen::Matrix3d& M, int sigma_N) {
  return std::max({std::abs(M(0, 1)), std::abs(M(1, 0)), std::abs(M(1, 2)), std::abs(M(2, 1)),
                   std::abs(M(1, 1) - sigma_N)});
}

Eigen::Matrix3d apply_relation(const Eigen::Matrix3d& M, const FrenetFrame& alpha_frame) {
  return M * rows_of(alpha_frame);
}

FrameRelationCheck check_frame_relation(const BertrandCouple& couple, double tol) {
  FrameRelationCheck out;
  std::vector<Eigen::Matrix3d> ms;
  for (double s : couple.grid) ms.push_back(frame_relation_matrix(couple, s, tol).M);
  for (const auto& m : ms) out.mean += m;
  out.mean /= static_cast<double>(ms.size());
  for (const auto& m : ms) {
    out.max_entry_deviation = std::max(out.max_entry_deviation, (m - out.mean).cwiseAbs().maxCoeff());
    out.max_pattern_error = std::max(out.max_pattern_error, pattern_error(m, couple.angle.sigma_N));
  }
  const auto& M = out.mean;
  out.hyperbolic_identity_error = std::abs(-M(0, 0) * M(0, 0) + M(0, 2) * M(0, 2) - 1.0);
  for (double s : couple.grid) {
    const FrenetFrame a = frenet_apparatus(couple.alpha, s, FrenetOptions{tol});
    const FrenetFrame b = frenet_apparatus(couple.beta, s, FrenetOptions{tol});
    const Eigen::Matrix3d diff = apply_relation(M, a) - rows_of(b);
    for (int r = 0; r < 3; ++r) out.max_map_residual = std::max(out.max_map_residual, diff.row(r).norm());
    out.binormal_identity_error =
        std::max(out.binormal_identity_error,
                 std::abs(-M(2, 0) * M(2, 0) + M(2, 2) * M(2, 2) - b.sign_B()));
  }
  return out;
}

}  // namespace mink
