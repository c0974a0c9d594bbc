#include <gtest/gtest.h>

#include <cmath>

#include "mink/bertrand.hpp"
#include "support.hpp"

using mink::ErrorCode;
using mink::LorentzVec;
using mink::WCurveKind;

namespace {

std::vector<double> period_grid(int n = 50) { return mink::linspace(mink::reference_period(), n); }

mink::BertrandCouple reference_couple() {
  return mink::make_couple(mink::reference_helix(), 4.0 / 3.0, period_grid());
}

// Random mate parameter inside the spacelike range of a W-curve couple:
// lambda > 1/(|tau| - kappa) for circular helices,
// -lambda between 1/(kappa + |tau|) and 1/(kappa - |tau|) for hyperbolic ones.
double spacelike_lambda(double kappa, double tau) {
  const double t = std::abs(tau);
  if (t > kappa) return oracle::uniform(1.05, 3.0) / (t - kappa);
  const double lo = 1.0 / (kappa + t), hi = 1.0 / (kappa - t);
  return -(lo + oracle::uniform(0.1, 0.9) * (hi - lo));
}

}  // namespace

TEST(Mate, ReferenceHelixClosedForm) {
  const auto mate = mink::bertrand_mate(mink::reference_helix(), 4.0 / 3.0, period_grid());
  EXPECT_EQ(mate.character, mink::Causal::Spacelike);
  for (double s : period_grid()) EXPECT_LT(oracle::max_abs(mate.beta(s) - oracle::beta(s)), 1e-9);
}

TEST(Mate, FamilyMatchesClosedFormProperty) {
  const auto alpha = mink::reference_helix();
  for (int trial = 0; trial < 60; ++trial) {
    const double lambda = oracle::uniform(-4.0, 4.0);
    const double r = 1.0 / 3.0 - lambda;
    // skip the null and straight members
    if (std::abs(lambda - 1.0) < 1e-3 || std::abs(lambda + 1.0 / 3.0) < 1e-3 || std::abs(r) < 1e-3) continue;
    const auto mate = mink::bertrand_mate(alpha, lambda, period_grid(11));
    EXPECT_EQ(mate.character == mink::Causal::Spacelike, oracle::spacelike_mate(1.0, 2.0, lambda)) << lambda;
    for (double s : period_grid(11)) {
      const LorentzVec expected(2.0 / oracle::kR3 * s, r * std::cos(oracle::kR3 * s), r * std::sin(oracle::kR3 * s));
      EXPECT_LT(oracle::max_abs(mate.beta(s) - expected), 1e-12);
    }
  }
}

TEST(Mate, DegenerateMembers) {
  const auto alpha = mink::reference_helix();
  EXPECT_MINK_ERROR(mink::bertrand_mate(alpha, 1.0 / 3.0), ErrorCode::DegenerateMate);
  EXPECT_MINK_ERROR(mink::bertrand_mate(alpha, 1.0), ErrorCode::DegenerateMate);
  EXPECT_MINK_ERROR(mink::bertrand_mate(alpha, -1.0 / 3.0), ErrorCode::DegenerateMate);
}

TEST(Mate, ZeroLambdaIsTheCurveItself) {
  const auto mate = mink::bertrand_mate(mink::reference_helix(), 0.0);
  EXPECT_EQ(mate.character, mink::Causal::Timelike);
  EXPECT_LT(oracle::max_abs(mate.beta(1.2) - oracle::alpha(1.2)), 1e-15);
  EXPECT_MINK_ERROR(mink::make_couple(mink::reference_helix(), 0.0, period_grid()), ErrorCode::NotSpacelikeMate);
}

TEST(Mate, RequireSpacelike) {
  mink::MateOptions opts;
  opts.require_spacelike = true;
  EXPECT_MINK_ERROR(mink::bertrand_mate(mink::reference_helix(), 0.5, opts), ErrorCode::NotSpacelikeMate);
}

TEST(CoupleAngle, ReferenceCouple) {
  const auto couple = reference_couple();
  EXPECT_NEAR(couple.sinh_theta(), oracle::kSinhTheta, 1e-12);
  EXPECT_NEAR(couple.cosh_theta(), oracle::kCoshTheta, 1e-12);
  EXPECT_LT(couple.angle.max_deviation, 1e-12);
  EXPECT_LT(couple.angle.max_rejection, 1e-12);
  EXPECT_EQ(couple.angle.sigma_N, -1);
  EXPECT_EQ(couple.angle.sigma_B, -1);
}

TEST(CoupleAngle, WCurveCouplesProperty) {
  for (int trial = 0; trial < 40; ++trial) {
    const double kappa = oracle::uniform(0.3, 3.0);
    const double tau = oracle::uniform(0.3, 3.0) * (trial % 3 == 0 ? -1.0 : 1.0);
    if (std::abs(std::abs(tau) - kappa) < 0.1) continue;
    const auto kind = std::abs(tau) > kappa ? WCurveKind::TimelikeCircularHelix
                                             : WCurveKind::TimelikeHyperbolicHelix;
    const auto alpha = mink::generate_w_curve(kind, kappa, tau);
    const double tau_signed = mink::frenet_apparatus(alpha, 0.0).tau;
    const double lambda = spacelike_lambda(kappa, tau);
    ASSERT_TRUE(oracle::spacelike_mate(kappa, tau_signed, lambda));
    const auto grid = mink::linspace(alpha.nominal(), 20);
    const auto couple = mink::make_couple(alpha, lambda, grid);
    const oracle::WCouple w{kappa, tau_signed, lambda};
    EXPECT_NEAR(couple.sinh_theta(), w.sinh_theta(), 1e-9) << kappa << " " << tau << " " << lambda;
    EXPECT_NEAR(couple.cosh_theta() * couple.cosh_theta() - couple.sinh_theta() * couple.sinh_theta(), 1.0, 1e-9);
    EXPECT_LT(couple.angle.max_deviation, 1e-7);
  }
}

TEST(CoupleAngle, RejectsNonBertrandPair) {
  const auto other = mink::make_analytic(
      mink::CurveSource::Custom, "spacelike helix",
      [](const auto& s) {
        using std::cos;
        using std::sin;
        return mink::Vec3<std::decay_t<decltype(s)>>(0.5 * s, cos(2.0 * s), sin(2.0 * s));
      },
      mink::reference_period());
  EXPECT_MINK_ERROR(mink::couple_angle(mink::reference_helix(), other, period_grid()), ErrorCode::NotBertrand);
  EXPECT_MINK_ERROR(mink::couple_angle(mink::reference_helix(), mink::reference_helix(), period_grid()),
                    ErrorCode::NotSpacelikeMate);
}

TEST(CoupleAngle, TimelikeMateRejected) {
  EXPECT_MINK_ERROR(mink::make_couple(mink::reference_helix(), 0.5, period_grid()), ErrorCode::NotSpacelikeMate);
}

TEST(FrameRelation, ReferenceMatrix) {
  const auto couple = reference_couple();
  Eigen::Matrix3d expected;
  expected << 7.0, 0.0, -8.0, 0.0, -oracle::kR15, 0.0, 8.0, 0.0, -7.0;
  expected /= oracle::kR15;
  for (double s : {0.0, 1.3, 3.0}) {
    const auto m = mink::frame_relation_matrix(couple, s);
    EXPECT_LT((m.M - expected).cwiseAbs().maxCoeff(), 1e-12) << s;
    EXPECT_LT(mink::pattern_error(m.M, -1), 1e-12);
  }
  const auto check = mink::check_frame_relation(couple);
  EXPECT_LT((check.mean - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(check.max_entry_deviation, 1e-12);
  EXPECT_LT(check.hyperbolic_identity_error, 1e-12);
  EXPECT_LT(check.binormal_identity_error, 1e-12);
  EXPECT_LT(check.max_map_residual, 1e-12);
}

TEST(FrameRelation, MapsFramesAtEverySample) {
  const auto couple = reference_couple();
  const auto check = mink::check_frame_relation(couple);
  for (double s : period_grid(9)) {
    const auto f = mink::frenet_apparatus(couple.alpha, s);
    const Eigen::Matrix3d rows = mink::apply_relation(check.mean, f);
    EXPECT_LT(oracle::max_abs(LorentzVec(rows.row(0).transpose()) - oracle::beta_T(s)), 1e-12);
    EXPECT_LT(oracle::max_abs(LorentzVec(rows.row(1).transpose()) - oracle::beta_N(s)), 1e-12);
    EXPECT_LT(oracle::max_abs(LorentzVec(rows.row(2).transpose()) - oracle::beta_B(s)), 1e-12);
  }
}

TEST(Rejection, FromNormal) {
  const auto f = mink::frenet_apparatus(mink::reference_helix(), 0.0);
  EXPECT_NEAR(mink::rejection_from_normal(f.N * 3.0, f), 0.0, 1e-15);
  EXPECT_NEAR(mink::rejection_from_normal(f.N + 0.5 * f.T, f), 0.5, 1e-14);
}
