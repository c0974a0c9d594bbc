#include <gtest/gtest.h>

#include <cmath>

#include "mink/curve.hpp"
#include "mink/frenet.hpp"
#include "support.hpp"

using mink::ErrorCode;
using mink::LorentzVec;

namespace {

// alpha + (0, 0.1 s^3, 0): timelike on [0, 1] but not a helix.
template <typename S>
mink::Vec3<S> bent(const S& s) {
  using std::cos;
  using std::sin;
  const double r3 = std::sqrt(3.0);
  return {2.0 / r3 * s, cos(r3 * s) / 3.0 + 0.1 * s * s * s, sin(r3 * s) / 3.0};
}

LorentzVec bent_d1(double s) { return oracle::alpha_d1(s) + LorentzVec(0, 0.3 * s * s, 0); }
LorentzVec bent_d2(double s) { return oracle::alpha_d2(s) + LorentzVec(0, 0.6 * s, 0); }
LorentzVec bent_d3(double s) { return oracle::alpha_d3(s) + LorentzVec(0, 0.6, 0); }

std::vector<mink::SampleRow> bent_rows(int n) {
  std::vector<mink::SampleRow> rows;
  for (double s : mink::linspace({0.0, 1.0}, n)) rows.push_back({s, bent(s)});
  return rows;
}

}  // namespace

TEST(Linspace, IncludesEndpoints) {
  const auto g = mink::linspace({0.0, 2.0}, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 0.0);
  EXPECT_DOUBLE_EQ(g[1], 0.5);
  EXPECT_DOUBLE_EQ(g.back(), 2.0);
}

TEST(ReferenceHelix, MatchesClosedForm) {
  const auto a = mink::reference_helix();
  for (double s : mink::linspace(mink::reference_period(), 17)) {
    EXPECT_LT(oracle::max_abs(a(s) - oracle::alpha(s)), 1e-15);
    const auto j = a.taylor(s, 3);
    EXPECT_LT(oracle::max_abs(mink::derivative_of(j, 1) - oracle::alpha_d1(s)), 1e-14);
    EXPECT_LT(oracle::max_abs(mink::derivative_of(j, 2) - oracle::alpha_d2(s)), 1e-14);
    EXPECT_LT(oracle::max_abs(mink::derivative_of(j, 3) - oracle::alpha_d3(s)), 1e-13);
  }
  EXPECT_NEAR(mink::reference_period().hi, 2.0 * oracle::kPi / oracle::kR3, 1e-15);
}

TEST(FiniteDifference, ReferenceHelixDerivatives) {
  const auto a = mink::reference_helix();
  for (double s : {0.0, 0.4, 1.9, 3.5}) {
    const auto d = mink::derivatives(a, s, 3);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_LT(oracle::max_abs(d[0] - oracle::alpha_d1(s)), 1e-10) << s;
    EXPECT_LT(oracle::max_abs(d[1] - oracle::alpha_d2(s)), 1e-8) << s;
    EXPECT_LT(oracle::max_abs(d[2] - oracle::alpha_d3(s)), 1e-6) << s;
  }
}

TEST(FiniteDifference, PolynomialIsExactToRoundoff) {
  auto cubic = [](double s) { return LorentzVec(s * s * s, 2.0 * s, 1.0); };
  const auto d = mink::fd_derivatives(cubic, 0.5, 3);
  EXPECT_NEAR(d[0](0), 0.75, 1e-9);
  EXPECT_NEAR(d[1](0), 3.0, 1e-7);
  EXPECT_NEAR(d[2](0), 6.0, 1e-5);
  EXPECT_NEAR(d[0](1), 2.0, 1e-10);
}

TEST(FiniteDifference, RespectsTheDomain) {
  const auto table = mink::sampled_table(bent_rows(21));
  EXPECT_MINK_ERROR(mink::derivatives(table, 0.0, 2), ErrorCode::DomainExceeded);
  EXPECT_MINK_ERROR(table(1.5), ErrorCode::DomainExceeded);
}

TEST(SampledTable, RejectsBadInput) {
  auto rows = bent_rows(6);
  EXPECT_MINK_ERROR(mink::sampled_table(rows), ErrorCode::InsufficientSamples);
  rows = bent_rows(10);
  std::swap(rows[3], rows[4]);
  EXPECT_MINK_ERROR(mink::sampled_table(rows), ErrorCode::ValidationError);
  rows = bent_rows(10);
  rows[2].point(1) = NAN;
  EXPECT_MINK_ERROR(mink::sampled_table(rows), ErrorCode::NonFinite);
}

TEST(SampledTable, ReproducesRowsExactly) {
  const auto rows = bent_rows(41);
  const auto table = mink::sampled_table(rows);
  for (const auto& r : rows) EXPECT_LT(oracle::max_abs(table(r.s) - r.point), 1e-15);
}

TEST(SampledTable, DerivativesOfPerturbedHelix) {
  const auto table = mink::sampled_table(bent_rows(201));
  for (double s : {0.05, 0.2, 0.5, 0.77, 0.95}) {
    const auto j = table.taylor(s, 3);
    EXPECT_LT(oracle::max_abs(mink::derivative_of(j, 1) - bent_d1(s)), 1e-9) << s;
    EXPECT_LT(oracle::max_abs(mink::derivative_of(j, 2) - bent_d2(s)), 1e-6) << s;
    EXPECT_LT(oracle::max_abs(mink::derivative_of(j, 3) - bent_d3(s)), 1e-3) << s;
  }
}

TEST(SampledTable, CurvatureAgreesWithAnalyticCurve) {
  const auto table = mink::sampled_table(bent_rows(201));
  const auto exact = mink::make_analytic(mink::CurveSource::Custom, "bent",
                                         [](const auto& s) { return bent(s); }, {0.0, 1.0});
  for (double s : {0.1, 0.5, 0.9}) {
    const auto ft = mink::frenet_apparatus(table, s);
    const auto fe = mink::frenet_apparatus(exact, s);
    EXPECT_NEAR(ft.kappa, fe.kappa, 1e-6) << s;
    EXPECT_NEAR(ft.tau, fe.tau, 1e-3) << s;
  }
}

TEST(Curve, NonFiniteValuesAreRejected) {
  const auto c = mink::make_analytic(mink::CurveSource::Custom, "log",
                                     [](const auto& s) {
                                       using std::sqrt;
                                       return mink::Vec3<std::decay_t<decltype(s)>>(sqrt(s), s, s);
                                     },
                                     {0.0, 1.0});
  EXPECT_MINK_ERROR(c(-1.0), ErrorCode::NonFinite);
}
