#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "adss/geometry.hpp"
#include "adss/sampling.hpp"

using namespace adss;

namespace {

constexpr double kPi = std::numbers::pi;

// Induced metric from the flat embeddings R^{2,2} and R^4, central differences in (tau, sigma).
InducedMetric embedding_metric(const SolutionParams& p, double tau, double sigma) {
  const double h = 1e-5;
  auto ads = [&](double u, double v) { return evaluate(p, tau + u, sigma + v).g.embedding(); };
  auto sph = [&](double u, double v) { return evaluate(p, tau + u, sigma + v).h.embedding(); };
  const Eigen::Vector4d ya = (ads(h, 0) - ads(-h, 0)) / (2 * h), yb = (ads(0, h) - ads(0, -h)) / (2 * h);
  const Eigen::Vector4d xa = (sph(h, 0) - sph(-h, 0)) / (2 * h), xb = (sph(0, h) - sph(0, -h)) / (2 * h);
  const Eigen::Vector4d eta(-1, -1, 1, 1);
  InducedMetric m;
  m.ads << (ya.cwiseProduct(eta)).dot(ya), (ya.cwiseProduct(eta)).dot(yb), (yb.cwiseProduct(eta)).dot(ya),
      (yb.cwiseProduct(eta)).dot(yb);
  m.sphere << xa.dot(xa), xa.dot(xb), xb.dot(xa), xb.dot(xb);
  return m;
}

Isometry random_isometry(PortableRng& rng) {
  Isometry iso;
  iso.g_left = exp_algebra(AdsAlgebraElement(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
  iso.g_right = exp_algebra(AdsAlgebraElement(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
  iso.h_left = exp_algebra(SphereAlgebraElement(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)));
  iso.h_right = exp_algebra(SphereAlgebraElement(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)));
  return iso;
}

double gap(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Metric, BridgePointValues) {
  const InvariantBlock inv = bridge(5.0 / 3.0, 1.25, 1);
  const InducedMetric m = induced_metric_analytic(inv);
  // -f_tautau = lambda^2 + rho^2 + 2 lambda rho cosh 2theta = 9/4 + 1/36 - (1/2)(73/48)
  EXPECT_NEAR(m.ads(0, 0), -(2.25 + 1.0 / 36.0 - 73.0 / 96.0), 1e-13);
  EXPECT_NEAR(m.ads(0, 1), 7.0 / 72.0 - 17.0 / 32.0, 1e-13);
  EXPECT_NEAR(m.sphere(0, 1), 17.0 / 32.0 - 7.0 / 72.0, 1e-13);
  // conformal gauge on the sum
  const Eigen::Matrix2d total = m.ads + m.sphere;
  EXPECT_NEAR(total(0, 0) + total(1, 1), 0.0, 1e-13);
  EXPECT_NEAR(total(0, 1), 0.0, 1e-13);
}

TEST(Metric, ThreeRoutesAgree) {
  PortableRng rng(41);
  for (int k = 0; k < 60; ++k) {
    const SimpleFamilyPoint pt = random_family_point(rng);
    const SolutionParams p = transform(simple_family_solution(pt), random_isometry(rng));
    const double tau = rng.uniform(-1, 1), sigma = rng.uniform(0, 2 * kPi);
    const InducedMetric numeric = induced_metric_numeric(p, tau, sigma);
    const InducedMetric closed = induced_metric_closed_form(p);
    const InducedMetric analytic = induced_metric_analytic(bridge(pt.f, pt.b, pt.n));
    const double scale = std::max(1.0, closed.ads.cwiseAbs().maxCoeff());
    EXPECT_LT(gap(numeric.ads, closed.ads), 1e-7 * scale);
    EXPECT_LT(gap(numeric.sphere, closed.sphere), 1e-7 * scale);
    EXPECT_LT(gap(analytic.ads, closed.ads), 1e-9 * scale);
    EXPECT_LT(gap(analytic.sphere, closed.sphere), 1e-9 * scale);
  }
}

TEST(Metric, MatchesFlatEmbedding) {
  PortableRng rng(42);
  for (int k = 0; k < 20; ++k) {
    const SimpleFamilyPoint pt = random_family_point(rng);
    const SolutionParams p = transform(simple_family_solution(pt), random_isometry(rng));
    const double tau = rng.uniform(-0.5, 0.5), sigma = rng.uniform(0, 2 * kPi);
    const InducedMetric a = embedding_metric(p, tau, sigma);
    const InducedMetric b = induced_metric_closed_form(p);
    const double scale = std::max(1.0, b.ads.cwiseAbs().maxCoeff());
    EXPECT_LT(gap(a.ads, b.ads), 1e-5 * scale);
    EXPECT_LT(gap(a.sphere, b.sphere), 1e-5 * scale);
  }
}

TEST(Metric, StepOutOfRangeThrows) {
  const SolutionParams p = simple_family_solution({1.5, 1.2, 1});
  EXPECT_THROW(induced_metric_numeric(p, 0, 0, {1e-1, DifferenceScheme::central}), ValidationError);
  EXPECT_THROW(induced_metric_numeric(p, 0, 0, {1e-8, DifferenceScheme::central}), ValidationError);
}

TEST(Gauge, ConformalAndMasses) {
  PortableRng rng(43);
  for (int k = 0; k < 40; ++k) {
    const SimpleFamilyPoint pt = random_family_point(rng);
    const SolutionParams p = transform(simple_family_solution(pt), random_isometry(rng));
    const InvariantBlock inv = bridge(pt.f, pt.b, pt.n);
    const GaugeResidual g = gauge_residual(p, rng.uniform(-1, 1), rng.uniform(0, 2 * kPi));
    const double scale = std::max(1.0, inv.mu2);
    EXPECT_LT(std::abs(g.chiral), 1e-7 * scale);
    EXPECT_LT(std::abs(g.antichiral), 1e-7 * scale);
    EXPECT_NEAR(g.mu2_ads, inv.mu2, 1e-7 * scale);
    EXPECT_NEAR(g.mu2_sphere, inv.mu2, 1e-7 * scale);
    EXPECT_NEAR(g.mubar2_ads, inv.mubar2, 1e-7 * scale);
    EXPECT_NEAR(g.mubar2_sphere, inv.mubar2, 1e-7 * scale);
  }
}

TEST(EquationsOfMotion, HoldOnSolutions) {
  PortableRng rng(44);
  for (int k = 0; k < 40; ++k) {
    const SimpleFamilyPoint pt = random_family_point(rng);
    const SolutionParams p = transform(simple_family_solution(pt), random_isometry(rng));
    const double tau = rng.uniform(-1, 1), sigma = rng.uniform(0, 2 * kPi);
    EXPECT_LT(eom_residual(p, tau, sigma).max(), 1e-6 * pt.n * pt.n);
    EXPECT_LT(chirality_residual(p, tau, sigma).max(), 1e-6 * pt.n * pt.n * pt.n);
    EXPECT_LT(periodicity_defect(p, tau, sigma), 1e-9);
  }
}

TEST(EquationsOfMotion, NegativeControl) {
  SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  p.ads.lambda += 1e-3;
  EXPECT_GT(eom_residual(p, 0.3, 1.1).ads, 1e-5);
  EXPECT_GT(std::abs(gauge_residual(p, 0.3, 1.1).chiral), 1e-5);
}

TEST(MeanCurvature, BridgePointExact) {
  // sinh 2theta = 55/48 and sin 2theta_s = sqrt(1175)/36
  const MeanCurvatures h = mean_curvatures(bridge(5.0 / 3.0, 1.25, 1));
  EXPECT_NEAR(h.ads, -73.0 / 55.0, 1e-13);
  EXPECT_NEAR(h.sphere, -11.0 / std::sqrt(1175.0), 1e-13);
}

TEST(MeanCurvature, DegenerateThrows) {
  EXPECT_THROW(mean_curvatures(1.0, 0.2), DegenerateConfiguration);
  EXPECT_THROW(mean_curvatures(1.5, 1.0), DegenerateConfiguration);
  EXPECT_THROW(mean_curvatures(1.5, -1.0), DegenerateConfiguration);
}

TEST(Patch, AnchoredNeighboursMatchDirectEvaluation) {
  const SolutionParams p = simple_family_solution({1.5, 1.2, 3});
  const WorldsheetPatch patch = anchored_patch(p, 7.0, 2.0);
  const WorldsheetPoint w = evaluate(p, 7.0 + 1e-3, 2.0 - 2e-3);
  EXPECT_LT((patch.ads(1e-3, -2e-3) - w.g.matrix()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT((patch.sphere(1e-3, -2e-3) - w.h.matrix()).cwiseAbs().maxCoeff(), 1e-9);
}
