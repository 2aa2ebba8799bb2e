#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "adss/sampling.hpp"
#include "adss/solutions.hpp"
#include "oracles.hpp"

using namespace adss;

namespace {

constexpr double kPi = std::numbers::pi;

Isometry random_isometry(PortableRng& rng) {
  Isometry iso;
  iso.g_left = exp_algebra(AdsAlgebraElement(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
  iso.g_right = exp_algebra(AdsAlgebraElement(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
  iso.h_left = exp_algebra(SphereAlgebraElement(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)));
  iso.h_right = exp_algebra(SphereAlgebraElement(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)));
  return iso;
}

SolutionParams generic_solution(PortableRng& rng) {
  return transform(simple_family_solution(random_family_point(rng)), random_isometry(rng));
}

template <class M>
double dist(const M& a, const M& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// exp((lambda tau + m sigma/2) l) g0 exp((rho tau + n sigma/2) r) by the Taylor oracle.
template <Sector S>
typename S::Matrix oracle_sector(const SectorParams<S>& p, double tau, double sigma) {
  const auto l = p.l_hat.element().matrix();
  const auto r = p.r_hat.element().matrix();
  using M = typename S::Matrix;
  const M left = oracle::expm<M>((p.lambda * tau + 0.5 * p.m * sigma) * l);
  const M right = oracle::expm<M>((p.rho * tau + 0.5 * p.n * sigma) * r);
  return left * p.base.matrix() * right;
}

}  // namespace

TEST(MakeSolution, AcceptsSimpleFamily) {
  const SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  EXPECT_NO_THROW(make_solution(p));
  const RelationDefects d = relation_defects(p);
  EXPECT_LT(d.ads, 1e-14);
  EXPECT_LT(d.sphere, 1e-14);
  EXPECT_TRUE(d.ads_parity);
  EXPECT_TRUE(d.sphere_parity);
}

TEST(MakeSolution, RejectsBrokenRelation) {
  SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  p.ads.lambda *= 1.001;
  EXPECT_GT(relation_defects(p).ads, 1e-4);
  EXPECT_THROW(make_solution(p), ValidationError);
}

TEST(MakeSolution, RejectsParityMismatch) {
  SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  p.sphere.m = 2;
  p.sphere.n = 1;
  p.sphere.lambda = 1.0;
  p.sphere.rho = 0.5;
  EXPECT_FALSE(relation_defects(p).sphere_parity);
  EXPECT_THROW(make_solution(p), ValidationError);
}

TEST(MakeSolution, RejectsNonFinite) {
  SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  p.ads.rho = NAN;
  EXPECT_THROW(make_solution(p), ValidationError);
}

TEST(SimpleFamily, Frequencies) {
  const SimpleFamilyPoint pt{5.0 / 3.0, 1.25, 2};
  EXPECT_NEAR(pt.e(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(pt.a(), 0.75, 1e-15);
  const SolutionParams p = simple_family_solution(pt);
  EXPECT_EQ(p.ads.m, -2);
  EXPECT_EQ(p.ads.n, 2);
  EXPECT_EQ(p.sphere.m, 2);
  EXPECT_EQ(p.sphere.n, 2);
  EXPECT_NEAR(p.ads.lambda, 3.0, 1e-14);
  EXPECT_NEAR(p.ads.rho, -1.0 / 3.0, 1e-14);
  EXPECT_NEAR(p.sphere.lambda, 2.0, 1e-14);
  EXPECT_NEAR(p.sphere.rho, 0.5, 1e-14);
  const IsometryInvariants iv = isometry_invariants(p);
  EXPECT_NEAR(iv.cosh2theta, 73.0 / 48.0, 1e-13);
  EXPECT_NEAR(iv.cos2theta_s, -11.0 / 36.0, 1e-13);
}

TEST(SimpleFamily, OutsideRegionThrows) {
  EXPECT_THROW(simple_family_solution({3.0, 1.25, 1}), RegionError);
}

TEST(Evaluate, MatchesTaylorOracle) {
  PortableRng rng(31);
  for (int k = 0; k < 50; ++k) {
    const SolutionParams p = generic_solution(rng);
    const double tau = rng.uniform(-2, 2), sigma = rng.uniform(0, 2 * kPi);
    const WorldsheetPoint w = evaluate(p, tau, sigma);
    EXPECT_LT(dist(w.g.matrix(), oracle_sector(p.ads, tau, sigma)), 1e-10);
    EXPECT_LT(dist(w.h.matrix(), oracle_sector(p.sphere, tau, sigma)), 1e-10);
    EXPECT_LT(w.g.membership_defect(), 1e-10);
    EXPECT_LT(w.h.membership_defect(), 1e-10);
  }
}

TEST(Evaluate, ClosedStringPeriodicity) {
  PortableRng rng(32);
  for (int k = 0; k < 30; ++k) {
    const SolutionParams p = generic_solution(rng);
    const double tau = rng.uniform(-1, 1), sigma = rng.uniform(0, 2 * kPi);
    const WorldsheetPoint a = evaluate(p, tau, sigma);
    const WorldsheetPoint b = evaluate(p, tau, sigma + 2 * kPi);
    EXPECT_LT(dist(a.g.matrix(), b.g.matrix()), 1e-9);
    EXPECT_LT(dist(a.h.matrix(), b.h.matrix()), 1e-9);
  }
}

TEST(Transform, ActsByMultiplication) {
  PortableRng rng(33);
  for (int k = 0; k < 20; ++k) {
    const SolutionParams p = generic_solution(rng);
    const Isometry iso = random_isometry(rng);
    const SolutionParams q = transform(p, iso);
    const double tau = rng.uniform(-1, 1), sigma = rng.uniform(0, 2 * kPi);
    const WorldsheetPoint a = evaluate(p, tau, sigma);
    const WorldsheetPoint b = evaluate(q, tau, sigma);
    EXPECT_LT(dist(b.g.matrix(), (iso.g_left.matrix() * a.g.matrix() * iso.g_right.matrix()).eval()), 1e-9);
    EXPECT_LT(dist(b.h.matrix(), (iso.h_left.matrix() * a.h.matrix() * iso.h_right.matrix()).eval()), 1e-9);
  }
}

TEST(Transform, PreservesInvariants) {
  PortableRng rng(34);
  for (int k = 0; k < 50; ++k) {
    const SimpleFamilyPoint pt = random_family_point(rng);
    const SolutionParams p = simple_family_solution(pt);
    const SolutionParams q = transform(p, random_isometry(rng));
    const IsometryInvariants a = isometry_invariants(p), b = isometry_invariants(q);
    EXPECT_NEAR(a.cosh2theta, b.cosh2theta, 1e-10 * a.cosh2theta);
    EXPECT_NEAR(a.cos2theta_s, b.cos2theta_s, 1e-10);
  }
}

TEST(Canonical, IsometryMapsInputToCanonicalSolution) {
  PortableRng rng(35);
  for (int k = 0; k < 30; ++k) {
    const SolutionParams p = generic_solution(rng);
    const CanonicalForm c = canonical_form(p);
    const SolutionParams q = transform(p, c.isometry);
    const double tau = rng.uniform(-1, 1), sigma = rng.uniform(0, 2 * kPi);
    EXPECT_LT(dist(evaluate(q, tau, sigma).g.matrix(), evaluate(c.solution, tau, sigma).g.matrix()), 1e-8);
    EXPECT_LT(dist(evaluate(q, tau, sigma).h.matrix(), evaluate(c.solution, tau, sigma).h.matrix()), 1e-8);
    EXPECT_GE(c.angles.theta, 0.0);
    EXPECT_GE(c.angles.theta_s, -1e-12);
    EXPECT_LE(c.angles.theta_s, kPi / 2 + 1e-12);
    const IsometryInvariants iv = isometry_invariants(p);
    EXPECT_NEAR(std::cosh(2 * c.angles.theta), iv.cosh2theta, 1e-9 * iv.cosh2theta);
    EXPECT_NEAR(std::cos(2 * c.angles.theta_s), iv.cos2theta_s, 1e-9);
  }
}

TEST(Canonical, PhaseMatricesMatchProducts) {
  PortableRng rng(36);
  const Eigen::Matrix2d t0 = oracle::t(0), t1 = oracle::t(1);
  const Eigen::Matrix2cd s2 = oracle::s(1), s3 = oracle::s(2);
  for (int k = 0; k < 30; ++k) {
    const double th = rng.uniform(0, 1.5), tl = rng.uniform(-3, 3), tr = rng.uniform(-3, 3);
    const Eigen::Matrix2d g = oracle::expm<Eigen::Matrix2d>(tl * t0) * oracle::expm<Eigen::Matrix2d>(th * t1) *
                              oracle::expm<Eigen::Matrix2d>(tr * t0);
    EXPECT_LT(dist(canonical_ads_matrix(th, tl + tr, tl - tr), g), 1e-12);
    const double ths = rng.uniform(0, kPi / 2);
    const Eigen::Matrix2cd h = oracle::expm<Eigen::Matrix2cd>(tl * s3) *
                               oracle::expm<Eigen::Matrix2cd>(ths * s2) * oracle::expm<Eigen::Matrix2cd>(tr * s3);
    EXPECT_LT(dist(canonical_sphere_matrix(ths, tl - tr, tl + tr), h), 1e-12);
  }
}

TEST(Canonical, PhasesAlongTheWorldsheet) {
  const SolutionParams p = simple_family_solution({5.0 / 3.0, 1.25, 1});
  const CanonicalForm c = canonical_form(p);
  for (double tau : {0.0, 0.4, -1.1}) {
    for (double sigma : {0.0, 1.0, 4.0}) {
      const WorldsheetPhases w = c.angles.at(tau, sigma);
      const WorldsheetPoint pt = evaluate(c.solution, tau, sigma);
      EXPECT_LT(dist(canonical_ads_matrix(c.angles.theta, w.eta, w.xi), pt.g.matrix()), 1e-10);
      EXPECT_LT(dist(canonical_sphere_matrix(c.angles.theta_s, w.eta_s, w.xi_s), pt.h.matrix()), 1e-10);
    }
  }
}

TEST(Surface, EmbeddingNormsAndOrder) {
  const SolutionParams p = simple_family_solution({1.4, 1.2, 2});
  const std::vector<double> taus{0.0, 0.5}, sigmas{0.0, 1.0, 2.0};
  const auto rows = embedding_surface(p, taus, sigmas);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[1].tau, 0.0);
  EXPECT_EQ(rows[1].sigma, 1.0);
  EXPECT_EQ(rows[3].tau, 0.5);
  for (const SurfaceSample& s : rows) {
    EXPECT_NEAR(ads_embedding_norm(s.ads), -1.0, 1e-12);
    EXPECT_NEAR(sphere_embedding_norm(s.sphere), 1.0, 1e-12);
    const WorldsheetPoint w = evaluate(p, s.tau, s.sigma);
    EXPECT_LT((w.g.embedding() - s.ads).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((w.h.embedding() - s.sphere).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Winding, SimpleFamilyWindsNTimes) {
  for (int n : {1, 2, 3}) {
    const WindingNumbers w = winding_numbers(simple_family_solution({1.5, 1.2, n}));
    EXPECT_EQ(std::abs(w.ads), n);
    EXPECT_EQ(std::abs(w.sphere), n);
  }
}

TEST(Winding, InvariantUnderIsometries) {
  PortableRng rng(37);
  const SolutionParams p = simple_family_solution({1.5, 1.2, 2});
  const WindingNumbers a = winding_numbers(p);
  for (int k = 0; k < 5; ++k) {
    const WindingNumbers b = winding_numbers(transform(p, random_isometry(rng)));
    EXPECT_EQ(a.ads, b.ads);
    EXPECT_EQ(a.sphere, b.sphere);
  }
}

TEST(Winding, CollapsedProjectionThrows) {
  EXPECT_THROW(winding_numbers(simple_family_solution({1.3, 1.3, 1})), DegenerateConfiguration);
}
