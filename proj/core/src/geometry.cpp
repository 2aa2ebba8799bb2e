#include "adss/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>

namespace adss {

namespace {

void check_step(const DiffOptions& opt) {
  if (!(opt.step >= 1e-6 && opt.step <= 1e-3)) throw ValidationError("difference step must lie in [1e-6, 1e-3]");
}

template <Sector S>
typename S::Matrix unit_exp(const typename S::Matrix& u, double theta) {
  using Matrix = typename S::Matrix;
  return std::cos(theta) * Matrix::Identity() + std::sin(theta) * u;
}

// g^-1 d_a g with plain central differences at (u, v)
template <class Fn>
auto current(const Fn& g, double u, double v, int dir, double h) {
  const double du = dir == 0 ? h : 0.0, dv = dir == 0 ? 0.0 : h;
  auto diff = ((g(u + du, v + dv) - g(u - du, v - dv)) / (2.0 * h)).eval();
  return (g(u, v).inverse() * diff).eval();
}

template <Sector S, class Fn>
Eigen::Matrix2d metric_at(const Fn& g, double u, double v, double h) {
  const auto rt = current(g, u, v, 0, h);
  const auto rs = current(g, u, v, 1, h);
  Eigen::Matrix2d f;
  f(0, 0) = trace_inner<S>(rt, rt);
  f(0, 1) = f(1, 0) = trace_inner<S>(rt, rs);
  f(1, 1) = trace_inner<S>(rs, rs);
  return f;
}

// <(g^-1 d g)^2> (sign = +1) or <(g^-1 dbar g)^2> (sign = -1) from the metric
double chiral_form(const Eigen::Matrix2d& f, double sign) {
  return 0.25 * (f(0, 0) + 2.0 * sign * f(0, 1) + f(1, 1));
}

// derivative of the chiral form along (1/2)(1, -sign), i.e. dbar Q or d Qbar
template <Sector S, class Fn>
double chirality_at(const Fn& g, double sign, double h) {
  const double a = 0.5 * h;
  const double plus = chiral_form(metric_at<S>(g, a, -a, h), sign);
  const double minus = chiral_form(metric_at<S>(g, -a, a, h), sign);
  return (plus - minus) / (2.0 * h);
}

template <Sector S, class Fn>
double chirality_residual_sector(const Fn& g, const DiffOptions& opt) {
  double worst = 0.0;
  for (double sign : {1.0, -1.0}) {
    const double r = extrapolate([&](double h) { return chirality_at<S>(g, sign, h); }, opt);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace

WorldsheetPatch anchored_patch(const SolutionParams& p, double tau, double sigma) {
  const WorldsheetPoint w = evaluate(p, tau, sigma);
  const Eigen::Matrix2d g = w.g.matrix();
  const Eigen::Matrix2d l = p.ads.l_hat.element().matrix();
  const Eigen::Matrix2d r = p.ads.r_hat.element().matrix();
  const Eigen::Matrix2cd h = w.h.matrix();
  const Eigen::Matrix2cd ls = p.sphere.l_hat.element().matrix();
  const Eigen::Matrix2cd rs = p.sphere.r_hat.element().matrix();
  const auto a = p.ads;
  const auto s = p.sphere;
  WorldsheetPatch patch;
  patch.ads = [=](double u, double v) -> Eigen::Matrix2d {
    return unit_exp<AdsSector>(l, a.lambda * u + 0.5 * a.m * v) * g * unit_exp<AdsSector>(r, a.rho * u + 0.5 * a.n * v);
  };
  patch.sphere = [=](double u, double v) -> Eigen::Matrix2cd {
    return unit_exp<SphereSector>(ls, s.lambda * u + 0.5 * s.m * v) * h *
           unit_exp<SphereSector>(rs, s.rho * u + 0.5 * s.n * v);
  };
  return patch;
}

InducedMetric induced_metric_numeric(const WorldsheetPatch& patch, const DiffOptions& opt) {
  check_step(opt);
  InducedMetric out;
  out.ads = extrapolate([&](double h) { return metric_at<AdsSector>(patch.ads, 0.0, 0.0, h); }, opt);
  out.sphere = extrapolate([&](double h) { return metric_at<SphereSector>(patch.sphere, 0.0, 0.0, h); }, opt);
  return out;
}

InducedMetric induced_metric_numeric(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt) {
  return induced_metric_numeric(anchored_patch(p, tau, sigma), opt);
}

InducedMetric induced_metric_analytic(const InvariantBlock& inv) {
  // mu mubar cosh alpha = E^2/4 and mu mubar cos beta = A^2/4 where the angles are undefined
  const double x = std::isfinite(inv.cosh_alpha) ? inv.mu * inv.mubar * inv.cosh_alpha : 0.25 * inv.E * inv.E;
  const double y = std::isfinite(inv.cos_beta) ? inv.mu * inv.mubar * inv.cos_beta : 0.25 * inv.A * inv.A;
  const double sum = inv.mu2 + inv.mubar2;
  InducedMetric out;
  out.ads(0, 0) = -2.0 * x - sum;
  out.ads(0, 1) = out.ads(1, 0) = inv.mubar2 - inv.mu2;
  out.ads(1, 1) = 2.0 * x - sum;
  out.sphere(0, 0) = 2.0 * y + sum;
  out.sphere(0, 1) = out.sphere(1, 0) = inv.mu2 - inv.mubar2;
  out.sphere(1, 1) = -2.0 * y + sum;
  return out;
}

InducedMetric induced_metric_closed_form(const SolutionParams& p) {
  const IsometryInvariants iv = isometry_invariants(p);
  auto fill = [](double kappa, double cross, double l, double r, double m, double n) {
    // kappa = <l,l> = <r,r>, cross = <Ad_{g0^-1} l, r>
    Eigen::Matrix2d f;
    f(0, 0) = kappa * (l * l + r * r) + 2.0 * l * r * cross;
    f(1, 1) = 0.25 * (kappa * (m * m + n * n) + 2.0 * m * n * cross);
    f(0, 1) = f(1, 0) = 0.5 * (kappa * (l * m + r * n) + (l * n + r * m) * cross);
    return f;
  };
  InducedMetric out;
  out.ads = fill(-1.0, -iv.cosh2theta, p.ads.lambda, p.ads.rho, p.ads.m, p.ads.n);
  out.sphere = fill(1.0, iv.cos2theta_s, p.sphere.lambda, p.sphere.rho, p.sphere.m, p.sphere.n);
  return out;
}

GaugeResidual gauge_residual(const WorldsheetPatch& patch, const DiffOptions& opt) {
  const InducedMetric f = induced_metric_numeric(patch, opt);
  GaugeResidual out;
  out.mu2_ads = -chiral_form(f.ads, 1.0);
  out.mubar2_ads = -chiral_form(f.ads, -1.0);
  out.mu2_sphere = chiral_form(f.sphere, 1.0);
  out.mubar2_sphere = chiral_form(f.sphere, -1.0);
  out.chiral = out.mu2_sphere - out.mu2_ads;
  out.antichiral = out.mubar2_sphere - out.mubar2_ads;
  return out;
}

GaugeResidual gauge_residual(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt) {
  return gauge_residual(anchored_patch(p, tau, sigma), opt);
}

SectorResidual eom_residual(const WorldsheetPatch& patch, const DiffOptions& opt) {
  check_step(opt);
  SectorResidual out;
  // extrapolate the signed matrices, not their norms
  auto ads_matrix = [&](double h) {
    const auto dt = ((current(patch.ads, h, 0.0, 0, h) - current(patch.ads, -h, 0.0, 0, h)) / (2.0 * h)).eval();
    const auto ds = ((current(patch.ads, 0.0, h, 1, h) - current(patch.ads, 0.0, -h, 1, h)) / (2.0 * h)).eval();
    return Eigen::Matrix2d(dt - ds);
  };
  auto sphere_matrix = [&](double h) {
    const auto dt =
        ((current(patch.sphere, h, 0.0, 0, h) - current(patch.sphere, -h, 0.0, 0, h)) / (2.0 * h)).eval();
    const auto ds =
        ((current(patch.sphere, 0.0, h, 1, h) - current(patch.sphere, 0.0, -h, 1, h)) / (2.0 * h)).eval();
    return Eigen::Matrix2cd(dt - ds);
  };
  out.ads = extrapolate(ads_matrix, opt).cwiseAbs().maxCoeff();
  out.sphere = extrapolate(sphere_matrix, opt).cwiseAbs().maxCoeff();
  return out;
}

SectorResidual eom_residual(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt) {
  return eom_residual(anchored_patch(p, tau, sigma), opt);
}

SectorResidual chirality_residual(const WorldsheetPatch& patch, const DiffOptions& opt) {
  check_step(opt);
  return {chirality_residual_sector<AdsSector>(patch.ads, opt),
          chirality_residual_sector<SphereSector>(patch.sphere, opt)};
}

SectorResidual chirality_residual(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt) {
  return chirality_residual(anchored_patch(p, tau, sigma), opt);
}

double periodicity_defect(const SolutionParams& p, double tau, double sigma) {
  const WorldsheetPoint a = evaluate(p, tau, sigma);
  const WorldsheetPoint b = evaluate(p, tau, sigma + 2.0 * std::numbers::pi);
  const double da = (a.g.matrix() - b.g.matrix()).cwiseAbs().maxCoeff();
  const double ds = (a.h.matrix() - b.h.matrix()).cwiseAbs().maxCoeff();
  return std::max(da, ds);
}

MeanCurvatures mean_curvatures(double cosh2theta, double cos2theta_s) {
  const double sh = std::sqrt(std::max(0.0, (cosh2theta - 1.0) * (cosh2theta + 1.0)));
  const double sn = std::sqrt(std::max(0.0, (1.0 - cos2theta_s) * (1.0 + cos2theta_s)));
  if (!(sh > 1e-12)) throw DegenerateConfiguration("mean curvature undefined at theta = 0");
  if (!(sn > 1e-12)) throw DegenerateConfiguration("mean curvature undefined at theta_s in {0, pi/2}");
  return {-cosh2theta / sh, cos2theta_s / sn};
}

MeanCurvatures mean_curvatures(const InvariantBlock& inv) { return mean_curvatures(inv.cosh2theta, inv.cos2theta_s); }

}  // namespace adss
