#include "adss/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace adss {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCollapsedRadius = 1e-9;

// exp(theta u) = cos(theta) I + sin(theta) u for u^2 = -I (unit l, r in both sectors)
template <Sector S>
GroupElement<S> unit_exp(const typename S::Matrix& u, double theta) {
  using Matrix = typename S::Matrix;
  Matrix m = std::cos(theta) * Matrix::Identity() + std::sin(theta) * u;
  return GroupElement<S>::unchecked(m);
}

double relative_relation_defect(double lambda, double rho, int m, int n) {
  return std::abs(4.0 * lambda * rho - static_cast<double>(m) * n);
}

template <Sector S>
void validate_sector(const SectorParams<S>& s, const char* label) {
  if (!std::isfinite(s.lambda) || !std::isfinite(s.rho)) {
    throw ValidationError(std::string(label) + ": non-finite frequency");
  }
  if ((s.m - s.n) % 2 != 0) throw ValidationError(std::string(label) + ": windings m, n must have the same parity");
  const double defect = relative_relation_defect(s.lambda, s.rho, s.m, s.n);
  const double scale = std::max({1.0, std::abs(static_cast<double>(s.m) * s.n), std::abs(4.0 * s.lambda * s.rho)});
  if (defect > 1e-12 * scale) {
    throw ValidationError(std::string(label) + ": relation 4 lambda rho = m n violated (defect " +
                          std::to_string(defect) + ")");
  }
  if (!(s.base.membership_defect() <= kValidationTolerance)) {
    throw ValidationError(std::string(label) + ": base point is not a group element");
  }
}

double unwrap_turns(const std::vector<double>& angles) {
  double total = 0.0;
  for (std::size_t k = 1; k < angles.size(); ++k) {
    double d = angles[k] - angles[k - 1];
    d = std::remainder(d, kTwoPi);
    total += d;
  }
  return total / kTwoPi;
}

}  // namespace

RelationDefects relation_defects(const SolutionParams& p) {
  RelationDefects d;
  d.ads = relative_relation_defect(p.ads.lambda, p.ads.rho, p.ads.m, p.ads.n);
  d.sphere = relative_relation_defect(p.sphere.lambda, p.sphere.rho, p.sphere.m, p.sphere.n);
  d.ads_parity = (p.ads.m - p.ads.n) % 2 == 0;
  d.sphere_parity = (p.sphere.m - p.sphere.n) % 2 == 0;
  return d;
}

SolutionParams make_solution(const SolutionParams& raw) {
  validate_sector(raw.ads, "ads");
  validate_sector(raw.sphere, "sphere");
  SolutionParams p = raw;
  p.ads.l_hat = UnitTimelikeVector(raw.ads.l_hat.rapidity(), raw.ads.l_hat.angle());
  p.ads.r_hat = UnitTimelikeVector(raw.ads.r_hat.rapidity(), raw.ads.r_hat.angle());
  p.sphere.l_hat = UnitSphereVector(raw.sphere.l_hat.polar(), raw.sphere.l_hat.azimuth());
  p.sphere.r_hat = UnitSphereVector(raw.sphere.r_hat.polar(), raw.sphere.r_hat.azimuth());
  return p;
}

template <Sector S>
GroupElement<S> evaluate_sector(const SectorParams<S>& p, double tau, double sigma) {
  const auto left = unit_exp<S>(p.l_hat.element().matrix(), p.lambda * tau + 0.5 * p.m * sigma);
  const auto right = unit_exp<S>(p.r_hat.element().matrix(), p.rho * tau + 0.5 * p.n * sigma);
  return left * p.base * right;
}

template GroupElement<AdsSector> evaluate_sector(const SectorParams<AdsSector>&, double, double);
template GroupElement<SphereSector> evaluate_sector(const SectorParams<SphereSector>&, double, double);

WorldsheetPoint evaluate(const SolutionParams& p, double tau, double sigma) {
  return {evaluate_sector(p.ads, tau, sigma), evaluate_sector(p.sphere, tau, sigma)};
}

IsometryInvariants isometry_invariants(const SolutionParams& p) {
  IsometryInvariants out;
  out.cosh2theta = -inner(p.ads.l_hat.element(), adjoint(p.ads.base, p.ads.r_hat.element()));
  out.cos2theta_s = inner(p.sphere.l_hat.element(), adjoint(p.sphere.base, p.sphere.r_hat.element()));
  return out;
}

SolutionParams transform(const SolutionParams& p, const Isometry& iso) {
  SolutionParams q = p;
  q.ads.l_hat = UnitTimelikeVector::from_element(adjoint(iso.g_left, p.ads.l_hat.element()));
  q.ads.r_hat = UnitTimelikeVector::from_element(adjoint(iso.g_right.inverse(), p.ads.r_hat.element()));
  q.ads.base = iso.g_left * p.ads.base * iso.g_right;
  q.sphere.l_hat = UnitSphereVector::from_element(adjoint(iso.h_left, p.sphere.l_hat.element()));
  q.sphere.r_hat = UnitSphereVector::from_element(adjoint(iso.h_right.inverse(), p.sphere.r_hat.element()));
  q.sphere.base = iso.h_left * p.sphere.base * iso.h_right;
  return q;
}

WorldsheetPhases CanonicalAngles::at(double tau, double sigma) const {
  WorldsheetPhases w;
  w.theta_l = lambda * tau + 0.5 * m * sigma;
  w.theta_r = rho * tau + 0.5 * n * sigma;
  w.theta_l_s = lambda_s * tau + 0.5 * m_s * sigma;
  w.theta_r_s = rho_s * tau + 0.5 * n_s * sigma;
  w.eta = w.theta_l + w.theta_r;
  w.xi = w.theta_l - w.theta_r;
  w.eta_s = w.theta_l_s - w.theta_r_s;
  w.xi_s = w.theta_l_s + w.theta_r_s;
  return w;
}

Eigen::Matrix2d canonical_ads_matrix(double theta, double eta, double xi) {
  const double ch = std::cosh(theta), sh = std::sinh(theta);
  const double y0p = ch * std::cos(eta), y0 = ch * std::sin(eta);
  const double y1 = sh * std::cos(xi), y2 = sh * std::sin(xi);
  Eigen::Matrix2d m;
  m << y0p + y2, y0 + y1, y1 - y0, y0p - y2;
  return m;
}

Eigen::Matrix2cd canonical_sphere_matrix(double theta_s, double eta_s, double xi_s) {
  const double sn = std::sin(theta_s), cs = std::cos(theta_s);
  const double x1 = sn * std::sin(eta_s), x2 = sn * std::cos(eta_s);
  const double x3 = cs * std::sin(xi_s), x4 = cs * std::cos(xi_s);
  using cd = std::complex<double>;
  Eigen::Matrix2cd m;
  m << cd(x4, x3), cd(x2, x1), cd(-x2, x1), cd(x4, -x3);
  return m;
}

CanonicalForm canonical_form(const SolutionParams& p) {
  CanonicalForm out;
  const AdsAlgebraElement t0 = AdsAlgebraElement::basis(0);
  const SphereAlgebraElement s3 = SphereAlgebraElement::basis(2);

  // AdS: rotate l, r onto t0, then split the remaining base point as e^{a t0} e^{theta t1} e^{b t0}
  const AdsGroupElement kl = aligning_element(p.ads.l_hat.element(), t0);
  const AdsGroupElement kr = aligning_element(p.ads.r_hat.element(), t0);
  const Eigen::Vector4d y = (kl * p.ads.base * kr.inverse()).embedding();
  const double sh = std::hypot(y[2], y[3]);
  const double theta = std::asinh(sh);
  const double eta0 = std::atan2(y[1], y[0]);
  const double xi0 = sh > 0.0 ? std::atan2(y[3], y[2]) : 0.0;
  const double al = 0.5 * (eta0 + xi0), ar = 0.5 * (eta0 - xi0);
  out.isometry.g_left = exp_algebra(t0, -al) * kl;
  out.isometry.g_right = kr.inverse() * exp_algebra(t0, -ar);

  const SphereGroupElement hl = aligning_element(p.sphere.l_hat.element(), s3);
  const SphereGroupElement hr = aligning_element(p.sphere.r_hat.element(), s3);
  const Eigen::Vector4d x = (hl * p.sphere.base * hr.inverse()).embedding();
  const double sn = std::hypot(x[0], x[1]), cs = std::hypot(x[2], x[3]);
  const double theta_s = std::atan2(sn, cs);
  const double xi0s = cs > 0.0 ? std::atan2(x[2], x[3]) : 0.0;
  const double eta0s = sn > 0.0 ? std::atan2(x[0], x[1]) : 0.0;
  const double bl = 0.5 * (xi0s + eta0s), br = 0.5 * (xi0s - eta0s);
  out.isometry.h_left = exp_algebra(s3, -bl) * hl;
  out.isometry.h_right = hr.inverse() * exp_algebra(s3, -br);

  out.solution = p;
  out.solution.ads.l_hat = UnitTimelikeVector();
  out.solution.ads.r_hat = UnitTimelikeVector();
  out.solution.ads.base = exp_algebra(AdsAlgebraElement::basis(1), theta);
  out.solution.sphere.l_hat = UnitSphereVector();
  out.solution.sphere.r_hat = UnitSphereVector();
  out.solution.sphere.base = exp_algebra(SphereAlgebraElement::basis(1), theta_s);

  CanonicalAngles& a = out.angles;
  a.theta = theta;
  a.theta_s = theta_s;
  a.lambda = p.ads.lambda;
  a.rho = p.ads.rho;
  a.m = p.ads.m;
  a.n = p.ads.n;
  a.lambda_s = p.sphere.lambda;
  a.rho_s = p.sphere.rho;
  a.m_s = p.sphere.m;
  a.n_s = p.sphere.n;
  return out;
}

double SimpleFamilyPoint::e() const { return std::sqrt(std::max(0.0, f * f - 1.0)); }
double SimpleFamilyPoint::a() const { return std::sqrt(std::max(0.0, b * b - 1.0)); }

SolutionParams simple_family_solution(const SimpleFamilyPoint& pt) {
  const InvariantBlock inv = bridge(pt.f, pt.b, pt.n);
  // cosh 2theta - 1 = b (f - b) and 1 + cos 2theta_s = f (f - b), 1 - cos 2theta_s = 2 + b f - f^2
  const double d = std::max(0.0, pt.f - pt.b);
  const double sinh2t = std::sqrt(pt.b * d * (inv.cosh2theta + 1.0));
  const double sin2ts = std::sqrt(std::max(0.0, pt.f * d) * std::max(0.0, 2.0 + pt.b * pt.f - pt.f * pt.f));
  const double theta = 0.5 * std::asinh(sinh2t);
  const double theta_s = 0.5 * std::atan2(sin2ts, inv.cos2theta_s);

  SolutionParams p;
  p.ads.lambda = inv.lambda;
  p.ads.rho = inv.rho;
  p.ads.m = -pt.n;
  p.ads.n = pt.n;
  p.ads.base = exp_algebra(AdsAlgebraElement::basis(1), theta);
  p.sphere.lambda = inv.lambda_s;
  p.sphere.rho = inv.rho_s;
  p.sphere.m = pt.n;
  p.sphere.n = pt.n;
  p.sphere.base = exp_algebra(SphereAlgebraElement::basis(1), theta_s);
  return p;
}

std::vector<SurfaceSample> embedding_surface(const SolutionParams& p, std::span<const double> taus,
                                             std::span<const double> sigmas) {
  std::vector<SurfaceSample> out;
  out.reserve(taus.size() * sigmas.size());
  for (double tau : taus) {
    for (double sigma : sigmas) {
      const WorldsheetPoint w = evaluate(p, tau, sigma);
      out.push_back({tau, sigma, w.g.embedding(), w.h.embedding()});
    }
  }
  return out;
}

WindingNumbers winding_numbers(const SolutionParams& p) {
  const CanonicalForm cf = canonical_form(p);
  if (std::sinh(cf.angles.theta) < kCollapsedRadius) {
    throw DegenerateConfiguration("winding undefined: (Y1, Y2) projection collapses (theta = 0)");
  }
  if (std::cos(cf.angles.theta_s) < kCollapsedRadius) {
    throw DegenerateConfiguration("winding undefined: (X3, X4) projection collapses (theta_s = pi/2)");
  }
  const int fastest = std::abs(p.ads.m) + std::abs(p.ads.n) + std::abs(p.sphere.m) + std::abs(p.sphere.n);
  const int steps = std::max(64, 8 * fastest);
  std::vector<double> ads_angles, sphere_angles;
  ads_angles.reserve(static_cast<std::size_t>(steps) + 1);
  sphere_angles.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double sigma = kTwoPi * k / steps;
    const WorldsheetPoint w = evaluate(cf.solution, 0.0, sigma);
    const Eigen::Vector4d y = w.g.embedding();
    const Eigen::Vector4d x = w.h.embedding();
    ads_angles.push_back(std::atan2(y[3], y[2]));
    sphere_angles.push_back(std::atan2(x[3], x[2]));
  }
  WindingNumbers out;
  out.ads = std::abs(static_cast<int>(std::lround(unwrap_turns(ads_angles))));
  out.sphere = std::abs(static_cast<int>(std::lround(unwrap_turns(sphere_angles))));
  return out;
}

}  // namespace adss
