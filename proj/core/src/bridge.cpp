#include "adss/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace adss {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

double raw_cosh2theta(double f, double b) { return b * f - b * b + 1.0; }
double raw_cos2theta_s(double f, double b) { return f * f - b * f - 1.0; }

}  // namespace

std::string_view describe(BridgeConstraint c) {
  switch (c) {
    case BridgeConstraint::finite:
      return "f and b must be finite";
    case BridgeConstraint::f_at_least_one:
      return "f < 1 (e^2 = f^2 - 1 negative)";
    case BridgeConstraint::b_at_least_one:
      return "b < 1 (a^2 = b^2 - 1 negative)";
    case BridgeConstraint::f_at_least_b:
      return "cosh2theta < 1 (f < b)";
    case BridgeConstraint::f_at_most_f_max:
      return "cos2theta_s out of range (f^2 - b f - 2 > 0)";
  }
  return "unknown constraint";
}

double f_max(double b) { return 0.5 * (b + std::sqrt(b * b + 8.0)); }

Admissibility admissible(double f, double b) {
  Admissibility out;
  auto fail = [&](BridgeConstraint c) {
    out.admissible = false;
    out.violated = c;
    out.diagnostic = std::string(describe(c));
    return out;
  };
  if (!std::isfinite(f) || !std::isfinite(b)) return fail(BridgeConstraint::finite);
  const double slack = kRegionSlack * std::max({1.0, std::abs(f), std::abs(b)});
  if (f < 1.0 - slack) return fail(BridgeConstraint::f_at_least_one);
  if (b < 1.0 - slack) return fail(BridgeConstraint::b_at_least_one);
  if (f < b - slack) return fail(BridgeConstraint::f_at_least_b);
  if (f * f - b * f - 2.0 > slack * std::max(1.0, f * f)) return fail(BridgeConstraint::f_at_most_f_max);
  out.admissible = true;
  return out;
}

SideInvariants ads_side(double f, double cosh2theta, int n) {
  const double q = 0.25 * n * n;
  return {q * (f - 1.0) * (f + cosh2theta), q * (f + 1.0) * (f - cosh2theta)};
}

SideInvariants sphere_side(double b, double cos2theta_s, int n) {
  const double q = 0.25 * n * n;
  return {q * (b + 1.0) * (b + cos2theta_s), q * (b - 1.0) * (b - cos2theta_s)};
}

double cosh_alpha_from_ads(double f, double e, double cosh2theta) {
  const double d2 = (f - cosh2theta) * (f + cosh2theta);
  if (!(d2 > 0.0)) return e == 0.0 ? kNaN : kInf;
  return e / std::sqrt(d2);
}

double cos_beta_from_sphere(double a, double cos2theta_s) {
  const double d2 = a * a + (1.0 - cos2theta_s) * (1.0 + cos2theta_s);
  if (!(d2 > 0.0)) return kNaN;
  return a / std::sqrt(d2);
}

InvariantBlock bridge(double f, double b, int n, const BridgeOptions& options) {
  if (n <= 0 && !options.allow_nonpositive_winding) {
    throw ValidationError("winding n must be positive");
  }
  const Admissibility adm = admissible(f, b);
  if (!adm.admissible) throw RegionError(*adm.violated, adm.diagnostic);

  InvariantBlock inv;
  inv.n = n;
  inv.f = f;
  inv.b = b;
  inv.e = clamp_sqrt(f * f - 1.0);
  if (options.past_directed_energy) inv.e = -inv.e;
  inv.a = clamp_sqrt(b * b - 1.0);
  inv.E = n * inv.e;
  inv.F = n * f;
  inv.A = n * inv.a;
  inv.B = n * b;
  inv.lambda = 0.5 * (inv.E + inv.F);
  inv.rho = 0.5 * (inv.E - inv.F);
  inv.lambda_s = 0.5 * (inv.A + inv.B);
  inv.rho_s = 0.5 * (inv.B - inv.A);

  inv.cosh2theta = std::max(1.0, raw_cosh2theta(f, b));
  inv.cos2theta_s = std::clamp(raw_cos2theta_s(f, b), -1.0, 1.0);

  inv.ads = ads_side(f, inv.cosh2theta, n);
  inv.sphere = sphere_side(b, inv.cos2theta_s, n);
  inv.mu2 = inv.ads.mu2;
  inv.mubar2 = inv.ads.mubar2;
  inv.mu = clamp_sqrt(inv.mu2);
  inv.mubar = clamp_sqrt(inv.mubar2);
  inv.cosh_alpha = cosh_alpha_from_ads(f, inv.e, inv.cosh2theta);
  inv.cos_beta = cos_beta_from_sphere(inv.a, inv.cos2theta_s);

  const double eps = 1e-12;
  inv.degenerate.static_ads = std::abs(inv.e) <= eps;
  inv.degenerate.theta_zero = inv.cosh2theta - 1.0 <= eps;
  inv.degenerate.theta_s_boundary = 1.0 - std::abs(inv.cos2theta_s) <= eps;
  inv.degenerate.mubar_zero = b - 1.0 <= eps;
  return inv;
}

std::vector<ScanRow> scan_region(Range f_range, Range b_range, ScanGrid grid, int n) {
  if (n <= 0) throw ValidationError("winding n must be positive");
  if (grid.f_points <= 0 || grid.b_points <= 0) throw ValidationError("empty scan grid");
  for (const Range& r : {f_range, b_range}) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) throw ValidationError("non-finite scan range");
    if (r.hi < r.lo) throw ValidationError("scan range must be increasing");
  }
  auto node = [](Range r, int count, int i) {
    if (count == 1) return r.lo;
    if (i == count - 1) return r.hi;
    return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.f_points) * static_cast<std::size_t>(grid.b_points));
  for (int i = 0; i < grid.f_points; ++i) {
    const double f = node(f_range, grid.f_points, i);
    for (int j = 0; j < grid.b_points; ++j) {
      const double b = node(b_range, grid.b_points, j);
      ScanRow row;
      row.f = f;
      row.b = b;
      row.admissible = admissible(f, b).admissible;
      if (row.admissible) {
        const InvariantBlock inv = bridge(f, b, n);
        row.cosh2theta = inv.cosh2theta;
        row.cos2theta_s = inv.cos2theta_s;
        row.mu2 = inv.mu2;
        row.mubar2 = inv.mubar2;
        row.cosh_alpha = inv.cosh_alpha;
        row.cos_beta = inv.cos_beta;
      } else {
        // raw formula values, so the table shows how a constraint fails
        row.cosh2theta = raw_cosh2theta(f, b);
        row.cos2theta_s = raw_cos2theta_s(f, b);
        const SideInvariants s = ads_side(f, row.cosh2theta, n);
        row.mu2 = s.mu2;
        row.mubar2 = s.mubar2;
        row.cosh_alpha = f >= 1.0 ? cosh_alpha_from_ads(f, std::sqrt(f * f - 1.0), row.cosh2theta) : kNaN;
        row.cos_beta = b >= 1.0 ? cos_beta_from_sphere(std::sqrt(b * b - 1.0), row.cos2theta_s) : kNaN;
        if (std::abs(row.cos2theta_s) > 1.0) row.cos_beta = kNaN;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

FeasibilityResult feasibility_general(const FeasibilityInput& in, double tol) {
  if ((in.m - in.n) % 2 != 0 || (in.m_s - in.n_s) % 2 != 0) {
    throw ValidationError("winding pairs must have matching parity");
  }
  const double c = in.cosh2theta, s = in.cos2theta_s;
  const double l = in.lambda, r = in.rho, ls = in.lambda_s, rs = in.rho_s;
  const double m = in.m, n = in.n, ms = in.m_s, ns = in.n_s;

  // unknowns (mu^2, mubar^2, mu mubar cosh alpha, mu mubar cos beta)
  Eigen::Matrix<double, 6, 4> A;
  Eigen::Matrix<double, 6, 1> y;
  A << 1, 1, 2, 0,  //
      1, 1, -2, 0,  //
      1, -1, 0, 0,  //
      1, 1, 0, 2,   //
      1, 1, 0, -2,  //
      1, -1, 0, 0;
  y << l * l + r * r + 2 * l * r * c, 0.25 * (m * m + n * n + 2 * m * n * c),
      0.5 * (l * m + r * n + (l * n + r * m) * c), ls * ls + rs * rs + 2 * ls * rs * s,
      0.25 * (ms * ms + ns * ns + 2 * ms * ns * s), 0.5 * (ls * ms + rs * ns + (ls * ns + rs * ms) * s);

  const Eigen::Vector4d x = A.colPivHouseholderQr().solve(y);
  FeasibilityResult out;
  out.residual = (A * x - y).norm();
  out.mu2 = x[0];
  out.mubar2 = x[1];
  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  const double pq = std::max(0.0, x[0]) * std::max(0.0, x[1]);
  const double root = std::sqrt(pq);
  out.cosh_alpha = root > 0.0 ? x[2] / root : kNaN;
  out.cos_beta = root > 0.0 ? x[3] / root : kNaN;

  const double t = tol * scale;
  if (out.residual > t) {
    out.reason = "metric/current relations of the two sectors are inconsistent";
  } else if (x[0] < -t || x[1] < -t) {
    out.reason = "negative mu^2 or mubar^2";
  } else if (x[2] < root - t) {
    out.reason = "cosh alpha < 1";
  } else if (std::abs(x[3]) > root + t) {
    out.reason = "|cos beta| > 1";
  } else {
    out.feasible = true;
  }
  return out;
}

}  // namespace adss
