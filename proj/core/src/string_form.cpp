#include "adss/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "adss/bridge.hpp"

namespace adss {

namespace {

std::string sphere_label(const char* prefix, int index) { return std::string(prefix) + std::to_string(index + 1); }

// cos(t) + sin(t) u for u^2 = -1
template <Sector S>
typename S::Matrix unit_exp(const typename S::Matrix& u, double t) {
  return std::cos(t) * S::Matrix::Identity() + std::sin(t) * u;
}

template <class M>
M inverse2(const M& g) {
  M out;
  out << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return out;
}

// One sector of a solution, prepared for repeated evaluation.
template <Sector S>
struct SectorEval {
  using Matrix = typename S::Matrix;
  Matrix l, r, base;
  double lambda, rho, m, n;

  explicit SectorEval(const SectorParams<S>& p)
      : l(p.l_hat.element().matrix()),
        r(p.r_hat.element().matrix()),
        base(p.base.matrix()),
        lambda(p.lambda),
        rho(p.rho),
        m(p.m),
        n(p.n) {}

  Matrix group(double tau, double sigma) const {
    return unit_exp<S>(l, lambda * tau + 0.5 * m * sigma) * base * unit_exp<S>(r, rho * tau + 0.5 * n * sigma);
  }
  // g^-1 d_tau g = lambda Ad_{g^-1} l + rho r
  Matrix right_tau(const Matrix& g) const {
    const Matrix gi = inverse2(g);
    return lambda * gi * l * g + rho * r;
  }
};

struct SolutionEval {
  SectorEval<AdsSector> ads;
  SectorEval<SphereSector> sphere;
  explicit SolutionEval(const SolutionParams& p) : ads(p.ads), sphere(p.sphere) {}
};

// derivative stencil: sum_k weight_k f(offset_k)
struct Stencil {
  std::vector<std::pair<double, double>> taps;  // (offset, weight)
};

Stencil make_stencil(const DiffOptions& opt) {
  const double h = opt.step;
  if (opt.scheme == DifferenceScheme::central) return {{{h, 0.5 / h}, {-h, -0.5 / h}}};
  return {{{h, -1.0 / (6.0 * h)}, {-h, 1.0 / (6.0 * h)}, {0.5 * h, 4.0 / (3.0 * h)}, {-0.5 * h, -4.0 / (3.0 * h)}}};
}

int node_count(const SolutionParams& p, int requested) { return std::max(requested, minimum_quadrature_nodes(p)); }

void check_margin(const StringChartPoint& p, double reach) {
  const double margin = std::min({p.f - 1.0, p.b - 1.0, p.f - p.b, f_max(p.b) - p.f});
  if (!(margin >= 2.0 * reach))
    throw DegenerateConfiguration("chart point lies within the difference stencil of the region boundary");
}

}  // namespace

// ---------------------------------------------------------------------------

Eigen::VectorXd StringChartPoint::coordinates() const {
  Eigen::VectorXd x(dimension);
  x.segment<2>(0) = timelike_chart(l_hat);
  x.segment<2>(2) = timelike_chart(r_hat);
  x.segment<2>(4) = sphere_chart(l_hat_s, chart_l_s);
  x.segment<2>(6) = sphere_chart(r_hat_s, chart_r_s);
  x[8] = f;
  x[9] = b;
  x[10] = phi1;
  x[11] = phi2;
  return x;
}

StringChartPoint StringChartPoint::with_coordinates(const Eigen::VectorXd& x) const {
  StringChartPoint p = *this;
  p.l_hat = timelike_from_chart(x[0], x[1]);
  p.r_hat = timelike_from_chart(x[2], x[3]);
  p.l_hat_s = sphere_from_chart(x[4], x[5], chart_l_s);
  p.r_hat_s = sphere_from_chart(x[6], x[7], chart_r_s);
  p.f = x[8];
  p.b = x[9];
  p.phi1 = x[10];
  p.phi2 = x[11];
  return p;
}

std::vector<std::string> StringChartPoint::labels() const {
  return {"l1",
          "l2",
          "r1",
          "r2",
          sphere_label("ls", chart_l_s.first()),
          sphere_label("ls", chart_l_s.second()),
          sphere_label("rs", chart_r_s.first()),
          sphere_label("rs", chart_r_s.second()),
          "f",
          "b",
          "phi1",
          "phi2"};
}

StringChartPoint make_string_point(const UnitTimelikeVector& l, const UnitTimelikeVector& r,
                                   const UnitSphereVector& l_s, const UnitSphereVector& r_s, double f, double b,
                                   double phi1, double phi2, int n) {
  StringChartPoint p;
  p.l_hat = l;
  p.r_hat = r;
  p.l_hat_s = l_s;
  p.r_hat_s = r_s;
  p.f = f;
  p.b = b;
  p.phi1 = phi1;
  p.phi2 = phi2;
  p.n = n;
  p.chart_l_s = preferred_chart(l_s);
  p.chart_r_s = preferred_chart(r_s);
  return p;
}

SolutionParams string_solution(const StringChartPoint& p) {
  const InvariantBlock inv = bridge(p.f, p.b, p.n);
  // sinh 2theta and sin 2theta_s without cancellation
  const double sh = std::sqrt(std::max(0.0, p.b * (p.f - p.b) * (inv.cosh2theta + 1.0)));
  const double sn = std::sqrt(std::max(0.0, p.f * (p.f - p.b) * (2.0 + p.b * p.f - p.f * p.f)));
  const double theta = 0.5 * std::asinh(sh);
  const double theta_s = 0.5 * std::atan2(sn, inv.cos2theta_s);

  const AdsAlgebraElement l = p.l_hat.element(), r = p.r_hat.element();
  const SphereAlgebraElement ls = p.l_hat_s.element(), rs = p.r_hat_s.element();
  const NormalizedCommutator<AdsSector> nc = normalized_commutator(l, r);
  const NormalizedCommutator<SphereSector> ncs = normalized_commutator(ls, rs);

  SolutionParams out;
  out.ads.lambda = inv.lambda;
  out.ads.rho = inv.rho;
  out.ads.m = -p.n;
  out.ads.n = p.n;
  out.ads.l_hat = p.l_hat;
  out.ads.r_hat = p.r_hat;
  out.ads.base = exp_algebra(l, p.phi1) * exp_algebra(nc.axis, -(nc.angle + theta)) * exp_algebra(r, p.phi1);

  out.sphere.lambda = inv.lambda_s;
  out.sphere.rho = inv.rho_s;
  out.sphere.m = p.n;
  out.sphere.n = p.n;
  out.sphere.l_hat = p.l_hat_s;
  out.sphere.r_hat = p.r_hat_s;
  out.sphere.base =
      exp_algebra(ls, p.phi2) * exp_algebra(ncs.axis, -(ncs.angle + theta_s)) * exp_algebra(rs, -p.phi2);
  return out;
}

double presymplectic_pairing(const SolutionCurve& curve, const PairingOptions& opt) {
  const SolutionParams base = curve(0.0);
  const SolutionEval e0(base);
  const Stencil st = make_stencil(opt.variation);
  std::vector<SolutionEval> taps;
  std::vector<double> weights;
  for (const auto& [offset, weight] : st.taps) {
    taps.emplace_back(curve(offset));
    weights.push_back(weight);
  }
  const int nodes = node_count(base, opt.nodes);
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double sigma = 2.0 * std::numbers::pi * k / nodes;
    const Eigen::Matrix2d g = e0.ads.group(opt.tau, sigma);
    const Eigen::Matrix2cd h = e0.sphere.group(opt.tau, sigma);
    Eigen::Matrix2d dg = Eigen::Matrix2d::Zero();
    Eigen::Matrix2cd dh = Eigen::Matrix2cd::Zero();
    for (std::size_t t = 0; t < taps.size(); ++t) {
      dg += weights[t] * taps[t].ads.group(opt.tau, sigma);
      dh += weights[t] * taps[t].sphere.group(opt.tau, sigma);
    }
    sum += trace_inner<AdsSector>(e0.ads.right_tau(g), inverse2(g) * dg) +
           trace_inner<SphereSector>(e0.sphere.right_tau(h), inverse2(h) * dh);
  }
  return sum / nodes;
}

double string_presymplectic(const StringChartPoint& p, const Eigen::VectorXd& direction, const PairingOptions& opt) {
  if (direction.size() != StringChartPoint::dimension) throw ValidationError("direction must have 12 components");
  if (direction.isZero(0.0)) return 0.0;
  const Eigen::VectorXd x = p.coordinates();
  return presymplectic_pairing([&](double eps) { return string_solution(p.with_coordinates(x + eps * direction)); },
                               opt);
}

Eigen::VectorXd string_one_form(const StringChartPoint& p, const PairingOptions& opt) {
  Eigen::VectorXd theta(StringChartPoint::dimension);
  for (int j = 0; j < StringChartPoint::dimension; ++j)
    theta[j] = string_presymplectic(p, Eigen::VectorXd::Unit(StringChartPoint::dimension, j), opt);
  return theta;
}

TwoFormMatrix string_symplectic(const StringChartPoint& p, const StringFormOptions& opt) {
  constexpr int dim = StringChartPoint::dimension;
  check_margin(p, opt.outer.step + opt.pairing.variation.step);
  const Eigen::VectorXd x = p.coordinates();
  Eigen::MatrixXd d(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(dim, i);
    d.row(i) = derivative([&](double t) { return string_one_form(p.with_coordinates(x + t * e), opt.pairing); },
                          opt.outer);
  }
  return exterior_derivative(d, p.labels());
}

TwoFormMatrix string_symplectic_cartan(const StringChartPoint& p, const PairingOptions& opt) {
  constexpr int dim = StringChartPoint::dimension;
  check_margin(p, opt.variation.step);
  const Eigen::VectorXd x = p.coordinates();
  const SolutionParams base = string_solution(p);
  const SolutionEval e0(base);
  const Stencil st = make_stencil(opt.variation);

  std::vector<std::vector<SolutionEval>> taps(dim);
  for (int j = 0; j < dim; ++j)
    for (const auto& tap : st.taps)
      taps[static_cast<std::size_t>(j)].emplace_back(
          string_solution(p.with_coordinates(x + tap.first * Eigen::VectorXd::Unit(dim, j))));

  const int nodes = node_count(base, opt.nodes);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::Matrix2d> xa(dim), ra(dim);
  std::vector<Eigen::Matrix2cd> xs(dim), rsv(dim);
  for (int k = 0; k < nodes; ++k) {
    const double sigma = 2.0 * std::numbers::pi * k / nodes;
    const Eigen::Matrix2d g = e0.ads.group(opt.tau, sigma);
    const Eigen::Matrix2cd h = e0.sphere.group(opt.tau, sigma);
    const Eigen::Matrix2d gi = inverse2(g);
    const Eigen::Matrix2cd hi = inverse2(h);
    const Eigen::Matrix2d R = e0.ads.right_tau(g);
    const Eigen::Matrix2cd Rs = e0.sphere.right_tau(h);
    for (std::size_t j = 0; j < static_cast<std::size_t>(dim); ++j) {
      Eigen::Matrix2d dg = Eigen::Matrix2d::Zero(), dR = Eigen::Matrix2d::Zero();
      Eigen::Matrix2cd dh = Eigen::Matrix2cd::Zero(), dRs = Eigen::Matrix2cd::Zero();
      for (std::size_t t = 0; t < st.taps.size(); ++t) {
        const double wt = st.taps[t].second;
        const SolutionEval& ev = taps[j][t];
        const Eigen::Matrix2d gt = ev.ads.group(opt.tau, sigma);
        const Eigen::Matrix2cd ht = ev.sphere.group(opt.tau, sigma);
        dg += wt * gt;
        dh += wt * ht;
        dR += wt * ev.ads.right_tau(gt);
        dRs += wt * ev.sphere.right_tau(ht);
      }
      xa[j] = gi * dg;
      xs[j] = hi * dh;
      ra[j] = dR;
      rsv[j] = dRs;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
      for (std::size_t j = i + 1; j < static_cast<std::size_t>(dim); ++j) {
        const Eigen::Matrix2d ca = xa[i] * xa[j] - xa[j] * xa[i];
        const Eigen::Matrix2cd cs = xs[i] * xs[j] - xs[j] * xs[i];
        const double v = trace_inner<AdsSector>(ra[i], xa[j]) - trace_inner<AdsSector>(ra[j], xa[i]) -
                         trace_inner<AdsSector>(R, ca) + trace_inner<SphereSector>(rsv[i], xs[j]) -
                         trace_inner<SphereSector>(rsv[j], xs[i]) - trace_inner<SphereSector>(Rs, cs);
        w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += v;
      }
    }
  }
  w /= nodes;
  w -= w.transpose().eval();
  return {w, p.labels()};
}

OrbitCoefficients orbit_block_coefficients(const TwoFormMatrix& form, const StringChartPoint& p) {
  const Eigen::MatrixXd& w = form.matrix;
  if (w.rows() != StringChartPoint::dimension || w.cols() != StringChartPoint::dimension)
    throw ValidationError("expected a 12x12 form");
  const Eigen::VectorXd x = p.coordinates();
  OrbitCoefficients c;
  c.m_L = w(1, 0) * 2.0 * p.l_hat.element()[0];
  c.m_R = w(2, 3) * 2.0 * p.r_hat.element()[0];
  c.m_L_s = w(4, 5) * 2.0 * sphere_chart_height(x[4], x[5], p.chart_l_s);
  c.m_R_s = w(7, 6) * 2.0 * sphere_chart_height(x[6], x[7], p.chart_r_s);
  return c;
}

OrbitCoefficients expected_orbit_coefficients(const StringChartPoint& p) {
  const InvariantBlock inv = bridge(p.f, p.b, p.n);
  const double c = inv.cosh2theta, s = inv.cos2theta_s;
  return {inv.lambda + inv.rho * c, inv.lambda * c + inv.rho, inv.lambda_s + inv.rho_s * s,
          inv.lambda_s * s + inv.rho_s};
}

ChargeFunctions string_charge_functions(const StringChartPoint& chart) {
  auto charges_at = [chart](const Eigen::VectorXd& x) {
    return charges_analytic(string_solution(chart.with_coordinates(x)));
  };
  ChargeFunctions f;
  for (int k = 0; k < 3; ++k) {
    f.L[k] = [charges_at, k](const Eigen::VectorXd& x) { return charges_at(x).L.lowered()[k]; };
    f.R[k] = [charges_at, k](const Eigen::VectorXd& x) { return charges_at(x).R.lowered()[k]; };
    f.L_s[k] = [charges_at, k](const Eigen::VectorXd& x) { return charges_at(x).L_s.lowered()[k]; };
    f.R_s[k] = [charges_at, k](const Eigen::VectorXd& x) { return charges_at(x).R_s.lowered()[k]; };
  }
  f.casimir_names = {"m_L", "m_R", "m_L_s", "m_R_s"};
  f.casimirs.push_back([charges_at](const Eigen::VectorXd& x) { return charges_at(x).m_L; });
  f.casimirs.push_back([charges_at](const Eigen::VectorXd& x) { return charges_at(x).m_R; });
  f.casimirs.push_back([charges_at](const Eigen::VectorXd& x) { return charges_at(x).m_L_s; });
  f.casimirs.push_back([charges_at](const Eigen::VectorXd& x) { return charges_at(x).m_R_s; });
  return f;
}

}  // namespace adss
