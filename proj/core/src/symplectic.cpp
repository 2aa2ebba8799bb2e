#include "adss/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace adss {

namespace {

constexpr double kSingularRatio = 1e-13;

Eigen::VectorXd singular_values(const Eigen::MatrixXd& w) {
  if (w.size() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(w);
  return svd.singularValues();
}

std::string sphere_label(const char* prefix, int index) { return std::string(prefix) + std::to_string(index + 1); }

Eigen::VectorXd unit(int n, int i) { return Eigen::VectorXd::Unit(n, i); }

const char* kLeft[] = {"L0", "L1", "L2"};
const char* kRight[] = {"R0", "R1", "R2"};
const char* kLeftS[] = {"Ls1", "Ls2", "Ls3"};
const char* kRightS[] = {"Rs1", "Rs2", "Rs3"};

// theta_j for the unreduced particle chart
Eigen::VectorXd particle_one_form(const ParticlePhasePoint& p, const DiffOptions& opt) {
  const Eigen::VectorXd x = p.coordinates();
  const AdsGroupElement g = g_from_LR(p.l_hat, p.r_hat, p.phi);
  const SphereGroupElement h = h_from_LR(p.l_hat_s, p.r_hat_s, p.phi_s);
  const Eigen::Matrix2d R = (p.m * p.r_hat.element()).matrix();
  const Eigen::Matrix2cd Rs = (p.m_s * p.r_hat_s.element()).matrix();
  const Eigen::Matrix2d g_inv = g.inverse().matrix();
  const Eigen::Matrix2cd h_inv = h.inverse().matrix();
  Eigen::VectorXd theta(ParticlePhasePoint::dimension);
  for (int j = 0; j < ParticlePhasePoint::dimension; ++j) {
    const Eigen::VectorXd e = unit(ParticlePhasePoint::dimension, j);
    const Eigen::Matrix2d dg = derivative(
        [&](double t) -> Eigen::Matrix2d {
          const ParticlePhasePoint q = p.with_coordinates(x + t * e);
          return g_from_LR(q.l_hat, q.r_hat, q.phi).matrix();
        },
        opt);
    const Eigen::Matrix2cd dh = derivative(
        [&](double t) -> Eigen::Matrix2cd {
          const ParticlePhasePoint q = p.with_coordinates(x + t * e);
          return h_from_LR(q.l_hat_s, q.r_hat_s, q.phi_s).matrix();
        },
        opt);
    theta[j] = trace_inner<AdsSector>(R, g_inv * dg) + trace_inner<SphereSector>(Rs, h_inv * dh);
  }
  return theta;
}

std::vector<std::string> phase_labels(SphereOrbitChart cl, SphereOrbitChart cr) {
  return {"l1",
          "l2",
          "r1",
          "r2",
          "m",
          "phi",
          sphere_label("ls", cl.first()),
          sphere_label("ls", cl.second()),
          sphere_label("rs", cr.first()),
          sphere_label("rs", cr.second()),
          "m_s",
          "phi_s"};
}

}  // namespace

// ---------------------------------------------------------------------------

double TwoFormMatrix::antisymmetry_defect() const {
  if (matrix.size() == 0) return 0.0;
  return (matrix + matrix.transpose()).cwiseAbs().maxCoeff();
}

double TwoFormMatrix::condition_number() const {
  const Eigen::VectorXd s = singular_values(matrix);
  if (s.size() == 0) return 0.0;
  const double lo = s[s.size() - 1];
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return s[0] / lo;
}

TwoFormMatrix exterior_derivative(const Eigen::MatrixXd& jacobian, std::vector<std::string> labels) {
  TwoFormMatrix out;
  out.matrix = jacobian - jacobian.transpose();
  out.labels = std::move(labels);
  return out;
}

PoissonStructure::PoissonStructure(const TwoFormMatrix& form) {
  const Eigen::VectorXd s = singular_values(form.matrix);
  if (s.size() == 0) throw DegenerateConfiguration("empty two-form");
  const double lo = s[s.size() - 1];
  if (!(lo > kSingularRatio * s[0])) throw DegenerateConfiguration("two-form is singular at this point");
  condition_ = s[0] / lo;
  tensor_ = -form.matrix.fullPivLu().inverse();
}

Eigen::VectorXd chart_gradient(const ChartFunction& f, const Eigen::VectorXd& x, const DiffOptions& opt) {
  Eigen::VectorXd grad(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(x.size(), i);
    grad[i] = derivative([&](double t) { return f(x + t * e); }, opt);
  }
  return grad;
}

double poisson_bracket(const ChartFunction& F, const ChartFunction& G, const TwoFormMatrix& form,
                       const Eigen::VectorXd& x, const DiffOptions& opt) {
  const PoissonStructure pi(form);
  return pi.bracket(chart_gradient(F, x, opt), chart_gradient(G, x, opt));
}

// ---------------------------------------------------------------------------
// charts

SphereOrbitChart preferred_chart(const UnitSphereVector& v) {
  const Eigen::Vector3d c = v.element().coeffs;
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(c[k]) > std::abs(c[axis])) axis = k;
  return {axis, c[axis] >= 0.0 ? 1 : -1};
}

UnitTimelikeVector timelike_from_chart(double x1, double x2) { return UnitTimelikeVector::from_spatial(x1, x2); }

Eigen::Vector2d timelike_chart(const UnitTimelikeVector& v) {
  const Eigen::Vector3d c = v.element().coeffs;
  return {c[1], c[2]};
}

double sphere_chart_height(double a, double b, SphereOrbitChart chart) {
  const double q = 1.0 - a * a - b * b;
  if (!(q > kChartEdge * kChartEdge))
    throw ChartError("sphere chart around axis " + std::to_string(chart.axis + 1) + " degenerates here");
  return chart.sign * std::sqrt(q);
}

UnitSphereVector sphere_from_chart(double a, double b, SphereOrbitChart chart) {
  Eigen::Vector3d c;
  c[chart.first()] = a;
  c[chart.second()] = b;
  c[chart.axis] = sphere_chart_height(a, b, chart);
  return UnitSphereVector::from_components(c[0], c[1], c[2]);
}

Eigen::Vector2d sphere_chart(const UnitSphereVector& v, SphereOrbitChart chart) {
  const Eigen::Vector3d c = v.element().coeffs;
  return {c[chart.first()], c[chart.second()]};
}

// ---------------------------------------------------------------------------
// particle

double ParticleChartPoint::m() const { return std::hypot(M, m_s); }

Eigen::VectorXd ParticleChartPoint::coordinates() const {
  Eigen::VectorXd x(dimension);
  x.segment<2>(0) = timelike_chart(l_hat);
  x.segment<2>(2) = timelike_chart(r_hat);
  x.segment<2>(4) = sphere_chart(l_hat_s, chart_l_s);
  x.segment<2>(6) = sphere_chart(r_hat_s, chart_r_s);
  x[8] = m_s;
  x[9] = chi;
  return x;
}

ParticleChartPoint ParticleChartPoint::with_coordinates(const Eigen::VectorXd& x) const {
  ParticleChartPoint p = *this;
  p.l_hat = timelike_from_chart(x[0], x[1]);
  p.r_hat = timelike_from_chart(x[2], x[3]);
  p.l_hat_s = sphere_from_chart(x[4], x[5], chart_l_s);
  p.r_hat_s = sphere_from_chart(x[6], x[7], chart_r_s);
  p.m_s = x[8];
  p.chi = x[9];
  return p;
}

std::vector<std::string> ParticleChartPoint::labels() const {
  return {"l1",
          "l2",
          "r1",
          "r2",
          sphere_label("ls", chart_l_s.first()),
          sphere_label("ls", chart_l_s.second()),
          sphere_label("rs", chart_r_s.first()),
          sphere_label("rs", chart_r_s.second()),
          "m_s",
          "chi"};
}

ParticleChartPoint make_particle_point(const UnitTimelikeVector& l, const UnitTimelikeVector& r,
                                       const UnitSphereVector& l_s, const UnitSphereVector& r_s, double m_s,
                                       double chi, double M) {
  ParticleChartPoint p;
  p.l_hat = l;
  p.r_hat = r;
  p.l_hat_s = l_s;
  p.r_hat_s = r_s;
  p.m_s = m_s;
  p.chi = chi;
  p.M = M;
  p.chart_l_s = preferred_chart(l_s);
  p.chart_r_s = preferred_chart(r_s);
  return p;
}

Eigen::VectorXd ParticlePhasePoint::coordinates() const {
  Eigen::VectorXd x(dimension);
  x.segment<2>(0) = timelike_chart(l_hat);
  x.segment<2>(2) = timelike_chart(r_hat);
  x[4] = m;
  x[5] = phi;
  x.segment<2>(6) = sphere_chart(l_hat_s, chart_l_s);
  x.segment<2>(8) = sphere_chart(r_hat_s, chart_r_s);
  x[10] = m_s;
  x[11] = phi_s;
  return x;
}

ParticlePhasePoint ParticlePhasePoint::with_coordinates(const Eigen::VectorXd& x) const {
  ParticlePhasePoint p = *this;
  p.l_hat = timelike_from_chart(x[0], x[1]);
  p.r_hat = timelike_from_chart(x[2], x[3]);
  p.m = x[4];
  p.phi = x[5];
  p.l_hat_s = sphere_from_chart(x[6], x[7], chart_l_s);
  p.r_hat_s = sphere_from_chart(x[8], x[9], chart_r_s);
  p.m_s = x[10];
  p.phi_s = x[11];
  return p;
}

std::vector<std::string> ParticlePhasePoint::labels() const { return phase_labels(chart_l_s, chart_r_s); }

template <Sector S>
GroupElement<S> particle_evaluate(const AlgebraElement<S>& L, const GroupElement<S>& g0, double tau) {
  return exp_algebra(L, tau) * g0;
}

template <Sector S>
GroupElement<S> particle_evaluate_right(const AlgebraElement<S>& R, const GroupElement<S>& g0, double tau) {
  return g0 * exp_algebra(R, tau);
}

template AdsGroupElement particle_evaluate(const AdsAlgebraElement&, const AdsGroupElement&, double);
template SphereGroupElement particle_evaluate(const SphereAlgebraElement&, const SphereGroupElement&, double);
template AdsGroupElement particle_evaluate_right(const AdsAlgebraElement&, const AdsGroupElement&, double);
template SphereGroupElement particle_evaluate_right(const SphereAlgebraElement&, const SphereGroupElement&, double);

AdsGroupElement g_from_LR(const UnitTimelikeVector& l, const UnitTimelikeVector& r, double phi) {
  const AdsAlgebraElement t0 = AdsAlgebraElement::basis(0);
  return aligning_element(t0, l.element()) * exp_algebra(t0, phi) * aligning_element(r.element(), t0);
}

AdsGroupElement g_from_LR(const AdsAlgebraElement& l, const AdsAlgebraElement& r, double phi) {
  return g_from_LR(UnitTimelikeVector::from_element(l), UnitTimelikeVector::from_element(r), phi);
}

SphereGroupElement h_from_LR(const UnitSphereVector& l, const UnitSphereVector& r, double phi) {
  const SphereAlgebraElement s3 = SphereAlgebraElement::basis(2);
  return aligning_element(s3, l.element()) * exp_algebra(s3, phi) * aligning_element(r.element(), s3);
}

TwoFormMatrix particle_symplectic(const ParticleChartPoint& p) {
  const Eigen::VectorXd x = p.coordinates();
  const double m = p.m();
  const double l0 = p.l_hat.element()[0];
  const double r0 = p.r_hat.element()[0];
  const double hl = sphere_chart_height(x[4], x[5], p.chart_l_s);
  const double hr = sphere_chart_height(x[6], x[7], p.chart_r_s);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(10, 10);
  auto set = [&](int i, int j, double v) {
    w(i, j) = v;
    w(j, i) = -v;
  };
  set(1, 0, m / (2.0 * l0));     // m dl2 ^ dl1 / 2l0
  set(2, 3, m / (2.0 * r0));     // m dr1 ^ dr2 / 2r0
  set(4, 5, p.m_s / (2.0 * hl));
  set(7, 6, p.m_s / (2.0 * hr));
  set(8, 9, 1.0);                // dm_s ^ dchi
  return {w, p.labels()};
}

TwoFormMatrix particle_symplectic_from_one_form(const ParticlePhasePoint& p, const DiffOptions& opt) {
  constexpr int n = ParticlePhasePoint::dimension;
  const Eigen::VectorXd x = p.coordinates();
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd e = unit(n, i);
    d.row(i) = derivative([&](double t) { return particle_one_form(p.with_coordinates(x + t * e), opt); }, opt);
  }
  return exterior_derivative(d, p.labels());
}

MassShellReduction reduce_mass_shell(const ParticleChartPoint& p, double phi0, const DiffOptions& opt) {
  const double m = p.m();
  ParticlePhasePoint u;
  u.l_hat = p.l_hat;
  u.r_hat = p.r_hat;
  u.l_hat_s = p.l_hat_s;
  u.r_hat_s = p.r_hat_s;
  u.chart_l_s = p.chart_l_s;
  u.chart_r_s = p.chart_r_s;
  u.m = m;
  u.phi = phi0;
  u.m_s = p.m_s;
  u.phi_s = p.chi + p.m_s / m * phi0;
  const TwoFormMatrix full = particle_symplectic_from_one_form(u, opt);

  // shell coordinates (l1, l2, r1, r2, ls_a, ls_b, rs_a, rs_b, m_s, phi, phi_s)
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(12, 11);
  const int target[] = {0, 1, 2, 3, 6, 7, 8, 9, 10, 5, 11};
  for (int k = 0; k < 11; ++k) j(target[k], k) = 1.0;
  j(4, 8) = p.m_s / m;  // dm = (m_s / m) dm_s

  const std::vector<std::string> all = full.labels;
  MassShellReduction out;
  out.shell.matrix = j.transpose() * full.matrix * j;
  out.shell.labels.clear();
  for (int k = 0; k < 11; ++k) out.shell.labels.push_back(all[static_cast<std::size_t>(target[k])]);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(out.shell.matrix, Eigen::ComputeFullV);
  const Eigen::VectorXd s = svd.singularValues();
  out.null_residual = s[10] / s[0];
  out.null_direction = svd.matrixV().col(10);

  // section (l..., m_s, chi) -> phi = phi0, phi_s = chi + m_s phi0 / m
  Eigen::MatrixXd sec = Eigen::MatrixXd::Zero(11, 10);
  for (int k = 0; k < 9; ++k) sec(k, k) = 1.0;
  sec(10, 9) = 1.0;
  sec(10, 8) = phi0 * p.M * p.M / (m * m * m);
  out.reduced.matrix = sec.transpose() * out.shell.matrix * sec;
  out.reduced.labels = p.labels();
  out.condition_number = out.reduced.condition_number();
  return out;
}

// ---------------------------------------------------------------------------
// charge functions and brackets

ChargeFunctions particle_charge_functions(const ParticleChartPoint& chart) {
  ChargeFunctions f;
  for (int k = 0; k < 3; ++k) {
    f.L[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticleChartPoint q = chart.with_coordinates(x);
      return q.m() * q.l_hat.element().lowered()[k];
    };
    f.R[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticleChartPoint q = chart.with_coordinates(x);
      return q.m() * q.r_hat.element().lowered()[k];
    };
    f.L_s[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticleChartPoint q = chart.with_coordinates(x);
      return q.m_s * q.l_hat_s.element().lowered()[k];
    };
    f.R_s[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticleChartPoint q = chart.with_coordinates(x);
      return q.m_s * q.r_hat_s.element().lowered()[k];
    };
  }
  f.casimir_names = {"m", "m_s"};
  f.casimirs.push_back([chart](const Eigen::VectorXd& x) { return chart.with_coordinates(x).m(); });
  f.casimirs.push_back([](const Eigen::VectorXd& x) { return x[8]; });
  return f;
}

ChargeFunctions particle_phase_charge_functions(const ParticlePhasePoint& chart) {
  ChargeFunctions f;
  for (int k = 0; k < 3; ++k) {
    f.L[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticlePhasePoint q = chart.with_coordinates(x);
      return q.m * q.l_hat.element().lowered()[k];
    };
    f.R[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticlePhasePoint q = chart.with_coordinates(x);
      return q.m * q.r_hat.element().lowered()[k];
    };
    f.L_s[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticlePhasePoint q = chart.with_coordinates(x);
      return q.m_s * q.l_hat_s.element().lowered()[k];
    };
    f.R_s[k] = [chart, k](const Eigen::VectorXd& x) {
      const ParticlePhasePoint q = chart.with_coordinates(x);
      return q.m_s * q.r_hat_s.element().lowered()[k];
    };
  }
  f.casimir_names = {"m", "m_s"};
  f.casimirs.push_back([](const Eigen::VectorXd& x) { return x[4]; });
  f.casimirs.push_back([](const Eigen::VectorXd& x) { return x[10]; });
  return f;
}

double BracketReport::algebra_max() const { return std::max({left, right, left_s, right_s, cross}); }

BracketReport charge_algebra(const TwoFormMatrix& form, const Eigen::VectorXd& x, const ChargeFunctions& fns,
                             const DiffOptions& opt) {
  const PoissonStructure pi(form);
  BracketReport rep;
  rep.condition_number = pi.condition_number();

  std::vector<const ChartFunction*> funcs;
  std::vector<std::string> names;
  for (int k = 0; k < 3; ++k) funcs.push_back(&fns.L[k]), names.push_back(kLeft[k]);
  for (int k = 0; k < 3; ++k) funcs.push_back(&fns.R[k]), names.push_back(kRight[k]);
  for (int k = 0; k < 3; ++k) funcs.push_back(&fns.L_s[k]), names.push_back(kLeftS[k]);
  for (int k = 0; k < 3; ++k) funcs.push_back(&fns.R_s[k]), names.push_back(kRightS[k]);

  std::vector<Eigen::VectorXd> grad;
  std::vector<double> value;
  for (const ChartFunction* fn : funcs) {
    grad.push_back(chart_gradient(*fn, x, opt));
    value.push_back((*fn)(x));
  }

  // {Q_a, Q_b} = sign * sum_c eps_ab^c Q_c inside one block
  const double sign[] = {-2.0, 2.0, 2.0, -2.0};
  double* worst[] = {&rep.left, &rep.right, &rep.left_s, &rep.right_s};
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = i + 1; j < 12; ++j) {
      const std::size_t block = i / 3;
      double expected = 0.0;
      if (block == j / 3) {
        const int a = static_cast<int>(i % 3), b = static_cast<int>(j % 3);
        for (int c = 0; c < 3; ++c) {
          const double eps =
              block < 2 ? structure::levi_civita_mixed(a, b, c) : structure::levi_civita(a, b, c);
          expected += sign[block] * eps * value[block * 3 + static_cast<std::size_t>(c)];
        }
      }
      const double v = pi.bracket(grad[i], grad[j]);
      const double err = std::abs(v - expected);
      double& slot = block == j / 3 ? *worst[block] : rep.cross;
      slot = std::max(slot, err);
      rep.entries.push_back({names[i], names[j], v, expected});
    }
  }

  for (std::size_t c = 0; c < fns.casimirs.size(); ++c) {
    const Eigen::VectorXd gc = chart_gradient(fns.casimirs[c], x, opt);
    for (std::size_t i = 0; i < 12; ++i) {
      const double v = pi.bracket(gc, grad[i]);
      rep.casimir = std::max(rep.casimir, std::abs(v));
      rep.entries.push_back({fns.casimir_names[c], names[i], v, 0.0});
    }
    for (std::size_t d = c + 1; d < fns.casimirs.size(); ++d) {
      const double v = pi.bracket(gc, chart_gradient(fns.casimirs[d], x, opt));
      rep.casimir = std::max(rep.casimir, std::abs(v));
      rep.entries.push_back({fns.casimir_names[c], fns.casimir_names[d], v, 0.0});
    }
  }
  return rep;
}

double jacobi_residual(const FormField& form, const Eigen::VectorXd& x, const ChartFunction& a,
                       const ChartFunction& b, const ChartFunction& c, const DiffOptions& opt) {
  const DiffOptions inner{1e-4, DifferenceScheme::richardson};
  auto br = [&](const ChartFunction& f, const ChartFunction& g) -> ChartFunction {
    return [&form, &f, &g, inner](const Eigen::VectorXd& y) { return poisson_bracket(f, g, form(y), y, inner); };
  };
  const TwoFormMatrix w = form(x);
  const PoissonStructure pi(w);
  auto outer = [&](const ChartFunction& f, const ChartFunction& inner_bracket) {
    return pi.bracket(chart_gradient(f, x, inner), chart_gradient(inner_bracket, x, opt));
  };
  const double total = outer(a, br(b, c)) + outer(b, br(c, a)) + outer(c, br(a, b));
  return std::abs(total);
}

double closedness_defect(const FormField& form, const Eigen::VectorXd& x, int i, int j, int k,
                         const DiffOptions& opt) {
  auto d = [&](int dir) -> Eigen::MatrixXd {
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(x.size(), dir);
    return derivative([&](double t) -> Eigen::MatrixXd { return form(x + t * e).matrix; }, opt);
  };
  const Eigen::MatrixXd di = d(i), dj = d(j), dk = d(k);
  return std::abs(di(j, k) + dj(k, i) + dk(i, j));
}

}  // namespace adss
