#pragma once

// Particle phase space, the string presymplectic structure on the 12-parameter
// chart, and Poisson brackets of the isometry charges.
//
// Convention: W_ij = omega(d_i, d_j), Poisson tensor Pi = -W^-1,
// {F, G} = dF^T Pi dG. With this sign {L_mu, L_nu} = -2 eps_{mu nu}^rho L_rho
// for lowered components L_mu = <t_mu, L>.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "adss/algebra.hpp"
#include "adss/charges.hpp"
#include "adss/differentiation.hpp"
#include "adss/solutions.hpp"

namespace adss {

struct TwoFormMatrix {
  Eigen::MatrixXd matrix;
  std::vector<std::string> labels;

  int dimension() const { return static_cast<int>(matrix.rows()); }
  /// max |W + W^T|
  double antisymmetry_defect() const;
  /// sigma_max / sigma_min (inf when singular)
  double condition_number() const;
};

/// W = D - D^T for D_ij = d_i theta_j.
TwoFormMatrix exterior_derivative(const Eigen::MatrixXd& jacobian, std::vector<std::string> labels);

class PoissonStructure {
 public:
  /// Throws DegenerateConfiguration when W is numerically singular.
  explicit PoissonStructure(const TwoFormMatrix& form);

  double bracket(const Eigen::VectorXd& dF, const Eigen::VectorXd& dG) const { return dF.dot(tensor_ * dG); }
  const Eigen::MatrixXd& tensor() const { return tensor_; }
  double condition_number() const { return condition_; }

 private:
  Eigen::MatrixXd tensor_;
  double condition_ = 0.0;
};

using ChartFunction = std::function<double(const Eigen::VectorXd&)>;

Eigen::VectorXd chart_gradient(const ChartFunction& f, const Eigen::VectorXd& x, const DiffOptions& opt = {});

double poisson_bracket(const ChartFunction& F, const ChartFunction& G, const TwoFormMatrix& form,
                       const Eigen::VectorXd& x, const DiffOptions& opt = {});

// ---------------------------------------------------------------------------
// orbit charts

/// Projection of the unit sphere onto the plane orthogonal to `axis`;
/// the dependent component has the sign `sign`.
struct SphereOrbitChart {
  int axis = 2;
  int sign = 1;
  int first() const { return (axis + 1) % 3; }
  int second() const { return (axis + 2) % 3; }
};

/// Axis of the largest |component|.
SphereOrbitChart preferred_chart(const UnitSphereVector& v);

/// Dependent component below this magnitude raises ChartError.
inline constexpr double kChartEdge = 1e-8;

UnitTimelikeVector timelike_from_chart(double x1, double x2);
Eigen::Vector2d timelike_chart(const UnitTimelikeVector& v);
UnitSphereVector sphere_from_chart(double a, double b, SphereOrbitChart chart);
Eigen::Vector2d sphere_chart(const UnitSphereVector& v, SphereOrbitChart chart);
/// Signed dependent component of the chart.
double sphere_chart_height(double a, double b, SphereOrbitChart chart);

// ---------------------------------------------------------------------------
// particle

/// Reduced chart (l1, l2, r1, r2, ls_a, ls_b, rs_a, rs_b, m_s, chi) with
/// m = sqrt(M^2 + m_s^2) and chi = phi_s - phi m_s / m.
struct ParticleChartPoint {
  UnitTimelikeVector l_hat, r_hat;
  UnitSphereVector l_hat_s, r_hat_s;
  double m_s = 1.0;
  double chi = 0.0;
  double M = 1.0;
  SphereOrbitChart chart_l_s, chart_r_s;

  static constexpr int dimension = 10;
  double m() const;
  Eigen::VectorXd coordinates() const;
  ParticleChartPoint with_coordinates(const Eigen::VectorXd& x) const;
  std::vector<std::string> labels() const;
};

/// Chart points with charts chosen by preferred_chart.
ParticleChartPoint make_particle_point(const UnitTimelikeVector& l, const UnitTimelikeVector& r,
                                       const UnitSphereVector& l_s, const UnitSphereVector& r_s, double m_s,
                                       double chi, double M);

/// Unreduced chart (l1, l2, r1, r2, m, phi, ls_a, ls_b, rs_a, rs_b, m_s, phi_s).
struct ParticlePhasePoint {
  UnitTimelikeVector l_hat, r_hat;
  UnitSphereVector l_hat_s, r_hat_s;
  double m = 1.0, phi = 0.0, m_s = 1.0, phi_s = 0.0;
  SphereOrbitChart chart_l_s, chart_r_s;

  static constexpr int dimension = 12;
  Eigen::VectorXd coordinates() const;
  ParticlePhasePoint with_coordinates(const Eigen::VectorXd& x) const;
  std::vector<std::string> labels() const;
};

/// exp(tau L) g0 with L = m l, m > 0 on the AdS side.
template <Sector S>
GroupElement<S> particle_evaluate(const AlgebraElement<S>& L, const GroupElement<S>& g0, double tau);

/// g0 exp(tau R), the same curve when R = Ad_{g0^-1} L.
template <Sector S>
GroupElement<S> particle_evaluate_right(const AlgebraElement<S>& R, const GroupElement<S>& g0, double tau);

/// g = exp(theta_L n_L) exp(phi t0) exp(theta_R n_R) with Ad_g r = l.
/// The theta = 0 factors reduce to the identity.
AdsGroupElement g_from_LR(const UnitTimelikeVector& l, const UnitTimelikeVector& r, double phi);
/// Validates unit norm and future orientation of l, r.
AdsGroupElement g_from_LR(const AdsAlgebraElement& l, const AdsAlgebraElement& r, double phi);
/// Same with s3 in place of t0; antipodal vectors use a half turn.
SphereGroupElement h_from_LR(const UnitSphereVector& l, const UnitSphereVector& r, double phi);

/// Closed form on the reduced chart.
TwoFormMatrix particle_symplectic(const ParticleChartPoint& p);

/// d theta for theta = <R, g^-1 dg> + <R_s, h^-1 dh>, R = m r, by finite differences.
TwoFormMatrix particle_symplectic_from_one_form(const ParticlePhasePoint& p,
                                                const DiffOptions& opt = {1e-3, DifferenceScheme::richardson});

struct MassShellReduction {
  TwoFormMatrix shell;    // 11-dim pullback to m = sqrt(M^2 + m_s^2)
  TwoFormMatrix reduced;  // 10-dim, on the section phi = phi0
  Eigen::VectorXd null_direction;
  double null_residual = 0.0;  // sigma_min / sigma_max of the shell form
  double condition_number = 0.0;
};

/// Pulls the unreduced form back to the mass shell and onto the section phi = phi0.
MassShellReduction reduce_mass_shell(const ParticleChartPoint& p, double phi0,
                                     const DiffOptions& opt = {1e-3, DifferenceScheme::richardson});

// ---------------------------------------------------------------------------
// charges as chart functions

struct ChargeFunctions {
  // lowered components
  std::array<ChartFunction, 3> L, R, L_s, R_s;
  std::vector<std::string> casimir_names;
  std::vector<ChartFunction> casimirs;
};

ChargeFunctions particle_charge_functions(const ParticleChartPoint& chart);
ChargeFunctions particle_phase_charge_functions(const ParticlePhasePoint& chart);

struct BracketEntry {
  std::string a, b;
  double value = 0.0;
  double expected = 0.0;
};

struct BracketReport {
  double left = 0.0, right = 0.0, left_s = 0.0, right_s = 0.0, cross = 0.0;
  double casimir = 0.0;
  double condition_number = 0.0;
  std::vector<BracketEntry> entries;
  double algebra_max() const;
};

BracketReport charge_algebra(const TwoFormMatrix& form, const Eigen::VectorXd& x, const ChargeFunctions& fns,
                             const DiffOptions& opt = {});

using FormField = std::function<TwoFormMatrix(const Eigen::VectorXd&)>;

/// {A,{B,C}} + {B,{C,A}} + {C,{A,B}} with nested finite differences.
double jacobi_residual(const FormField& form, const Eigen::VectorXd& x, const ChartFunction& a,
                       const ChartFunction& b, const ChartFunction& c,
                       const DiffOptions& opt = {1e-3, DifferenceScheme::richardson});

/// |d_i W_jk + d_j W_ki + d_k W_ij|.
double closedness_defect(const FormField& form, const Eigen::VectorXd& x, int i, int j, int k,
                         const DiffOptions& opt = {1e-3, DifferenceScheme::richardson});

// ---------------------------------------------------------------------------
// string

/// Chart (l1, l2, r1, r2, ls_a, ls_b, rs_a, rs_b, f, b, phi1, phi2) of the family
/// m_s = n_s = -m = n with base points
///   g0 = e^{phi1 l} e^{-(gamma + theta) n} e^{phi1 r},
///   h0 = e^{phi2 l_s} e^{-(gamma_s + theta_s) n_s} e^{-phi2 r_s}.
struct StringChartPoint {
  UnitTimelikeVector l_hat, r_hat;
  UnitSphereVector l_hat_s, r_hat_s;
  double f = 5.0 / 3.0, b = 5.0 / 4.0;
  double phi1 = 0.0, phi2 = 0.0;
  int n = 1;
  SphereOrbitChart chart_l_s, chart_r_s;

  static constexpr int dimension = 12;
  Eigen::VectorXd coordinates() const;
  StringChartPoint with_coordinates(const Eigen::VectorXd& x) const;
  std::vector<std::string> labels() const;
};

StringChartPoint make_string_point(const UnitTimelikeVector& l, const UnitTimelikeVector& r,
                                   const UnitSphereVector& l_s, const UnitSphereVector& r_s, double f, double b,
                                   double phi1, double phi2, int n);

/// Throws RegionError outside the admissible region, DegenerateConfiguration
/// for parallel l, r (or l_s, r_s).
SolutionParams string_solution(const StringChartPoint& p);

struct PairingOptions {
  double tau = 0.0;
  int nodes = 64;  // raised to minimum_quadrature_nodes when smaller
  DiffOptions variation{1e-3, DifferenceScheme::richardson};
};

using SolutionCurve = std::function<SolutionParams(double)>;

/// (1/2pi) int <R_tau, g^-1 d_eps g> + <R_tau^s, h^-1 d_eps h> dsigma at eps = 0.
double presymplectic_pairing(const SolutionCurve& curve, const PairingOptions& opt = {});

double string_presymplectic(const StringChartPoint& p, const Eigen::VectorXd& direction,
                            const PairingOptions& opt = {});

/// All twelve components of theta.
Eigen::VectorXd string_one_form(const StringChartPoint& p, const PairingOptions& opt = {});

struct StringFormOptions {
  PairingOptions pairing;
  DiffOptions outer{1e-3, DifferenceScheme::richardson};
};

/// d theta by finite differences of string_one_form.
TwoFormMatrix string_symplectic(const StringChartPoint& p, const StringFormOptions& opt = {});

/// omega(u, v) = <d_u R, X_v> - <d_v R, X_u> - <R, [X_u, X_v]> averaged over sigma,
/// X_u = g^-1 d_u g. One level of differences.
TwoFormMatrix string_symplectic_cartan(const StringChartPoint& p, const PairingOptions& opt = {});

struct OrbitCoefficients {
  double m_L = 0.0, m_R = 0.0, m_L_s = 0.0, m_R_s = 0.0;
};

/// Read off the four orbit blocks of W.
OrbitCoefficients orbit_block_coefficients(const TwoFormMatrix& form, const StringChartPoint& p);

/// lambda + rho c, lambda c + rho and the sphere analogues (signed).
OrbitCoefficients expected_orbit_coefficients(const StringChartPoint& p);

ChargeFunctions string_charge_functions(const StringChartPoint& chart);

}  // namespace adss
