#pragma once

// Particle-type string solutions
//   g(tau, sigma) = exp((lambda tau + m sigma/2) l) g0 exp((rho tau + n sigma/2) r)
// and the SU(2) analogue, their canonical form and the simple winding family.

#include <span>
#include <vector>

#include "adss/algebra.hpp"
#include "adss/bridge.hpp"

namespace adss {

template <Sector S>
struct SectorParams {
  double lambda = 0.0;
  double rho = 0.0;
  int m = 0;
  int n = 0;
  UnitVector<S> l_hat{};
  UnitVector<S> r_hat{};
  GroupElement<S> base{};  // g0 or h0
};

struct SolutionParams {
  SectorParams<AdsSector> ads;
  SectorParams<SphereSector> sphere;
};

struct RelationDefects {
  double ads = 0.0;     // |4 lambda rho - m n|
  double sphere = 0.0;  // |4 lambda_s rho_s - m_s n_s|
  bool ads_parity = true;
  bool sphere_parity = true;
};

RelationDefects relation_defects(const SolutionParams& p);

/// Validates parity, 4 lambda rho = m n (relative 1e-12) and group membership
/// of g0, h0; re-projects the unit vectors into their canonical angle ranges.
SolutionParams make_solution(const SolutionParams& raw);

template <Sector S>
GroupElement<S> evaluate_sector(const SectorParams<S>& p, double tau, double sigma);

struct WorldsheetPoint {
  AdsGroupElement g;
  SphereGroupElement h;
};

WorldsheetPoint evaluate(const SolutionParams& p, double tau, double sigma);

struct IsometryInvariants {
  double cosh2theta = 1.0;   // -<l, g0 r g0^-1>
  double cos2theta_s = 1.0;  // <l_s, h0 r_s h0^-1>
};

IsometryInvariants isometry_invariants(const SolutionParams& p);

/// Left/right multiplication g -> g_left g g_right, h -> h_left h h_right.
struct Isometry {
  AdsGroupElement g_left, g_right;
  SphereGroupElement h_left, h_right;
};

/// l -> Ad_{g_left} l, r -> Ad_{g_right^-1} r, g0 -> g_left g0 g_right.
SolutionParams transform(const SolutionParams& p, const Isometry& iso);

struct WorldsheetPhases {
  double theta_l = 0.0, theta_r = 0.0, theta_l_s = 0.0, theta_r_s = 0.0;
  double eta = 0.0, xi = 0.0, eta_s = 0.0, xi_s = 0.0;
};

struct CanonicalAngles {
  double theta = 0.0;
  double theta_s = 0.0;
  double lambda = 0.0, rho = 0.0, lambda_s = 0.0, rho_s = 0.0;
  int m = 0, n = 0, m_s = 0, n_s = 0;

  /// eta = theta_l + theta_r, xi = theta_l - theta_r,
  /// eta_s = theta_l^s - theta_r^s, xi_s = theta_l^s + theta_r^s.
  WorldsheetPhases at(double tau, double sigma) const;
};

struct CanonicalForm {
  SolutionParams solution;  // l = r = t0, l_s = r_s = s3, g0 = e^{theta t1}, h0 = e^{theta_s s2}
  CanonicalAngles angles;
  Isometry isometry;        // transform(input, isometry) == solution
};

/// theta >= 0 and theta_s in [0, pi/2] by choice of the isometry.
CanonicalForm canonical_form(const SolutionParams& p);

/// e^{theta_l t0} e^{theta t1} e^{theta_r t0} written through (eta, xi).
Eigen::Matrix2d canonical_ads_matrix(double theta, double eta, double xi);
/// e^{theta_l^s s3} e^{theta_s s2} e^{theta_r^s s3} written through (eta_s, xi_s).
Eigen::Matrix2cd canonical_sphere_matrix(double theta_s, double eta_s, double xi_s);

/// A point of the family m_s = n_s = -m = n > 0.
struct SimpleFamilyPoint {
  double f = 1.0;
  double b = 1.0;
  int n = 1;

  double e() const;
  double a() const;
  double E() const { return n * e(); }
  double F() const { return n * f; }
  double A() const { return n * a(); }
  double B() const { return n * b; }
  double lambda() const { return 0.5 * (E() + F()); }
  double rho() const { return 0.5 * (E() - F()); }
  double lambda_s() const { return 0.5 * (A() + B()); }
  double rho_s() const { return 0.5 * (B() - A()); }
};

/// Canonical solution of the family; throws RegionError if (f, b) is not admissible.
SolutionParams simple_family_solution(const SimpleFamilyPoint& point);

struct SurfaceSample {
  double tau = 0.0;
  double sigma = 0.0;
  Eigen::Vector4d ads;     // (Y0', Y0, Y1, Y2)
  Eigen::Vector4d sphere;  // (X1, X2, X3, X4)
};

/// Row-major in tau, then sigma.
std::vector<SurfaceSample> embedding_surface(const SolutionParams& p, std::span<const double> taus,
                                             std::span<const double> sigmas);

struct WindingNumbers {
  int ads = 0;     // turns of (Y1, Y2) per sigma-cycle
  int sphere = 0;  // turns of (X3, X4) per sigma-cycle
};

/// Canonicalizes, then unwraps the two angles along sigma at tau = 0.
/// Throws DegenerateConfiguration when a projected circle collapses.
WindingNumbers winding_numbers(const SolutionParams& p);

}  // namespace adss
