#pragma once

// Noether currents L_a = d_a g g^-1, R_a = g^-1 d_a g and the conserved charges
//   L = (1/2pi) int L_tau dsigma,  R = (1/2pi) int R_tau dsigma
// in geometric units (no action prefactor).

#include "adss/solutions.hpp"

namespace adss {

template <Sector S>
struct SectorCurrents {
  AlgebraElement<S> left_tau, left_sigma, right_tau, right_sigma;
};

struct Currents {
  SectorCurrents<AdsSector> ads;
  SectorCurrents<SphereSector> sphere;
};

/// Closed form: L_tau = lambda l + rho Ad_{e^{theta_l l} g0} r, etc.
Currents currents(const SolutionParams& p, double tau, double sigma);

struct ChargeSet {
  AdsAlgebraElement L, R;
  SphereAlgebraElement L_s, R_s;
  // sqrt|<X,X>|
  double m_L = 0.0, m_R = 0.0, m_L_s = 0.0, m_R_s = 0.0;
  // set by charges_numeric when nodes < 4(|m|+|n|)+16 in some sector
  bool under_resolved = false;
};

/// max over sectors of 4(|m|+|n|)+16
int minimum_quadrature_nodes(const SolutionParams& p);

/// Trapezoid rule on sigma_k = 2 pi k / nodes with pairwise summation.
ChargeSet charges_numeric(const SolutionParams& p, double tau, int nodes);

/// L = (lambda + rho cosh 2theta) l, R = (lambda cosh 2theta + rho) r and the
/// sphere analogues; for m = 0 (resp. n = 0) the sigma-average is not taken.
ChargeSet charges_analytic(const SolutionParams& p);

}  // namespace adss
