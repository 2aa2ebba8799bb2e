#pragma once

// Worldsheet geometry checks: induced metrics, conformal gauge, chirality,
// equations of motion, mean curvatures.

#include <functional>

#include <Eigen/Core>

#include "adss/bridge.hpp"
#include "adss/differentiation.hpp"
#include "adss/solutions.hpp"

namespace adss {

/// Indices (tau, sigma).
struct InducedMetric {
  Eigen::Matrix2d ads = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d sphere = Eigen::Matrix2d::Zero();
};

/// A worldsheet map around a base point: both callables take offsets (du, dv)
/// in (tau, sigma) from that point.
struct WorldsheetPatch {
  std::function<Eigen::Matrix2d(double, double)> ads;
  std::function<Eigen::Matrix2cd(double, double)> sphere;
};

/// Neighbours are generated through the exact group law
///   g(tau + u, sigma + v) = e^{(lambda u + m v/2) l} g(tau, sigma) e^{(rho u + n v/2) r},
/// which keeps large phases out of the difference quotients.
WorldsheetPatch anchored_patch(const SolutionParams& p, double tau, double sigma);

/// Step must lie in [1e-6, 1e-3].
InducedMetric induced_metric_numeric(const WorldsheetPatch& patch, const DiffOptions& opt = {});
InducedMetric induced_metric_numeric(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt = {});

/// From (mu, mubar, alpha, beta).
InducedMetric induced_metric_analytic(const InvariantBlock& inv);

/// From the solution parameters directly (lambda, rho, m, n and the theta invariants).
InducedMetric induced_metric_closed_form(const SolutionParams& p);

struct GaugeResidual {
  double chiral = 0.0;      // <(g^-1 d g)^2> + <(h^-1 d h)^2>, d = (d_tau + d_sigma)/2
  double antichiral = 0.0;  // same with dbar = (d_tau - d_sigma)/2
  double mu2_ads = 0.0;     // -<(g^-1 d g)^2>
  double mu2_sphere = 0.0;  // <(h^-1 d h)^2>
  double mubar2_ads = 0.0;
  double mubar2_sphere = 0.0;
};

GaugeResidual gauge_residual(const WorldsheetPatch& patch, const DiffOptions& opt = {});
GaugeResidual gauge_residual(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt = {});

struct SectorResidual {
  double ads = 0.0;
  double sphere = 0.0;
  double max() const { return ads > sphere ? ads : sphere; }
};

/// Max-norm of d_tau(g^-1 d_tau g) - d_sigma(g^-1 d_sigma g) and its h analogue.
SectorResidual eom_residual(const WorldsheetPatch& patch, const DiffOptions& opt = {});
SectorResidual eom_residual(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt = {});

/// |dbar <(g^-1 d g)^2>| and |d <(g^-1 dbar g)^2>| (max of the two), per sector.
SectorResidual chirality_residual(const WorldsheetPatch& patch, const DiffOptions& opt = {});
SectorResidual chirality_residual(const SolutionParams& p, double tau, double sigma, const DiffOptions& opt = {});

/// max ||g(tau, sigma + 2 pi) - g(tau, sigma)|| over both sectors.
double periodicity_defect(const SolutionParams& p, double tau, double sigma);

struct MeanCurvatures {
  double ads = 0.0;     // -coth 2theta
  double sphere = 0.0;  // cot 2theta_s
};

/// Throws DegenerateConfiguration for theta = 0 or theta_s in {0, pi/2}.
MeanCurvatures mean_curvatures(const InvariantBlock& inv);
MeanCurvatures mean_curvatures(double cosh2theta, double cos2theta_s);

}  // namespace adss
