#pragma once

// Invariant bridge: the map (f, b, n) -> (theta, theta_s, mu, mubar, alpha, beta)
// for the sector m_s = n_s = -m = n, and the admissible region in (f, b).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adss/errors.hpp"

namespace adss {

enum class BridgeConstraint {
  finite,
  f_at_least_one,    // f >= 1
  b_at_least_one,    // b >= 1
  f_at_least_b,      // cosh 2theta >= 1
  f_at_most_f_max,   // cos 2theta_s <= 1, i.e. f^2 - b f - 2 <= 0
};

std::string_view describe(BridgeConstraint c);

class RegionError : public Error {
 public:
  RegionError(BridgeConstraint c, const std::string& what) : Error(what), constraint_(c) {}
  BridgeConstraint constraint() const { return constraint_; }

 private:
  BridgeConstraint constraint_;
};

struct Admissibility {
  bool admissible = false;
  std::optional<BridgeConstraint> violated;
  std::string diagnostic;
};

/// Slack used on the boundary inequalities.
inline constexpr double kRegionSlack = 1e-12;

/// (b + sqrt(b^2 + 8)) / 2
double f_max(double b);

Admissibility admissible(double f, double b);

struct SideInvariants {
  double mu2 = 0.0;
  double mubar2 = 0.0;
};

/// mu^2, mubar^2 from the AdS data (f, cosh 2theta).
SideInvariants ads_side(double f, double cosh2theta, int n);
/// mu^2, mubar^2 from the sphere data (b, cos 2theta_s).
SideInvariants sphere_side(double b, double cos2theta_s, int n);

struct DegeneracyFlags {
  bool static_ads = false;        // f = 1: e = 0, mu = 0
  bool theta_zero = false;        // f = b: cosh 2theta = 1
  bool theta_s_boundary = false;  // |cos 2theta_s| = 1
  bool mubar_zero = false;        // b = 1: mubar = 0, alpha undefined
  bool any() const { return static_ads || theta_zero || theta_s_boundary || mubar_zero; }
};

struct InvariantBlock {
  int n = 1;
  double f = 1.0, b = 1.0, e = 0.0, a = 0.0;
  double E = 0.0, F = 0.0, A = 0.0, B = 0.0;
  double lambda = 0.0, rho = 0.0, lambda_s = 0.0, rho_s = 0.0;
  double cosh2theta = 1.0, cos2theta_s = 1.0;
  double mu2 = 0.0, mubar2 = 0.0, mu = 0.0, mubar = 0.0;
  // inf / nan when undefined; see flags
  double cosh_alpha = 1.0, cos_beta = 1.0;
  SideInvariants ads;
  SideInvariants sphere;
  DegeneracyFlags degenerate;
};

struct BridgeOptions {
  bool allow_nonpositive_winding = false;
  // E < 0 branch (e -> -e); off by default
  bool past_directed_energy = false;
};

/// Throws RegionError outside the admissible region, ValidationError for n <= 0
/// unless enabled in the options.
InvariantBlock bridge(double f, double b, int n, const BridgeOptions& options = {});

/// e / sqrt(e^2 - sinh^2 2theta), written as e / sqrt((f - c)(f + c)).
double cosh_alpha_from_ads(double f, double e, double cosh2theta);
/// a / sqrt(a^2 + sin^2 2theta_s).
double cos_beta_from_sphere(double a, double cos2theta_s);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct ScanGrid {
  int f_points = 0;
  int b_points = 0;
};

struct ScanRow {
  double f = 0.0, b = 0.0;
  bool admissible = false;
  double cosh2theta = 0.0, cos2theta_s = 0.0, mu2 = 0.0, mubar2 = 0.0, cosh_alpha = 0.0, cos_beta = 0.0;
};

/// f outer, b inner; inclusive endpoints. Throws ValidationError for an empty
/// grid or a decreasing range. mu^2, mubar^2 scale with n^2.
std::vector<ScanRow> scan_region(Range f_range, Range b_range, ScanGrid grid, int n = 1);

struct FeasibilityInput {
  int m = 0, n = 0, m_s = 0, n_s = 0;
  double lambda = 0.0, rho = 0.0, cosh2theta = 1.0;
  double lambda_s = 0.0, rho_s = 0.0, cos2theta_s = 1.0;
};

struct FeasibilityResult {
  bool feasible = false;
  double residual = 0.0;  // least-squares residual norm of the six equations
  double mu2 = 0.0, mubar2 = 0.0;
  double cosh_alpha = 0.0, cos_beta = 0.0;  // nan when mu mubar = 0
  std::string reason;
};

/// Least-squares fit of (mu^2, mubar^2, mu mubar cosh alpha, mu mubar cos beta)
/// to both sectors' metric/current relations.
FeasibilityResult feasibility_general(const FeasibilityInput& in, double tol = 1e-10);

}  // namespace adss
