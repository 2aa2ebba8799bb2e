#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <vector>

#include "adss/bridge.hpp"
#include "adss/charges.hpp"
#include "adss/geometry.hpp"
#include "adss/sampling.hpp"
#include "adss/solutions.hpp"
#include "adss/symplectic.hpp"
#include "cli.hpp"
#include "io.hpp"

namespace adss::cli {

namespace {

SolutionParams solution_from(const RunConfig& cfg) {
  if (!cfg.params_path.empty()) return load_params(cfg.params_path);
  if (!cfg.f || !cfg.b) throw UsageError("give either --params or both --f and --b");
  return simple_family_solution({*cfg.f, *cfg.b, cfg.n});
}

// Tolerances with defaults; unknown override keys are usage errors.
class Tolerances {
 public:
  Tolerances(const RunConfig& cfg, std::map<std::string, double> defaults) : values_(std::move(defaults)) {
    for (const auto& [key, value] : cfg.tolerances) {
      if (!values_.count(key)) throw UsageError("unknown tolerance key '" + key + "' for " + cfg.command);
      values_[key] = value;
    }
  }
  double operator()(const std::string& key) const { return values_.at(key); }

 private:
  std::map<std::string, double> values_;
};

bool wants_csv(const RunConfig& cfg, bool csv_default) {
  if (cfg.format.empty()) return csv_default;
  return cfg.format == "csv";
}

// Runs `write` on the --out file when given, else on `out`.
template <class F>
void emit(const RunConfig& cfg, std::ostream& out, F&& write) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    write(out);
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.out_path);
  write(file);
}

double max_abs(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

double charge_gap(const ChargeSet& a, const ChargeSet& b) {
  return std::max({(a.L.coeffs - b.L.coeffs).cwiseAbs().maxCoeff(), (a.R.coeffs - b.R.coeffs).cwiseAbs().maxCoeff(),
                   (a.L_s.coeffs - b.L_s.coeffs).cwiseAbs().maxCoeff(),
                   (a.R_s.coeffs - b.R_s.coeffs).cwiseAbs().maxCoeff()});
}

}  // namespace

int cmd_bridge(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.f || !cfg.b) throw UsageError("bridge needs --f and --b");
  const InvariantBlock inv = bridge(*cfg.f, *cfg.b, cfg.n);
  out << to_json(inv).dump(2) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Tolerances tol(cfg, {{"relation", 1e-9},
                             {"eom", 1e-6},
                             {"gauge", 1e-6},
                             {"metric_spread", 1e-8},
                             {"metric_gap", 1e-6},
                             {"periodicity", 1e-10},
                             {"membership", 1e-12},
                             {"charge_gap", 1e-10},
                             {"charge_drift", 1e-10}});
  const auto [tau_n, sigma_n] = parse_grid(cfg.grid.empty() ? "3x3" : cfg.grid);
  const SolutionParams p = solution_from(cfg);

  const RelationDefects rel = relation_defects(p);
  double eom = 0.0, gauge = 0.0, spread = 0.0, gap = 0.0, period = 0.0, member = 0.0;
  const InducedMetric closed = induced_metric_closed_form(p);
  std::optional<InducedMetric> first;
  for (int i = 0; i < tau_n; ++i) {
    for (int j = 0; j < sigma_n; ++j) {
      const double tau = 2.0 * std::numbers::pi * i / tau_n;
      const double sigma = 2.0 * std::numbers::pi * j / sigma_n;
      eom = std::max(eom, eom_residual(p, tau, sigma).max());
      const GaugeResidual g = gauge_residual(p, tau, sigma);
      gauge = std::max({gauge, std::abs(g.chiral), std::abs(g.antichiral)});
      const InducedMetric f = induced_metric_numeric(p, tau, sigma);
      if (!first) first = f;
      spread = std::max({spread, max_abs(f.ads - first->ads), max_abs(f.sphere - first->sphere)});
      gap = std::max({gap, max_abs(f.ads - closed.ads), max_abs(f.sphere - closed.sphere)});
      period = std::max(period, periodicity_defect(p, tau, sigma));
      const WorldsheetPoint w = evaluate(p, tau, sigma);
      member = std::max({member, std::abs(ads_embedding_norm(w.g.embedding()) + 1.0),
                         std::abs(sphere_embedding_norm(w.h.embedding()) - 1.0)});
    }
  }
  const ChargeSet analytic = charges_analytic(p);
  const ChargeSet at0 = charges_numeric(p, 0.0, 256);
  const ChargeSet at1 = charges_numeric(p, 1.0, 256);

  json checks;
  bool pass = true;
  auto add = [&](const std::string& key, double value) {
    const bool ok = value <= tol(key);
    pass = pass && ok;
    checks[key] = {{"value", value}, {"tolerance", tol(key)}, {"pass", ok}};
  };
  add("relation", std::max(rel.ads, rel.sphere));
  add("eom", eom);
  add("gauge", gauge);
  add("metric_spread", spread);
  add("metric_gap", gap);
  add("periodicity", period);
  add("membership", member);
  add("charge_gap", charge_gap(at0, analytic));
  add("charge_drift", charge_gap(at0, at1));
  json report = {{"grid", {tau_n, sigma_n}}, {"checks", checks}, {"pass", pass}};
  out << report.dump(2) << '\n';
  return pass ? kOk : kVerificationFailed;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  if (cfg.tau_steps < 1 || cfg.sigma_steps < 1) throw UsageError("--tau-steps and --sigma-steps must be at least 1");
  const SolutionParams p = solution_from(cfg);
  std::vector<double> taus, sigmas;
  for (int i = 0; i < cfg.tau_steps; ++i) taus.push_back(2.0 * std::numbers::pi * i / cfg.tau_steps);
  for (int j = 0; j < cfg.sigma_steps; ++j) sigmas.push_back(2.0 * std::numbers::pi * j / cfg.sigma_steps);
  const std::vector<SurfaceSample> rows = embedding_surface(p, taus, sigmas);
  const bool csv = wants_csv(cfg, true);
  emit(cfg, out, [&](std::ostream& o) {
    if (csv) {
      o << csv_row(std::vector<std::string>{"tau", "sigma", "Y0p", "Y0", "Y1", "Y2", "X1", "X2", "X3", "X4", "P1",
                                            "P2", "P3"});
    }
    json arr = json::array();
    for (const SurfaceSample& s : rows) {
      // stereographic projection from X4 = -1
      const double d = 1.0 + s.sphere[3];
      const double p1 = s.sphere[0] / d, p2 = s.sphere[1] / d, p3 = s.sphere[2] / d;
      if (csv) {
        o << csv_row(std::vector<double>{s.tau, s.sigma, s.ads[0], s.ads[1], s.ads[2], s.ads[3], s.sphere[0],
                                         s.sphere[1], s.sphere[2], s.sphere[3], p1, p2, p3});
      } else {
        arr.push_back({{"tau", s.tau},
                       {"sigma", s.sigma},
                       {"ads", {s.ads[0], s.ads[1], s.ads[2], s.ads[3]}},
                       {"sphere", {s.sphere[0], s.sphere[1], s.sphere[2], s.sphere[3]}},
                       {"stereographic", {p1, p2, p3}}});
      }
    }
    if (!csv) o << arr.dump(2) << '\n';
  });
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  if (cfg.f_range.empty() || cfg.b_range.empty()) throw UsageError("scan needs --f lo:hi and --b lo:hi");
  const auto [fp, bp] = parse_grid(cfg.grid.empty() ? "21x21" : cfg.grid);
  const std::vector<ScanRow> rows =
      scan_region(parse_range(cfg.f_range), parse_range(cfg.b_range), {fp, bp}, cfg.n);
  const bool csv = wants_csv(cfg, true);
  emit(cfg, out, [&](std::ostream& o) {
    if (csv) {
      o << csv_row(std::vector<std::string>{"f", "b", "admissible", "cosh2theta", "cos2theta_s", "mu2", "mubar2",
                                            "cosh_alpha", "cos_beta"});
      for (const ScanRow& r : rows) {
        o << csv_row(std::vector<std::string>{format_double(r.f), format_double(r.b), r.admissible ? "1" : "0",
                                              format_double(r.cosh2theta), format_double(r.cos2theta_s),
                                              format_double(r.mu2), format_double(r.mubar2),
                                              format_double(r.cosh_alpha), format_double(r.cos_beta)});
      }
      return;
    }
    json arr = json::array();
    for (const ScanRow& r : rows) {
      arr.push_back({{"f", r.f},
                     {"b", r.b},
                     {"admissible", r.admissible},
                     {"cosh2theta", r.cosh2theta},
                     {"cos2theta_s", r.cos2theta_s},
                     {"mu2", r.mu2},
                     {"mubar2", r.mubar2},
                     {"cosh_alpha", r.cosh_alpha},
                     {"cos_beta", r.cos_beta}});
    }
    o << arr.dump(2) << '\n';
  });
  return kOk;
}

int cmd_charges(const RunConfig& cfg, std::ostream& out) {
  const Tolerances tol(cfg, {{"charge_gap", 1e-10}});
  if (cfg.nodes < 1) throw UsageError("--nodes must be at least 1");
  const SolutionParams p = solution_from(cfg);
  const ChargeSet analytic = charges_analytic(p);
  const ChargeSet numeric = charges_numeric(p, cfg.tau, cfg.nodes);
  const double gap = charge_gap(numeric, analytic);
  json report = to_json(analytic);
  report["quadrature"] = {{"nodes", cfg.nodes},
                          {"tau", cfg.tau},
                          {"minimum_nodes", minimum_quadrature_nodes(p)},
                          {"under_resolved", numeric.under_resolved},
                          {"charges", to_json(numeric)},
                          {"gap", gap}};
  out << report.dump(2) << '\n';
  if (numeric.under_resolved) return kOk;
  return gap <= tol("charge_gap") ? kOk : kVerificationFailed;
}

int cmd_brackets(const RunConfig& cfg, std::ostream& out) {
  const bool particle = cfg.mode == "particle";
  const double default_tol = particle ? 1e-6 : 1e-5;
  const Tolerances tol(cfg, {{"algebra", default_tol}, {"casimir", default_tol}, {"orbit", 1e-5}});
  if (cfg.points < 1) throw UsageError("--points must be at least 1");
  PortableRng rng(cfg.seed);

  struct Row {
    BracketReport rep;
    double orbit = 0.0;
  };
  std::vector<Row> rows;
  double worst_algebra = 0.0, worst_casimir = 0.0, worst_orbit = 0.0;
  for (int k = 0; k < cfg.points; ++k) {
    Row row;
    if (particle) {
      const ParticleChartPoint pt = random_particle_point(rng);
      row.rep = charge_algebra(particle_symplectic(pt), pt.coordinates(), particle_charge_functions(pt));
    } else {
      const StringChartPoint pt = random_string_point(rng);
      const TwoFormMatrix w = string_symplectic(pt);
      row.rep = charge_algebra(w, pt.coordinates(), string_charge_functions(pt));
      const OrbitCoefficients got = orbit_block_coefficients(w, pt), want = expected_orbit_coefficients(pt);
      row.orbit = std::max({std::abs(got.m_L - want.m_L), std::abs(got.m_R - want.m_R),
                            std::abs(got.m_L_s - want.m_L_s), std::abs(got.m_R_s - want.m_R_s)});
    }
    worst_algebra = std::max(worst_algebra, row.rep.algebra_max());
    worst_casimir = std::max(worst_casimir, row.rep.casimir);
    worst_orbit = std::max(worst_orbit, row.orbit);
    rows.push_back(row);
  }
  const bool pass = worst_algebra <= tol("algebra") && worst_casimir <= tol("casimir") &&
                    (particle || worst_orbit <= tol("orbit"));

  if (wants_csv(cfg, false)) {
    out << csv_row(std::vector<std::string>{"point", "left", "right", "left_s", "right_s", "cross", "casimir",
                                            "orbit", "condition_number"});
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const BracketReport& r = rows[k].rep;
      out << csv_row(std::vector<std::string>{std::to_string(k), format_double(r.left), format_double(r.right),
                                              format_double(r.left_s), format_double(r.right_s),
                                              format_double(r.cross), format_double(r.casimir),
                                              format_double(rows[k].orbit), format_double(r.condition_number)});
    }
  } else {
    json pts = json::array();
    for (const Row& row : rows) {
      const BracketReport& r = row.rep;
      json entry = {{"left", r.left},       {"right", r.right},   {"left_s", r.left_s},
                    {"right_s", r.right_s}, {"cross", r.cross},   {"casimir", r.casimir},
                    {"condition_number", r.condition_number}};
      if (!particle) entry["orbit"] = row.orbit;
      pts.push_back(entry);
    }
    json report = {{"mode", cfg.mode},
                   {"seed", cfg.seed},
                   {"points", pts},
                   {"max_algebra_residual", worst_algebra},
                   {"max_casimir_residual", worst_casimir},
                   {"pass", pass}};
    if (!particle) report["max_orbit_residual"] = worst_orbit;
    out << report.dump(2) << '\n';
  }
  return pass ? kOk : kVerificationFailed;
}

}  // namespace adss::cli
