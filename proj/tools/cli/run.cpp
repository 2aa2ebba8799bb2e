#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "adss/bridge.hpp"
#include "adss/errors.hpp"
#include "cli.hpp"
#include "io.hpp"

namespace adss::cli {

namespace {

void add_point_options(CLI::App* cmd, RunConfig& cfg, std::optional<double>& f, std::optional<double>& b) {
  cmd->add_option("--f", f, "invariant f (simple family)");
  cmd->add_option("--b", b, "invariant b (simple family)");
  cmd->add_option("--n", cfg.n, "winding n > 0")->capture_default_str();
}

void add_params_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--params", cfg.params_path, "JSON parameter file (SolutionParams layout)");
}

void add_format_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::vector<std::string> tol_items;
  std::optional<double> f, b;

  CLI::App app{"Particle-type strings in AdS3 x S3: construction, checks, charges, brackets"};
  app.require_subcommand(1, 1);

  CLI::App* bridge_cmd = app.add_subcommand("bridge", "invariants (mu, mubar, alpha, beta) from (f, b, n)");
  add_point_options(bridge_cmd, cfg, f, b);

  CLI::App* verify = app.add_subcommand("verify", "residual report for a solution");
  add_point_options(verify, cfg, f, b);
  add_params_option(verify, cfg);
  verify->add_option("--grid", cfg.grid, "worldsheet points TxS (default 3x3)");
  verify->add_option("--tol", tol_items, "tolerance override key=value");

  CLI::App* sample = app.add_subcommand("sample", "embedding coordinates on a tau x sigma grid");
  add_point_options(sample, cfg, f, b);
  add_params_option(sample, cfg);
  sample->add_option("--tau-steps", cfg.tau_steps)->capture_default_str();
  sample->add_option("--sigma-steps", cfg.sigma_steps)->capture_default_str();
  sample->add_option("--out", cfg.out_path, "output file (default stdout)");
  add_format_option(sample, cfg);

  CLI::App* scan = app.add_subcommand("scan", "bridge over a rectangle in (f, b)");
  scan->add_option("--f", cfg.f_range, "f range lo:hi")->required();
  scan->add_option("--b", cfg.b_range, "b range lo:hi")->required();
  scan->add_option("--n", cfg.n)->capture_default_str();
  scan->add_option("--grid", cfg.grid, "points FxB (default 21x21)");
  scan->add_option("--out", cfg.out_path, "output file (default stdout)");
  add_format_option(scan, cfg);

  CLI::App* charges = app.add_subcommand("charges", "conserved charges and Casimirs");
  add_point_options(charges, cfg, f, b);
  add_params_option(charges, cfg);
  charges->add_option("--nodes", cfg.nodes, "quadrature nodes")->capture_default_str();
  charges->add_option("--tau", cfg.tau)->capture_default_str();
  charges->add_option("--tol", tol_items, "tolerance override key=value");

  CLI::App* brackets = app.add_subcommand("brackets", "Poisson brackets of the charges at random chart points");
  brackets->add_option("--mode", cfg.mode)->check(CLI::IsMember({"particle", "string"}))->capture_default_str();
  brackets->add_option("--seed", cfg.seed)->capture_default_str();
  brackets->add_option("--points", cfg.points)->capture_default_str();
  brackets->add_option("--tol", tol_items, "tolerance override key=value");
  add_format_option(brackets, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.f = f;
    cfg.b = b;
    cfg.tolerances = parse_tolerances(tol_items);
    const CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (cfg.command == "bridge") return cmd_bridge(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "sample") return cmd_sample(cfg, out);
    if (cfg.command == "scan") return cmd_scan(cfg, out);
    if (cfg.command == "charges") return cmd_charges(cfg, out);
    return cmd_brackets(cfg, out);
  } catch (const RegionError& e) {
    err << "error: inadmissible (f, b): " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const adss::Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace adss::cli
