#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adss::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2 };

/// Usage or input problem; reported on stderr with exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<double> f, b;
  int n = 1;
  std::string params_path;
  std::string grid;
  std::string f_range, b_range;
  int tau_steps = 64, sigma_steps = 64;
  std::string out_path;
  std::string format;
  std::map<std::string, double> tolerances;
  unsigned long long seed = 7;
  std::string mode = "particle";
  int points = 20;
  int nodes = 256;
  double tau = 0.0;
};

/// Parses `args` (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_bridge(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);
int cmd_charges(const RunConfig& cfg, std::ostream& out);
int cmd_brackets(const RunConfig& cfg, std::ostream& out);

}  // namespace adss::cli
