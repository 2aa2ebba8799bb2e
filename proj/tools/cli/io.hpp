#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "adss/bridge.hpp"
#include "adss/charges.hpp"
#include "adss/solutions.hpp"

namespace adss::cli {

using nlohmann::json;

/// 17 significant digits, '.' decimal point, independent of the locale.
std::string format_double(double v);

/// Joins cells with ',' and terminates with '\n'.
std::string csv_row(const std::vector<std::string>& cells);
std::string csv_row(const std::vector<double>& values);

json to_json(const SolutionParams& p);
/// Validates unit vectors and group membership, but not 4 lambda rho = m n
/// (verify reports that relation itself).
SolutionParams params_from_json(const json& j);
SolutionParams load_params(const std::string& path);

json to_json(const InvariantBlock& inv);
json to_json(const ChargeSet& c);

/// "key=value" pairs.
std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items);

/// "AxB" with A, B >= 1.
std::pair<int, int> parse_grid(const std::string& spec);
/// "lo:hi"
Range parse_range(const std::string& spec);

}  // namespace adss::cli
