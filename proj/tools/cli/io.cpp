#include "io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace adss::cli {

namespace {

json vec3(const Eigen::Vector3d& v) { return json::array({v[0], v[1], v[2]}); }
json vec4(const Eigen::Vector4d& v) { return json::array({v[0], v[1], v[2], v[3]}); }

Eigen::Vector3d read_vec3(const json& j, const char* key) {
  const json& a = j.at(key);
  if (!a.is_array() || a.size() != 3) throw UsageError(std::string(key) + " must be an array of 3 numbers");
  return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

Eigen::Vector4d read_vec4(const json& j, const char* key) {
  const json& a = j.at(key);
  if (!a.is_array() || a.size() != 4) throw UsageError(std::string(key) + " must be an array of 4 numbers");
  return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>(), a[3].get<double>()};
}

template <Sector S>
json sector_json(const SectorParams<S>& s) {
  return {{"lambda", s.lambda},
          {"rho", s.rho},
          {"m", s.m},
          {"n", s.n},
          {"l_hat", vec3(s.l_hat.element().coeffs)},
          {"r_hat", vec3(s.r_hat.element().coeffs)},
          {"base", vec4(s.base.embedding())}};
}

template <Sector S>
SectorParams<S> sector_from_json(const json& j) {
  SectorParams<S> s;
  s.lambda = j.at("lambda").get<double>();
  s.rho = j.at("rho").get<double>();
  s.m = j.at("m").get<int>();
  s.n = j.at("n").get<int>();
  const AlgebraElement<S> l(read_vec3(j, "l_hat")), r(read_vec3(j, "r_hat"));
  if constexpr (std::is_same_v<S, AdsSector>) {
    s.l_hat = UnitTimelikeVector::from_element(l);
    s.r_hat = UnitTimelikeVector::from_element(r);
  } else {
    s.l_hat = UnitSphereVector::from_element(l);
    s.r_hat = UnitSphereVector::from_element(r);
  }
  s.base = GroupElement<S>::from_embedding(read_vec4(j, "base"));
  return s;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

std::string csv_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  return csv_row(cells);
}

json to_json(const SolutionParams& p) { return {{"ads", sector_json(p.ads)}, {"sphere", sector_json(p.sphere)}}; }

SolutionParams params_from_json(const json& j) {
  try {
    SolutionParams p;
    p.ads = sector_from_json<AdsSector>(j.at("ads"));
    p.sphere = sector_from_json<SphereSector>(j.at("sphere"));
    const RelationDefects d = relation_defects(p);
    if (!d.ads_parity || !d.sphere_parity) throw ValidationError("m + n must be even in both sectors");
    return p;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed parameter file: ") + e.what());
  }
}

SolutionParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open parameter file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("parameter file is not valid JSON: ") + e.what());
  }
  return params_from_json(j);
}

json to_json(const InvariantBlock& inv) {
  json j;
  j["f"] = inv.f;
  j["b"] = inv.b;
  j["n"] = inv.n;
  j["e"] = inv.e;
  j["a"] = inv.a;
  j["E"] = inv.E;
  j["F"] = inv.F;
  j["A"] = inv.A;
  j["B"] = inv.B;
  j["lambda"] = inv.lambda;
  j["rho"] = inv.rho;
  j["lambda_s"] = inv.lambda_s;
  j["rho_s"] = inv.rho_s;
  j["cosh2theta"] = inv.cosh2theta;
  j["cos2theta_s"] = inv.cos2theta_s;
  j["mu2"] = inv.mu2;
  j["mubar2"] = inv.mubar2;
  j["cosh_alpha"] = finite_or_null(inv.cosh_alpha);
  j["cos_beta"] = finite_or_null(inv.cos_beta);
  j["ads_side"] = {{"mu2", inv.ads.mu2}, {"mubar2", inv.ads.mubar2}};
  j["sphere_side"] = {{"mu2", inv.sphere.mu2}, {"mubar2", inv.sphere.mubar2}};
  j["degenerate"] = {{"static_ads", inv.degenerate.static_ads},
                     {"theta_zero", inv.degenerate.theta_zero},
                     {"theta_s_boundary", inv.degenerate.theta_s_boundary},
                     {"mubar_zero", inv.degenerate.mubar_zero},
                     {"any", inv.degenerate.any()}};
  return j;
}

json to_json(const ChargeSet& c) {
  return {{"L", vec3(c.L.coeffs)},      {"R", vec3(c.R.coeffs)},   {"L_s", vec3(c.L_s.coeffs)},
          {"R_s", vec3(c.R_s.coeffs)},  {"m_L", c.m_L},            {"m_R", c.m_R},
          {"m_L_s", c.m_L_s},           {"m_R_s", c.m_R_s},        {"asymmetry", c.m_R / c.m_L}};
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("tolerance override must look like key=value: " + item);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    double v = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size() || !(v > 0.0))
      throw UsageError("tolerance must be a positive number: " + item);
    out[key] = v;
  }
  return out;
}

std::pair<int, int> parse_grid(const std::string& spec) {
  const auto x = spec.find('x');
  if (spec.empty() || x == std::string::npos) throw UsageError("grid must look like AxB, got '" + spec + "'");
  int a = 0, b = 0;
  const char* s = spec.data();
  const auto r1 = std::from_chars(s, s + x, a);
  const auto r2 = std::from_chars(s + x + 1, s + spec.size(), b);
  if (r1.ec != std::errc() || r1.ptr != s + x || r2.ec != std::errc() || r2.ptr != s + spec.size())
    throw UsageError("grid must look like AxB, got '" + spec + "'");
  if (a < 1 || b < 1) throw UsageError("grid '" + spec + "' is empty");
  return {a, b};
}

Range parse_range(const std::string& spec) {
  const auto c = spec.find(':');
  if (c == std::string::npos) throw UsageError("range must look like lo:hi, got '" + spec + "'");
  Range r;
  const char* s = spec.data();
  const auto r1 = std::from_chars(s, s + c, r.lo);
  const auto r2 = std::from_chars(s + c + 1, s + spec.size(), r.hi);
  if (r1.ec != std::errc() || r1.ptr != s + c || r2.ec != std::errc() || r2.ptr != s + spec.size())
    throw UsageError("range must look like lo:hi, got '" + spec + "'");
  return r;
}

}  // namespace adss::cli
