#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/cli.hpp"
#include "cli/io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = adss::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::vector<std::string>* header) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool first = true;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) {
      if (first) {
        header->push_back(cell);
      } else {
        row.push_back(std::stod(cell));
      }
    }
    if (!first) rows.push_back(row);
    first = false;
  }
  return rows;
}

std::string temp_path(const std::string& name) { return std::string(ADSS_TEST_TMP) + "/" + name; }

}  // namespace

TEST(Bridge, BridgePointJson) {
  const Result r = run({"bridge", "--f", "1.6666667", "--b", "1.25", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["mu2"].get<double>(), 0.53125, 1e-6);
  EXPECT_FALSE(j["degenerate"]["any"].get<bool>());
}

TEST(Bridge, OutsideRegion) {
  const Result r = run({"bridge", "--f", "3", "--b", "1.25", "--n", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("cos2theta_s out of range"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Bridge, DegenerateCorner) {
  const Result r = run({"bridge", "--f", "1", "--b", "1", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["degenerate"]["any"].get<bool>());
  EXPECT_TRUE(j["degenerate"]["static_ads"].get<bool>());
  EXPECT_TRUE(j["cosh_alpha"].is_null());
}

TEST(Usage, BadInvocations) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"bridge", "--f", "1.5"}).code, 1);
  EXPECT_EQ(run({"bridge", "--f", "1.5", "--b", "1.2", "--n", "0"}).code, 1);
  EXPECT_EQ(run({"sample", "--f", "1.5", "--b", "1.2", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Verify, FamilyPointPasses) {
  const Result r = run({"verify", "--f", "1.6666667", "--b", "1.25", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& [key, check] : j["checks"].items()) EXPECT_TRUE(check["pass"].get<bool>()) << key;
}

TEST(Verify, PerturbedFrequencyFails) {
  const adss::SolutionParams p = adss::simple_family_solution({5.0 / 3.0, 1.25, 1});
  json j = adss::cli::to_json(p);
  j["ads"]["lambda"] = j["ads"]["lambda"].get<double>() + 1e-3;
  const std::string path = temp_path("perturbed.json");
  std::ofstream(path) << j.dump();
  const Result r = run({"verify", "--params", path});
  EXPECT_EQ(r.code, 2);
  const json rep = json::parse(r.out);
  EXPECT_FALSE(rep["checks"]["eom"]["pass"].get<bool>());
}

TEST(Verify, ParamsRoundTrip) {
  const adss::SolutionParams p = adss::simple_family_solution({1.4, 1.2, 3});
  const std::string path = temp_path("family.json");
  std::ofstream(path) << adss::cli::to_json(p).dump();
  EXPECT_EQ(run({"verify", "--params", path}).code, 0);
  EXPECT_EQ(run({"verify", "--params", temp_path("missing.json")}).code, 1);
}

TEST(Verify, GridAndToleranceErrors) {
  EXPECT_EQ(run({"verify", "--f", "1.5", "--b", "1.2", "--grid", "0x3"}).code, 1);
  EXPECT_EQ(run({"verify", "--f", "1.5", "--b", "1.2", "--grid", ""}).code, 0);
  EXPECT_EQ(run({"verify", "--f", "1.5", "--b", "1.2", "--grid", "abc"}).code, 1);
  EXPECT_EQ(run({"verify", "--f", "1.5", "--b", "1.2", "--tol", "nonsense=1"}).code, 1);
  EXPECT_EQ(run({"verify", "--f", "1.5", "--b", "1.2", "--tol", "eom=1e-30"}).code, 2);
}

TEST(Sample, SingleRowIsTheBasePoint) {
  const Result r = run({"sample", "--f", "1.5", "--b", "1.2", "--tau-steps", "1", "--sigma-steps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(header.size(), 13u);
  EXPECT_EQ(header[2], "Y0p");
  EXPECT_EQ(header[12], "P3");
  const adss::SolutionParams p = adss::simple_family_solution({1.5, 1.2, 1});
  const Eigen::Vector4d y = p.ads.base.embedding(), x = p.sphere.base.embedding();
  for (int k = 0; k < 4; ++k) {
    EXPECT_DOUBLE_EQ(rows[0][2 + k], y[k]);
    EXPECT_DOUBLE_EQ(rows[0][6 + k], x[k]);
  }
}

TEST(Sample, ConstraintsAndStereographicProjection) {
  const Result r = run({"sample", "--f", "1.5", "--b", "1.2", "--n", "2", "--tau-steps", "8", "--sigma-steps", "8"});
  ASSERT_EQ(r.code, 0);
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 64u);
  EXPECT_EQ(rows[1][0], 0.0);
  EXPECT_GT(rows[1][1], 0.0);
  for (const auto& row : rows) {
    EXPECT_NEAR(-row[2] * row[2] - row[3] * row[3] + row[4] * row[4] + row[5] * row[5], -1.0, 1e-12);
    EXPECT_NEAR(row[6] * row[6] + row[7] * row[7] + row[8] * row[8] + row[9] * row[9], 1.0, 1e-12);
    const double d = 1.0 + row[9];
    EXPECT_NEAR(row[10], row[6] / d, 1e-12 * std::max(1.0, std::abs(row[10])));
    EXPECT_NEAR(row[12], row[8] / d, 1e-12 * std::max(1.0, std::abs(row[12])));
  }
}

TEST(Sample, CliffordTorusPoint) {
  // cos 2theta_s = 0 at f^2 - b f - 1 = 0: both circles of the torus have radius 1/sqrt(2)
  const double b = 1.2, f = 0.5 * (b + std::sqrt(b * b + 4.0));
  const Result r = run({"sample", "--f", adss::cli::format_double(f), "--b", "1.2", "--tau-steps", "3",
                        "--sigma-steps", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  for (const auto& row : parse_csv(r.out, &header)) {
    EXPECT_NEAR(std::hypot(row[6], row[7]), std::hypot(row[8], row[9]), 1e-12);
  }
}

TEST(Sample, DeterministicFileOutput) {
  const std::string a = temp_path("mesh_a.csv"), b = temp_path("mesh_b.csv");
  ASSERT_EQ(run({"sample", "--f", "1.6", "--b", "1.3", "--out", a}).code, 0);
  ASSERT_EQ(run({"sample", "--f", "1.6", "--b", "1.3", "--out", b}).code, 0);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {}), tb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, tb);
}

TEST(Sample, JsonFormat) {
  const Result r = run({"sample", "--f", "1.5", "--b", "1.2", "--tau-steps", "2", "--sigma-steps", "3", "--format",
                        "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0]["ads"].size(), 4u);
}

TEST(Scan, CsvRowsAndErrors) {
  const Result r = run({"scan", "--f", "1:2", "--b", "1:1.5", "--grid", "3x2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(header[2], "admissible");
  EXPECT_EQ(rows[1][2], 0.0);
  EXPECT_EQ(run({"scan", "--f", "2:1", "--b", "1:1.5"}).code, 1);
  EXPECT_EQ(run({"scan", "--f", "1:2", "--b", "1:1.5", "--grid", "0x0"}).code, 1);
  EXPECT_EQ(run({"scan", "--f", "1-2", "--b", "1:1.5"}).code, 1);
}

TEST(Charges, BridgePointCasimirs) {
  const Result r = run({"charges", "--f", "1.6666667", "--b", "1.25", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["m_L"].get<double>(), 1.2465278, 1e-6);
  EXPECT_NEAR(j["m_R"].get<double>(), 2.1145833, 1e-6);
  EXPECT_FALSE(j["quadrature"]["under_resolved"].get<bool>());
  EXPECT_LT(j["quadrature"]["gap"].get<double>(), 1e-10);
}

TEST(Charges, UnderResolvedIsReported) {
  const Result r = run({"charges", "--f", "1.5", "--b", "1.2", "--n", "3", "--nodes", "8"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["quadrature"]["under_resolved"].get<bool>());
  EXPECT_EQ(run({"charges", "--f", "1.5", "--b", "1.2", "--nodes", "0"}).code, 1);
}

TEST(Brackets, ParticleSeedSeven) {
  const Result a = run({"brackets", "--mode", "particle", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  const json j = json::parse(a.out);
  EXPECT_LE(j["max_algebra_residual"].get<double>(), 1e-6);
  EXPECT_EQ(j["points"].size(), 20u);
  EXPECT_EQ(run({"brackets", "--mode", "particle", "--seed", "7"}).out, a.out);
  EXPECT_NE(run({"brackets", "--mode", "particle", "--seed", "8"}).out, a.out);
}

TEST(Brackets, StringModeCsv) {
  const Result r = run({"brackets", "--mode", "string", "--points", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(header[7], "orbit");
  for (const auto& row : rows) EXPECT_LE(row[7], 1e-5);
  EXPECT_EQ(run({"brackets", "--mode", "wave"}).code, 1);
}
