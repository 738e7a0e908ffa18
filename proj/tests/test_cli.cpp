// Runs the dwcat-cli binary and checks its output against the core library.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwcat/interferometer.hpp"
#include "dwcat/model.hpp"
#include "dwcat/oracle.hpp"
#include "dwcat/spinalg.hpp"

#ifndef DWCAT_CLI_PATH
#error "DWCAT_CLI_PATH must point at the dwcat-cli binary"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" DWCAT_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

using Table = std::vector<std::vector<std::string>>;

Table parse_csv(const std::string& text, std::string* header = nullptr) {
  Table rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      if (header) *header = line;
      first = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

TEST(Cli, GroundStateJson) {
  const auto r = run("ground-state -N 9 -J 1 -U -1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["chi"].get<double>(), 1.0 / 9.0, 1e-15);
  EXPECT_EQ(j["sector0"], "symmetric");
  EXPECT_EQ(j["psi0"].size(), 10u);
  EXPECT_EQ(j["psi0"][0].size(), 2u);
  const auto g = dwcat::ground_and_gap({9, 1.0, -1.0, 0.0});
  EXPECT_EQ(j["E0"].get<double>(), g.e0);
  EXPECT_EQ(j["gap"].get<double>(), g.gap);
}

TEST(Cli, GroundStateSpecialCases) {
  auto j = nlohmann::json::parse(run("ground-state -N 4 -J 1 -U 0").out);
  EXPECT_NEAR(j["gap"].get<double>(), 2.0, 1e-12);
  EXPECT_TRUE(j["chi"].is_null());
  EXPECT_TRUE(j["chi_infinite"].get<bool>());
  j = nlohmann::json::parse(run("ground-state -N 5 -J 0 -U -1").out);
  EXPECT_LE(j["gap"].get<double>(), 1e-12);
}

TEST(Cli, GroundStateCsv) {
  const auto r = run("ground-state -N 3 -J 1 -U -0.5 --format csv");
  ASSERT_EQ(r.code, 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "key,value");
  const auto g = dwcat::ground_and_gap({3, 1.0, -0.5, 0.0});
  bool saw_gap = false;
  for (const auto& row : rows)
    if (row[0] == "gap") {
      saw_gap = true;
      EXPECT_EQ(num(row[1]), g.gap);
    }
  EXPECT_TRUE(saw_gap);
}

TEST(Cli, ScanGroundExtremum) {
  const auto r = run("scan-parity -N 9 -J 1 -U -1 --theta 0:6.2832:721 --state ground");
  ASSERT_EQ(r.code, 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "theta,parity,sigma_parity,parity_deriv,sigma_theta,precision_norm,flag");
  ASSERT_EQ(rows.size(), 721u);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (std::abs(num(rows[i][0]) - M_PI / 2) < std::abs(num(rows[best][0]) - M_PI / 2)) best = i;
  // the grid point is 1.5e-5 away from pi/2, curvature N^2 makes that ~1e-8
  const double theta = num(rows[best][0]);
  const auto g = dwcat::ground_and_gap({9, 1.0, -1.0, 0.0});
  const double at_half_pi = std::abs(dwcat::run_pipeline(g.psi0, M_PI / 2).parity);
  EXPECT_GE(at_half_pi, 1.0 - 1e-9);
  EXPECT_GE(std::abs(num(rows[best][1])), 1.0 - 1e-9 - 100 * std::pow(theta - M_PI / 2, 2));
}

TEST(Cli, ScanCatMatchesCosine) {
  const auto r = run("scan-parity -N 9 --state cat:0");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 721u);
  EXPECT_EQ(num(rows.front()[0]), 0.0);
  EXPECT_EQ(num(rows.back()[0]), 2 * M_PI);
  for (const auto& row : rows) {
    EXPECT_NEAR(num(row[1]), std::cos(9 * (num(row[0]) + M_PI / 2)), 1e-10);
    EXPECT_TRUE(row[6] == "ok" || row[6] == "limit");
  }
}

TEST(Cli, ScanThermalIsZero) {
  const auto r = run("scan-parity -N 9 --state thermal -J 1 -U -100");
  ASSERT_EQ(r.code, 0);
  for (const auto& row : parse_csv(r.out)) EXPECT_LE(std::abs(num(row[1])), 1e-9);
}

TEST(Cli, ScanCsvRoundTripIsBitExact) {
  const auto r = run("scan-parity -N 7 -J 1 -U -0.6 --theta 0.1:3:97");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  const auto grid = dwcat::linear_grid(0.1, 3.0, 97);
  const auto g = dwcat::ground_and_gap({7, 1.0, -0.6, 0.0});
  const auto want = dwcat::scan(g.psi0, grid);
  ASSERT_EQ(rows.size(), want.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(num(rows[i][0]), want[i].theta);
    EXPECT_EQ(num(rows[i][1]), want[i].parity);
    EXPECT_EQ(num(rows[i][2]), want[i].sigma_parity);
    EXPECT_EQ(num(rows[i][3]), want[i].parity_deriv);
    EXPECT_EQ(num(rows[i][4]), want[i].sigma_theta);
    EXPECT_EQ(num(rows[i][5]), want[i].precision_norm);
    EXPECT_EQ(rows[i][6], dwcat::to_string(want[i].flag));
  }
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"scan-parity -N 12 -U -0.3", "gap-scan", "ground-state -N 8 -U -2"}) {
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.out.find('\r'), std::string::npos);
  }
}

TEST(Cli, GapScanDefaults) {
  const auto r = run("gap-scan");
  ASSERT_EQ(r.code, 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "N,chi,U,E0,E1,gap,underflow_flag");
  ASSERT_EQ(rows.size(), 5u * 41u);
  // same chi column, consecutive N; flagged rows are below double resolution
  for (std::size_t c = 0; c < 41; ++c)
    for (std::size_t k = 1; k < 5; ++k) {
      const auto& a = rows[(k - 1) * 41 + c];
      const auto& b = rows[k * 41 + c];
      if (a[6] == "1" || b[6] == "1") continue;
      EXPECT_LT(num(b[5]), num(a[5])) << "chi " << a[1];
    }
  // N = 3, chi = 1 against the dense oracle
  const auto& row = rows[20];
  ASSERT_EQ(row[0], "3");
  EXPECT_EQ(num(row[1]), 1.0);
  const auto o = dwcat::oracle::jacobi_eigen(dwcat::oracle::DenseSymmetric::from_tridiag(
      dwcat::build_hamiltonian({3, 1.0, num(row[2]), 0.0})));
  EXPECT_NEAR(num(row[5]), o.values[1] - o.values[0], 1e-12);
}

TEST(Cli, GapScanInfiniteChi) {
  const auto r = run("gap-scan --n-list 3,6 --chi-list 1,inf -J 1");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1][1], "inf");
  EXPECT_NEAR(num(rows[1][5]), 2.0, 1e-12);
  EXPECT_NEAR(num(rows[3][5]), 2.0, 1e-12);
}

TEST(Cli, OutputDirectoryOverride) {
  const auto dir = std::filesystem::temp_directory_path() / "dwcat_cli_test";
  std::filesystem::remove_all(dir);
  const auto r = run("gap-scan --n-list 3 --chi-list 1 -o sub/gap.csv",
                     "DWCAT_OUTPUT_DIR='" + dir.string() + "'");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(dir / "sub" / "gap.csv");
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run("gap-scan --n-list 3 --chi-list 1").out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("ground-state").code, 2);
  EXPECT_EQ(run("ground-state -N 1").code, 2);
  EXPECT_EQ(run("ground-state -N 4 -U abc").code, 2);
  EXPECT_EQ(run("scan-parity -N 4 --theta 0:1").code, 2);
  EXPECT_EQ(run("scan-parity -N 4 --theta 0:1:1").code, 2);
  EXPECT_EQ(run("scan-parity -N 4 --theta 1:0:5").code, 2);
  EXPECT_EQ(run("scan-parity -N 4 --state squeezed").code, 2);
  EXPECT_EQ(run("scan-parity -N 4 --format xml").code, 2);
  EXPECT_EQ(run("gap-scan --chi-list 0").code, 2);
  EXPECT_EQ(run("verify --inject-fault nonsense").code, 2);
}

TEST(Cli, Verify) {
  auto r = run("verify --quick");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  r = run("verify --quick --inject-fault sy-sign");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] spin.commutators"), std::string::npos);
}

}  // namespace
