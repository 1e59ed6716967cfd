// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using gsn::cli::run;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) result.push_back(f);
  return result;
}

// Value column of a key,value report.
std::string value_of(const std::string& csv, const std::string& key) {
  for (const auto& line : lines(csv)) {
    if (line.rfind(key + ",", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("gsngame_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int exit_code_of(const std::string& args) {
  const std::string cmd = std::string(GSNGAME_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("analytic report on the reference network") {
  const Outcome o = call({"analytic"});
  REQUIRE(o.code == 0);
  CHECK(lines(o.out).front() == "key,value");
  CHECK(std::stod(value_of(o.out, "cost_setting1_literal")) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(std::stod(value_of(o.out, "cost_setting1_engine")) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(std::abs(std::stod(value_of(o.out, "cost_setting2_literal")) - 0.8319256) <= 1e-6);
  CHECK(std::stod(value_of(o.out, "cost_setting2_engine")) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(value_of(o.out, "alpha_T") == "0.70710678118654757");
  CHECK(o.out.find('\r') == std::string::npos);
}

TEST_CASE("configuration errors name the field and exit 2") {
  Outcome o = call({"analytic", "--set", "var_Z=0"});
  CHECK(o.code == 2);
  CHECK(o.err.find("var_Z") != std::string::npos);

  o = call({"analytic", "--set", "bogus=1"});
  CHECK(o.code == 2);
  CHECK(o.err.find("bogus") != std::string::npos);

  o = call({"analytic", "--set", "P_T=abc"});
  CHECK(o.code == 2);
  CHECK(o.err.find("P_T") != std::string::npos);

  CHECK(call({"analytic", "--set", "noequals"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"analytic", "--config", "/nonexistent/file.cfg"}).code == 2);
}

TEST_CASE("config file with comments, overridden by --set") {
  const fs::path cfg = temp_path("file.cfg");
  {
    std::ofstream f(cfg);
    f << "# two jammers\nK = 2   # inline comment\n\nvar_S = 1\n";
  }
  Outcome o = call({"analytic", "--config", cfg.string()});
  REQUIRE(o.code == 0);
  CHECK(std::stod(value_of(o.out, "cost_setting1_engine")) == doctest::Approx(0.75).epsilon(1e-15));
  o = call({"analytic", "--config", cfg.string(), "--set", "K=1"});
  CHECK(std::stod(value_of(o.out, "cost_setting1_engine")) == doctest::Approx(0.6).epsilon(1e-15));

  {
    std::ofstream f(cfg);
    f << "K 2\n";
  }
  CHECK(call({"analytic", "--config", cfg.string()}).code == 2);
  fs::remove(cfg);
}

TEST_CASE("ExperimentConfig accessors") {
  gsn::cli::ExperimentConfig cfg;
  CHECK(cfg.integer("M") == 2);
  CHECK_FALSE(cfg.is_set("grid_min"));
  cfg.set("grid_min=-0.5");
  CHECK(cfg.is_set("grid_min"));
  CHECK(cfg.real("grid_min") == -0.5);
  CHECK(cfg.flag("knows_sign"));
  CHECK_THROWS_AS(cfg.set("nope", "1"), gsn::cli::ConfigError);
  cfg.set("M", "1.5");
  CHECK_THROWS_AS(cfg.integer("M"), gsn::cli::ConfigError);
  CHECK(gsn::cli::ExperimentConfig::documented_keys().size() > 20);
}

TEST_CASE("simulate writes the documented columns and is reproducible") {
  const Outcome a = call({"simulate", "--n", "1000000", "--seed", "1"});
  REQUIRE(a.code == 0);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "profile,n,seed,mean_cost,stderr,power_T,power_A,corr_SXk,analytic_cost");
  const auto f = fields(rows[1]);
  CHECK(f[0] == "thm1");
  CHECK(f[1] == "1000000");
  CHECK(std::abs(std::stod(f[3]) - 0.6) <= 3.0 * std::stod(f[4]));

  const Outcome thm2 = call({"simulate", "--n", "1000000", "--set", "profile=thm2"});
  const auto g = fields(lines(thm2.out)[1]);
  CHECK(std::abs(std::stod(g[3]) - 5.0 / 6.0) <= 3.0 * std::stod(g[4]));

  const Outcome b = call({"simulate", "--n", "1000000", "--seed", "1", "--threads", "3"});
  CHECK(a.out == b.out);
  CHECK(a.out == call({"simulate", "--n", "1000000", "--seed", "1"}).out);
}

TEST_CASE("custom profiles") {
  Outcome o = call({"simulate", "--n", "1000", "--set", "profile=custom", "--set", "tx=linear", "--set", "adv=linear",
                    "--set", "adv_gain=-0.5", "--set", "rx=fixed", "--set", "rx_gain=0.2"});
  CHECK(o.code == 0);
  o = call({"simulate", "--n", "10", "--set", "profile=custom", "--set", "adv=indep-noise", "--set", "adv_variance=3"});
  CHECK(o.code == 3);
  CHECK(call({"simulate", "--set", "profile=custom", "--set", "tx=weird"}).code == 2);
  CHECK(call({"simulate", "--set", "profile=thm9"}).code == 2);
}

TEST_CASE("sweep table and footer") {
  const Outcome o = call({"sweep", "--set", "setting=2", "--set", "grid_points=41"});
  REQUIRE(o.code == 0);
  const auto rows = lines(o.out);
  CHECK(rows.front() == "param,analytic_cost,mc_cost,mc_stderr");
  CHECK(rows.size() == 43);
  CHECK(rows.back() == "argmax,-0.70710678118654757,argmin,0.70710678118654757");
  CHECK(rows[1] == "-0.70710678118654757,0.83333333333333337,,");

  const Outcome p = call({"sweep", "--set", "side=bernoulli", "--set", "grid_points=5"});
  CHECK(fields(lines(p.out).back())[3] == "0.5");

  const Outcome mc = call({"sweep", "--set", "grid_points=3", "--set", "mc_n=20000"});
  const auto mid = fields(lines(mc.out)[2]);
  REQUIRE(mid.size() == 4);
  CHECK(std::abs(std::stod(mid[2]) - std::stod(mid[1])) <= 3.0 * std::stod(mid[3]));

  CHECK(call({"sweep", "--set", "grid_min=1", "--set", "grid_max=0"}).code == 2);
  CHECK(call({"sweep", "--set", "grid_min=-5", "--set", "grid_max=5"}).code == 3);
}

TEST_CASE("two-parameter cost grid") {
  const Outcome o = call({"sweep", "--set", "side=heatmap", "--set", "setting=2", "--set", "grid_points=41"});
  REQUIRE(o.code == 0);
  const auto rows = lines(o.out);
  CHECK(rows.front() == "tx_gain,adv_gain,analytic_cost");
  CHECK(rows.size() == 41 * 41 + 2);
  CHECK(rows.back() == "saddle_tx,0.70710678118654757,saddle_adv,-0.70710678118654757");
}

TEST_CASE("verify-saddle exit codes") {
  Outcome o = call({"verify-saddle"});
  CHECK(o.code == 0);
  CHECK(std::stod(value_of(o.out, "J_star")) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(value_of(o.out, "verdict") == "PASS");
  CHECK(value_of(o.out, "scope") == "family-restricted verification");

  o = call({"verify-saddle", "--set", "M=1", "--set", "K=3", "--set", "setting=2"});
  CHECK(o.code == 4);
  CHECK(value_of(o.out, "verdict") == "FAIL");
}

TEST_CASE("ceo, maxcorr and separation") {
  Outcome o = call({"ceo", "--set", "D_rd=0.1875"});
  REQUIRE(o.code == 0);
  auto rows = lines(o.out);
  CHECK(rows[0].rfind("sigma_T2,D_est_literal,D_est_engine", 0) == 0);
  CHECK(fields(rows[1])[4] == "1");
  CHECK(call({"ceo", "--set", "D_rd=2"}).code == 2);
  CHECK(call({"ceo", "--set", "D_rd=0.1", "--set", "R=1"}).code == 2);

  o = call({"maxcorr", "--set", "rho=0.8"});
  REQUIRE(o.code == 0);
  rows = lines(o.out);
  CHECK(rows[0] == "rho,rho_star,linearity_f,linearity_g");
  const auto f = fields(rows[1]);
  CHECK(std::abs(std::stod(f[1]) - 0.8) <= 0.02);
  CHECK(std::stod(f[2]) >= 0.999);
  CHECK(std::stod(f[3]) >= 0.999);
  CHECK(call({"maxcorr", "--set", "rho=1"}).code == 2);

  o = call({"separation", "--units", "nats"});
  REQUIRE(o.code == 0);
  CHECK(std::stod(fields(lines(o.out)[1])[3]) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("JSON output") {
  Outcome o = call({"analytic", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc.at("cost_setting1_engine").get<double>() == doctest::Approx(0.6).epsilon(1e-15));

  o = call({"sweep", "--format", "json", "--set", "grid_points=5"});
  const auto sweep = nlohmann::json::parse(o.out);
  CHECK(sweep.at("rows").size() == 5);
  CHECK(sweep.at("rows")[0].at("mc_cost").is_null());
  CHECK(sweep.at("argmax").get<double>() == 0.0);

  CHECK(call({"analytic", "--format", "xml"}).code == 2);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const fs::path out = temp_path("out.csv");
  const Outcome o = call({"sweep", "--out", out.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(slurp(out) == call({"sweep"}).out);
  fs::remove(out);
}

TEST_CASE("help lists the configuration keys") {
  const Outcome o = call({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("grid_points") != std::string::npos);
  CHECK(o.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("end-to-end exit codes of the binary") {
  CHECK(exit_code_of("analytic") == 0);
  CHECK(exit_code_of("analytic --set var_Z=0") == 2);
  CHECK(exit_code_of("simulate --n 10 --set profile=custom --set tx_gain=5") == 3);
  CHECK(exit_code_of("verify-saddle --set M=1 --set K=3 --set setting=2") == 4);
}
