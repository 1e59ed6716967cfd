// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "gsn/analytics.hpp"
#include "gsn/game.hpp"
#include "gsn/maxcorr.hpp"
#include "gsn/simulate.hpp"

namespace gsn::cli {
namespace {

using Cell = std::variant<std::monostate, double, long long, std::string, bool>;

// "auto" means the command picks a value from the network parameters.
const std::vector<std::pair<std::string, std::string>> kKeys = {
    {"M", "2"},
    {"K", "1"},
    {"var_S", "1"},
    {"var_WT", "1"},
    {"var_WA", "1"},
    {"var_Z", "1"},
    {"P_T", "1"},
    {"P_A", "1"},
    {"n", "1000000"},
    {"seed", "1"},
    {"threads", "0"},
    {"grid_min", "auto"},
    {"grid_max", "auto"},
    {"grid_points", "41"},
    {"setting", "1"},
    {"units", "bits"},
    {"tolerance", "1e-9"},
    {"out", ""},
    {"format", "csv"},
    {"profile", "thm1"},
    {"tx", "randomized"},
    {"tx_gain", "auto"},
    {"tx_p", "0.5"},
    {"adv", "coord-noise"},
    {"adv_gain", "0"},
    {"adv_variance", "auto"},
    {"adv_coordinated", "true"},
    {"rx", "mmse"},
    {"rx_gain", "0"},
    {"knows_sign", "true"},
    {"side", "adversary"},
    {"lambda", "-0.5"},
    {"mc_n", "0"},
    {"D_rd", "auto"},
    {"R", "auto"},
    {"rho", "0.8"},
    {"bins", "64"},
    {"half_width", "4"},
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string csv_field(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char c : v) {
            if (c == '"') quoted += '"';
            quoted += c;
          }
          return quoted + "\"";
        }
      },
      cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_real(v);
          return v;
        } else {
          return v;
        }
      },
      cell);
}

/// Command output: either a key/value listing or a table with an optional
/// footer of key/value pairs.
struct Output {
  bool key_value = false;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> footer;

  void add(const std::string& key, Cell value) { rows.push_back({key, std::move(value)}); }

  std::string csv() const {
    std::string text;
    auto line = [&](const std::vector<Cell>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text += ',';
        text += csv_field(cells[i]);
      }
      text += '\n';
    };
    if (key_value) {
      text += "key,value\n";
      for (const auto& row : rows) line(row);
      return text;
    }
    std::vector<Cell> header(columns.begin(), columns.end());
    line(header);
    for (const auto& row : rows) line(row);
    if (!footer.empty()) {
      std::vector<Cell> cells;
      for (const auto& [key, value] : footer) {
        cells.emplace_back(key);
        cells.push_back(value);
      }
      line(cells);
    }
    return text;
  }

  std::string json() const {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    if (key_value) {
      for (const auto& row : rows) doc[std::get<std::string>(row[0])] = json_value(row[1]);
    } else {
      auto& array = doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = json_value(row[i]);
        array.push_back(std::move(obj));
      }
      for (const auto& [key, value] : footer) doc[key] = json_value(value);
    }
    return doc.dump(2) + "\n";
  }
};

Units parse_units(const std::string& text) {
  if (text == "bits") return Units::Bits;
  if (text == "nats") return Units::Nats;
  throw ConfigError("units: expected bits or nats, got '" + text + "'");
}

std::vector<double> command_grid(const ExperimentConfig& cfg, double auto_lo, double auto_hi) {
  const double lo = cfg.is_set("grid_min") ? cfg.real("grid_min") : auto_lo;
  const double hi = cfg.is_set("grid_max") ? cfg.real("grid_max") : auto_hi;
  const long long points = cfg.integer("grid_points");
  if (points < 1 || points > 100000) throw ConfigError("grid_points: must lie in [1, 100000]");
  if (!(lo <= hi)) throw ConfigError("grid_min: must not exceed grid_max");
  return default_grid(lo, hi, static_cast<int>(points));
}

int setting_of(const ExperimentConfig& cfg) {
  const long long s = cfg.integer("setting");
  if (s != 1 && s != 2) throw ConfigError("setting: must be 1 or 2");
  return static_cast<int>(s);
}

std::uint64_t unsigned_key(const ExperimentConfig& cfg, const std::string& key) {
  const long long v = cfg.integer(key);
  if (v < 0) throw ConfigError(key + ": must be >= 0");
  return static_cast<std::uint64_t>(v);
}

SimOptions sim_options(const ExperimentConfig& cfg) {
  return SimOptions{static_cast<unsigned>(unsigned_key(cfg, "threads"))};
}

StrategyProfile custom_profile(const ExperimentConfig& cfg, const NetworkConfig& net) {
  StrategyProfile profile;
  const double tx_gain = cfg.is_set("tx_gain") ? cfg.real("tx_gain") : optimal_gains(net).alpha_T;
  const std::string tx = cfg.text("tx");
  if (tx == "linear") {
    profile.transmitter = DeterministicLinear{tx_gain};
  } else if (tx == "randomized") {
    profile.transmitter = RandomizedSign{tx_gain, cfg.real("tx_p")};
  } else {
    throw ConfigError("tx: expected linear or randomized, got '" + tx + "'");
  }

  const std::string adv = cfg.text("adv");
  const double variance = cfg.is_set("adv_variance") ? cfg.real("adv_variance") : net.P_A;
  if (adv == "coord-noise") {
    profile.adversary = CoordinatedNoise{variance};
  } else if (adv == "indep-noise") {
    profile.adversary = IndependentNoise{variance};
  } else if (adv == "linear") {
    profile.adversary = LinearPlusNoise{cfg.real("adv_gain"), cfg.flag("adv_coordinated")};
  } else {
    throw ConfigError("adv: expected coord-noise, indep-noise or linear, got '" + adv + "'");
  }

  const std::string rx = cfg.text("rx");
  profile.receiver.knows_sign = cfg.flag("knows_sign");
  if (rx == "mmse") {
    profile.receiver.rule = MMSEFromStats{};
  } else if (rx == "fixed") {
    profile.receiver.rule = FixedLinear{cfg.real("rx_gain")};
  } else {
    throw ConfigError("rx: expected mmse or fixed, got '" + rx + "'");
  }
  return profile;
}

Output cmd_analytic(const ExperimentConfig& cfg) {
  const NetworkConfig net = cfg.network();
  const Gains gains = optimal_gains(net);
  const double s1_literal = cost_setting1_literal(net);
  const double s1_engine = cost_setting1_engine(net);
  const CostReport uncoord = cost_setting1_uncoordinated(net);
  const CostReport s2 = cost_setting2(net);
  Output out;
  out.key_value = true;
  out.add("alpha_T", gains.alpha_T);
  out.add("alpha_A", gains.alpha_A);
  out.add("cost_setting1_literal", s1_literal);
  out.add("cost_setting1_engine", s1_engine);
  out.add("cost_setting1_uncoord_literal", uncoord.paper_literal);
  out.add("cost_setting1_uncoord_engine", uncoord.engine);
  out.add("cost_setting2_literal", s2.paper_literal);
  out.add("cost_setting2_engine", s2.engine);
  out.add("separation_setting1", separation_baseline(net, 1));
  out.add("separation_setting2", separation_baseline(net, 2));
  out.add("ceo_sigma_T2", ceo_sigma_T2(net));
  const CostReport d_est = ceo_estimation_error(net);
  out.add("ceo_D_est_literal", d_est.paper_literal);
  out.add("ceo_D_est_engine", d_est.engine);
  return out;
}

Output cmd_simulate(const ExperimentConfig& cfg) {
  const NetworkConfig net = cfg.network();
  const std::string selector = cfg.text("profile");
  StrategyProfile profile;
  if (selector == "thm1") {
    profile = setting1_profile(net);
  } else if (selector == "thm1-uncoord") {
    profile = setting1_uncoordinated_profile(net);
  } else if (selector == "thm2") {
    profile = setting2_profile(net);
  } else if (selector == "custom") {
    profile = custom_profile(cfg, net);
  } else {
    throw ConfigError("profile: expected thm1, thm1-uncoord, thm2 or custom, got '" + selector + "'");
  }
  const std::uint64_t n = unsigned_key(cfg, "n");
  const std::uint64_t seed = unsigned_key(cfg, "seed");
  const double analytic = profile_cost(profile, net);
  const SimResult sim = simulate(profile, net, n, seed, sim_options(cfg));

  Output out;
  out.columns = {"profile", "n", "seed", "mean_cost", "stderr", "power_T", "power_A", "corr_SXk", "analytic_cost"};
  out.rows.push_back({selector, static_cast<long long>(n), static_cast<long long>(seed), sim.mean_cost, sim.stderr,
                      sim.empirical_power_T, sim.empirical_power_A, sim.empirical_corr_SXk, analytic});
  return out;
}

// Analytic cost over (transmitter gain x jammer gain), both on their full
// feasible intervals. grid_min/grid_max are ignored here.
Output heatmap(const ExperimentConfig& cfg, const NetworkConfig& net, int setting) {
  const long long points = cfg.integer("grid_points");
  if (points < 1 || points > 1001) throw ConfigError("grid_points: must lie in [1, 1001] for a heatmap");
  const Gains gains = optimal_gains(net);
  const auto tx_grid = default_grid(-gains.alpha_T, gains.alpha_T, static_cast<int>(points));
  const auto adv_grid = default_grid(gains.alpha_A, -gains.alpha_A, static_cast<int>(points));
  StrategyProfile base = setting == 1 ? setting1_profile(net) : setting2_profile(net);
  base.adversary = LinearPlusNoise{0.0, setting == 1};

  Output out;
  out.columns = {"tx_gain", "adv_gain", "analytic_cost"};
  for (double tx : tx_grid) {
    for (double adv : adv_grid) {
      StrategyProfile p = base;
      std::visit([&](auto& t) { t.gain = tx; }, p.transmitter);
      std::get<LinearPlusNoise>(p.adversary).gain = adv;
      out.rows.push_back({tx, adv, profile_cost(p, net)});
    }
  }
  out.footer = {{"saddle_tx", gains.alpha_T}, {"saddle_adv", setting == 1 ? 0.0 : gains.alpha_A}};
  return out;
}

Output cmd_sweep(const ExperimentConfig& cfg) {
  const NetworkConfig net = cfg.network();
  const int setting = setting_of(cfg);
  McOptions mc;
  mc.mc_n = unsigned_key(cfg, "mc_n");
  mc.seed = unsigned_key(cfg, "seed");
  mc.sim = sim_options(cfg);

  const std::string side = cfg.text("side");
  if (side == "heatmap") return heatmap(cfg, net, setting);
  SweepResult result;
  if (side == "adversary") {
    const double limit = max_adversary_gain(net);
    const auto grid = command_grid(cfg, -limit, limit);
    result = setting == 1 ? sweep_adversary_setting1(net, grid, mc) : sweep_adversary_setting2(net, grid, mc);
  } else if (side == "bernoulli") {
    result = sweep_bernoulli_p(net, command_grid(cfg, 0.0, 1.0), cfg.real("lambda"), mc);
  } else if (side == "transmitter") {
    const double alpha_T = optimal_gains(net).alpha_T;
    SweepSpec spec;
    spec.side = SweptSide::Transmitter;
    spec.grid = command_grid(cfg, -alpha_T, alpha_T);
    spec.cfg = net;
    spec.mc = mc;
    spec.fixed_profile = setting == 1 ? setting1_profile(net) : setting2_profile(net);
    result = run_sweep(spec);
  } else {
    throw ConfigError("side: expected adversary, bernoulli, transmitter or heatmap, got '" + side + "'");
  }

  Output out;
  out.columns = {"param", "analytic_cost", "mc_cost", "mc_stderr"};
  for (const auto& row : result.rows) {
    out.rows.push_back({row.param, row.analytic_cost, row.mc_cost ? Cell{*row.mc_cost} : Cell{},
                        row.mc_stderr ? Cell{*row.mc_stderr} : Cell{}});
  }
  out.footer = {{"argmax", result.argmax_param}, {"argmin", result.argmin_param}};
  return out;
}

Output cmd_verify_saddle(const ExperimentConfig& cfg, bool& passed) {
  const NetworkConfig net = cfg.network();
  SaddleOptions options;
  options.tolerance = cfg.real("tolerance");
  const long long points = cfg.integer("grid_points");
  if (points < 2 || points > 100000) throw ConfigError("grid_points: must lie in [2, 100000]");
  options.grid_points = static_cast<int>(points);
  const SaddleReport report = verify_saddle(net, setting_of(cfg), options);
  passed = report.passed;

  Output out;
  out.key_value = true;
  out.add("setting", static_cast<long long>(report.setting));
  out.add("J_star", report.J_star);
  out.add("max_lhs_violation", report.max_lhs_violation);
  out.add("max_rhs_violation", report.max_rhs_violation);
  out.add("worst_adversary", report.worst_adversary);
  out.add("worst_adversary_param", report.worst_adversary_param);
  out.add("worst_transmitter_param", report.worst_transmitter_param);
  out.add("worst_transmitter_p", report.worst_transmitter_p);
  out.add("tolerance", report.tolerance);
  out.add("verdict", std::string(report.passed ? "PASS" : "FAIL"));
  out.add("scope", report.scope);
  return out;
}

Output cmd_ceo(const ExperimentConfig& cfg) {
  const NetworkConfig net = cfg.network();
  const Units units = parse_units(cfg.text("units"));
  const double sigma_T2 = ceo_sigma_T2(net);
  const CostReport d_est = ceo_estimation_error(net);
  if (cfg.is_set("D_rd") && cfg.is_set("R")) throw ConfigError("D_rd: give either D_rd or R, not both");

  Output out;
  out.columns = {"sigma_T2", "D_est_literal", "D_est_engine", "D_rd", "R", "D_total", "units"};
  Cell d_rd, rate, total;
  if (cfg.is_set("D_rd")) {
    const double d = cfg.real("D_rd");
    d_rd = d;
    rate = ceo_rate(sigma_T2, d, units);
    total = d + d_est.engine;
  } else if (cfg.is_set("R")) {
    const double r = cfg.real("R");
    const double d = ceo_distortion_at_rate(sigma_T2, r, units);
    d_rd = d;
    rate = r;
    total = d + d_est.engine;
  }
  out.rows.push_back({sigma_T2, d_est.paper_literal, d_est.engine, d_rd, rate, total, cfg.text("units")});
  return out;
}

Output cmd_maxcorr(const ExperimentConfig& cfg) {
  const double rho = cfg.real("rho");
  const long long bins = cfg.integer("bins");
  if (bins < 8 || bins > 4096) throw ConfigError("bins: must lie in [8, 4096]");
  const auto joint = discretize_bivariate_gaussian(rho, static_cast<int>(bins), cfg.real("half_width"));
  const auto mc = maximal_correlation(joint);
  Output out;
  out.columns = {"rho", "rho_star", "linearity_f", "linearity_g"};
  out.rows.push_back({rho, mc.rho_star, linearity_score(mc.f, mc.grid_x, mc.p_x),
                      linearity_score(mc.g, mc.grid_y, mc.p_y)});
  return out;
}

Output cmd_separation(const ExperimentConfig& cfg) {
  const NetworkConfig net = cfg.network();
  const int setting = setting_of(cfg);
  const Units units = parse_units(cfg.text("units"));
  const double capacity = separation_capacity(net, setting);
  Output out;
  out.columns = {"setting", "capacity", "units", "D_sep", "uncoded_cost"};
  const double uncoded = setting == 1 ? cost_setting1_engine(net) : cost_setting2(net).engine;
  out.rows.push_back({static_cast<long long>(setting), units == Units::Bits ? capacity / std::log(2.0) : capacity,
                      cfg.text("units"), separation_baseline(net, setting), uncoded});
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + text + "'");
}

std::string help_footer() {
  std::string text = "\nConfiguration keys (file `key = value` or --set key=value):\n";
  for (const auto& [key, value] : kKeys) text += fmt::format("  {:<16} default: {}\n", key, value.empty() ? "(none)" : value);
  text += "\nExit codes: 0 success/PASS, 2 configuration error, 3 infeasible strategy, 4 verification failure.\n";
  return text;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  for (const auto& [key, value] : kKeys) values_[key] = value;
}

const std::vector<std::pair<std::string, std::string>>& ExperimentConfig::documented_keys() { return kKeys; }

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key + ": unknown configuration key");
  it->second = value;
  explicit_[key] = true;
}

void ExperimentConfig::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void ExperimentConfig::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.find('=') == std::string::npos) {
      throw ConfigError(fmt::format("{}:{}: expected key = value", origin, number));
    }
    set(line);
  }
}

void ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  load_text(buffer.str(), path);
}

bool ExperimentConfig::is_set(const std::string& key) const {
  const std::string value = text(key);
  return !value.empty() && value != "auto";
}

std::string ExperimentConfig::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key + ": unknown configuration key");
  return it->second;
}

double ExperimentConfig::real(const std::string& key) const {
  const std::string value = text(key);
  double parsed = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, parsed);
  if (ec != std::errc{} || ptr != end) throw ConfigError(key + ": expected a number, got '" + value + "'");
  return parsed;
}

long long ExperimentConfig::integer(const std::string& key) const {
  const std::string value = text(key);
  long long parsed = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, parsed);
  if (ec != std::errc{} || ptr != end) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return parsed;
}

bool ExperimentConfig::flag(const std::string& key) const { return parse_bool(key, text(key)); }

NetworkConfig ExperimentConfig::network() const {
  NetworkConfig cfg;
  const long long M = integer("M");
  const long long K = integer("K");
  if (M < 0 || M > 1000000) throw ConfigError("M: must lie in [0, 1000000]");
  if (K < 0 || K > 1000000) throw ConfigError("K: must lie in [0, 1000000]");
  cfg.M = static_cast<int>(M);
  cfg.K = static_cast<int>(K);
  cfg.var_S = real("var_S");
  cfg.var_WT = real("var_WT");
  cfg.var_WA = real("var_WA");
  cfg.var_Z = real("var_Z");
  cfg.P_T = real("P_T");
  cfg.P_A = real("P_A");
  validate_config(cfg);
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian sensor network jamming game: analytic costs, Monte Carlo and saddle checks", "gsngame"};
  app.footer(help_footer());
  std::string command;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::string format = "csv";
  std::string units;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> n;
  std::optional<unsigned> threads;

  app.add_option("command", command, "analytic | simulate | sweep | verify-saddle | ceo | maxcorr | separation")
      ->required()
      ->check(CLI::IsMember({"analytic", "simulate", "sweep", "verify-saddle", "ceo", "maxcorr", "separation"}));
  app.add_option("--config", config_path, "Flat key = value configuration file");
  app.add_option("--set", overrides, "Override one key (key=value); repeatable")->take_last();
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--units", units, "bits | nats")->check(CLI::IsMember({"bits", "nats"}));
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--n", n, "Monte Carlo sample count");
  app.add_option("--threads", threads, "Worker threads (0 = all cores); never changes results");

  // --set is repeatable: collect every occurrence.
  app.get_option("--set")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  std::vector<std::string> argv_store{"gsngame"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const auto& assignment : overrides) cfg.set(assignment);
    if (!units.empty()) cfg.set("units", units);
    if (seed) cfg.set("seed", std::to_string(*seed));
    if (n) cfg.set("n", std::to_string(*n));
    if (threads) cfg.set("threads", std::to_string(*threads));
    if (app.get_option("--format")->count() == 0) format = cfg.text("format");
    if (format != "csv" && format != "json") throw ConfigError("format: expected csv or json");
    if (out_path.empty()) out_path = cfg.text("out");

    bool passed = true;
    Output result;
    if (command == "analytic") {
      result = cmd_analytic(cfg);
    } else if (command == "simulate") {
      result = cmd_simulate(cfg);
    } else if (command == "sweep") {
      result = cmd_sweep(cfg);
    } else if (command == "verify-saddle") {
      result = cmd_verify_saddle(cfg, passed);
    } else if (command == "ceo") {
      result = cmd_ceo(cfg);
    } else if (command == "maxcorr") {
      result = cmd_maxcorr(cfg);
    } else {
      result = cmd_separation(cfg);
    }

    const std::string text = format == "json" ? result.json() : result.csv();
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw ConfigError("out: cannot write '" + out_path + "'");
      file << text;
    }
    if (!passed) {
      err << "verification FAILED\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InfeasiblePower ? kExitInfeasible : kExitConfig;
  }
}

}  // namespace gsn::cli
