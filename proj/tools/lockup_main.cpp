//------------------------------------------------------------------------------
//
//   Copyright 2026 the lockup authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Command-line surface: solve equilibria, verify them as perfect Bayesian
// equilibria, simulate auction outcomes, and scan deviation profits.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or solver error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lockup/pooling.hpp"
#include "lockup/profile.hpp"
#include "lockup/sequential.hpp"
#include "lockup/sim.hpp"
#include "lockup/simultaneous.hpp"
#include "lockup/text_io.hpp"
#include "lockup/verify.hpp"

namespace {

using namespace lockup;

struct CommonOpts {
  std::string regime;
  std::string dist = "";
  double cost = 0.15;
  std::string out = "";
};

std::string default_dist(const std::string& regime) {
  if (regime == "sequential-sqrt") return "sqrt";
  if (regime == "sequential-uniform") return "uniform";
  if (regime == "pooling") return "quadratic";
  return "uniform";
}

Distribution resolve_dist(const CommonOpts& o) {
  return Distribution::from_name(o.dist.empty() ? default_dist(o.regime) : o.dist);
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << body;
}

double parse_response_arg(const std::string& s) {
  const std::string prefix = "d1=";
  const std::string arg = s.rfind(prefix, 0) == 0 ? s.substr(prefix.size()) : s;
  return std::stod(arg);
}

// Expands `--config FILE` (flat key=value lines, # comments) into ordinary
// flags placed right after the subcommand. Keys already given on the command
// line are skipped, so explicit flags override the file.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string cfg;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      cfg = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      cfg = args[i].substr(9);
    }
  }
  if (cfg.empty() || args.empty()) return args;
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) {
      given.insert(a.substr(2, a.find('=') - 2));
    }
  }
  std::ifstream f(cfg);
  if (!f) throw std::runtime_error("cannot read config file: " + cfg);
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty() || given.count(key)) continue;
    extra.push_back("--" + key + "=" + value);
  }
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

std::string deposit_curve_csv(const StrategyProfile& profile) {
  std::string csv = "v,deposit,bid\n";
  for (int i = 0; i <= 1000; ++i) {
    const double v = i / 1000.0;
    csv += fmt9(v) + "," + fmt9(profile.bidder1_deposit(v)) + "," +
           fmt9(profile.bidder1_bid(v)) + "\n";
  }
  return csv;
}

std::string response_csv(const StrategyProfile& profile, double d1) {
  const Bidder2Slice slice = profile.bidder2_slice(d1);
  std::string csv = "v2,deposit\n";
  for (int i = 0; i <= 1000; ++i) {
    const double v2 = i / 1000.0;
    const double dep = v2 >= slice.entry_threshold ? slice.bid(v2) : 0.0;
    csv += fmt9(v2) + "," + fmt9(dep) + "\n";
  }
  return csv;
}

int cmd_solve(const CommonOpts& o, double step, double dbar,
              const std::optional<std::string>& response) {
  const Distribution dist = resolve_dist(o);
  const Regime regime = parse_regime(o.regime, dist.name());
  JsonWriter w;
  w.obj_open();
  w.kv("regime", regime_name(regime));
  w.kv("dist", dist.name());
  w.kv("cost", o.cost);

  std::unique_ptr<StrategyProfile> profile;
  switch (regime) {
    case Regime::Simultaneous: {
      profile = make_profile(regime, dist, o.cost, step);
      w.key("deposit_at").obj_open();
      for (double v : {0.25, 0.5, 0.75, 1.0}) {
        w.kv(fmt9(v), profile->bidder1_deposit(v));
      }
      w.obj_close();
      break;
    }
    case Regime::SequentialSqrt: {
      const SqrtSeparating eq(o.cost);
      w.kv("entry_point", eq.entry_point());
      w.kv("switch_point", eq.switch_point());
      w.kv("pool_threshold", eq.pool_threshold());
      w.kv("top_deposit", eq.top_deposit());
      profile = make_profile(regime, dist, o.cost);
      break;
    }
    case Regime::SequentialUniform: {
      const UniformConditional eq(o.cost);
      w.kv("entry_point", eq.entry_point());
      w.kv("pool_threshold", eq.pool_threshold());
      w.kv("top_deposit", eq.top_deposit());
      profile = make_profile(regime, dist, o.cost);
      break;
    }
    case Regime::Pooling: {
      const PoolingParams p = solve_marginal_types(o.cost, dbar);
      w.kv("u", p.u);
      w.kv("v", p.v);
      w.kv("d2_at_v", interior_deposit(p, 1.0, p.v));
      w.kv("identity_residual", p.identity_residual());
      w.kv("zero_profit_residual", pooling_zero_profit_residual(p));
      w.kv("inequality_lhs", p.inequality_lhs());
      w.kv("inequality_holds", p.inequality_holds());
      w.kv("dbar", p.dbar);
      profile = make_profile(regime, dist, o.cost);
      break;
    }
  }

  if (response) {
    const double d1 = parse_response_arg(*response);
    const Bidder2Slice slice = profile->bidder2_slice(d1);
    w.kv("response_d1", d1);
    w.kv("response_entry_threshold", slice.entry_threshold);
    const std::string csv = response_csv(*profile, d1);
    if (!o.out.empty()) {
      write_text(o.out, csv);
    } else {
      std::cout << csv;
    }
  } else if (!o.out.empty()) {
    write_text(o.out, deposit_curve_csv(*profile));
  }
  w.obj_close();
  std::cout << w.take() << "\n";
  return 0;
}

int cmd_verify(const CommonOpts& o, double eps, const std::string& mutate,
               int grid_types, int grid_devs, bool serial) {
  const Distribution dist = resolve_dist(o);
  const Regime regime = parse_regime(o.regime, dist.name());
  if (regime == Regime::Simultaneous) {
    // the PBE conditions concern the sequential game; the simultaneous
    // schedule's best-response property lives in the test suite
    throw std::invalid_argument(
        "verify supports sequential-sqrt, sequential-uniform and pooling");
  }
  std::unique_ptr<StrategyProfile> profile = make_profile(regime, dist, o.cost);
  if (!mutate.empty()) {
    const std::string prefix = "scale=";
    if (mutate.rfind(prefix, 0) != 0) {
      throw std::invalid_argument("--mutate expects scale=<factor>");
    }
    profile = make_scaled_profile(std::move(profile),
                                  std::stod(mutate.substr(prefix.size())));
  }
  const VerificationReport rep =
      verify_profile(*profile, eps, grid_types, grid_devs,
                     serial ? Execution::Serial : Execution::Parallel);
  const std::string body = report_to_json(rep);
  if (!o.out.empty()) {
    write_text(o.out, body);
    JsonWriter w;
    w.obj_open();
    w.kv("profile", rep.profile);
    w.kv("bidder1_max_gain", rep.bidder1.max_gain);
    w.kv("bidder2_max_gain", rep.bidder2.max_gain);
    w.kv("belief_residual", rep.belief_residual);
    w.kv("pass", rep.pass);
    w.obj_close();
    std::cout << w.take() << "\n";
  } else {
    std::cout << body;
  }
  return rep.pass ? 0 : 1;
}

int cmd_simulate(const CommonOpts& o, std::int64_t n, std::uint64_t seed,
                 bool serial) {
  const Distribution dist = resolve_dist(o);
  const Regime regime = parse_regime(o.regime, dist.name());
  const std::unique_ptr<StrategyProfile> profile = make_profile(regime, dist, o.cost);
  const MonteCarloMetrics m = monte_carlo(
      *profile, n, seed, serial ? Execution::Serial : Execution::Parallel);
  const std::string body = metrics_to_json(m);
  if (!o.out.empty()) write_text(o.out, body);
  std::cout << body;
  return 0;
}

int cmd_deviation_scan(const CommonOpts& o, double v1, int points, double dbar) {
  const Distribution dist = resolve_dist(o);
  const Regime regime = parse_regime(o.regime, dist.name());
  if (regime != Regime::Pooling) {
    throw std::invalid_argument("deviation-scan supports --regime pooling only");
  }
  const PoolingParams p = solve_marginal_types(o.cost, dbar);
  std::string csv = "d1,profit\n";
  for (int i = 1; i <= points; ++i) {
    const double d1 = p.u + (p.dbar - p.u) * static_cast<double>(i) / points;
    csv += fmt9(d1) + "," + fmt9(pooling_deviation_profit(p, dist, v1, d1)) + "\n";
  }
  if (!o.out.empty()) {
    write_text(o.out, csv);
  } else {
    std::cout << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"second-price auctions with costly visible deposits: "
               "equilibrium solvers, PBE verification, Monte Carlo"};
  app.require_subcommand(1);

  CommonOpts so, vo, mo, do_;
  double step = 1e-4, dbar = 4.0, eps = 1e-3, scan_v1 = 1.0;
  std::string response_arg, mutate;
  int grid_types = 50, grid_devs = 200, scan_points = 300;
  std::int64_t n = 1000000;
  std::uint64_t seed = 42;
  bool verify_serial = false, sim_serial = false;

  std::string config_path;  // consumed by expand_config_args before parsing
  const auto add_common = [&config_path](CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--regime", o.regime,
                    "simultaneous|sequential-sqrt|sequential-uniform|pooling|sequential")
        ->required();
    cmd->add_option("--dist", o.dist, "sqrt|uniform|quadratic|power:<alpha>");
    cmd->add_option("--cost", o.cost, "marginal deposit cost c > 0")->required();
    cmd->add_option("--out", o.out, "output file path");
    cmd->add_option("--config", config_path,
                    "flat key=value config; explicit flags override it");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve an equilibrium, emit curve CSV + JSON summary");
  add_common(solve, so);
  solve->add_option("--step", step, "ODE march step (simultaneous)");
  solve->add_option("--dbar", dbar, "maximum deposit");
  solve->add_option("--response", response_arg, "emit bidder 2's response to d1=<x> as v2,deposit CSV");

  CLI::App* verify = app.add_subcommand("verify", "check PBE conditions; exit 0 iff pass");
  add_common(verify, vo);
  verify->add_option("--eps", eps, "max tolerated deviation gain");
  verify->add_option("--mutate", mutate, "corrupt the profile, e.g. scale=1.5");
  verify->add_option("--grid-types", grid_types, "type grid size");
  verify->add_option("--grid-devs", grid_devs, "deviation grid size");
  verify->add_flag("--serial", verify_serial, "disable OpenMP");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo outcome metrics");
  add_common(simulate, mo);
  simulate->add_option("--n", n, "number of auctions (>= 1)");
  simulate->add_option("--seed", seed, "random seed");
  simulate->add_flag("--serial", sim_serial, "disable OpenMP");

  CLI::App* scan = app.add_subcommand("deviation-scan", "bidder-1 deviation profit over d1 (pooling)");
  add_common(scan, do_);
  scan->add_option("--v1", scan_v1, "bidder-1 type")->required();
  scan->add_option("--points", scan_points, "scan resolution");
  scan->add_option("--dbar", dbar, "maximum deposit");

  try {
    std::vector<std::string> args = expand_config_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11's vector overload wants it reversed
    app.parse(std::move(args));
    if (solve->parsed()) {
      std::optional<std::string> resp;
      if (!response_arg.empty()) resp = response_arg;
      return cmd_solve(so, step, dbar, resp);
    }
    if (verify->parsed()) {
      return cmd_verify(vo, eps, mutate, grid_types, grid_devs, verify_serial);
    }
    if (simulate->parsed()) {
      if (n < 1) throw std::invalid_argument("--n must be >= 1");
      return cmd_simulate(mo, n, seed, sim_serial);
    }
    if (scan->parsed()) {
      return cmd_deviation_scan(do_, scan_v1, scan_points, dbar);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
