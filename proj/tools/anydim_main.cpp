#include "anydim/cli/cost_parser.hpp"
#include "anydim/cli/csv.hpp"
#include "anydim/cli/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Flags {
  std::string setting;
  std::string cost;
  std::string n_range;
  std::string domain;
  double radius = 1;
  double weight = 2;
  std::string solver = "auto";
  int restarts = 256;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
  bool exact_rational = false;
  int k = 3;
  std::string m_values = "2,3";
  int trials = 20;
  bool extended = false;
};

void report_parse_error(const std::string& text, const anydim::CostParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n";
}

anydim::CostExpr parse_cost_or_throw(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--cost is required");
  return anydim::parse_cost(text);
}

anydim::ExperimentSpec make_spec(const Flags& f, const std::string& default_n) {
  anydim::ExperimentSpec spec;
  if (!f.setting.empty()) spec.setting = anydim::parse_setting(f.setting);
  spec.cost = parse_cost_or_throw(f.cost);
  spec.domain = f.domain;
  spec.radius = f.radius;
  spec.weight = f.weight;
  const std::string ns = f.n_range.empty() ? default_n : f.n_range;
  if (ns.empty()) throw std::invalid_argument("--n is required");
  spec.ns = anydim::parse_n_range(ns);
  spec.solver = anydim::parse_solver(f.solver);
  spec.solver_config.restarts = f.restarts;
  spec.solver_config.seed = f.seed;
  spec.solver_config.threads = f.threads;
  spec.out = f.out;
  spec.exact_rational = f.exact_rational;
  spec.allow_large = f.extended;
  return spec;
}

int run_bound_command(const anydim::ExperimentSpec& spec, const std::string& cost_text) {
  anydim::SweepResult r = anydim::run_bound(spec, cost_text);
  anydim::write_output(spec.out, anydim::emit_csv(anydim::rows_from_sweep(r), spec.exact_rational));
  return kExitOk;
}

int emit_checks(const Flags& f, const std::vector<anydim::CheckRow>& rows) {
  anydim::write_output(f.out, anydim::emit_checks(rows));
  for (const auto& r : rows)
    if (!r.pass) return kExitCheckFailed;
  return kExitOk;
}

std::vector<int> parse_list(const std::string& text) { return anydim::parse_n_range(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-symmetrization toolkit: dual costs, bound sweeps and exact verifications"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file with the same keys as the long flags");
  app.get_config_ptr()->check(CLI::ExistingFile);

  Flags f;
  app.add_option("--setting", f.setting, "means, symfunc, graph-density or graph-numbers");
  app.add_option("--cost", f.cost, "Cost expression or a stored cost name");
  app.add_option("--n,--n-range", f.n_range, "Dimensions: 5, 4..7 or 4,6,8");
  app.add_option("--domain", f.domain, "box[lo,hi], l1ball, simplex, matrix-simplex or simple-graphs");
  app.add_option("--radius", f.radius, "l1ball radius")->capture_default_str();
  app.add_option("--weight", f.weight, "matrix-simplex total weight")->capture_default_str();
  app.add_option("--solver", f.solver, "auto, exhaustive or multistart")->capture_default_str();
  app.add_option("--restarts", f.restarts, "Multistart restarts")->capture_default_str();
  app.add_option("--seed", f.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", f.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--out", f.out, "Output CSV path (default stdout)");
  app.add_flag("--exact-rational", f.exact_rational, "Print exact values as p/q");
  app.add_option("--k", f.k, "Lower dimension for identity checks")->capture_default_str();
  app.add_option("--m", f.m_values, "Marginal sizes for the tv check")->capture_default_str();
  app.add_option("--trials", f.trials, "Random inputs per identity check")->capture_default_str();
  app.add_flag("--extended", f.extended, "Allow exhaustive search at n = 8");

  auto* dualize = app.add_subcommand("dualize", "Print the dual cost at each n")->fallthrough();
  auto* bound = app.add_subcommand("bound", "Sweep lower and upper bounds over n")->fallthrough();
  auto* verify = app.add_subcommand("verify", "Exact verification checks")->fallthrough()->require_subcommand(1);
  auto* v_identity = verify->add_subcommand("identity", "Representation identity in exact arithmetic")->fallthrough();
  auto* v_tv = verify->add_subcommand("tv", "Total variation rate")->fallthrough();
  auto* v_w1 = verify->add_subcommand("w1", "Wasserstein rate tightness case")->fallthrough();
  auto* goodman = app.add_subcommand("goodman", "Exhaustive bounds for the triangle-density cost")->fallthrough();
  auto* ramsey = app.add_subcommand("ramsey", "Exhaustive bounds for the Ramsey multiplicity cost")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dualize) {
      anydim::ExperimentSpec spec = make_spec(f, "");
      std::vector<std::vector<std::string>> rows;
      for (const auto& [n, q] : anydim::run_dualize(spec)) rows.push_back({std::to_string(n), anydim::print_cost(q)});
      anydim::write_output(f.out, anydim::csv_table({"n", "dual_cost"}, rows));
      return kExitOk;
    }
    if (*bound) return run_bound_command(make_spec(f, ""), f.cost);
    if (*goodman || *ramsey) {
      Flags g = f;
      g.cost = *goodman ? "goodman" : "ramsey";
      g.setting = "graph-density";
      if (g.domain.empty()) g.domain = "simple-graphs";
      if (g.solver == "auto") g.solver = "exhaustive";
      return run_bound_command(make_spec(g, *goodman ? "4..7" : "3..7"), g.cost);
    }
    if (*v_identity) {
      std::optional<anydim::CostPoly> cost;
      anydim::Setting setting;
      if (!f.cost.empty()) {
        anydim::CostExpr e = anydim::parse_cost(f.cost);
        setting = anydim::infer_setting(e);
        if (!f.setting.empty() && anydim::parse_setting(f.setting) != setting)
          throw std::invalid_argument("--setting does not match the cost atoms");
        cost = anydim::to_cost_poly(e);
      } else {
        if (f.setting.empty()) throw std::invalid_argument("verify identity needs --setting or --cost");
        setting = anydim::parse_setting(f.setting);
      }
      auto ns = parse_list(f.n_range.empty() ? "1..5" : f.n_range);
      return emit_checks(f, anydim::run_verify_identity(setting, cost, f.k, ns, f.seed, f.trials));
    }
    if (*v_tv) return emit_checks(f, anydim::run_verify_tv(parse_list(f.n_range.empty() ? "2..8" : f.n_range), parse_list(f.m_values)));
    if (*v_w1) return emit_checks(f, anydim::run_verify_w1(parse_list(f.n_range.empty() ? "2,4,8,16,32" : f.n_range)));
  } catch (const anydim::CostParseError& e) {
    report_parse_error(f.cost, e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
