#pragma once
#include "anydim/cli/cost_parser.hpp"
#include "anydim/cli/csv.hpp"
#include "anydim/core/rational.hpp"
#include "anydim/optimize/sweep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anydim {

struct ExperimentSpec {
  std::optional<Setting> setting;  // inferred from the cost when absent
  CostExpr cost;
  std::string domain;  // see parse_domain; empty selects the default for the cost
  double radius = 1;
  double weight = 2;
  std::vector<int> ns;
  SolverKind solver = SolverKind::Auto;
  SolverConfig solver_config;
  std::string out;  // empty or "-" for stdout
  bool exact_rational = false;
  bool allow_large = false;  // exhaustive search at n = 8
};

// "5", "4..7", "4,6,9" or mixtures such as "2..4,8". Result is sorted and unique.
std::vector<int> parse_n_range(const std::string& text);

// Domain names: box (with [lo,hi], default [-1,1]), l1ball, simplex,
// matrix-simplex, simple-graphs. `rows` sets the box height for mean costs.
DomainFamily parse_domain(const std::string& text, double radius, double weight, int rows = 1);
// Domain used when none is given: the stored cost's own domain for the named
// costs, otherwise the first allowed domain of the setting.
std::string default_domain(Setting s, const std::string& cost_text);

// Resolves setting, domain and cost; throws std::invalid_argument on any mismatch.
SweepProblem make_problem(const ExperimentSpec& spec, const std::string& cost_text = "");

// Dual cost at each dimension in spec.ns.
std::vector<std::pair<int, CostExpr>> run_dualize(const ExperimentSpec& spec);
SweepResult run_bound(const ExperimentSpec& spec, const std::string& cost_text = "");

// Exact check of p_n(x) = E[q_k(x moved to dimension k by a uniform random map)]
// on random rational inputs. q_k is the dual cost at dimension k.
struct IdentityReport {
  Setting setting = Setting::Symfunc;
  int k = 0;
  int n = 0;
  int trials = 0;
  Rational max_error;  // max |lhs - rhs| over trials
  bool pass = false;
};
IdentityReport verify_identity(Setting setting, const CostPoly& cost, int k, int n, std::uint64_t seed, int trials);
// Random cost of the setting with dimension floor at most k (used when no
// cost is given).
CostPoly random_identity_cost(Setting setting, int k, std::uint64_t seed);

// Verification table: check,n,m,statistic,bound,pass.
struct CheckRow {
  std::string check;
  int n = 0;
  int m = 0;  // m, or k for identity checks; 0 when unused
  std::string statistic;
  std::string bound;
  bool pass = false;
};
std::string emit_checks(const std::vector<CheckRow>& rows);

std::vector<CheckRow> run_verify_identity(Setting setting, const std::optional<CostPoly>& cost, int k,
                                          const std::vector<int>& ns, std::uint64_t seed, int trials);
// Distinct-value permutation laws, the Bernoulli mixture and the map laws.
std::vector<CheckRow> run_verify_tv(const std::vector<int>& ns, const std::vector<int>& ms);
std::vector<CheckRow> run_verify_w1(const std::vector<int>& ns);

}  // namespace anydim
