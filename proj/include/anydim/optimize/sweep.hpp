#pragma once
#include "anydim/definetti/rates.hpp"
#include "anydim/optimize/domain.hpp"
#include "anydim/optimize/exhaustive.hpp"
#include "anydim/optimize/multistart.hpp"
#include "anydim/optimize/objectives.hpp"

#include <string>
#include <variant>
#include <vector>

namespace anydim {

enum class Setting { Means, Symfunc, GraphDensity, GraphNumbers };
std::string setting_name(Setting s);  // "means", "symfunc", "graph-density", "graph-numbers"
Setting parse_setting(const std::string& name);

// A cost in one of the four settings. Graph numbers use GraphCost::direct only.
using CostPoly = std::variant<SymPoly, MeanPoly, GraphCost>;
int cost_degree(const CostPoly& c);

// Domain at every dimension n.
struct DomainFamily {
  DomainKind kind = DomainKind::Box;
  int rows = 1;
  double lo = -1, hi = 1;
  double radius = 1;
  double weight = 1;
  Domain at(int n) const;
  std::string describe() const;
};

// Empty string when the pair is allowed, otherwise the reason.
std::string domain_incompatibility(Setting s, DomainKind k);
std::string allowed_domains(Setting s);

enum class SolverKind { Auto, Exhaustive, Multistart };
std::string solver_name(SolverKind k);
SolverKind parse_solver(const std::string& name);

struct SweepProblem {
  Setting setting = Setting::Symfunc;
  CostPoly cost;
  DomainFamily domain;
  SolverKind solver = SolverKind::Auto;
  bool allow_large = false;  // exhaustive search at n = 8
};

// Checks setting, cost family and domain agree; throws with a diagnostic.
void validate(const SweepProblem& prob);

// Smallest n at which the dual cost is defined.
int dimension_floor(const SweepProblem& prob);
// The dual cost q_n (the lower-bound objective at dimension n).
CostPoly dual_cost(const SweepProblem& prob, int n);
// Dimension k used for the theoretical gap.
long long gap_dimension(const SweepProblem& prob);

Objective make_objective(const CostPoly& c, const Domain& dom);
BoundRecord minimize_cost(const CostPoly& c, const Domain& dom, SolverKind solver, const SolverConfig& cfg,
                          bool allow_large = false);

// Heuristic lower estimate of sup |q| over the domain (exact on small
// discrete domains).
double sup_norm_estimate(const CostPoly& q, const Domain& dom, const SolverConfig& cfg);

struct SweepRow {
  int n = 0;
  BoundRecord lower;  // l_n
  BoundRecord upper;  // u_n
  double gap_bound = 0;  // NaN when the rate does not apply at this n
};

struct SweepResult {
  std::string setting;
  long long k = 0;  // dimension of the gap estimate
  GapNorms norms;
  std::uint64_t seed = 0;
  int restarts = 0;
  std::vector<SweepRow> rows;  // ascending n
};

SweepResult bound_sweep(const SweepProblem& prob, std::vector<int> ns, const SolverConfig& cfg);

}  // namespace anydim
