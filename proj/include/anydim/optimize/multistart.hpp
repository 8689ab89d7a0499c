#pragma once
#include "anydim/core/rational.hpp"
#include "anydim/optimize/domain.hpp"
#include "anydim/optimize/objectives.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace anydim {

struct SolverConfig {
  int restarts = 256;
  int max_iters = 2000;
  double initial_step = 1.0;
  double max_step = 1e3;
  double shrink = 0.5;
  double armijo = 1e-4;
  double tol = 1e-10;  // on the step norm
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  void validate() const;
};

enum class BoundKind { Exact, HeuristicUpper };
std::string kind_name(BoundKind k);  // "exact" or "heuristic_upper"
BoundKind parse_bound_kind(const std::string& s);

struct SolverStats {
  int restarts = 0;
  int restarts_hit = 0;      // restarts ending within 1e-8 of the best value
  int best_restart = -1;
  int best_iterations = 0;   // iterations used by the best restart
  int converged = 0;         // restarts stopping on the step tolerance
  std::uint64_t evaluations = 0;
  std::uint64_t graph_index = 0;  // exhaustive search: bitstring of the minimizer
};

struct BoundRecord {
  int n = 0;
  double value = 0;
  std::optional<Rational> exact_value;
  std::vector<double> minimizer;
  BoundKind kind = BoundKind::HeuristicUpper;
  SolverStats stats;
};

// Result of one projected-gradient run from x0.
struct LocalResult {
  std::vector<double> x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
  std::uint64_t evaluations = 0;
};

LocalResult projected_gradient(const Objective& f, const Domain& dom, std::vector<double> x0,
                               const SolverConfig& cfg);

// Restart r starts from random_feasible_point seeded with derive_seed(seed, r).
// Ties in value are broken by the lower restart index.
BoundRecord minimize_multistart(const Objective& f, const Domain& dom, const SolverConfig& cfg);

}  // namespace anydim
