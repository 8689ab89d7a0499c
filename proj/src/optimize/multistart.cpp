#include "anydim/optimize/multistart.hpp"

#include "anydim/core/seed.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace anydim {

void SolverConfig::validate() const {
  if (restarts < 1 || max_iters < 1) throw std::invalid_argument("restarts and max_iters must be positive");
  if (!(initial_step > 0) || !(max_step >= initial_step)) throw std::invalid_argument("step sizes must be positive");
  if (!(shrink > 0 && shrink < 1)) throw std::invalid_argument("shrink factor must lie in (0,1)");
  if (!(armijo > 0 && armijo < 1)) throw std::invalid_argument("Armijo constant must lie in (0,1)");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (threads < 0) throw std::invalid_argument("thread count must be nonnegative");
}

std::string kind_name(BoundKind k) { return k == BoundKind::Exact ? "exact" : "heuristic_upper"; }

BoundKind parse_bound_kind(const std::string& s) {
  if (s == "exact") return BoundKind::Exact;
  if (s == "heuristic_upper") return BoundKind::HeuristicUpper;
  throw std::invalid_argument("unknown bound kind: " + s);
}

namespace {

double eval_with_gradient(const Objective& f, const Domain& dom, const std::vector<double>& x, std::vector<double>& g,
                          std::uint64_t& evals) {
  if (f.has_gradient()) {
    ++evals;
    return f.value_and_gradient(x, g);
  }
  g = finite_difference_gradient(f, dom, x);
  evals += 2 * x.size() + 1;
  return f.value(x);
}

}  // namespace

LocalResult projected_gradient(const Objective& f, const Domain& dom, std::vector<double> x0, const SolverConfig& cfg) {
  LocalResult r;
  r.x = project(dom, x0);
  std::vector<double> g, y(r.x.size());
  r.value = eval_with_gradient(f, dom, r.x, g, r.evaluations);
  double alpha = cfg.initial_step;
  for (r.iterations = 0; r.iterations < cfg.max_iters;) {
    ++r.iterations;
    double fy = 0, step2 = 0;
    bool accepted = false;
    while (alpha > 1e-20) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = r.x[i] - alpha * g[i];
      y = project(dom, y);
      double dec = 0;
      step2 = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        double d = y[i] - r.x[i];
        dec += g[i] * d;
        step2 += d * d;
      }
      if (step2 == 0) break;
      fy = f.value(y);
      ++r.evaluations;
      if (fy <= r.value + cfg.armijo * dec) {
        accepted = true;
        break;
      }
      alpha *= cfg.shrink;
    }
    if (!accepted) {
      r.converged = true;
      break;
    }
    r.x.swap(y);
    y.resize(r.x.size());
    r.value = eval_with_gradient(f, dom, r.x, g, r.evaluations);
    if (std::sqrt(step2) < cfg.tol) {
      r.converged = true;
      break;
    }
    alpha = std::min(2 * alpha, cfg.max_step);
  }
  return r;
}

BoundRecord minimize_multistart(const Objective& f, const Domain& dom, const SolverConfig& cfg) {
  cfg.validate();
  if (dom.is_discrete()) throw std::invalid_argument("multistart needs a continuous domain");
  std::vector<LocalResult> runs(static_cast<std::size_t>(cfg.restarts));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (int r; (r = next.fetch_add(1)) < cfg.restarts;) {
      if (failed) return;
      try {
        std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        runs[static_cast<std::size_t>(r)] = projected_gradient(f, dom, random_feasible_point(dom, rng), cfg);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  BoundRecord rec;
  rec.n = dom.n;
  rec.kind = BoundKind::HeuristicUpper;
  rec.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    const auto& run = runs[static_cast<std::size_t>(r)];
    rec.stats.evaluations += run.evaluations;
    rec.stats.converged += run.converged ? 1 : 0;
    if (run.value < rec.value) {
      rec.value = run.value;
      rec.stats.best_restart = r;
    }
  }
  if (rec.stats.best_restart < 0) throw std::runtime_error("objective produced no finite value");
  const auto& best = runs[static_cast<std::size_t>(rec.stats.best_restart)];
  rec.minimizer = best.x;
  rec.stats.best_iterations = best.iterations;
  rec.stats.restarts = cfg.restarts;
  for (const auto& run : runs)
    if (run.value <= rec.value + 1e-8 * std::max(1.0, std::abs(rec.value))) ++rec.stats.restarts_hit;
  return rec;
}

}  // namespace anydim
