// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Set ANYDIM_EXTENDED=1 to include the
// n = 8 exhaustive Ramsey run.

#include "anydim/cli/cost_parser.hpp"
#include "anydim/cli/experiment.hpp"
#include "anydim/core/combinat.hpp"
#include "anydim/core/seed.hpp"
#include "anydim/definetti/rates.hpp"
#include "anydim/graphalg/multigraph.hpp"
#include "anydim/optimize/sweep.hpp"
#include "anydim/symfunc/sympoly.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace anydim;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SolverConfig pinned_config() {
  SolverConfig cfg;
  cfg.restarts = 256;
  cfg.seed = 1;
  return cfg;
}

SweepProblem problem(const std::string& cost, const std::string& domain, double radius = 1, double weight = 2) {
  ExperimentSpec spec;
  spec.cost = parse_cost(cost);
  spec.domain = domain;
  spec.radius = radius;
  spec.weight = weight;
  return make_problem(spec, cost);
}

BoundRecord exhaustive_lower(const SweepProblem& prob, int n, bool allow_large = false) {
  return minimize_cost(dual_cost(prob, n), prob.domain.at(n), SolverKind::Exhaustive, pinned_config(), allow_large);
}

Rational goodman_formula(int n) {
  if (n % 2 == 0) return Rational(-n, 2 * (n * n - 4 * n + 3));
  return Rational(-(n + 1), 2 * (n * n - 2 * n));
}

void goodman(Outcome& o) {
  auto t0 = Clock::now();
  SweepProblem prob = problem("goodman", "simple-graphs");
  for (int n = 4; n <= 7; ++n) {
    BoundRecord r = exhaustive_lower(prob, n);
    bool ok = r.kind == BoundKind::Exact && r.exact_value && *r.exact_value == goodman_formula(n);
    o.detail << "l_" << n << "=" << (r.exact_value ? to_string(*r.exact_value) : "?") << " ";
    o.require(ok, "l_" + std::to_string(n) + " != " + to_string(goodman_formula(n)));
  }
  double t = seconds_since(t0);
  o.detail << "(" << t << " s)";
  o.require(t < 60, "runtime");
}

void ramsey(Outcome& o) {
  auto t0 = Clock::now();
  SweepProblem prob = problem("ramsey", "simple-graphs");
  for (int n = dimension_floor(prob); n <= 7; ++n) {
    BoundRecord r = exhaustive_lower(prob, n);
    o.detail << "l_" << n << "=" << r.value << " ";
    if (n <= 6) o.require(r.exact_value && *r.exact_value == 0, "l_" + std::to_string(n) + " != 0");
    else o.require(std::abs(r.value - 0.0286) <= 5e-4, "l_7 outside 0.0286 +- 5e-4");
  }
  double t = seconds_since(t0);
  o.detail << "(" << t << " s) ";
  o.require(t < 120, "runtime");
  const char* ext = std::getenv("ANYDIM_EXTENDED");
  if (ext && std::string(ext) == "1") {
    auto t8 = Clock::now();
    BoundRecord r = exhaustive_lower(prob, 8, true);
    o.detail << "l_8=" << r.value << " (" << seconds_since(t8) << " s)";
    o.require(std::abs(r.value - 0.0286) <= 5e-4, "l_8 outside 0.0286 +- 5e-4");
  } else {
    o.detail << "n=8 not run (set ANYDIM_EXTENDED=1)";
  }
}

void bad_quartic(Outcome& o) {
  auto t0 = Clock::now();
  SweepProblem prob = problem("bad-quartic", "l1ball", 1.0);
  const std::vector<double> target = {-0.8403, -0.4023, -0.2541, -0.1817, -0.1396};
  SolverConfig cfg = pinned_config();
  for (int n = 4; n <= 8; ++n) {
    SolverConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 2 * static_cast<std::uint64_t>(n) + 1);  // same stream as bound_sweep
    BoundRecord r = minimize_cost(dual_cost(prob, n), prob.domain.at(n), SolverKind::Multistart, c);
    double want = target[static_cast<std::size_t>(n - 4)];
    o.detail << "l_" << n << "=" << r.value << " ";
    o.require(r.kind == BoundKind::HeuristicUpper, "record kind");
    o.require(std::abs(r.value - want) <= 1e-2, "l_" + std::to_string(n) + " vs " + std::to_string(want));
  }
  double t = seconds_since(t0);
  o.detail << "(" << t << " s)";
  o.require(t < 300, "runtime");
}

void quadratic(Outcome& o) {
  SweepProblem prob = problem("quadratic", "simplex");
  std::vector<int> ns;
  for (int n = 2; n <= 10; ++n) ns.push_back(n);
  SweepResult r = bound_sweep(prob, ns, pinned_config());
  double worst_u = 0, worst_l = 0;
  for (const auto& row : r.rows) {
    worst_u = std::max(worst_u, std::abs(row.upper.value - 1.0 / row.n));
    worst_l = std::max(worst_l, std::abs(row.lower.value));
  }
  o.detail << "max|u_n-1/n|=" << worst_u << " max|l_n|=" << worst_l << " ";
  o.require(worst_u <= 1e-8, "u_n");
  o.require(worst_l <= 1e-8, "l_n");

  // Dual coefficients for a1*s[2] + a2*s[1,1] in both bases.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  int checked = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Rational a1(num(rng), den(rng)), a2(num(rng), den(rng));
    SymPoly p(SymBasis::PowerSum);
    p.add(Partition({2}), a1);
    p.add(Partition({1, 1}), a2);
    for (int n = 2; n <= 10; ++n) {
      Rational nn(n);
      SymPoly q = dualize_symfunc(p, n);
      SymPoly want_m(SymBasis::Monomial), want_s(SymBasis::PowerSum);
      want_m.add(Partition({2}), a1 + a2);
      want_m.add(Partition({1, 1}), Rational(2) * (a2 - a1 / (nn - 1)));
      want_s.add(Partition({2}), nn * a1 / (nn - 1));
      want_s.add(Partition({1, 1}), (a2 * (nn - 1) - a1) / (nn - 1));
      o.require(q == want_m && m_to_s(q) == want_s, "dual coefficients at n=" + std::to_string(n));
      ++checked;
    }
  }
  o.detail << "dual coefficients exact in " << checked << " cases";
}

void graph_numbers(Outcome& o) {
  auto t0 = Clock::now();
  SweepProblem prob = problem("graph-numbers", "matrix-simplex", 1.0, 2.0);
  const std::vector<double> upper = {-2.00, -2.00, -2.67, -2.67, -3.00, -3.00};
  const std::vector<std::pair<double, double>> lower = {{-26.67, -26.67}, {-13.21, -12.50}, {-11.20, -11.20},
                                                        {-9.33, -8.71},   {-8.23, -8.23},   {-7.50, -7.23}};
  SweepResult r = bound_sweep(prob, {4, 5, 6, 7, 8, 9}, pinned_config());
  for (const auto& row : r.rows) {
    std::size_t i = static_cast<std::size_t>(row.n - 4);
    auto [lo, hi] = lower[i];
    double dist = row.lower.value < lo ? lo - row.lower.value : row.lower.value > hi ? row.lower.value - hi : 0;
    o.detail << "n=" << row.n << ":(" << row.lower.value << "," << row.upper.value << ") ";
    o.require(std::abs(row.upper.value - upper[i]) <= 1e-2, "u_" + std::to_string(row.n));
    o.require(dist <= 1e-2, "l_" + std::to_string(row.n));
  }
  o.detail << "(" << seconds_since(t0) << " s)";
}

void identity(Outcome& o) {
  int total = 0;
  for (Setting s : {Setting::Means, Setting::Symfunc, Setting::GraphDensity, Setting::GraphNumbers}) {
    int trials = 0;
    for (int k = 1; k <= 3; ++k) {
      CostPoly cost = random_identity_cost(s, k, derive_seed(11, static_cast<std::uint64_t>(k)));
      for (int n = 1; n <= 5; ++n) {
        IdentityReport r = verify_identity(s, cost, k, n, derive_seed(12, static_cast<std::uint64_t>(10 * k + n)), 20);
        trials += r.trials;
        o.require(r.pass, setting_name(s) + " k=" + std::to_string(k) + " n=" + std::to_string(n) + " error " +
                              to_string(r.max_error));
      }
    }
    o.detail << setting_name(s) << ":" << trials << " ";
    total += trials;
  }
  // Stored costs whose dimension floor is at most 3.
  for (const char* name : {"quadratic", "mfg"}) {
    CostExpr e = parse_cost(name);
    for (int k = 2; k <= 3; ++k)
      for (int n = 1; n <= 5; ++n) {
        IdentityReport r = verify_identity(infer_setting(e), to_cost_poly(e), k, n, 5, 20);
        total += r.trials;
        o.require(r.pass, std::string(name) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
  }
  o.detail << "trials=" << total << ", all with zero error";
}

void tv_rate(Outcome& o) {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int n = 2; n <= 8; ++n)
    for (int m = 2; m <= std::min(3, n); ++m) {
      std::vector<std::vector<Rational>> bases(3);
      for (int i = 0; i < n; ++i) {
        bases[0].emplace_back(i);
        bases[1].emplace_back(i == 0 ? 1 : 0);
        bases[2].emplace_back(static_cast<long long>(rng() % 3));
      }
      for (const auto& b : bases) {
        TvRateResult r = tv_rate_experiment(n, m, b);
        o.require(r.tv <= Rational(m * (m - 1), n), "tv bound at n=" + std::to_string(n) + " m=" + std::to_string(m));
        ++checked;
      }
    }
  o.detail << checked << " permutation laws within m(m-1)/n; ";
  o.detail << "bernoulli m=2:";
  for (int n = 2; n <= 8; ++n) {
    TvRateResult b = bernoulli_tv_experiment(n, 2);
    o.detail << " n=" << n << ":" << to_string(b.tv);
    o.require(b.tv == Rational(2, n), "bernoulli tv at n=" + std::to_string(n) + " is " + to_string(b.tv) +
                                          ", expected " + to_string(Rational(2, n)));
  }
  bool maps_reach = true;
  for (int n = 2; n <= 8; ++n) maps_reach = maps_reach && map_law_tv_experiment(n, 2).tv == Rational(2, n);
  o.detail << "; injective vs uniform map laws at m=2 " << (maps_reach ? "equal" : "differ from") << " 2/n";
}

void w1_rate(Outcome& o) {
  for (int n : {2, 4, 8, 16, 32}) {
    W1RateResult r = w1_tightness_experiment(n);
    // E|B - n| / n for B ~ Binomial(2n, 1/2), summed directly.
    Rational direct = 0;
    BigInt c = 1;
    for (int b = 0; b <= 2 * n; ++b) {
      direct += Rational(c * BigInt(std::abs(b - n)));
      c = c * BigInt(2 * n - b) / BigInt(b + 1);
    }
    direct /= Rational(BigInt(n)) * pow_int(Rational(4), n);
    o.require(r.w1 == direct, "w1 at n=" + std::to_string(n));
    o.require(to_double(r.w1) <= 4.0 / std::sqrt(n), "bound at n=" + std::to_string(n));
    o.detail << "n=" << n << ":" << to_double(r.w1) << " ";
    if (n == 32) {
      double ratio = to_double(r.w1) * std::sqrt(std::numbers::pi * n);
      o.detail << "ratio@32=" << ratio;
      o.require(ratio >= 0.85 && ratio <= 1.15, "ratio at n=32");
    }
  }
}

void mfg(Outcome& o) {
  auto t0 = Clock::now();
  SweepProblem prob = problem("mfg", "box[-1,1]");
  std::vector<int> ns;
  for (int n = 3; n <= 12; ++n) ns.push_back(n);
  SweepResult r = bound_sweep(prob, ns, pinned_config());
  o.detail << "k=" << r.k << " sup|q_k|~" << r.norms.sup_norm << " ";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    o.detail << "n=" << row.n << ":(" << row.lower.value << "," << row.upper.value << ") ";
    if (i > 0) o.require(row.lower.value >= r.rows[i - 1].lower.value - 1e-6, "l_n decreases at n=" + std::to_string(row.n));
    o.require(row.upper.value >= row.lower.value - 1e-6, "u_n < l_n at n=" + std::to_string(row.n));
    if (row.n % 3 == 0)
      o.require(row.upper.value - row.lower.value <= 60.0 / row.n + 1e-3, "gap at n=" + std::to_string(row.n));
  }
  o.require(r.norms.sup_norm <= 10 + 1e-6, "sup norm estimate above 10");
  o.detail << "(" << seconds_since(t0) << " s)";
}

std::uint64_t surjection_oracle(const Partition& lam, const Partition& mu) {
  const int a = lam.len(), b = mu.len();
  if (b == 0) return a == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<int> f(static_cast<std::size_t>(a), 0);
  while (true) {
    std::vector<int> sums(static_cast<std::size_t>(b), 0);
    for (int i = 0; i < a; ++i) sums[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] += lam[i];
    bool ok = true;
    for (int j = 0; j < b; ++j) ok = ok && sums[static_cast<std::size_t>(j)] == mu[j];
    if (ok) ++count;  // matching positive fiber sums force surjectivity
    int j = 0;
    while (j < a && ++f[static_cast<std::size_t>(j)] == b) f[static_cast<std::size_t>(j++)] = 0;
    if (j == a) break;
  }
  return count;
}

void transition_oracles(Outcome& o) {
  o.require(refinement_count(Partition({1, 1}), Partition({2})) == 1, "R((1,1),(2))");
  o.require(refinement_count(Partition({1, 1, 1}), Partition({2, 1})) == 3, "R((1,1,1),(2,1))");
  int pairs = 0;
  for (const auto& lam : partitions_up_to(5)) {
    std::uint64_t mult = 1;
    for (int i = 0, run = 0; i < lam.len(); ++i) {
      run = (i > 0 && lam[i] == lam[i - 1]) ? run + 1 : 1;
      mult *= static_cast<std::uint64_t>(run);
    }
    o.require(refinement_count(lam, lam) == mult, "R(lam,lam) for " + lam.to_string());
    for (const auto& mu : partitions_up_to(5)) {
      o.require(refinement_count(lam, mu) == surjection_oracle(lam, mu), "oracle " + lam.to_string() + " " + mu.to_string());
      ++pairs;
    }
  }
  o.detail << pairs << " partition pairs match the surjection oracle; ";

  const GraphClass g1(parse_graph("{1-2,3-4,5-6}")), g2(parse_graph("{1-2,3-4,4-5}")), g3(parse_graph("P4")),
      g4(parse_graph("K3"));
  std::vector<std::uint64_t> chain = {graph_refinement_count(g1, g2), graph_refinement_count(g2, g3),
                                      graph_refinement_count(g3, g4), graph_refinement_count(g4, g4)};
  o.detail << "chain=" << chain[0] << "," << chain[1] << "," << chain[2] << "," << chain[3] << "; ";
  o.require(chain == std::vector<std::uint64_t>{48, 8, 6, 6}, "triangle chain counts");

  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  int trips = 0;
  for (int d = 0; d <= 4; ++d) {
    const auto parts = partitions_up_to(d);
    for (int trial = 0; trial < 100; ++trial) {
      SymPoly s(SymBasis::PowerSum), m(SymBasis::Monomial);
      for (const auto& lam : parts) {
        s.add(lam, Rational(num(rng), den(rng)));
        m.add(lam, Rational(num(rng), den(rng)));
      }
      o.require(s_to_m(m_to_s(m)) == m && m_to_s(s_to_m(s)) == s, "s/m round trip at degree " + std::to_string(d));
      ++trips;
    }
  }
  o.detail << trips << " random polynomials round-trip exactly in each direction";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"AC1 Goodman exhaustive lower bounds match the closed form", goodman},
      {"AC2 Ramsey multiplicity exhaustive lower bounds", ramsey},
      {"AC3 bad quartic multistart lower bounds on the l1 ball", bad_quartic},
      {"AC4 quadratic on the simplex", quadratic},
      {"AC5 graph-numbers example bounds", graph_numbers},
      {"AC6 representation identity in exact arithmetic", identity},
      {"AC7 total variation rate", tv_rate},
      {"AC8 Wasserstein rate tightness", w1_rate},
      {"AC9 mean-field sweep", mfg},
      {"AC10 transition matrix oracles", transition_oracles},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " | " << o.detail.str() << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
