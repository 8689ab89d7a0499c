#include "anydim/optimize/sweep.hpp"

#include "anydim/core/seed.hpp"
#include "anydim/symfunc/transition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace anydim {

std::string setting_name(Setting s) {
  switch (s) {
    case Setting::Means: return "means";
    case Setting::Symfunc: return "symfunc";
    case Setting::GraphDensity: return "graph-density";
    case Setting::GraphNumbers: return "graph-numbers";
  }
  return "?";
}

Setting parse_setting(const std::string& name) {
  for (Setting s : {Setting::Means, Setting::Symfunc, Setting::GraphDensity, Setting::GraphNumbers})
    if (setting_name(s) == name) return s;
  throw std::invalid_argument("unknown setting '" + name + "' (expected means, symfunc, graph-density or graph-numbers)");
}

int cost_degree(const CostPoly& c) {
  return std::visit([](const auto& p) { return p.degree(); }, c);
}

Domain DomainFamily::at(int n) const {
  switch (kind) {
    case DomainKind::Box: return Domain::box(rows, n, lo, hi);
    case DomainKind::L1Ball: return Domain::l1_ball(n, radius);
    case DomainKind::VecSimplex: return Domain::vec_simplex(n);
    case DomainKind::MatrixSimplex: return Domain::matrix_simplex(n, weight);
    case DomainKind::BinarySimpleGraphs: return Domain::simple_graphs(n);
  }
  throw std::invalid_argument("unknown domain kind");
}

std::string DomainFamily::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (kind == DomainKind::Box) os << "[" << lo << "," << hi << "]^(" << rows << "xn)";
  if (kind == DomainKind::L1Ball) os << "(radius " << radius << ")";
  if (kind == DomainKind::MatrixSimplex) os << "(weight " << weight << ")";
  return os.str();
}

std::string allowed_domains(Setting s) {
  switch (s) {
    case Setting::Means: return "box";
    case Setting::Symfunc: return "l1ball, simplex";
    case Setting::GraphDensity: return "simple-graphs";
    case Setting::GraphNumbers: return "matrix-simplex";
  }
  return "";
}

std::string domain_incompatibility(Setting s, DomainKind k) {
  bool ok = false;
  std::string why;
  switch (s) {
    case Setting::Means:
      ok = k == DomainKind::Box;
      why = "power-mean problems need a product set Theta^n, which is permutation invariant and stable under "
            "duplicating points and deleting a point";
      break;
    case Setting::Symfunc:
      ok = k == DomainKind::L1Ball || k == DomainKind::VecSimplex;
      why = "power-sum problems need sets stable under padding with zeros and under summing coordinates along "
            "the fibers of a map, such as l1 balls and simplices";
      break;
    case Setting::GraphDensity:
      ok = k == DomainKind::BinarySimpleGraphs;
      why = "density problems need entrywise constraints stable under blowing up vertices and taking induced "
            "subgraphs, such as simple graphs";
      break;
    case Setting::GraphNumbers:
      ok = k == DomainKind::MatrixSimplex;
      why = "graph-number problems need sets stable under padding with zero rows and under merging vertices, "
            "such as the nonnegative matrices of fixed total weight";
      break;
  }
  if (ok) return "";
  return "domain " + kind_name(k) + " is not compatible with setting " + setting_name(s) + ": " + why +
         " (allowed: " + allowed_domains(s) + ")";
}

std::string solver_name(SolverKind k) {
  switch (k) {
    case SolverKind::Auto: return "auto";
    case SolverKind::Exhaustive: return "exhaustive";
    case SolverKind::Multistart: return "multistart";
  }
  return "?";
}

SolverKind parse_solver(const std::string& name) {
  for (SolverKind k : {SolverKind::Auto, SolverKind::Exhaustive, SolverKind::Multistart})
    if (solver_name(k) == name) return k;
  throw std::invalid_argument("unknown solver '" + name + "' (expected exhaustive or multistart)");
}

namespace {

bool density_basis(GraphBasis b) { return b == GraphBasis::T || b == GraphBasis::TInj; }

const GraphCost& graph_cost(const SweepProblem& prob) { return std::get<GraphCost>(prob.cost); }

}  // namespace

void validate(const SweepProblem& prob) {
  switch (prob.setting) {
    case Setting::Means:
      if (!std::holds_alternative<MeanPoly>(prob.cost)) throw std::invalid_argument("setting means needs a cost in sbar/mbar atoms");
      for (const auto& [atom, c] : std::get<MeanPoly>(prob.cost).terms())
        if (!atom.empty() && atom.ambient_dim() != prob.domain.rows)
          throw std::invalid_argument("cost atoms have " + std::to_string(atom.ambient_dim()) +
                                      " rows but the box has " + std::to_string(prob.domain.rows));
      break;
    case Setting::Symfunc:
      if (!std::holds_alternative<SymPoly>(prob.cost)) throw std::invalid_argument("setting symfunc needs a cost in s/m atoms");
      break;
    case Setting::GraphDensity: {
      if (!std::holds_alternative<GraphCost>(prob.cost)) throw std::invalid_argument("setting graph-density needs a cost in t/tinj atoms");
      const auto& g = graph_cost(prob);
      if (!density_basis(g.direct.basis()) || !density_basis(g.complement.basis()))
        throw std::invalid_argument("setting graph-density needs a cost in t/tinj atoms");
      break;
    }
    case Setting::GraphNumbers: {
      if (!std::holds_alternative<GraphCost>(prob.cost)) throw std::invalid_argument("setting graph-numbers needs a cost in hom/inj atoms");
      const auto& g = graph_cost(prob);
      if (density_basis(g.direct.basis()) || !g.complement.is_zero())
        throw std::invalid_argument("setting graph-numbers needs a cost in hom/inj atoms without complements");
      break;
    }
  }
  std::string why = domain_incompatibility(prob.setting, prob.domain.kind);
  if (!why.empty()) throw std::invalid_argument(why);
  if (prob.solver == SolverKind::Exhaustive && prob.domain.kind != DomainKind::BinarySimpleGraphs)
    throw std::invalid_argument("exhaustive search needs the simple-graphs domain");
  if (prob.solver == SolverKind::Multistart && prob.domain.kind == DomainKind::BinarySimpleGraphs)
    throw std::invalid_argument("multistart needs a continuous domain");
}

int dimension_floor(const SweepProblem& prob) {
  switch (prob.setting) {
    case Setting::Means: return std::max(1, max_atom_len(std::get<MeanPoly>(prob.cost)));
    case Setting::Symfunc: return std::max(1, cost_degree(prob.cost));
    case Setting::GraphDensity: return std::max(1, graph_cost(prob).max_vertices());
    case Setting::GraphNumbers: return std::max(1, graph_numbers_min_k(graph_cost(prob).direct));
  }
  return 1;
}

CostPoly dual_cost(const SweepProblem& prob, int n) {
  if (n < dimension_floor(prob))
    throw std::invalid_argument("dimension floor violated: n = " + std::to_string(n) + " is below " +
                                std::to_string(dimension_floor(prob)));
  switch (prob.setting) {
    case Setting::Means: return dualize_means(std::get<MeanPoly>(prob.cost));
    case Setting::Symfunc: return dualize_symfunc(std::get<SymPoly>(prob.cost), n);
    case Setting::GraphDensity: {
      const auto& g = graph_cost(prob);
      return GraphCost(dualize_graph_density(g.direct), dualize_graph_density(g.complement));
    }
    case Setting::GraphNumbers: return GraphCost(dualize_graph_numbers(graph_cost(prob).direct, n));
  }
  throw std::invalid_argument("unknown setting");
}

long long gap_dimension(const SweepProblem& prob) {
  const int floor = dimension_floor(prob);
  const int d = cost_degree(prob.cost);
  switch (prob.setting) {
    case Setting::Means:
    case Setting::Symfunc: return std::max(floor, d);
    case Setting::GraphDensity: return floor;
    case Setting::GraphNumbers: return std::max(floor, 2 * d);
  }
  return floor;
}

Objective make_objective(const CostPoly& c, const Domain& dom) {
  if (const auto* s = std::get_if<SymPoly>(&c)) return make_objective(*s, dom.n);
  if (const auto* m = std::get_if<MeanPoly>(&c)) return make_objective(*m, dom.rows, dom.n);
  const auto& g = std::get<GraphCost>(c);
  if (!g.complement.is_zero()) throw std::invalid_argument("complement terms need the simple-graphs domain");
  return make_objective(g.direct, dom.n);
}

BoundRecord minimize_cost(const CostPoly& c, const Domain& dom, SolverKind solver, const SolverConfig& cfg,
                          bool allow_large) {
  if (dom.is_discrete()) {
    if (solver == SolverKind::Multistart) throw std::invalid_argument("multistart needs a continuous domain");
    if (!std::holds_alternative<GraphCost>(c)) throw std::invalid_argument("simple graphs need a graph cost");
    ExhaustiveOptions opts;
    opts.allow_large = allow_large;
    opts.threads = cfg.threads;
    return minimize_exhaustive(std::get<GraphCost>(c), dom.n, opts);
  }
  if (solver == SolverKind::Exhaustive) throw std::invalid_argument("exhaustive search needs the simple-graphs domain");
  return minimize_multistart(make_objective(c, dom), dom, cfg);
}

double sup_norm_estimate(const CostPoly& q, const Domain& dom, const SolverConfig& cfg) {
  if (dom.is_discrete()) {
    if (!std::holds_alternative<GraphCost>(q)) throw std::invalid_argument("simple graphs need a graph cost");
    ExhaustiveOptions opts;
    opts.threads = cfg.threads;
    return to_double(max_abs_exhaustive(std::get<GraphCost>(q), dom.n, opts));
  }
  Objective f = make_objective(q, dom);
  BoundRecord lo = minimize_multistart(f, dom, cfg);
  BoundRecord hi = minimize_multistart(negated(f), dom, cfg);
  return std::max(std::abs(lo.value), std::abs(hi.value));
}

namespace {

// max ||grad q||_inf over random feasible points and the extreme points found
// by the solver; a heuristic lower estimate of the sup.
double gradient_norm_estimate(const CostPoly& q, const Domain& dom, const SolverConfig& cfg) {
  Objective f = make_objective(q, dom);
  std::vector<std::vector<double>> probes;
  probes.push_back(minimize_multistart(f, dom, cfg).minimizer);
  probes.push_back(minimize_multistart(negated(f), dom, cfg).minimizer);
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(derive_seed(cfg.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(r)));
    probes.push_back(random_feasible_point(dom, rng));
  }
  double best = 0;
  std::vector<double> g;
  for (const auto& x : probes) {
    if (f.has_gradient()) f.value_and_gradient(x, g);
    else g = finite_difference_gradient(f, dom, x);
    for (double v : g) best = std::max(best, std::abs(v));
  }
  return best;
}

}  // namespace

SweepResult bound_sweep(const SweepProblem& prob, std::vector<int> ns, const SolverConfig& cfg) {
  validate(prob);
  cfg.validate();
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  const int floor = dimension_floor(prob);
  for (int n : ns)
    if (n < floor)
      throw std::invalid_argument("dimension floor violated: n = " + std::to_string(n) + " is below " +
                                  std::to_string(floor) + " for this cost");

  SweepResult out;
  out.setting = setting_name(prob.setting);
  out.seed = cfg.seed;
  out.restarts = cfg.restarts;
  const SettingDescriptor desc = setting_descriptor(out.setting);
  out.k = gap_dimension(prob);
  {
    const Domain dk = prob.domain.at(static_cast<int>(out.k));
    const CostPoly qk = dual_cost(prob, static_cast<int>(out.k));
    SolverConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 0xfeedULL);
    if (desc.rate_case == RateCase::Duplication) {
      out.norms.sup_norm = sup_norm_estimate(qk, dk, c);
    } else {
      out.norms.gradient_norm = gradient_norm_estimate(qk, dk, c);
      out.norms.l1_radius = dk.l1_radius();
    }
  }

  for (int n : ns) {
    SweepRow row;
    row.n = n;
    const Domain dom = prob.domain.at(n);
    SolverConfig cu = cfg, cl = cfg;
    cu.seed = derive_seed(cfg.seed, 2 * static_cast<std::uint64_t>(n));
    cl.seed = derive_seed(cfg.seed, 2 * static_cast<std::uint64_t>(n) + 1);
    row.upper = minimize_cost(prob.cost, dom, prob.solver, cu, prob.allow_large);
    row.lower = minimize_cost(dual_cost(prob, n), dom, prob.solver, cl, prob.allow_large);
    bool applies = desc.rate_case == RateCase::Duplication ? out.k <= n : n % out.k == 0;
    row.gap_bound = applies ? gap_bound(desc, out.k, n, out.norms) : std::numeric_limits<double>::quiet_NaN();
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace anydim
