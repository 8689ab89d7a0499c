#include "anydim/cli/experiment.hpp"

#include "anydim/core/combinat.hpp"
#include "anydim/core/seed.hpp"
#include "anydim/definetti/actions.hpp"
#include "anydim/definetti/rates.hpp"
#include "anydim/symfunc/transition.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace anydim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_positive(const std::string& s, const std::string& context) {
  std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad dimension '" + t + "' in '" + context + "'");
  int v = std::stoi(t);
  if (v < 1) throw std::invalid_argument("dimensions must be positive in '" + context + "'");
  return v;
}

int mean_rows(const CostPoly& c) {
  int rows = 1;
  if (const auto* m = std::get_if<MeanPoly>(&c))
    for (const auto& [a, coeff] : m->terms())
      if (!a.empty()) rows = a.ambient_dim();
  return rows;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return Rational(num(rng), den(rng));
}

Rational eval_graph_cost(const GraphCost& g, const Matrix<Rational>& x) {
  Rational v = evaluate<Rational>(g.direct, x);
  if (!g.complement.is_zero()) {
    Matrix<Rational> c(x.rows(), x.cols(), Rational(0));
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) c(i, j) = Rational(1) - x(i, j);
    v += evaluate<Rational>(g.complement, c);
  }
  return v;
}

Matrix<Rational> random_symmetric(std::mt19937_64& rng, int n) {
  Matrix<Rational> x(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) x(i, j) = x(j, i) = random_rational(rng);
  return x;
}

std::string rational_text(const Rational& r) { return to_string(r); }

}  // namespace

std::vector<int> parse_n_range(const std::string& text) {
  std::set<int> out;
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty dimension range");
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t comma = t.find(',', start);
    std::string item = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.insert(parse_positive(item, text));
    } else {
      int lo = parse_positive(item.substr(0, dots), text), hi = parse_positive(item.substr(dots + 2), text);
      if (lo > hi) throw std::invalid_argument("empty dimension range '" + item + "'");
      for (int n = lo; n <= hi; ++n) out.insert(n);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {out.begin(), out.end()};
}

DomainFamily parse_domain(const std::string& text, double radius, double weight, int rows) {
  std::string t = trim(text);
  DomainFamily d;
  d.rows = rows;
  d.radius = radius;
  d.weight = weight;
  if (t.rfind("box", 0) == 0) {
    d.kind = DomainKind::Box;
    std::string rest = trim(t.substr(3));
    if (!rest.empty()) {
      if (rest.front() != '[' || rest.back() != ']' || rest.find(',') == std::string::npos)
        throw std::invalid_argument("box bounds must look like box[lo,hi]");
      std::string body = rest.substr(1, rest.size() - 2);
      std::size_t comma = body.find(',');
      try {
        d.lo = std::stod(trim(body.substr(0, comma)));
        d.hi = std::stod(trim(body.substr(comma + 1)));
      } catch (const std::exception&) {
        throw std::invalid_argument("box bounds must be numbers: '" + t + "'");
      }
      if (!(d.lo < d.hi)) throw std::invalid_argument("box needs lo < hi");
    }
  } else if (t == "l1ball") {
    d.kind = DomainKind::L1Ball;
    if (!(radius > 0)) throw std::invalid_argument("l1ball radius must be positive");
  } else if (t == "simplex") {
    d.kind = DomainKind::VecSimplex;
  } else if (t == "matrix-simplex") {
    d.kind = DomainKind::MatrixSimplex;
    if (!(weight > 0)) throw std::invalid_argument("matrix-simplex weight must be positive");
  } else if (t == "simple-graphs") {
    d.kind = DomainKind::BinarySimpleGraphs;
  } else {
    throw std::invalid_argument("unknown domain '" + t + "' (expected box[lo,hi], l1ball, simplex, matrix-simplex or simple-graphs)");
  }
  return d;
}

std::string default_domain(Setting s, const std::string& cost_text) {
  if (trim(cost_text) == "bad-quartic") return "l1ball";
  switch (s) {
    case Setting::Means: return "box[-1,1]";
    case Setting::Symfunc: return "simplex";
    case Setting::GraphDensity: return "simple-graphs";
    case Setting::GraphNumbers: return "matrix-simplex";
  }
  return "box";
}

SweepProblem make_problem(const ExperimentSpec& spec, const std::string& cost_text) {
  if (spec.cost.terms.empty()) throw std::invalid_argument("the cost is zero");
  SweepProblem prob;
  const Setting inferred = infer_setting(spec.cost);
  if (spec.setting && *spec.setting != inferred)
    throw std::invalid_argument("setting '" + setting_name(*spec.setting) + "' does not match the cost atoms, which belong to '" +
                                setting_name(inferred) + "'");
  prob.setting = inferred;
  prob.cost = to_cost_poly(spec.cost);
  if (const auto* g = std::get_if<GraphCost>(&prob.cost);
      g && prob.setting == Setting::GraphDensity && g->direct.basis() != GraphBasis::T)
    throw std::invalid_argument("density costs are written with t and tc atoms; tinj appears only in dual costs");
  const std::string dom = spec.domain.empty() ? default_domain(prob.setting, cost_text) : spec.domain;
  prob.domain = parse_domain(dom, spec.radius, spec.weight, mean_rows(prob.cost));
  prob.solver = spec.solver;
  prob.allow_large = spec.allow_large;
  validate(prob);
  return prob;
}

std::vector<std::pair<int, CostExpr>> run_dualize(const ExperimentSpec& spec) {
  if (spec.ns.empty()) throw std::invalid_argument("no dimensions given");
  SweepProblem prob = make_problem(spec);
  std::vector<std::pair<int, CostExpr>> out;
  for (int n : spec.ns) {
    CostPoly q = dual_cost(prob, n);
    if (auto* s = std::get_if<SymPoly>(&q); s && s->basis() == SymBasis::Monomial) q = m_to_s(*s);
    out.emplace_back(n, from_cost_poly(q));
  }
  return out;
}

SweepResult run_bound(const ExperimentSpec& spec, const std::string& cost_text) {
  if (spec.ns.empty()) throw std::invalid_argument("no dimensions given");
  spec.solver_config.validate();
  SweepProblem prob = make_problem(spec, cost_text);
  return bound_sweep(prob, spec.ns, spec.solver_config);
}

CostPoly random_identity_cost(Setting setting, int k, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 0x1dULL));
  switch (setting) {
    case Setting::Symfunc: {
      SymPoly p(SymBasis::PowerSum);
      p.add(Partition(), random_rational(rng));
      for (int d = 1; d <= std::min(k, 3); ++d)
        for (const auto& lam : partitions_of(d)) p.add(lam, random_rational(rng));
      return p;
    }
    case Setting::Means: {
      MeanPoly p(MeanBasis::PowerMean);
      for (const char* a : {"[(1,0)]", "[(0,2)]", "[(1,0);(0,1)]", "[(1,1);(1,0)]", "[(1,0);(1,0);(0,1)]"}) {
        MultiIndexList atom = MultiIndexList::parse(a);
        if (atom.len() <= k) p.add(atom, random_rational(rng));
      }
      return p;
    }
    case Setting::GraphDensity: {
      GraphPoly direct(GraphBasis::T), comp(GraphBasis::T);
      direct.add(GraphClass(), random_rational(rng));
      for (const char* h : {"K2", "P3", "K3"}) {
        GraphClass g(named_graph(h));
        if (g.n_vertices() <= k) direct.add(g, random_rational(rng));
      }
      if (k >= 2) comp.add(GraphClass(named_graph("K2")), random_rational(rng));
      return GraphCost(direct, comp);
    }
    case Setting::GraphNumbers: {
      GraphPoly p(GraphBasis::Hom);
      for (const char* h : {"loop", "K2", "{1-1,1-1}", "{1-1,1-2}", "P3", "K3"}) {
        GraphPoly one(GraphBasis::Hom);
        GraphClass g(parse_graph(h));
        one.add(g, 1);
        if (graph_numbers_min_k(one) <= k) p.add(g, random_rational(rng));
      }
      return GraphCost(p);
    }
  }
  throw std::invalid_argument("unknown setting");
}

IdentityReport verify_identity(Setting setting, const CostPoly& cost, int k, int n, std::uint64_t seed, int trials) {
  if (k < 1 || n < 1 || trials < 1) throw std::invalid_argument("identity check needs k, n, trials >= 1");
  SweepProblem prob;
  prob.setting = setting;
  prob.cost = cost;
  const CostPoly q = dual_cost(prob, k);
  IdentityReport rep;
  rep.setting = setting;
  rep.k = k;
  rep.n = n;
  rep.trials = trials;
  rep.max_error = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    Rational lhs, rhs;
    switch (setting) {
      case Setting::Symfunc: {
        std::vector<Rational> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = random_rational(rng);
        lhs = evaluate<Rational>(std::get<SymPoly>(cost), x);
        const auto& qs = std::get<SymPoly>(q);
        rhs = expect_exact<Rational>(n, k, [&](const FiniteMap& f) { return evaluate<Rational>(qs, coact_vec(f, x)); });
        break;
      }
      case Setting::Means: {
        Matrix<Rational> x(mean_rows(cost), n, Rational(0));
        for (int r = 0; r < x.rows(); ++r)
          for (int c = 0; c < n; ++c) x(r, c) = random_rational(rng);
        lhs = evaluate<Rational>(std::get<MeanPoly>(cost), x);
        const auto& qm = std::get<MeanPoly>(q);
        rhs = expect_exact<Rational>(k, n, [&](const FiniteMap& f) { return evaluate<Rational>(qm, act_vec(f, x)); });
        break;
      }
      case Setting::GraphDensity: {
        Matrix<Rational> x = random_symmetric(rng, n);
        lhs = eval_graph_cost(std::get<GraphCost>(cost), x);
        const auto& qg = std::get<GraphCost>(q);
        rhs = expect_exact<Rational>(k, n, [&](const FiniteMap& f) { return eval_graph_cost(qg, act_matrix(f, x)); });
        break;
      }
      case Setting::GraphNumbers: {
        Matrix<Rational> x = random_symmetric(rng, n);
        lhs = evaluate<Rational>(std::get<GraphCost>(cost).direct, x);
        const auto& qg = std::get<GraphCost>(q).direct;
        rhs = expect_exact<Rational>(n, k, [&](const FiniteMap& f) { return evaluate<Rational>(qg, quotient(x, f)); });
        break;
      }
    }
    Rational err = lhs - rhs;
    if (err < 0) err = -err;
    if (err > rep.max_error) rep.max_error = err;
  }
  rep.pass = rep.max_error == 0;
  return rep;
}

std::string emit_checks(const std::vector<CheckRow>& rows) {
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows)
    body.push_back({r.check, std::to_string(r.n), r.m ? std::to_string(r.m) : "", r.statistic, r.bound,
                    r.pass ? "true" : "false"});
  return csv_table({"check", "n", "m", "statistic", "bound", "pass"}, body);
}

std::vector<CheckRow> run_verify_identity(Setting setting, const std::optional<CostPoly>& cost, int k,
                                          const std::vector<int>& ns, std::uint64_t seed, int trials) {
  const CostPoly c = cost ? *cost : random_identity_cost(setting, k, seed);
  std::vector<CheckRow> rows;
  for (int n : ns) {
    IdentityReport r = verify_identity(setting, c, k, n, derive_seed(seed, static_cast<std::uint64_t>(n)), trials);
    rows.push_back({"identity-" + setting_name(setting), n, k, rational_text(r.max_error), "0", r.pass});
  }
  return rows;
}

std::vector<CheckRow> run_verify_tv(const std::vector<int>& ns, const std::vector<int>& ms) {
  std::vector<CheckRow> rows;
  for (int n : ns)
    for (int m : ms) {
      if (m > n) continue;
      std::vector<Rational> base;
      for (int i = 0; i < n; ++i) base.emplace_back(i);
      TvRateResult p = tv_rate_experiment(n, m, base);
      rows.push_back({"tv-permutation", n, m, rational_text(p.tv), rational_text(p.bound), p.pass});
      TvRateResult b = bernoulli_tv_experiment(n, m);
      rows.push_back({"tv-bernoulli", n, m, rational_text(b.tv), rational_text(b.bound), b.pass});
      TvRateResult f = map_law_tv_experiment(n, m);
      rows.push_back({"tv-maps", n, m, rational_text(f.tv), rational_text(f.bound), f.pass});
    }
  return rows;
}

std::vector<CheckRow> run_verify_w1(const std::vector<int>& ns) {
  std::vector<CheckRow> rows;
  for (int n : ns) {
    W1RateResult r = w1_tightness_experiment(n);
    rows.push_back({"w1-tightness", n, 0, rational_text(r.w1), format_double(r.bound), r.pass});
  }
  return rows;
}

}  // namespace anydim
