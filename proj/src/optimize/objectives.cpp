#include "anydim/optimize/objectives.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace anydim {

int GraphCost::max_vertices() const { return std::max(anydim::max_vertices(direct), anydim::max_vertices(complement)); }

namespace {

double ipowd(double x, int e) {
  double out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// ---- power sums ----

struct PowerSumForm {
  std::vector<std::pair<double, std::vector<int>>> terms;
  int max_part = 0;
};

double power_sum_eval(const PowerSumForm& form, const std::vector<double>& x, std::vector<double>* grad) {
  std::vector<double> ps(static_cast<std::size_t>(form.max_part) + 1, 0.0);
  for (double v : x) {
    double p = 1;
    for (int e = 0; e <= form.max_part; ++e) {
      ps[static_cast<std::size_t>(e)] += p;
      p *= v;
    }
  }
  std::vector<double> dps(ps.size(), 0.0);
  double total = 0;
  for (const auto& [c, parts] : form.terms) {
    const std::size_t L = parts.size();
    std::vector<double> pre(L + 1, 1.0), suf(L + 1, 1.0);
    for (std::size_t j = 0; j < L; ++j) pre[j + 1] = pre[j] * ps[static_cast<std::size_t>(parts[j])];
    for (std::size_t j = L; j-- > 0;) suf[j] = suf[j + 1] * ps[static_cast<std::size_t>(parts[j])];
    total += c * pre[L];
    if (grad)
      for (std::size_t j = 0; j < L; ++j) dps[static_cast<std::size_t>(parts[j])] += c * pre[j] * suf[j + 1];
  }
  if (grad) {
    grad->assign(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      double g = 0, p = 1;  // p = x^(e-1)
      for (int e = 1; e <= form.max_part; ++e) {
        g += dps[static_cast<std::size_t>(e)] * e * p;
        p *= x[i];
      }
      (*grad)[i] = g;
    }
  }
  return total;
}

// ---- means ----

struct MeanTerm {
  double coeff;
  std::vector<MultiIndex> alphas;
};

struct MeanForm {
  MeanBasis kind;
  int rows;
  int n;
  std::vector<MeanTerm> terms;
};

double column_power(const std::vector<double>& x, int n, int col, const MultiIndex& a) {
  double out = 1;
  for (std::size_t r = 0; r < a.size(); ++r) out *= ipowd(x[r * static_cast<std::size_t>(n) + col], a[r]);
  return out;
}

// d/dx_{r,col} of the column power.
double column_power_partial(const std::vector<double>& x, int n, int col, const MultiIndex& a, std::size_t r) {
  if (a[r] == 0) return 0;
  double out = a[r] * ipowd(x[r * static_cast<std::size_t>(n) + col], a[r] - 1);
  for (std::size_t s = 0; s < a.size(); ++s)
    if (s != r) out *= ipowd(x[s * static_cast<std::size_t>(n) + col], a[s]);
  return out;
}

double mean_eval(const MeanForm& form, const std::vector<double>& x, std::vector<double>* grad) {
  const int n = form.n;
  const std::size_t rows = static_cast<std::size_t>(form.rows);
  if (grad) grad->assign(x.size(), 0.0);
  double total = 0;
  for (const auto& term : form.terms) {
    const std::size_t L = term.alphas.size();
    // table[t][i] = column power of alpha_t at column i
    std::vector<std::vector<double>> table(L, std::vector<double>(static_cast<std::size_t>(n)));
    for (std::size_t t = 0; t < L; ++t)
      for (int i = 0; i < n; ++i) table[t][static_cast<std::size_t>(i)] = column_power(x, n, i, term.alphas[t]);
    // coef[t][i] = d(term value) / d(table[t][i])
    std::vector<std::vector<double>> coef(L, std::vector<double>(static_cast<std::size_t>(n), 0.0));
    double value = 0;
    if (form.kind == MeanBasis::PowerMean) {
      std::vector<double> means(L, 0.0);
      for (std::size_t t = 0; t < L; ++t) {
        for (double v : table[t]) means[t] += v;
        means[t] /= n;
      }
      std::vector<double> pre(L + 1, 1.0), suf(L + 1, 1.0);
      for (std::size_t t = 0; t < L; ++t) pre[t + 1] = pre[t] * means[t];
      for (std::size_t t = L; t-- > 0;) suf[t] = suf[t + 1] * means[t];
      value = pre[L];
      for (std::size_t t = 0; t < L; ++t)
        for (auto& c : coef[t]) c = pre[t] * suf[t + 1] / n;
    } else {
      if (n < static_cast<int>(L)) throw std::invalid_argument("dimension too small for atom");
      double norm = 1;
      for (std::size_t t = 0; t < L; ++t) norm *= static_cast<double>(n - static_cast<int>(t));
      std::vector<int> pick(L);
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      std::vector<double> pre(L + 1, 1.0), suf(L + 1, 1.0);
      auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == L) {
          value += pre[L];
          if (grad) {
            suf[L] = 1;
            for (std::size_t s = L; s-- > 0;) suf[s] = suf[s + 1] * table[s][static_cast<std::size_t>(pick[s])];
            for (std::size_t s = 0; s < L; ++s) coef[s][static_cast<std::size_t>(pick[s])] += pre[s] * suf[s + 1];
          }
          return;
        }
        for (int i = 0; i < n; ++i) {
          if (used[static_cast<std::size_t>(i)]) continue;
          used[static_cast<std::size_t>(i)] = 1;
          pick[t] = i;
          pre[t + 1] = pre[t] * table[t][static_cast<std::size_t>(i)];
          self(self, t + 1);
          used[static_cast<std::size_t>(i)] = 0;
        }
      };
      rec(rec, 0);
      value /= norm;
      for (auto& row : coef)
        for (auto& c : row) c /= norm;
    }
    total += term.coeff * value;
    if (grad)
      for (std::size_t t = 0; t < L; ++t)
        for (int i = 0; i < n; ++i) {
          double c = coef[t][static_cast<std::size_t>(i)];
          if (c == 0) continue;
          for (std::size_t r = 0; r < rows; ++r)
            (*grad)[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] +=
                term.coeff * c * column_power_partial(x, n, i, term.alphas[t], r);
        }
  }
  return total;
}

// ---- graphs ----

struct GraphTerm {
  double coeff;  // includes the basis normalization
  int nv;
  bool injective;
  std::vector<std::array<int, 3>> edges;  // u, v, multiplicity
};

double graph_eval(const std::vector<GraphTerm>& terms, int n, const std::vector<double>& x, std::vector<double>* grad) {
  std::vector<double> g;
  if (grad) g.assign(x.size(), 0.0);
  double total = 0;
  for (const auto& term : terms) {
    const std::size_t E = term.edges.size();
    if (term.nv == 0) {
      total += term.coeff;
      continue;
    }
    std::vector<int> f(static_cast<std::size_t>(term.nv));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<double> fac(E), pre(E + 1, 1.0), suf(E + 1, 1.0);
    double sum = 0;
    auto rec = [&](auto&& self, int v) -> void {
      if (v == term.nv) {
        for (std::size_t e = 0; e < E; ++e) {
          const auto& [a, b, m] = term.edges[e];
          fac[e] = ipowd(x[static_cast<std::size_t>(f[static_cast<std::size_t>(a)]) * n + f[static_cast<std::size_t>(b)]], m);
          pre[e + 1] = pre[e] * fac[e];
        }
        sum += pre[E];
        if (grad) {
          for (std::size_t e = E; e-- > 0;) suf[e] = suf[e + 1] * fac[e];
          for (std::size_t e = 0; e < E; ++e) {
            const auto& [a, b, m] = term.edges[e];
            std::size_t idx = static_cast<std::size_t>(f[static_cast<std::size_t>(a)]) * n + f[static_cast<std::size_t>(b)];
            g[idx] += term.coeff * pre[e] * suf[e + 1] * m * ipowd(x[idx], m - 1);
          }
        }
        return;
      }
      for (int a = 0; a < n; ++a) {
        if (term.injective && used[static_cast<std::size_t>(a)]) continue;
        used[static_cast<std::size_t>(a)] = 1;
        f[static_cast<std::size_t>(v)] = a;
        self(self, v + 1);
        used[static_cast<std::size_t>(a)] = 0;
      }
    };
    rec(rec, 0);
    total += term.coeff * sum;
  }
  if (grad) {
    grad->assign(x.size(), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        (*grad)[static_cast<std::size_t>(i) * n + j] =
            0.5 * (g[static_cast<std::size_t>(i) * n + j] + g[static_cast<std::size_t>(j) * n + i]);
  }
  return total;
}

template <class Eval>
Objective wrap(Eval eval) {
  auto shared = std::make_shared<Eval>(std::move(eval));
  Objective f;
  f.value = [shared](const std::vector<double>& x) { return (*shared)(x, nullptr); };
  f.value_and_gradient = [shared](const std::vector<double>& x, std::vector<double>& g) { return (*shared)(x, &g); };
  return f;
}

}  // namespace

Objective make_objective(const SymPoly& p, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  SymPoly s = p.basis() == SymBasis::PowerSum ? p : m_to_s(p);
  PowerSumForm form;
  for (const auto& [lam, c] : s.terms()) {
    form.terms.emplace_back(to_double(c), lam.parts());
    if (!lam.empty()) form.max_part = std::max(form.max_part, lam[0]);
  }
  return wrap([form, n](const std::vector<double>& x, std::vector<double>* g) {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point has the wrong size");
    return power_sum_eval(form, x, g);
  });
}

Objective make_objective(const MeanPoly& p, int rows, int n) {
  if (n < 1 || rows < 1) throw std::invalid_argument("dimension must be positive");
  MeanForm form{p.basis(), rows, n, {}};
  for (const auto& [atom, c] : p.terms()) {
    if (!atom.empty() && atom.ambient_dim() != rows) throw std::invalid_argument("dimension mismatch between atom and point");
    if (p.basis() == MeanBasis::MonomialMean && atom.len() > n) throw std::invalid_argument("dimension too small for atom");
    form.terms.push_back({to_double(c), atom.entries()});
  }
  return wrap([form](const std::vector<double>& x, std::vector<double>* g) {
    if (x.size() != static_cast<std::size_t>(form.rows) * form.n) throw std::invalid_argument("point has the wrong size");
    return mean_eval(form, x, g);
  });
}

Objective make_objective(const GraphPoly& p, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<GraphTerm> terms;
  for (const auto& [h, c] : p.terms()) {
    GraphTerm t;
    t.nv = h.n_vertices();
    t.injective = p.basis() == GraphBasis::Inj || p.basis() == GraphBasis::TInj || p.basis() == GraphBasis::MGraphSum;
    double scale = 1;
    switch (p.basis()) {
      case GraphBasis::T: scale = std::pow(static_cast<double>(n), -t.nv); break;
      case GraphBasis::TInj:
        if (n < t.nv) throw std::invalid_argument("injective density undefined: too few vertices");
        for (int i = 0; i < t.nv; ++i) scale /= static_cast<double>(n - i);
        break;
      case GraphBasis::MGraphSum: scale = 1.0 / static_cast<double>(h.aut_count()); break;
      default: break;
    }
    t.coeff = to_double(c) * scale;
    const auto& g = h.representative();
    for (int u = 0; u < t.nv; ++u)
      for (int v = u; v < t.nv; ++v)
        if (g(u, v)) t.edges.push_back({u, v, g(u, v)});
    terms.push_back(std::move(t));
  }
  return wrap([terms, n](const std::vector<double>& x, std::vector<double>* g) {
    if (x.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("point has the wrong size");
    return graph_eval(terms, n, x, g);
  });
}

Objective negated(const Objective& f) {
  Objective out;
  auto v = f.value;
  out.value = [v](const std::vector<double>& x) { return -v(x); };
  if (f.has_gradient()) {
    auto vg = f.value_and_gradient;
    out.value_and_gradient = [vg](const std::vector<double>& x, std::vector<double>& g) {
      double r = vg(x, g);
      for (double& e : g) e = -e;
      return -r;
    };
  }
  return out;
}

std::vector<double> finite_difference_gradient(const Objective& f, const Domain& dom, const std::vector<double>& x,
                                               double h) {
  std::vector<double> g(x.size(), 0.0);
  std::vector<double> y(x);
  if (dom.is_matrix()) {
    const int n = dom.n;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::size_t a = static_cast<std::size_t>(i) * n + j, b = static_cast<std::size_t>(j) * n + i;
        y[a] = y[b] = x[a] + h;
        double fp = f.value(y);
        y[a] = y[b] = x[a] - h;
        double fm = f.value(y);
        y[a] = x[a];
        y[b] = x[b];
        double d = (fp - fm) / (2 * h);
        if (i == j) g[a] = d;
        else g[a] = g[b] = 0.5 * d;
      }
    return g;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] + h;
    double fp = f.value(y);
    y[i] = x[i] - h;
    double fm = f.value(y);
    y[i] = x[i];
    g[i] = (fp - fm) / (2 * h);
  }
  return g;
}

}  // namespace anydim
