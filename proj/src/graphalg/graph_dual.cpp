#include "anydim/graphalg/counts.hpp"

#include <algorithm>
#include <set>

namespace anydim {

GraphPoly hom_to_m(const GraphPoly& p) {
  GraphPoly out(GraphBasis::MGraphSum);
  switch (p.basis()) {
    case GraphBasis::MGraphSum: return p;
    case GraphBasis::Inj:
      for (const auto& [h, c] : p.terms()) out.add(h, c * Rational(h.aut_count()));
      return out;
    case GraphBasis::Hom:
      for (const auto& [h, c] : p.terms())
        for (const auto& g : graph_quotients(h)) {
          auto r = graph_refinement_count(h, g);
          if (r) out.add(g, c * Rational(static_cast<long long>(r)));
        }
      return out;
    default:
      throw std::invalid_argument("hom_to_m expects hom or inj basis");
  }
}

namespace {

Rational graph_entry(long long k, const GraphClass& h, const GraphClass& g) {
  auto r = weighted_refinement_count(g, h);
  if (r == 0) return 0;
  Rational out(h.edge_factorial(), g.edge_factorial());
  out *= Rational(falling_factorial(k, h.n_vertices()));
  out /= pow_int(Rational(k), g.n_vertices());
  out *= Rational(static_cast<long long>(r));
  out /= Rational(h.aut_count());
  return out;
}

int closure_vertex_bound(const std::vector<GraphClass>& atoms) {
  int v = 0;
  for (const auto& a : atoms) v = std::max(v, a.n_vertices());
  return v;
}

}  // namespace

TransitionMatrix<GraphClass> definetti_graph_matrix(long long k, const std::vector<GraphClass>& atoms) {
  std::set<GraphClass> index(atoms.begin(), atoms.end());
  for (const auto& a : index)
    for (const auto& r : graph_refinements(a))
      if (!index.count(r)) throw std::invalid_argument("atom set not refinement-closed");
  if (k < 1) throw std::invalid_argument("k must be positive");
  TransitionMatrix<GraphClass> t;
  t.index.assign(index.begin(), index.end());
  const int sz = t.size();
  t.entries = Matrix<Rational>(sz, sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      t.entries(i, j) = graph_entry(k, t.index[static_cast<std::size_t>(i)], t.index[static_cast<std::size_t>(j)]);
  return t;
}

GraphPoly dualize_graph_density(const GraphPoly& p) {
  if (p.basis() != GraphBasis::T) throw std::invalid_argument("dualize expects t-basis input");
  GraphPoly q(GraphBasis::TInj);
  for (const auto& [h, c] : p.terms()) q.add(h, c);
  return q;
}

int graph_numbers_min_k(const GraphPoly& p) {
  GraphPoly a = hom_to_m(p);
  std::vector<GraphClass> atoms;
  for (const auto& [h, c] : a.terms()) atoms.push_back(h);
  return std::max(1, closure_vertex_bound(refinement_closure(atoms)));
}

GraphPoly dualize_graph_numbers(const GraphPoly& p, long long k) {
  GraphPoly a = hom_to_m(p);
  GraphPoly q(GraphBasis::MGraphSum);
  if (a.is_zero()) return q;
  std::vector<GraphClass> atoms;
  for (const auto& [h, c] : a.terms()) atoms.push_back(h);
  auto closure = refinement_closure(atoms);
  if (k < closure_vertex_bound(closure))
    throw std::invalid_argument("target dimension below the vertex count of the refinement closure");
  auto mat = definetti_graph_matrix(k, closure);
  // a = M^T c, coarsest (fewest vertices) first
  std::vector<int> order(static_cast<std::size_t>(mat.size()));
  for (int i = 0; i < mat.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return mat.index[static_cast<std::size_t>(x)].n_vertices() < mat.index[static_cast<std::size_t>(y)].n_vertices();
  });
  std::vector<Rational> c(static_cast<std::size_t>(mat.size()));
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    int g = order[oi];
    Rational rhs = a.coeff(mat.index[static_cast<std::size_t>(g)]);
    for (std::size_t oj = 0; oj < oi; ++oj) {
      int h = order[oj];
      if (c[static_cast<std::size_t>(h)] != 0) rhs -= c[static_cast<std::size_t>(h)] * mat.entries(h, g);
    }
    const Rational& diag = mat.entries(g, g);
    if (diag == 0) throw std::runtime_error("singular de Finetti matrix");
    c[static_cast<std::size_t>(g)] = rhs / diag;
    q.add(mat.index[static_cast<std::size_t>(g)], c[static_cast<std::size_t>(g)]);
  }
  return q;
}

}  // namespace anydim
