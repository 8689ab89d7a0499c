#pragma once

#include "anydim/core/combinat.hpp"
#include "anydim/core/matrix.hpp"
#include "anydim/definetti/finite_map.hpp"
#include "anydim/graphalg/multigraph.hpp"
#include "anydim/symfunc/sympoly.hpp"
#include "anydim/symfunc/transition.hpp"

#include <stdexcept>
#include <type_traits>

namespace anydim {

// Symmetric real (or rational) weight matrix.
template <class T>
using WeightedGraphPoint = Matrix<T>;

namespace detail {

template <class T>
T map_sum(const GraphClass& h, const Matrix<T>& x, bool injective) {
  const MultiGraph& g = h.representative();
  const int nv = g.n_vertices();
  const int n = x.rows();
  if (x.cols() != n) throw std::invalid_argument("weight matrix must be square");
  if (nv == 0) return T(1);
  if (injective && n < nv) return T(0);
  std::vector<int> f(static_cast<std::size_t>(nv));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  T total(0);
  auto rec = [&](auto&& self, int v, const T& acc) -> void {
    if (v == nv) {
      total += acc;
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (injective && used[static_cast<std::size_t>(a)]) continue;
      T term = acc;
      for (int u = 0; u <= v; ++u) {
        int m = g(u, v);
        if (!m) continue;
        int b = u == v ? a : f[static_cast<std::size_t>(u)];
        term *= ipow(x(a, b), m);
      }
      if (term == T(0)) continue;
      f[static_cast<std::size_t>(v)] = a;
      used[static_cast<std::size_t>(a)] = 1;
      self(self, v + 1, term);
      used[static_cast<std::size_t>(a)] = 0;
    }
  };
  rec(rec, 0, T(1));
  return total;
}

}  // namespace detail

template <class T>
T hom_number(const GraphClass& h, const Matrix<T>& x) {
  return detail::map_sum(h, x, false);
}

template <class T>
T inj_number(const GraphClass& h, const Matrix<T>& x) {
  return detail::map_sum(h, x, true);
}

template <class T>
T t_density(const GraphClass& h, const Matrix<T>& x) {
  T denom(1);
  for (int i = 0; i < h.n_vertices(); ++i) denom *= T(x.rows());
  return hom_number(h, x) / denom;
}

template <class T>
T t_inj_density(const GraphClass& h, const Matrix<T>& x) {
  BigInt ff = falling_factorial(x.rows(), h.n_vertices());
  if (ff == 0) throw std::invalid_argument("injective density undefined: too few vertices");
  if constexpr (std::is_same_v<T, Rational>) return inj_number(h, x) / Rational(ff);
  else return inj_number(h, x) / ff.template convert_to<double>();
}

template <class T>
T m_graph_sum(const GraphClass& h, const Matrix<T>& x) {
  return inj_number(h, x) / T(h.aut_count());
}

template <class T>
T evaluate(const GraphPoly& p, const Matrix<T>& x) {
  T out(0);
  for (const auto& [h, c] : p.terms()) {
    T v(0);
    switch (p.basis()) {
      case GraphBasis::Hom: v = hom_number(h, x); break;
      case GraphBasis::Inj: v = inj_number(h, x); break;
      case GraphBasis::T: v = t_density(h, x); break;
      case GraphBasis::TInj: v = t_inj_density(h, x); break;
      case GraphBasis::MGraphSum: v = m_graph_sum(h, x); break;
    }
    if constexpr (std::is_same_v<T, Rational>) out += c * v;
    else out += to_double(c) * v;
  }
  return out;
}

// Y = F^T X F for f:[n]->[m]: Y(a,b) sums X(i,j) over f(i)=a, f(j)=b.
// Preserves the total entry sum.
template <class T>
Matrix<T> quotient(const Matrix<T>& x, const FiniteMap& f) {
  if (x.rows() != f.source_size() || x.cols() != f.source_size())
    throw std::invalid_argument("shape mismatch between map and matrix");
  Matrix<T> y(f.target_size(), f.target_size(), T(0));
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) y(f(i), f(j)) += x(i, j);
  return y;
}

// Hom or Inj basis -> MGraphSum basis.
GraphPoly hom_to_m(const GraphPoly& p);

// Rows H, columns G; entry is the coefficient of m^[G] in the de Finetti
// basis element of H at dimension k.
TransitionMatrix<GraphClass> definetti_graph_matrix(long long k, const std::vector<GraphClass>& atoms);

// T -> TInj with the same coefficients.
GraphPoly dualize_graph_density(const GraphPoly& p);

// Hom/Inj/MGraphSum input -> dual cost in the MGraphSum basis at dimension k.
GraphPoly dualize_graph_numbers(const GraphPoly& p, long long k);

// Smallest k accepted by dualize_graph_numbers for p.
int graph_numbers_min_k(const GraphPoly& p);

// Graph whose adjacency is diag(lam).
GraphClass loop_graph(const Partition& lam);

}  // namespace anydim
