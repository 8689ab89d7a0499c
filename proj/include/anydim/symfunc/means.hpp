#pragma once

#include "anydim/core/basis_poly.hpp"
#include "anydim/core/combinat.hpp"
#include "anydim/core/matrix.hpp"
#include "anydim/core/partition.hpp"
#include "anydim/symfunc/sympoly.hpp"

#include <string>

namespace anydim {

enum class MeanBasis { PowerMean, MonomialMean };

// Polynomial in power means sbar^(L) or monomial means mbar^(L) of the
// columns of a dim x n matrix.
using MeanPoly = BasisPoly<MultiIndexList, MeanBasis>;

std::string basis_name(MeanBasis b);  // "sbar" or "mbar"
std::string to_string(const MeanPoly& p);

namespace detail {

template <class T>
T column_power(const Matrix<T>& x, int col, const MultiIndex& alpha) {
  T out(1);
  for (int r = 0; r < x.rows(); ++r) out *= ipow(x(r, col), alpha[static_cast<std::size_t>(r)]);
  return out;
}

}  // namespace detail

// x is dim x n with one point per column.
template <class T>
T eval_mean_atom(const MultiIndexList& atom, MeanBasis kind, const Matrix<T>& x) {
  const int n = x.cols();
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (!atom.empty() && x.rows() != atom.ambient_dim())
    throw std::invalid_argument("dimension mismatch between atom and point");
  const auto& e = atom.entries();
  if (kind == MeanBasis::PowerMean) {
    T out(1);
    for (const auto& alpha : e) {
      T s(0);
      for (int j = 0; j < n; ++j) s += detail::column_power(x, j, alpha);
      out *= s / T(n);
    }
    return out;
  }
  if (n < atom.len()) throw std::invalid_argument("dimension too small for atom");
  T total = detail::injective_sum<T>(atom.len(), n, [&](int t, int i) {
    return detail::column_power(x, i, e[static_cast<std::size_t>(t)]);
  });
  return total / T(static_cast<long long>(falling_factorial(n, atom.len())));
}

template <class T>
T evaluate(const MeanPoly& p, const Matrix<T>& x) {
  T out(0);
  for (const auto& [atom, c] : p.terms()) {
    T v = eval_mean_atom<T>(atom, p.basis(), x);
    if constexpr (std::is_same_v<T, Rational>) out += c * v;
    else out += to_double(c) * v;
  }
  return out;
}

// The power means and monomial means correspond atom by atom.
MeanPoly dualize_means(const MeanPoly& p);

// Largest number of multi-indices in any atom.
int max_atom_len(const MeanPoly& p);

}  // namespace anydim
