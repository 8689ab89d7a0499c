#pragma once

#include "anydim/core/matrix.hpp"
#include "anydim/core/partition.hpp"
#include "anydim/core/rational.hpp"
#include "anydim/symfunc/sympoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace anydim {

// Square exact matrix with rows and columns labelled by the same atom list.
template <class Atom>
struct TransitionMatrix {
  std::vector<Atom> index;
  Matrix<Rational> entries;

  int size() const { return static_cast<int>(index.size()); }

  int position(const Atom& a) const {
    auto it = std::find(index.begin(), index.end(), a);
    if (it == index.end()) throw std::out_of_range("atom not in matrix index");
    return static_cast<int>(it - index.begin());
  }

  const Rational& at(const Atom& row, const Atom& col) const {
    return entries(position(row), position(col));
  }
};

// R(lam, mu) = refinement_count over all partitions of weight <= d.
TransitionMatrix<Partition> refinement_matrix(int d);

// Row lam expands the de Finetti basis element at dimension k in monomial sums.
TransitionMatrix<Partition> definetti_sym_matrix(long long k, int d);

// Dual cost in the m-basis. `k` is the dimension the result is used at;
// the identity p(x) = E_f q(fiber sums of x) holds for uniform f:[n]->[k].
SymPoly dualize_symfunc(const SymPoly& p, long long k);

}  // namespace anydim
