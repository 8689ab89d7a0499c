#pragma once

#include "anydim/core/matrix.hpp"
#include "anydim/core/rational.hpp"
#include "anydim/core/seed.hpp"
#include "anydim/definetti/finite_map.hpp"
#include "anydim/graphalg/counts.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace anydim {

// f:[m]->[n]; column i of the result is column f(i) of x (x is dim x n).
template <class T>
Matrix<T> act_vec(const FiniteMap& f, const Matrix<T>& x) {
  if (x.cols() != f.target_size()) throw std::invalid_argument("shape mismatch between map and point");
  Matrix<T> out(x.rows(), f.source_size(), T(0));
  for (int r = 0; r < x.rows(); ++r)
    for (int i = 0; i < f.source_size(); ++i) out(r, i) = x(r, f(i));
  return out;
}

template <class T>
std::vector<T> act_vec(const FiniteMap& f, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != f.target_size())
    throw std::invalid_argument("shape mismatch between map and point");
  std::vector<T> out(static_cast<std::size_t>(f.source_size()));
  for (int i = 0; i < f.source_size(); ++i) out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(f(i))];
  return out;
}

// f:[k]->[n]; result(i,j) = X(f(i), f(j)).
template <class T>
Matrix<T> act_matrix(const FiniteMap& f, const Matrix<T>& x) {
  if (x.rows() != f.target_size() || x.cols() != f.target_size())
    throw std::invalid_argument("shape mismatch between map and matrix");
  Matrix<T> out(f.source_size(), f.source_size(), T(0));
  for (int i = 0; i < f.source_size(); ++i)
    for (int j = 0; j < f.source_size(); ++j) out(i, j) = x(f(i), f(j));
  return out;
}

// f:[n]->[m]; fiber sums.
template <class T>
std::vector<T> coact_vec(const FiniteMap& f, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != f.source_size())
    throw std::invalid_argument("shape mismatch between map and point");
  std::vector<T> out(static_cast<std::size_t>(f.target_size()), T(0));
  for (int i = 0; i < f.source_size(); ++i) out[static_cast<std::size_t>(f(i))] += x[static_cast<std::size_t>(i)];
  return out;
}

template <class T>
Matrix<T> coact_matrix(const FiniteMap& f, const Matrix<T>& x) {
  return quotient(x, f);
}

constexpr std::uint64_t kExactMapBudget = 100000000ULL;

// Average of eval(f) over all maps f:[source]->[target].
template <class T, class Eval>
T expect_exact(int source, int target, const Eval& eval) {
  std::uint64_t total = map_count(source, target);
  if (total > kExactMapBudget) throw std::invalid_argument("budget exceeded: use Monte Carlo");
  T sum(0);
  std::vector<int> vals(static_cast<std::size_t>(source), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    sum += eval(FiniteMap(source, target, vals));
    for (int j = 0; j < source; ++j) {
      if (++vals[static_cast<std::size_t>(j)] < target) break;
      vals[static_cast<std::size_t>(j)] = 0;
    }
  }
  return sum / T(static_cast<long long>(total));
}

struct ExpectationMode {
  enum class Kind { Exact, MonteCarlo };
  Kind kind = Kind::Exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static ExpectationMode exact() { return {}; }
  static ExpectationMode monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::MonteCarlo, samples, seed};
  }
};

struct Estimate {
  double mean = 0;
  double std_error = 0;  // zero for exact results
  std::uint64_t evaluations = 0;
  bool exact = false;
};

// Draw i uses the substream derive_seed(seed, i).
Estimate expect_over_maps(int source, int target, const std::function<double(const FiniteMap&)>& eval,
                          const ExpectationMode& mode);

}  // namespace anydim
