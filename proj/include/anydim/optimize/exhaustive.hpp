#pragma once
#include "anydim/core/matrix.hpp"
#include "anydim/core/rational.hpp"
#include "anydim/optimize/multistart.hpp"
#include "anydim/optimize/objectives.hpp"

namespace anydim {

constexpr int kExhaustiveDefaultLimit = 7;

struct ExhaustiveOptions {
  bool allow_large = false;  // permits n = 8
  int threads = 0;           // 0 = hardware concurrency
};

// Exact value of the cost on one simple graph.
Rational evaluate_exact(const GraphCost& cost, const Matrix<int>& adjacency);

// Global minimum over all labelled simple graphs on n vertices, in exact
// arithmetic. Ties go to the smallest upper-triangle bitstring.
BoundRecord minimize_exhaustive(const GraphCost& cost, int n, const ExhaustiveOptions& opts = {});

// Largest |cost| over all labelled simple graphs on n vertices.
Rational max_abs_exhaustive(const GraphCost& cost, int n, const ExhaustiveOptions& opts = {});

}  // namespace anydim
