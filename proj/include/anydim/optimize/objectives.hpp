#pragma once
#include "anydim/graphalg/counts.hpp"
#include "anydim/optimize/domain.hpp"
#include "anydim/symfunc/means.hpp"
#include "anydim/symfunc/sympoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace anydim {

// Real-valued function on flat points. `value_and_gradient` is empty when only values
// are available; the solver then uses central differences.
struct Objective {
  std::function<double(const std::vector<double>&)> value;
  std::function<double(const std::vector<double>&, std::vector<double>&)> value_and_gradient;
  bool has_gradient() const { return static_cast<bool>(value_and_gradient); }
};

// Graph cost on binary simple graphs: direct(X) + complement(1 - X), the
// complement taken entrywise (so it has ones on the diagonal).
struct GraphCost {
  GraphPoly direct;
  GraphPoly complement;
  GraphCost() : direct(GraphBasis::T), complement(GraphBasis::T) {}
  explicit GraphCost(GraphPoly p) : direct(std::move(p)), complement(direct.basis()) {}
  GraphCost(GraphPoly p, GraphPoly c) : direct(std::move(p)), complement(std::move(c)) {}
  int degree() const { return std::max(direct.degree(), complement.degree()); }
  int max_vertices() const;
  bool operator==(const GraphCost&) const = default;
};

// Symmetric polynomial in n variables; evaluated through power sums.
Objective make_objective(const SymPoly& p, int n);
// Mean polynomial on rows x n points.
Objective make_objective(const MeanPoly& p, int rows, int n);
// Graph polynomial on symmetric n x n matrices (complement must be empty).
Objective make_objective(const GraphPoly& p, int n);
// Negation, used for maximization.
Objective negated(const Objective& f);

// Central differences with step h; matrix domains perturb symmetric pairs.
std::vector<double> finite_difference_gradient(const Objective& f, const Domain& dom,
                                               const std::vector<double>& x, double h = 1e-6);

}  // namespace anydim
