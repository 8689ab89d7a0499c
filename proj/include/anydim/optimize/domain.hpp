#pragma once
#include <random>
#include <string>
#include <vector>

namespace anydim {

enum class DomainKind { Box, L1Ball, VecSimplex, MatrixSimplex, BinarySimpleGraphs };

// Feasible set at one dimension n. Points are flat row-major vectors:
// Box is rows x n, L1Ball and VecSimplex have n entries, the matrix domains
// are full symmetric n x n matrices.
struct Domain {
  DomainKind kind = DomainKind::Box;
  int n = 0;
  int rows = 1;       // Box only
  double lo = -1.0;   // Box only
  double hi = 1.0;    // Box only
  double radius = 1;  // L1Ball only
  double weight = 1;  // MatrixSimplex only: required entry sum

  static Domain box(int rows, int n, double lo, double hi);
  static Domain l1_ball(int n, double radius);
  static Domain vec_simplex(int n);
  static Domain matrix_simplex(int n, double weight);
  static Domain simple_graphs(int n);

  bool is_discrete() const { return kind == DomainKind::BinarySimpleGraphs; }
  bool is_matrix() const { return kind == DomainKind::MatrixSimplex || kind == DomainKind::BinarySimpleGraphs; }
  std::size_t point_size() const;
  // Membership up to `tol` in each constraint.
  bool contains(const std::vector<double>& x, double tol = 1e-9) const;
  // Largest l1 norm of a feasible point.
  double l1_radius() const;
  std::string describe() const;
};

std::string kind_name(DomainKind k);

// Euclidean (Frobenius for matrices) projection. Throws "no projection" on
// discrete domains.
std::vector<double> project(const Domain& dom, const std::vector<double>& y);

// Uniform in the bounding box of the domain, then projected.
std::vector<double> random_feasible_point(const Domain& dom, std::mt19937_64& rng);

// Projection onto {x >= 0, sum w_i x_i = total} with positive weights w.
std::vector<double> project_weighted_simplex(const std::vector<double>& y, const std::vector<double>& w,
                                             double total);

}  // namespace anydim
