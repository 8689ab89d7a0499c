#pragma once

#include "anydim/core/basis_poly.hpp"
#include "anydim/core/matrix.hpp"
#include "anydim/core/rational.hpp"
#include "anydim/definetti/finite_map.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anydim {

// Symmetric nonnegative integer adjacency; the diagonal holds loop counts.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n_vertices);
  explicit MultiGraph(Matrix<int> adjacency);
  // 0-based endpoint pairs; repeated pairs add multiplicity, (i,i) is a loop.
  static MultiGraph from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges);

  int n_vertices() const { return adj_.rows(); }
  int operator()(int i, int j) const { return adj_(i, j); }
  void add_edge(int i, int j, int multiplicity = 1);
  const Matrix<int>& adjacency() const { return adj_; }

  // Sum over i <= j, i.e. the number of edges counted with multiplicity.
  int total_weight() const;
  int degree(int v) const;  // number of incident edge slots, loops counted once
  bool has_loop() const;
  MultiGraph without_isolated() const;
  // Vertex i of the result is vertex perm[i] of this graph.
  MultiGraph relabeled(const std::vector<int>& perm) const;

  bool operator==(const MultiGraph&) const = default;

 private:
  Matrix<int> adj_;
};

// Isomorphism class of a multigraph with isolated vertices removed.
class GraphClass {
 public:
  GraphClass() = default;
  // Canonicalizes; throws "canonicalization size limit" above 10 vertices.
  explicit GraphClass(const MultiGraph& g);

  const MultiGraph& representative() const { return rep_; }
  int n_vertices() const { return rep_.n_vertices(); }
  int edge_count() const { return edges_; }
  int weight() const { return edges_; }
  long long aut_count() const { return aut_; }
  // Product of factorials of the edge multiplicities.
  const BigInt& edge_factorial() const { return edge_factorial_; }
  bool has_loop() const { return rep_.has_loop(); }

  // "H{1-2,2-3}" with 1-based vertices.
  std::string to_string() const;

  bool operator==(const GraphClass& o) const { return rep_ == o.rep_; }

 private:
  MultiGraph rep_;
  int edges_ = 0;
  long long aut_ = 1;
  BigInt edge_factorial_ = 1;
};

bool operator<(const GraphClass& a, const GraphClass& b);

constexpr int kCanonicalVertexLimit = 10;

GraphClass canonical_form(const MultiGraph& g);

// Parses "H{1-2,2-3,1-1}" or "{1-2,...}" (1-based) or a named shortcut.
MultiGraph parse_graph(std::string_view text);
// K1, K2, K3, K4, P3, P4, C4, K2uK2, K3pendant, loop. Throws on unknown names.
MultiGraph named_graph(std::string_view name);
bool is_named_graph(std::string_view name);

enum class GraphBasis { Hom, Inj, T, TInj, MGraphSum };
using GraphPoly = BasisPoly<GraphClass, GraphBasis>;

std::string basis_name(GraphBasis b);  // "hom", "inj", "t", "tinj", "mg"
std::string to_string(const GraphPoly& p);
int max_vertices(const GraphPoly& p);

// Edge-count preserving merge along the fibers of f: an edge whose endpoints
// merge becomes one loop with the same multiplicity.
MultiGraph multigraph_quotient(const MultiGraph& g, const FiniteMap& f);

// All classes obtained from g by merging vertices (g itself included).
std::vector<GraphClass> graph_quotients(const GraphClass& g);

// Surjections V(g) -> V(h) whose multigraph quotient equals h's representative.
std::uint64_t graph_refinement_count(const GraphClass& g, const GraphClass& h);
// Same surjections, each weighted by 2^c with c the number of non-loop edges
// of g landing inside a single fiber.
std::uint64_t weighted_refinement_count(const GraphClass& g, const GraphClass& h);

// All classes refining h (same edge count), h included, sorted.
std::vector<GraphClass> graph_refinements(const GraphClass& h);
// Union of refinements of every atom.
std::vector<GraphClass> refinement_closure(const std::vector<GraphClass>& atoms);

// Labelled simple graphs on n vertices; bit b of the index is the b-th pair
// (i<j) of the upper triangle in row-major order.
class SimpleGraphStream {
 public:
  explicit SimpleGraphStream(int n);
  int n() const { return n_; }
  std::uint64_t count() const { return std::uint64_t(1) << pairs_.size(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  Matrix<int> at(std::uint64_t index) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

constexpr int kSimpleGraphStreamLimit = 8;

SimpleGraphStream enumerate_simple_graphs(int n);

}  // namespace anydim
