#include "anydim/graphalg/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace anydim {

namespace {

constexpr int kRefinementWeightLimit = 5;

std::uint64_t refinement_sum(const GraphClass& gc, const GraphClass& hc, bool weighted) {
  const MultiGraph& g = gc.representative();
  const MultiGraph& h = hc.representative();
  if (g.n_vertices() > kCanonicalVertexLimit || h.n_vertices() > kCanonicalVertexLimit)
    throw std::invalid_argument("size limit");
  if (gc.edge_count() != hc.edge_count() || g.n_vertices() < h.n_vertices()) return 0;
  const int a = g.n_vertices(), b = h.n_vertices();
  if (a == 0) return 1;
  Matrix<int> q(b, b, 0);
  std::vector<int> f(static_cast<std::size_t>(a), 0);
  std::uint64_t total = 0;

  // Edge counts agree, so a complete assignment never exceeding h equals h.
  auto rec = [&](auto&& self, int v, int inside) -> void {
    if (v == a) {
      total += weighted ? (std::uint64_t(1) << inside) : 1;
      return;
    }
    for (int x = 0; x < b; ++x) {
      f[static_cast<std::size_t>(v)] = x;
      bool ok = true;
      int add_inside = 0;
      int u = 0;
      for (; u <= v; ++u) {
        int m = g(u, v);
        if (!m) continue;
        int y = f[static_cast<std::size_t>(u)];
        q(x, y) += m;
        if (x != y) q(y, x) += m;
        else if (u != v) add_inside += m;
        if (q(x, y) > h(x, y)) {
          ok = false;
          ++u;
          break;
        }
      }
      if (ok) self(self, v + 1, inside + add_inside);
      for (int w = 0; w < u; ++w) {
        int m = g(w, v);
        if (!m) continue;
        int y = f[static_cast<std::size_t>(w)];
        q(x, y) -= m;
        if (x != y) q(y, x) -= m;
      }
    }
  };
  rec(rec, 0, 0);
  return total;
}

// Every way of splitting vertex v into two non-isolated vertices.
void single_splits(const MultiGraph& g, int v, std::vector<MultiGraph>& out) {
  const int n = g.n_vertices();
  std::vector<int> others;
  for (int w = 0; w < n; ++w)
    if (w != v && g(v, w)) others.push_back(w);
  const int loops = g(v, v);
  MultiGraph base = g;
  // detach v's edges; they are redistributed below
  for (int w : others) {
    base.add_edge(v, w, -g(v, w));
  }
  if (loops) base.add_edge(v, v, -loops);
  Matrix<int> grown(n + 1, n + 1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grown(i, j) = base(i, j);
  MultiGraph start(grown);
  const int nv = n;  // index of the new vertex

  auto rec = [&](auto&& self, std::size_t idx, MultiGraph cur) -> void {
    if (idx == others.size()) {
      for (int a = 0; a <= loops; ++a)
        for (int b = 0; a + b <= loops; ++b) {
          int c = loops - a - b;
          MultiGraph out_g = cur;
          if (a) out_g.add_edge(v, v, a);
          if (b) out_g.add_edge(nv, nv, b);
          if (c) out_g.add_edge(v, nv, c);
          if (out_g.degree(v) > 0 && out_g.degree(nv) > 0) out.push_back(out_g);
        }
      return;
    }
    int w = others[idx];
    int m = g(v, w);
    for (int h1 = 0; h1 <= m; ++h1) {
      MultiGraph next = cur;
      if (h1) next.add_edge(v, w, h1);
      if (m - h1) next.add_edge(nv, w, m - h1);
      self(self, idx + 1, next);
    }
  };
  rec(rec, 0, start);
}

}  // namespace

std::uint64_t graph_refinement_count(const GraphClass& g, const GraphClass& h) {
  return refinement_sum(g, h, false);
}

std::uint64_t weighted_refinement_count(const GraphClass& g, const GraphClass& h) {
  return refinement_sum(g, h, true);
}

std::vector<GraphClass> graph_quotients(const GraphClass& g) {
  std::set<GraphClass> seen{g};
  std::deque<GraphClass> queue{g};
  while (!queue.empty()) {
    GraphClass cur = queue.front();
    queue.pop_front();
    const int n = cur.n_vertices();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> vals(static_cast<std::size_t>(n));
        for (int v = 0, t = 0; v < n; ++v) vals[static_cast<std::size_t>(v)] = v == j ? i : t++;
        // i < j so i keeps its slot
        FiniteMap f(n, n - 1, vals);
        GraphClass q(multigraph_quotient(cur.representative(), f));
        if (seen.insert(q).second) queue.push_back(q);
      }
  }
  return {seen.begin(), seen.end()};
}

std::vector<GraphClass> graph_refinements(const GraphClass& h) {
  if (h.edge_count() > kRefinementWeightLimit) throw std::invalid_argument("size limit");
  std::set<GraphClass> seen{h};
  std::deque<GraphClass> queue{h};
  while (!queue.empty()) {
    GraphClass cur = queue.front();
    queue.pop_front();
    std::vector<MultiGraph> splits;
    for (int v = 0; v < cur.n_vertices(); ++v) single_splits(cur.representative(), v, splits);
    for (const auto& s : splits) {
      GraphClass c(s);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<GraphClass> refinement_closure(const std::vector<GraphClass>& atoms) {
  std::set<GraphClass> all;
  for (const auto& a : atoms) {
    auto r = graph_refinements(a);
    all.insert(r.begin(), r.end());
  }
  return {all.begin(), all.end()};
}

}  // namespace anydim
