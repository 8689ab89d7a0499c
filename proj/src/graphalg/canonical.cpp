#include "anydim/graphalg/multigraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace anydim {

namespace {

struct CanonResult {
  std::vector<int> order;
  long long automorphisms = 0;
};

// Lex-min of the lower-triangular row-major entry sequence over all vertex
// orders; the number of orders attaining it is |Aut|.
CanonResult canonical_order(const MultiGraph& g) {
  const int n = g.n_vertices();
  const std::size_t len = static_cast<std::size_t>(n) * (n + 1) / 2;
  std::vector<int> best(len), cur(len);
  std::vector<int> order(static_cast<std::size_t>(n)), best_order;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool have_best = false;
  long long count = 0;

  // The best sequence can change below any node, so the prefix is compared in
  // full rather than carrying a flag down the recursion.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        best_order = order;
        have_best = true;
        count = 1;
      } else if (cur == best) {
        ++count;
      }
      return;
    }
    const std::size_t off = static_cast<std::size_t>(pos) * (pos + 1) / 2;
    const std::size_t end = off + static_cast<std::size_t>(pos) + 1;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      order[static_cast<std::size_t>(pos)] = v;
      for (int j = 0; j <= pos; ++j) cur[off + j] = g(v, order[static_cast<std::size_t>(j)]);
      if (have_best && std::lexicographical_compare(best.begin(), best.begin() + static_cast<long>(end), cur.begin(),
                                                    cur.begin() + static_cast<long>(end)))
        continue;
      used[static_cast<std::size_t>(v)] = 1;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
  return {best_order, count};
}

}  // namespace

GraphClass::GraphClass(const MultiGraph& g) {
  MultiGraph core = g.without_isolated();
  if (core.n_vertices() > kCanonicalVertexLimit)
    throw std::invalid_argument("canonicalization size limit");

  static std::mutex mu;
  static std::map<std::vector<int>, std::pair<MultiGraph, long long>> cache;
  bool found = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(core.adjacency().data());
    if (it != cache.end()) {
      rep_ = it->second.first;
      aut_ = it->second.second;
      found = true;
    }
  }
  if (!found) {
    CanonResult r = canonical_order(core);
    rep_ = core.relabeled(r.order);
    aut_ = r.automorphisms;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 200000) cache.clear();
    cache.emplace(core.adjacency().data(), std::make_pair(rep_, aut_));
  }
  edges_ = rep_.total_weight();
  edge_factorial_ = 1;
  for (int i = 0; i < rep_.n_vertices(); ++i)
    for (int j = i; j < rep_.n_vertices(); ++j)
      for (int m = 2; m <= rep_(i, j); ++m) edge_factorial_ *= m;
}

GraphClass canonical_form(const MultiGraph& g) { return GraphClass(g); }

}  // namespace anydim
