#include "anydim/optimize/exhaustive.hpp"

#include "anydim/graphalg/counts.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>

namespace anydim {

namespace {

// One atom prepared for bitmask counting on simple graphs.
struct CountTerm {
  std::int64_t scaled_coeff = 0;
  bool injective = false;
  bool on_complement = false;
  bool impossible = false;  // a loop on the graph side never maps into X
  int nv = 0;
  std::vector<int> order;                   // vertex visiting order
  std::vector<std::vector<int>> back_nbrs;  // earlier positions adjacent to position i
};

struct CountPlan {
  std::vector<CountTerm> terms;
  BigInt scale;  // value = sum / scale
};

BigInt falling(int n, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= (n - i);
  return out;
}

Rational basis_normalizer(GraphBasis b, const GraphClass& h, int n) {
  const int v = h.n_vertices();
  switch (b) {
    case GraphBasis::T: {
      BigInt d = 1;
      for (int i = 0; i < v; ++i) d *= n;
      return Rational(1) / Rational(d);
    }
    case GraphBasis::TInj:
      if (n < v) throw std::invalid_argument("injective density undefined: too few vertices");
      return Rational(1) / Rational(falling(n, v));
    case GraphBasis::MGraphSum: return Rational(1, h.aut_count());
    default: return Rational(1);
  }
}

CountTerm prepare(const GraphClass& h, bool injective) {
  CountTerm t;
  t.injective = injective;
  const auto& g = h.representative();
  t.nv = g.n_vertices();
  t.impossible = g.has_loop();
  // Greedy order: next is the unvisited vertex with most visited neighbours.
  std::vector<char> seen(static_cast<std::size_t>(t.nv), 0);
  for (int step = 0; step < t.nv; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < t.nv; ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (int u : t.order) links += g(u, v) ? 1 : 0;
      int deg = g.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    seen[static_cast<std::size_t>(best)] = 1;
    t.order.push_back(best);
  }
  t.back_nbrs.resize(static_cast<std::size_t>(t.nv));
  for (int i = 0; i < t.nv; ++i)
    for (int j = 0; j < i; ++j)
      if (g(t.order[static_cast<std::size_t>(i)], t.order[static_cast<std::size_t>(j)]))
        t.back_nbrs[static_cast<std::size_t>(i)].push_back(j);
  return t;
}

CountPlan make_plan(const GraphCost& cost, int n) {
  struct Raw {
    const GraphClass* h;
    Rational c;
    bool injective;
    bool complement;
  };
  std::vector<Raw> raw;
  auto collect = [&](const GraphPoly& p, bool complement) {
    bool inj = p.basis() == GraphBasis::Inj || p.basis() == GraphBasis::TInj || p.basis() == GraphBasis::MGraphSum;
    for (const auto& [h, c] : p.terms()) raw.push_back({&h, c * basis_normalizer(p.basis(), h, n), inj, complement});
  };
  collect(cost.direct, false);
  collect(cost.complement, true);
  BigInt scale = 1;
  for (const auto& r : raw) {
    BigInt d = denominator(r.c);
    scale = scale / boost::multiprecision::gcd(scale, d) * d;
  }
  CountPlan plan;
  plan.scale = scale;
  BigInt bound = 0;
  for (const auto& r : raw) {
    Rational a = r.c * Rational(scale);
    BigInt ai = numerator(a);
    BigInt maxcount = 1;
    for (int i = 0; i < r.h->n_vertices(); ++i) maxcount *= n;
    bound += abs(ai) * maxcount;
    CountTerm t = prepare(*r.h, r.injective);
    t.on_complement = r.complement;
    // 1 - X has ones on the diagonal, so loops there always map
    t.impossible = t.impossible && !r.complement;
    if (abs(ai) > BigInt(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("exhaustive search: scaled cost too large");
    t.scaled_coeff = static_cast<std::int64_t>(ai);
    plan.terms.push_back(std::move(t));
  }
  if (bound > BigInt(std::int64_t(1) << 62)) throw std::overflow_error("exhaustive search: scaled cost too large");
  return plan;
}

std::int64_t count_maps(const CountTerm& t, const std::vector<std::uint32_t>& adj, std::uint32_t full) {
  if (t.impossible) return 0;
  if (t.nv == 0) return 1;
  std::array<int, 16> img{};
  std::int64_t total = 0;
  auto rec = [&](auto&& self, int pos, std::uint32_t used) -> void {
    std::uint32_t mask = full;
    for (int j : t.back_nbrs[static_cast<std::size_t>(pos)]) mask &= adj[static_cast<std::size_t>(img[static_cast<std::size_t>(j)])];
    if (t.injective) mask &= ~used;
    if (pos + 1 == t.nv) {
      total += std::popcount(mask);
      return;
    }
    while (mask) {
      int a = std::countr_zero(mask);
      mask &= mask - 1;
      img[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, used | (std::uint32_t(1) << a));
    }
  };
  rec(rec, 0, 0);
  return total;
}

struct Scanner {
  CountPlan plan;
  int n;
  std::vector<std::pair<int, int>> pairs;

  std::int64_t value(std::uint64_t index, std::vector<std::uint32_t>& adj, std::vector<std::uint32_t>& comp) const {
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::fill(adj.begin(), adj.end(), 0u);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((index >> b) & 1) {
        auto [i, j] = pairs[b];
        adj[static_cast<std::size_t>(i)] |= std::uint32_t(1) << j;
        adj[static_cast<std::size_t>(j)] |= std::uint32_t(1) << i;
      }
    for (int i = 0; i < n; ++i)
      comp[static_cast<std::size_t>(i)] = full & ~adj[static_cast<std::size_t>(i)];
    std::int64_t v = 0;
    for (const auto& t : plan.terms)
      if (t.scaled_coeff) v += t.scaled_coeff * count_maps(t, t.on_complement ? comp : adj, full);
    return v;
  }
};

struct ChunkResult {
  std::int64_t min = std::numeric_limits<std::int64_t>::max();
  std::uint64_t argmin = 0;
  std::int64_t max = std::numeric_limits<std::int64_t>::min();
  std::uint64_t argmax = 0;
};

ChunkResult scan_all(const GraphCost& cost, int n, const ExhaustiveOptions& opts) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (n > kSimpleGraphStreamLimit || (n > kExhaustiveDefaultLimit && !opts.allow_large))
    throw std::invalid_argument("exhaustive search size limit: n = " + std::to_string(n) +
                                (n <= kSimpleGraphStreamLimit ? " needs the extended-run flag" : " is not supported"));
  for (const GraphPoly* p : {&cost.direct, &cost.complement})
    for (const auto& [h, c] : p->terms())
      if (h.n_vertices() > 16) throw std::invalid_argument("graph atom too large for exhaustive search");
  Scanner sc{make_plan(cost, n), n, enumerate_simple_graphs(n).pairs()};
  const std::uint64_t total = std::uint64_t(1) << sc.pairs.size();
  const std::uint64_t chunk = std::uint64_t(1) << 14;
  const std::uint64_t n_chunks = (total + chunk - 1) / chunk;
  std::vector<ChunkResult> results(n_chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n)), comp(static_cast<std::size_t>(n));
    for (std::uint64_t c; (c = next.fetch_add(1)) < n_chunks;) {
      ChunkResult r;
      const std::uint64_t end = std::min(total, (c + 1) * chunk);
      for (std::uint64_t idx = c * chunk; idx < end; ++idx) {
        std::int64_t v = sc.value(idx, adj, comp);
        if (v < r.min) {
          r.min = v;
          r.argmin = idx;
        }
        if (v > r.max) {
          r.max = v;
          r.argmax = idx;
        }
      }
      results[c] = r;
    }
  };
  int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), n_chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // Chunks are in index order, so strict comparison keeps the smallest index.
  ChunkResult out;
  for (const auto& r : results) {
    if (r.min < out.min) {
      out.min = r.min;
      out.argmin = r.argmin;
    }
    if (r.max > out.max) {
      out.max = r.max;
      out.argmax = r.argmax;
    }
  }
  return out;
}

}  // namespace

Rational evaluate_exact(const GraphCost& cost, const Matrix<int>& adjacency) {
  const int n = adjacency.rows();
  Matrix<Rational> x(n, n, Rational(0)), xc(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x(i, j) = adjacency(i, j);
      xc(i, j) = 1 - adjacency(i, j);
    }
  Rational v = evaluate<Rational>(cost.direct, x);
  if (!cost.complement.is_zero()) v += evaluate<Rational>(cost.complement, xc);
  return v;
}

BoundRecord minimize_exhaustive(const GraphCost& cost, int n, const ExhaustiveOptions& opts) {
  ChunkResult r = scan_all(cost, n, opts);
  CountPlan plan = make_plan(cost, n);
  BoundRecord rec;
  rec.n = n;
  rec.kind = BoundKind::Exact;
  rec.exact_value = Rational(BigInt(r.min)) / Rational(plan.scale);
  rec.value = to_double(*rec.exact_value);
  auto stream = enumerate_simple_graphs(n);
  Matrix<int> adj = stream.at(r.argmin);
  rec.minimizer.assign(adj.data().begin(), adj.data().end());
  rec.stats.restarts = 1;
  rec.stats.restarts_hit = 1;
  rec.stats.best_restart = 0;
  rec.stats.evaluations = stream.count();
  rec.stats.graph_index = r.argmin;
  return rec;
}

Rational max_abs_exhaustive(const GraphCost& cost, int n, const ExhaustiveOptions& opts) {
  ChunkResult r = scan_all(cost, n, opts);
  CountPlan plan = make_plan(cost, n);
  BigInt m = std::max(abs(BigInt(r.min)), abs(BigInt(r.max)));
  return Rational(m) / Rational(plan.scale);
}

}  // namespace anydim
