#include "anydim/definetti/finite_map.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace anydim {

FiniteMap::FiniteMap(int source, int target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  if (source < 0 || target < 0) throw std::invalid_argument("negative set size");
  if (static_cast<int>(values_.size()) != source)
    throw std::invalid_argument("map length differs from source size");
  for (int v : values_)
    if (v < 0 || v >= target) throw std::invalid_argument("map value out of range");
}

FiniteMap FiniteMap::identity(int n) { return inclusion(n, n); }

FiniteMap FiniteMap::inclusion(int m, int n) {
  if (m > n) throw std::invalid_argument("inclusion needs m <= n");
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i;
  return FiniteMap(m, n, std::move(v));
}

FiniteMap FiniteMap::equipartition(int n, int k) {
  std::vector<int> v(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) v[static_cast<std::size_t>(k * i + j)] = i;
  return FiniteMap(n * k, n, std::move(v));
}

FiniteMap FiniteMap::permutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  FiniteMap f(n, n, std::move(perm));
  if (!f.is_injective()) throw std::invalid_argument("not a permutation");
  return f;
}

FiniteMap FiniteMap::constant(int source, int target, int value) {
  return FiniteMap(source, target, std::vector<int>(static_cast<std::size_t>(source), value));
}

FiniteMap FiniteMap::random(int source, int target, std::mt19937_64& rng) {
  if (target < 1 && source > 0) throw std::invalid_argument("empty target");
  std::uniform_int_distribution<int> dist(0, std::max(0, target - 1));
  std::vector<int> v(static_cast<std::size_t>(source));
  for (auto& x : v) x = dist(rng);
  return FiniteMap(source, target, std::move(v));
}

FiniteMap FiniteMap::from_index(int source, int target, std::uint64_t index) {
  std::vector<int> v(static_cast<std::size_t>(source));
  for (int i = 0; i < source; ++i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(target));
    index /= static_cast<std::uint64_t>(target);
  }
  return FiniteMap(source, target, std::move(v));
}

std::vector<int> FiniteMap::fiber_sizes() const {
  std::vector<int> s(static_cast<std::size_t>(target_), 0);
  for (int v : values_) ++s[static_cast<std::size_t>(v)];
  return s;
}

int FiniteMap::max_fiber() const {
  auto s = fiber_sizes();
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

bool FiniteMap::is_surjective() const {
  auto s = fiber_sizes();
  return std::all_of(s.begin(), s.end(), [](int c) { return c > 0; });
}

bool FiniteMap::is_injective() const {
  auto s = fiber_sizes();
  return std::all_of(s.begin(), s.end(), [](int c) { return c <= 1; });
}

FiniteMap compose(const FiniteMap& f, const FiniteMap& g) {
  if (g.target_size() != f.source_size()) throw std::invalid_argument("maps do not compose");
  std::vector<int> v(static_cast<std::size_t>(g.source_size()));
  for (int i = 0; i < g.source_size(); ++i) v[static_cast<std::size_t>(i)] = f(g(i));
  return FiniteMap(g.source_size(), f.target_size(), std::move(v));
}

std::uint64_t map_count(int source, int target) {
  std::uint64_t out = 1;
  for (int i = 0; i < source; ++i) {
    if (target != 0 && out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(target))
      return std::numeric_limits<std::uint64_t>::max();
    out *= static_cast<std::uint64_t>(target);
  }
  return out;
}

}  // namespace anydim

namespace anydim {

FiniteMap factorization_permutation(const FiniteMap& f) {
  const int m = f.source_size(), n = f.target_size();
  const int k = std::max(1, f.max_fiber());
  const int total = n * k;
  std::vector<int> g(static_cast<std::size_t>(total), -1);
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  std::vector<char> taken(static_cast<std::size_t>(total), 0);
  for (int j = 0; j < m; ++j) {
    int slot = k * f(j) + rank[static_cast<std::size_t>(f(j))]++;
    g[static_cast<std::size_t>(j)] = slot;
    taken[static_cast<std::size_t>(slot)] = 1;
  }
  int next = 0;
  for (int j = m; j < total; ++j) {
    while (taken[static_cast<std::size_t>(next)]) ++next;
    g[static_cast<std::size_t>(j)] = next;
    taken[static_cast<std::size_t>(next)] = 1;
  }
  return FiniteMap::permutation(std::move(g));
}

}  // namespace anydim
