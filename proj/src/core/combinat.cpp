#include "anydim/core/combinat.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace anydim {

std::vector<Partition> partitions_of(int w) {
  std::vector<Partition> out;
  if (w < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  std::vector<Partition> out;
  for (int w = 0; w <= d; ++w) {
    auto ps = partitions_of(w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::uint64_t refinement_count(const Partition& lam, const Partition& mu) {
  if (lam.empty() || mu.empty()) return (lam.empty() && mu.empty()) ? 1 : 0;
  if (lam.weight() != mu.weight() || lam.len() < mu.len()) return 0;
  const int a = lam.len(), b = mu.len();
  std::vector<int> f(static_cast<std::size_t>(a), 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<int> sums(static_cast<std::size_t>(b), 0);
    for (int j = 0; j < a; ++j) sums[static_cast<std::size_t>(f[j])] += lam[j];
    bool ok = true;
    for (int i = 0; i < b && ok; ++i) ok = sums[static_cast<std::size_t>(i)] == mu[i];
    // fiber sums equal to positive parts force surjectivity
    if (ok) ++count;
    int j = 0;
    while (j < a && ++f[static_cast<std::size_t>(j)] == b) f[static_cast<std::size_t>(j++)] = 0;
    if (j == a) break;
  }
  return count;
}

std::uint64_t aut_count_partition(const Partition& lam) {
  std::map<int, int> mult;
  for (int v : lam.parts()) ++mult[v];
  std::uint64_t out = 1;
  for (auto [v, m] : mult)
    for (int i = 2; i <= m; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

BigInt falling_factorial(long long k, long long l) {
  if (l < 0) throw std::invalid_argument("falling factorial length must be nonnegative");
  if (l > k) return 0;
  BigInt out = 1;
  for (long long i = 0; i < l; ++i) out *= (k - i);
  return out;
}

BigInt factorial(long long n) { return falling_factorial(n, n); }

BigInt parts_factorial(const Partition& lam) {
  BigInt out = 1;
  for (int v : lam.parts()) out *= factorial(v);
  return out;
}

}  // namespace anydim
