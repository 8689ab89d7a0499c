#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace anydim {

// A map [source) -> [target), stored 0-based.
class FiniteMap {
 public:
  FiniteMap() = default;
  FiniteMap(int source, int target, std::vector<int> values);

  static FiniteMap identity(int n);
  // [m] -> [n], i -> i.
  static FiniteMap inclusion(int m, int n);
  // [n*k] -> [n], block map sending k*i + j to i.
  static FiniteMap equipartition(int n, int k);
  static FiniteMap permutation(std::vector<int> perm);
  static FiniteMap constant(int source, int target, int value);
  static FiniteMap random(int source, int target, std::mt19937_64& rng);
  // Mixed-radix decoding; index ranges over [0, target^source).
  static FiniteMap from_index(int source, int target, std::uint64_t index);

  int source_size() const { return source_; }
  int target_size() const { return target_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  std::vector<int> fiber_sizes() const;
  int max_fiber() const;
  bool is_surjective() const;
  bool is_injective() const;

  bool operator==(const FiniteMap&) const = default;

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<int> values_;
};

// (f o g)(i) = f(g(i)).
FiniteMap compose(const FiniteMap& f, const FiniteMap& g);

// Number of maps target^source, or UINT64_MAX on overflow.
std::uint64_t map_count(int source, int target);

}  // namespace anydim

namespace anydim {

// For f:[m]->[n] with k = max fiber size, the permutation g of [n*k] with
// f = equipartition(n,k) o g o inclusion(m, n*k). The l-th element of fiber i
// goes to slot k*i + l; unused slots are filled in increasing order.
FiniteMap factorization_permutation(const FiniteMap& f);

}  // namespace anydim
