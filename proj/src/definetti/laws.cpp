#include "anydim/definetti/laws.hpp"

#include "anydim/core/combinat.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace anydim {

void FiniteLaw::add(const LawPoint& point, const Rational& probability) {
  if (probability < 0) throw std::invalid_argument("negative probability");
  if (probability == 0) return;
  atoms_[point] += probability;
}

Rational FiniteLaw::total() const {
  Rational t = 0;
  for (const auto& [p, w] : atoms_) t += w;
  return t;
}

Rational FiniteLaw::probability(const LawPoint& point) const {
  auto it = atoms_.find(point);
  return it == atoms_.end() ? Rational(0) : it->second;
}

void FiniteLaw::validate() const {
  for (const auto& [p, w] : atoms_)
    if (w < 0) throw std::invalid_argument("negative probability");
  if (total() != 1) throw std::invalid_argument("probabilities do not sum to 1");
}

Rational tv_exact(const FiniteLaw& a, const FiniteLaw& b) {
  std::set<LawPoint> support;
  for (const auto& [p, w] : a.atoms()) support.insert(p);
  for (const auto& [p, w] : b.atoms()) support.insert(p);
  Rational out = 0;
  for (const auto& p : support) out += abs(a.probability(p) - b.probability(p));
  return out;
}

Rational w1_to_dirac(const FiniteLaw& law, const LawPoint& c) {
  Rational out = 0;
  for (const auto& [p, w] : law.atoms()) {
    if (p.size() != c.size()) throw std::invalid_argument("dimension mismatch");
    Rational dist = 0;
    for (std::size_t i = 0; i < p.size(); ++i) dist += abs(p[i] - c[i]);
    out += w * dist;
  }
  return out;
}

namespace {

void for_each_tuple(int m, int n, bool injective, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(static_cast<std::size_t>(m));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      fn(t);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (injective && used[static_cast<std::size_t>(i)]) continue;
      t[static_cast<std::size_t>(pos)] = i;
      used[static_cast<std::size_t>(i)] = 1;
      self(self, pos + 1);
      used[static_cast<std::size_t>(i)] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

FiniteLaw permuted_prefix_law(const std::vector<Rational>& base, int m) {
  const int n = static_cast<int>(base.size());
  if (m > n) throw std::invalid_argument("prefix longer than vector");
  FiniteLaw law;
  Rational w(BigInt(1), falling_factorial(n, m));
  for_each_tuple(m, n, true, [&](const std::vector<int>& t) {
    LawPoint p;
    for (int i : t) p.push_back(base[static_cast<std::size_t>(i)]);
    law.add(p, w);
  });
  return law;
}

FiniteLaw sampled_coords_law(const std::vector<Rational>& base, int m) {
  const int n = static_cast<int>(base.size());
  FiniteLaw law;
  Rational w = pow_int(Rational(1, n), m);
  for_each_tuple(m, n, false, [&](const std::vector<int>& t) {
    LawPoint p;
    for (int i : t) p.push_back(base[static_cast<std::size_t>(i)]);
    law.add(p, w);
  });
  return law;
}

FiniteLaw uniform_injection_law(int m, int n) {
  std::vector<Rational> ids;
  for (int i = 0; i < n; ++i) ids.emplace_back(i);
  return permuted_prefix_law(ids, m);
}

FiniteLaw uniform_map_law(int m, int n) {
  std::vector<Rational> ids;
  for (int i = 0; i < n; ++i) ids.emplace_back(i);
  return sampled_coords_law(ids, m);
}

FiniteLaw binomial_pair_law(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  FiniteLaw law;
  const int trials = 2 * n;
  BigInt denom = 1;
  for (int i = 0; i < trials; ++i) denom *= 2;
  BigInt binom = 1;
  for (int b = 0; b <= trials; ++b) {
    if (b > 0) binom = binom * (trials - b + 1) / b;
    Rational x(b, trials);
    law.add({x, Rational(1) - x}, Rational(binom, denom));
  }
  return law;
}

}  // namespace anydim
