#pragma once

#include "anydim/core/basis_poly.hpp"
#include "anydim/core/combinat.hpp"
#include "anydim/core/partition.hpp"
#include "anydim/core/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace anydim {

enum class SymBasis { PowerSum, Monomial };

// Polynomial in products of power sums s^(lam) or monomial sums m^(lam).
using SymPoly = BasisPoly<Partition, SymBasis>;

std::string basis_name(SymBasis b);  // "s" or "m"
std::string to_string(const SymPoly& p);

namespace detail {

template <class T>
T ipow(const T& x, int e) {
  T out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Sum over injective tuples (i_1..i_L) of prod_t term(t, i_t).
template <class T, class Term>
T injective_sum(int L, int n, const Term& term) {
  if (L == 0) return T(1);
  if (n < L) return T(0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<T> partial(static_cast<std::size_t>(L) + 1, T(1));
  T total(0);
  auto rec = [&](auto&& self, int t) -> void {
    if (t == L) {
      total += partial[static_cast<std::size_t>(L)];
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = 1;
      partial[static_cast<std::size_t>(t) + 1] = partial[static_cast<std::size_t>(t)] * term(t, i);
      self(self, t + 1);
      used[static_cast<std::size_t>(i)] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace detail

template <class T>
T eval_power_sum_product(const Partition& lam, std::span<const T> x) {
  if (x.empty()) throw std::invalid_argument("dimension must be positive");
  T out(1);
  for (int part : lam.parts()) {
    T s(0);
    for (const T& v : x) s += detail::ipow(v, part);
    out *= s;
  }
  return out;
}

template <class T>
T eval_monomial_sum(const Partition& lam, std::span<const T> x) {
  const int n = static_cast<int>(x.size());
  if (n < lam.len()) throw std::invalid_argument("dimension too small for atom");
  T total = detail::injective_sum<T>(lam.len(), n, [&](int t, int i) {
    return detail::ipow(x[static_cast<std::size_t>(i)], lam[t]);
  });
  return total / T(static_cast<long long>(aut_count_partition(lam)));
}

template <class T>
T evaluate(const SymPoly& p, std::span<const T> x) {
  T out(0);
  for (const auto& [lam, c] : p.terms()) {
    T v = p.basis() == SymBasis::PowerSum ? eval_power_sum_product<T>(lam, x)
                                          : eval_monomial_sum<T>(lam, x);
    if constexpr (std::is_same_v<T, Rational>) out += c * v;
    else out += to_double(c) * v;
  }
  return out;
}

template <class T>
T evaluate(const SymPoly& p, const std::vector<T>& x) {
  return evaluate<T>(p, std::span<const T>(x));
}

SymPoly s_to_m(const SymPoly& p);
SymPoly m_to_s(const SymPoly& p);

}  // namespace anydim
