#include "anydim/definetti/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace anydim {

TvRateResult tv_rate_experiment(int n, int m, const std::vector<Rational>& base) {
  if (static_cast<int>(base.size()) != n) throw std::invalid_argument("base vector length differs from n");
  if (n > 8 || m > 3 || m < 1 || m > n) throw std::invalid_argument("size limit: n <= 8, 1 <= m <= 3");
  TvRateResult r;
  r.n = n;
  r.m = m;
  r.tv = tv_exact(permuted_prefix_law(base, m), sampled_coords_law(base, m));
  r.bound = Rational(m * (m - 1), n);
  r.pass = r.tv <= r.bound;
  return r;
}

TvRateResult bernoulli_tv_experiment(int n, int m) {
  if (n < 1 || n > 8 || m < 1 || m > 3 || m > n) throw std::invalid_argument("size limit: n <= 8, 1 <= m <= 3");
  FiniteLaw prefix, sampled;
  const Rational weight(1, 1 << n);
  for (int bits = 0; bits < (1 << n); ++bits) {
    std::vector<Rational> base;
    for (int i = 0; i < n; ++i) base.emplace_back((bits >> i) & 1);
    FiniteLaw a = permuted_prefix_law(base, m), b = sampled_coords_law(base, m);
    for (const auto& [p, w] : a.atoms()) prefix.add(p, w * weight);
    for (const auto& [p, w] : b.atoms()) sampled.add(p, w * weight);
  }
  TvRateResult r;
  r.n = n;
  r.m = m;
  r.tv = tv_exact(prefix, sampled);
  r.bound = Rational(m * (m - 1), n);
  r.pass = r.tv <= r.bound;
  return r;
}

TvRateResult map_law_tv_experiment(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  TvRateResult r;
  r.n = n;
  r.m = m;
  r.tv = tv_exact(uniform_injection_law(m, n), uniform_map_law(m, n));
  r.bound = Rational(m * (m - 1), n);
  r.pass = r.tv <= r.bound;
  return r;
}

W1RateResult w1_tightness_experiment(int n) {
  W1RateResult r;
  r.n = n;
  r.w1 = w1_to_dirac(binomial_pair_law(n), {Rational(1, 2), Rational(1, 2)});
  r.bound = 4.0 / std::sqrt(static_cast<double>(n));
  r.pass = to_double(r.w1) <= r.bound;
  return r;
}

SettingDescriptor setting_descriptor(const std::string& name) {
  if (name == "means") return {name, RateCase::Duplication, 1};
  if (name == "symfunc") return {name, RateCase::ZeroPadding, 1};
  if (name == "graph-density") return {name, RateCase::Duplication, 2};
  if (name == "graph-numbers") return {name, RateCase::ZeroPadding, 2};
  throw std::invalid_argument("unknown setting: " + name);
}

double gap_bound_duplication(long long k, long long n, double sup_norm) {
  if (n < 1 || k < 1) throw std::invalid_argument("k and n must be positive");
  return static_cast<double>(k) * static_cast<double>(k - 1) / static_cast<double>(n) * sup_norm;
}

double gap_bound_zero_padding(int construction_degree, long long k, long long n, double gradient_norm,
                              double l1_radius) {
  if (n < 1 || k < 1) throw std::invalid_argument("k and n must be positive");
  if (n % k != 0) throw std::invalid_argument("bound requires k | n");
  double blocks = static_cast<double>(n / k);
  return 2.0 * construction_degree * std::sqrt(static_cast<double>(k) * static_cast<double>(k - 1) / blocks) *
         gradient_norm * l1_radius;
}

double gap_bound(const SettingDescriptor& s, long long k, long long n, const GapNorms& norms) {
  if (s.rate_case == RateCase::Duplication) return gap_bound_duplication(k, n, norms.sup_norm);
  return gap_bound_zero_padding(s.construction_degree, k, n, norms.gradient_norm, norms.l1_radius);
}

}  // namespace anydim
