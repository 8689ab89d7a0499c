#pragma once

#include "anydim/core/rational.hpp"
#include "anydim/definetti/laws.hpp"

#include <string>
#include <vector>

namespace anydim {

struct TvRateResult {
  int n = 0;
  int m = 0;
  Rational tv;
  Rational bound;  // m(m-1)/n
  bool pass = false;
};

// TV between the first m coordinates of a uniformly permuted base vector and
// m coordinates sampled with replacement.
TvRateResult tv_rate_experiment(int n, int m, const std::vector<Rational>& base);

// Same comparison for X with i.i.d. Bernoulli(1/2) coordinates, a mixture of
// permutation-invariant laws over all 0/1 base vectors.
TvRateResult bernoulli_tv_experiment(int n, int m);

// Laws of a uniform injection and a uniform map [m] -> [n].
TvRateResult map_law_tv_experiment(int n, int m);

struct W1RateResult {
  int n = 0;
  Rational w1;   // E|B - n| / n
  double bound;  // 4 / sqrt(n)
  bool pass = false;
};

W1RateResult w1_tightness_experiment(int n);

// How the lower-bound family relates to the target dimension.
enum class RateCase {
  Duplication,  // lower family is the duplication sequence: bound (k(k-1)/n) sup|q_k|
  ZeroPadding,  // lower family is the zero-padding sequence: needs k | n
};

struct SettingDescriptor {
  std::string name;
  RateCase rate_case;
  int construction_degree;  // 1 for vector settings, 2 for symmetric matrices
};

SettingDescriptor setting_descriptor(const std::string& name);

struct GapNorms {
  double sup_norm = 0;       // sup |q_k| on the k-dimensional domain
  double gradient_norm = 0;  // sup of the gradient sup-norm of q_k
  double l1_radius = 0;      // max ||x||_1 on the domain
};

double gap_bound_duplication(long long k, long long n, double sup_norm);
double gap_bound_zero_padding(int construction_degree, long long k, long long n, double gradient_norm,
                              double l1_radius);
double gap_bound(const SettingDescriptor& s, long long k, long long n, const GapNorms& norms);

}  // namespace anydim
