#pragma once

#include "anydim/core/rational.hpp"
#include "anydim/definetti/finite_map.hpp"

#include <map>
#include <vector>

namespace anydim {

using LawPoint = std::vector<Rational>;

// Finitely supported probability law with exact weights.
class FiniteLaw {
 public:
  void add(const LawPoint& point, const Rational& probability);
  const std::map<LawPoint, Rational>& atoms() const { return atoms_; }
  Rational total() const;
  Rational probability(const LawPoint& point) const;
  // Throws unless weights are nonnegative and sum to exactly 1.
  void validate() const;

 private:
  std::map<LawPoint, Rational> atoms_;
};

// Unhalved total variation: sum of |p1 - p2| over the joint support.
Rational tv_exact(const FiniteLaw& a, const FiniteLaw& b);
// E ||X - c||_1, the W1 distance (l1 ground metric) to a point mass.
Rational w1_to_dirac(const FiniteLaw& law, const LawPoint& c);

// Law of the first m coordinates of a uniformly permuted copy of base.
FiniteLaw permuted_prefix_law(const std::vector<Rational>& base, int m);
// Law of m coordinates of base sampled independently with replacement.
FiniteLaw sampled_coords_law(const std::vector<Rational>& base, int m);
// Laws of a uniform injection [m]->[n] and of a uniform map [m]->[n].
FiniteLaw uniform_injection_law(int m, int n);
FiniteLaw uniform_map_law(int m, int n);

// X = (B/2n, 1 - B/2n) with B ~ Binomial(2n, 1/2).
FiniteLaw binomial_pair_law(int n);

}  // namespace anydim
