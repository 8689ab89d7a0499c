#include "anydim/definetti/actions.hpp"

namespace anydim {

Estimate expect_over_maps(int source, int target, const std::function<double(const FiniteMap&)>& eval,
                          const ExpectationMode& mode) {
  Estimate e;
  if (mode.kind == ExpectationMode::Kind::Exact) {
    e.mean = expect_exact<double>(source, target, eval);
    e.evaluations = map_count(source, target);
    e.exact = true;
    return e;
  }
  if (mode.samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  double sum = 0, sumsq = 0;
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    std::mt19937_64 rng(derive_seed(mode.seed, i));
    double v = eval(FiniteMap::random(source, target, rng));
    sum += v;
    sumsq += v * v;
  }
  const double s = static_cast<double>(mode.samples);
  e.mean = sum / s;
  double var = std::max(0.0, (sumsq - s * e.mean * e.mean) / (s - 1));
  e.std_error = std::sqrt(var / s);
  e.evaluations = mode.samples;
  return e;
}

}  // namespace anydim
