#include "boxcode/sampling.hpp"

#include <utility>

namespace boxcode {

Rational random_endpoint(std::mt19937_64& rng, const SamplingOptions& opts) {
  std::uniform_int_distribution<int> pick(0, opts.pool);
  std::uniform_int_distribution<int> den(1, opts.max_den);
  const int k = pick(rng);
  return Rational(k, den(rng));
}

Interval random_interval(std::mt19937_64& rng, const SamplingOptions& opts) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < opts.empty_chance) return Interval::empty();
  Rational a = random_endpoint(rng, opts);
  if (coin(rng) < opts.point_chance) return Interval(a, a);
  Rational b = random_endpoint(rng, opts);
  if (b < a) std::swap(a, b);
  return Interval(a, b);
}

Realization random_interval_realization(std::mt19937_64& rng, int n, const SamplingOptions& opts) {
  std::vector<Interval> ivs;
  for (int i = 0; i < n; ++i) ivs.push_back(random_interval(rng, opts));
  return Realization::from_intervals(std::move(ivs));
}

Realization random_box_realization(std::mt19937_64& rng, int n, int dim, const SamplingOptions& opts) {
  std::vector<Box> boxes;
  for (int i = 0; i < n; ++i) {
    std::vector<Interval> ivs;
    for (int j = 0; j < dim; ++j) ivs.push_back(random_interval(rng, opts));
    boxes.emplace_back(std::move(ivs));
  }
  return Realization(dim, std::move(boxes));
}

}  // namespace boxcode
