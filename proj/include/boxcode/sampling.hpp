#pragma once

// Random realizations for property checks. Endpoints are drawn from a small
// pool of halves so that ties, touching endpoints and degenerate intervals
// occur often.

#include <random>

#include "boxcode/geometry.hpp"

namespace boxcode {

struct SamplingOptions {
  int pool = 12;              ///< endpoints are k/q for k in [0, pool]
  int max_den = 2;            ///< q is drawn uniformly from [1, max_den]
  double empty_chance = 0.1;  ///< probability that an interval is empty
  double point_chance = 0.1;  ///< probability that an interval is a single point
};

Rational random_endpoint(std::mt19937_64& rng, const SamplingOptions& opts = {});
Interval random_interval(std::mt19937_64& rng, const SamplingOptions& opts = {});
Realization random_interval_realization(std::mt19937_64& rng, int n, const SamplingOptions& opts = {});
/// Boxes are products of random intervals; an empty factor empties the box.
Realization random_box_realization(std::mt19937_64& rng, int n, int dim, const SamplingOptions& opts = {});

}  // namespace boxcode
