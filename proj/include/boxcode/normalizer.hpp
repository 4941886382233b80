#pragma once

/**
 * Normal forms for box realizations.
 *
 * Every box realization can be replaced, axis by axis, by one whose corners
 * are integers in [1, 2n] and whose interiors realize the same code. Each
 * axis goes through rank sorting, a 1/4 widening that separates touching
 * left and right endpoints, and a second rank sorting. The same machinery
 * turns a realization by open boxes into one by closed boxes.
 */

#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"

namespace boxcode {

/// Replace each endpoint by 1 + (number of endpoints strictly smaller),
/// counted over all 2n' endpoints of the nonempty intervals. Requires dim 1.
Realization sort_endpoints(const Realization& r);

/// [a, b] -> [a - 1/4, b + 1/4]. Requires dim 1 and integer endpoints.
Realization quarter_extend(const Realization& r);

/// (a, b) -> [a + 1/4, b - 1/4]. Requires dim 1, integer endpoints and no
/// degenerate intervals.
Realization quarter_shrink(const Realization& r);

/// Per axis: sort_endpoints, quarter_extend, sort_endpoints; then recombine.
Realization normalize_realization(const Realization& r);

/// Reads the boxes of `r` as open boxes and returns closed boxes realizing
/// code_of_interiors(r), verified through the oracle before returning.
Realization open_to_closed(const Realization& r);

struct NormalizationReport {
  Realization normalized;
  Code input_code;
  Code closed_code;
  Code interior_code;
  bool integer_corners_in_range;

  bool closed_code_preserved() const { return closed_code == input_code; }
  bool interiors_match() const { return interior_code == input_code; }
};

NormalizationReport normalize_with_report(const Realization& r);

/// Every corner coordinate of every nonempty box is an integer in [1, 2n].
bool has_integer_corners_in_range(const Realization& r);

}  // namespace boxcode
