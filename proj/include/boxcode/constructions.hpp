#pragma once

/**
 * Named codes and constructions: the three-index codes that are convex but
 * not box-convex, the four-index code C4, sunflower codes with their
 * interval factors, the downward-closed extension identity, the
 * non-monotonicity witness, and the classification of all three-index codes
 * that are max-intersection complete.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxcode/box_dim.hpp"
#include "boxcode/code.hpp"

namespace boxcode {

/// C1, C2, C3, C4, fig1, nonmono_base. Throws std::invalid_argument otherwise.
Code named_code(std::string_view name);
std::vector<std::string> named_code_names();

struct Sunflower {
  Code code;
  std::vector<Code> factors;
};

/// F_n = {[n], 1, ..., n, ∅} and the factors {[n], 2i-1, 2i, ∅}. The product
/// of the factors is checked against F_n. n must be even and >= 2.
Sunflower sunflower(int n);

/// (c ∪ d, E) with E = d ∪ {[n], ∅}, after checking c ⋒ E == c ∪ d.
/// `d` must be a downward-closed subset of Δ(c) \ c.
std::pair<Code, Code> weak_monotone_extension(const Code& c, const std::vector<Codeword>& d);

struct NonmonotonicityWitness {
  Code base;      ///< {1234, 12, 13, ∅}
  Code extended;  ///< C4
  bool base_is_interval_code;
  bool nested;  ///< base ⊆ extended ⊆ Δ(base)
  BoxDimension extended_bdim;

  bool holds() const { return base_is_interval_code && nested && !extended_bdim.box_convex(); }
};

NonmonotonicityWitness nonmonotonicity_witness();

struct ClassifiedCode {
  Code code;  ///< canonical representative
  BoxDimension bdim;
  bool interval_code;
};

/// Max-intersection-complete codes on [3] other than {∅}, up to relabeling,
/// with their box dimensions; sorted by (bdim, code).
std::vector<ClassifiedCode> classify_three_index();

enum class ReferenceClass { kInterval, kDimensionTwo, kNotBoxConvex };

/// Reference table of open and closed convex codes on three indices, one
/// representative per relabeling class, with its expected class.
std::vector<std::pair<Code, ReferenceClass>> three_index_reference();

}  // namespace boxcode
