#pragma once

/**
 * Interval codes: codes realizable by closed intervals (empty intervals
 * allowed) on the real line.
 *
 * Two independent recognizers are provided. The enumeration recognizer
 * tabulates the code of every integer endpoint assignment in [1, 2n] and is
 * limited to small n. The atom-word recognizer searches for a left-to-right
 * arrangement of atoms in which every index occupies a contiguous run and
 * consecutive atoms are nested, which is exactly what a line of closed
 * intervals produces.
 */

#include <optional>
#include <utility>
#include <vector>

#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"

namespace boxcode {

inline constexpr int kEnumerationCap = 4;

/// Integer endpoints 1 <= l <= r <= 2n per index; nullopt marks an empty interval.
struct EndpointAssignment {
  std::vector<std::optional<std::pair<int, int>>> pairs;

  int n() const { return static_cast<int>(pairs.size()); }
  Realization to_realization() const;
  friend bool operator==(const EndpointAssignment&, const EndpointAssignment&) = default;
};

/// Atoms of a line realization read left to right. Components are maximal
/// runs of nonempty atoms; consecutive components are separated by a gap.
struct AtomWord {
  std::vector<std::vector<Codeword>> components;

  /// Total number of atoms, gaps between components included.
  int length() const;
  /// Checks contiguity of every index, nesting of neighbours, and that the
  /// atoms used are exactly the nonempty words of `code`.
  bool valid_for(const Code& code) const;
};

/// Every code realized by n closed intervals with integer endpoints in
/// [1, 2n], sorted. Throws CapExceeded when n > cap. Results are cached.
const std::vector<Code>& enumerate_interval_codes(int n, int cap = kEnumerationCap);

/// Recognition by membership in enumerate_interval_codes(n).
bool is_interval_code_by_enumeration(const Code& code);

/// Backtracking search for an atom word; nullopt when none exists.
std::optional<AtomWord> find_atom_word(const Code& code);

/// Recognition by atom-word search.
bool is_interval_code(const Code& code);

/// Place the atoms of `word` at consecutive integers; index i occupies the
/// closed interval from its first entry transition to its exit transition.
EndpointAssignment assignment_from_atom_word(int n, const AtomWord& word);

/// Witness with integer endpoints in [1, 2n], re-verified through
/// code_of_realization; nullopt when the code is not an interval code.
std::optional<EndpointAssignment> realize_interval_code(const Code& code);

}  // namespace boxcode
