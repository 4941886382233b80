#pragma once

/**
 * Box embedding dimension.
 *
 * A code is realizable by boxes in R^d exactly when it is an intersection
 * product of d interval codes, so the codes realizable in each dimension are
 * the layers of a breadth-first closure of the interval codes under the
 * intersection product. The closure is finite because every code lives in
 * the finite lattice of subsets of 2^[n].
 */

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"

namespace boxcode {

inline constexpr int kFullClosureCap = 4;
inline constexpr int kAnchoredCap = 6;

struct ClosureOptions {
  /// Stop after this many layers (0 = run to the fixpoint).
  int max_layers = 0;
  /// Keep only codes contained in this code. Sound when every generator
  /// contains [n], since the product then only ever grows toward the target.
  std::optional<Code> within;
};

class ClosureResult {
 public:
  int n() const { return n_; }
  /// layers()[k-1] holds the codes realizable by boxes in R^k, sorted.
  const std::vector<std::vector<Code>>& layers() const { return layers_; }
  const std::vector<Code>& layer(int k) const { return layers_.at(k - 1); }
  /// When true the last two layers are equal and nothing further is reachable.
  bool fixpoint_reached() const { return fixpoint_reached_; }
  const std::vector<Code>& generators() const { return generators_; }

  /// Smallest k with code in layer k.
  std::optional<int> dimension_of(const Code& code) const;
  /// Generators whose product is `code`, one per dimension.
  std::optional<std::vector<Code>> factors(const Code& code) const;

 private:
  struct Witness {
    std::optional<Code> parent;
    std::size_t generator;
    int layer;
  };

  template <class Rep>
  friend ClosureResult run_closure(Rep& rep, int n, std::vector<Code> generators, const ClosureOptions& options);

  int n_ = 0;
  std::vector<std::vector<Code>> layers_;
  bool fixpoint_reached_ = false;
  std::vector<Code> generators_;
  std::unordered_map<Code, Witness> witnesses_;
};

/// Closure of `generators` (default: every interval code on [n]) under the
/// intersection product. {[n], ∅} is always added to the generators so the
/// layers are nested. Throws CapExceeded when n > kFullClosureCap and no
/// generators are given.
ClosureResult closure(int n, std::optional<std::vector<Code>> generators = std::nullopt,
                      const ClosureOptions& options = {});

/// closure(n) with default generators, computed once per n.
const ClosureResult& full_closure(int n);

enum class BdimMode {
  kAuto,      ///< anchored when [n] is a codeword, full closure otherwise
  kFull,      ///< full closure, n <= kFullClosureCap
  kAnchored,  ///< requires [n] in the code, n <= kAnchoredCap
};

struct BoxDimension {
  enum class Status { kFound, kNotBoxConvex, kAboveLimit };

  Status status;
  /// Set when status == kFound.
  std::optional<int> dim;
  /// Number of layers built before answering.
  int layers_explored;

  bool box_convex() const { return status == Status::kFound; }
};

/// Interval codes A with [n] ∈ A and A ⊆ code. Every interval factor of a
/// box realization of `code` has this form when [n] ∈ code.
std::vector<Code> anchored_generators(const Code& code);

/// Minimum box dimension. With max_dim > 0 the search stops after max_dim
/// layers and may report kAboveLimit.
BoxDimension bdim(const Code& code, BdimMode mode = BdimMode::kAuto, int max_dim = 0);

bool is_box_convex_in_dim(const Code& code, int d, BdimMode mode = BdimMode::kAuto);

/// Unordered pairs (A, B) of candidates, A <= B, with A ⋒ B == code.
std::vector<std::pair<Code, Code>> factorizations(const Code& code, std::span<const Code> candidates);

/// Interval codes, one per dimension of a minimal realization, whose
/// product is `code`; nullopt when the code is not box-convex.
std::optional<std::vector<Code>> box_factors(const Code& code, BdimMode mode = BdimMode::kAuto);

/// Explicit box realization in the minimal dimension, built from the
/// closure's factor witnesses and verified through code_of_realization.
/// nullopt when the code is not box-convex.
std::optional<Realization> realize_box_code(const Code& code, BdimMode mode = BdimMode::kAuto);

}  // namespace boxcode
