#pragma once

/**
 * Combinatorial codes on the index set [n] = {1, ..., n}.
 *
 * A Codeword is a subset of [n] stored as a 16-bit mask (bit i-1 <-> index i).
 * A Code is a duplicate-free set of codewords over a declared universe size,
 * kept sorted by mask value so equality, ordering and hashing are structural.
 * Every Code contains the empty codeword.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxcode {

inline constexpr int kMaxUniverse = 16;

/// Raised when a workload exceeds a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Codeword {
 public:
  constexpr Codeword() = default;
  constexpr explicit Codeword(std::uint16_t bits) : bits_(bits) {}

  /// Build from 1-based indices; throws on index outside [1, kMaxUniverse].
  static Codeword from_indices(std::span<const int> indices);
  static Codeword from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  /// The full word [n].
  static constexpr Codeword full(int n) { return Codeword(static_cast<std::uint16_t>((1u << n) - 1u)); }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int index) const { return (bits_ >> (index - 1)) & 1u; }
  int size() const;
  /// Highest index present, 0 for the empty word.
  int max_index() const;
  std::vector<int> indices() const;

  constexpr bool subset_of(Codeword other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool comparable(Codeword other) const { return subset_of(other) || other.subset_of(*this); }

  friend constexpr Codeword operator&(Codeword a, Codeword b) { return Codeword(a.bits_ & b.bits_); }
  friend constexpr Codeword operator|(Codeword a, Codeword b) { return Codeword(a.bits_ | b.bits_); }
  friend constexpr bool operator==(Codeword, Codeword) = default;
  friend constexpr auto operator<=>(Codeword a, Codeword b) { return a.bits_ <=> b.bits_; }

  /// "123" style when every index is a single digit, "{10,11}" otherwise, "∅" when empty.
  std::string str() const;

 private:
  std::uint16_t bits_ = 0;
};

/// (length, lexicographic on sorted indices) order used for all external output.
bool display_less(Codeword a, Codeword b);

class Code {
 public:
  enum class EmptyPolicy {
    kInsert,  ///< add the empty codeword when missing and remember that we did
    kStrict,  ///< throw when the empty codeword is missing
  };

  /// Throws std::invalid_argument if n is outside [1, 16] or a word uses an index > n.
  Code(int n, std::vector<Codeword> words, EmptyPolicy policy = EmptyPolicy::kInsert);

  /// {[n], ∅}: the identity for the intersection product.
  static Code identity(int n);

  int n() const { return n_; }
  std::span<const Codeword> words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(Codeword w) const;
  bool subset_of(const Code& other) const;
  /// True when construction had to add the empty codeword.
  bool inserted_empty() const { return inserted_empty_; }
  /// Words in display order (length, then lexicographic).
  std::vector<Codeword> display_words() const;

  friend bool operator==(const Code& a, const Code& b) { return a.n_ == b.n_ && a.words_ == b.words_; }
  friend std::strong_ordering operator<=>(const Code& a, const Code& b);

  std::size_t hash() const;

 private:
  int n_;
  std::vector<Codeword> words_;
  bool inserted_empty_ = false;
};

/// Parse "123, 24, 12, ∅" (n <= 9). Braces are optional; "{}", "0" and "∅" denote
/// the empty word. When n is 0 the universe is the largest index mentioned.
Code parse_code_text(std::string_view text, int n = 0);

/// "{123, 24, 1, ∅}" with words in display order.
std::string to_string(const Code& code);

/// { c1 ∩ c2 : c1 ∈ a, c2 ∈ b }. Throws std::invalid_argument on universe mismatch.
Code intersection_product(const Code& a, const Code& b);

/// Words with no proper superset in the code, in ascending mask order.
std::vector<Codeword> maximal_codewords(const Code& code);

/// Δ(C): the downward closure of the code's words.
Code simplicial_complex(const Code& code);

/// True iff every subset (taken within `ambient`) of a member of `d` is in `d`.
/// Throws std::invalid_argument if some member of `d` is not in `ambient`.
bool is_downward_closed_in(std::span<const Codeword> d, std::span<const Codeword> ambient);

/// Every intersection of a nonempty family of maximal codewords is a codeword.
bool is_max_intersection_complete(const Code& code);

/// Relabel indices: index i (1-based) becomes perm[i-1] (also 1-based).
Codeword permute(Codeword w, std::span<const int> perm);
Code permute(const Code& code, std::span<const int> perm);

struct CanonicalForm {
  Code code;
  /// Witness relabeling: permute(input, permutation) == code.
  std::vector<int> permutation;
};

/// Least code, in Code ordering, over all n! index relabelings.
CanonicalForm canonical_form(const Code& code);

}  // namespace boxcode

template <>
struct std::hash<boxcode::Code> {
  std::size_t operator()(const boxcode::Code& c) const noexcept { return c.hash(); }
};
