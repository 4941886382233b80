#include <doctest.h>

#include <algorithm>
#include <set>

#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"
#include "boxcode/interval_codes.hpp"
#include "oracles.hpp"

using namespace boxcode;

namespace {

Code parse(const char* text, int n) { return parse_code_text(text, n); }

bool endpoints_in_range(const EndpointAssignment& a) {
  for (const auto& p : a.pairs) {
    if (p && (p->first < 1 || p->first > p->second || p->second > 2 * a.n())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumeration on one index") {
  const auto& codes = enumerate_interval_codes(1);
  CHECK(codes == std::vector<Code>{Code(1, {}), parse("1", 1)});
}

TEST_CASE("enumeration matches a brute-force dense evaluation for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto& codes = enumerate_interval_codes(n);
    std::set<Code> expected = oracle::interval_codes(n);
    CHECK(std::set<Code>(codes.begin(), codes.end()) == expected);
    CHECK(std::is_sorted(codes.begin(), codes.end()));
  }
}

TEST_CASE("interval codes are small") {
  for (int n = 1; n <= 4; ++n) {
    std::size_t largest = 0;
    for (const Code& c : enumerate_interval_codes(n)) {
      CHECK(static_cast<int>(c.size()) <= 2 * n + 1);
      largest = std::max(largest, c.size());
    }
    // The last endpoint never starts a new pattern, so the bound is never attained.
    CHECK(largest == static_cast<std::size_t>(2 * n));
  }
  CHECK(enumerate_interval_codes(4).size() == 3278);
  CHECK_THROWS_AS(enumerate_interval_codes(5), CapExceeded);
  CHECK_THROWS_AS(enumerate_interval_codes(3, 2), CapExceeded);
}

TEST_CASE("membership of the named three-index codes") {
  const auto& codes = enumerate_interval_codes(3);
  CHECK_FALSE(std::binary_search(codes.begin(), codes.end(), parse("123, 12, 13, 23", 3)));
  CHECK(std::binary_search(codes.begin(), codes.end(), parse("123, 12, 13", 3)));
}

TEST_CASE("recognition") {
  CHECK_FALSE(is_interval_code(parse("123, 12, 13, 23", 3)));
  CHECK_FALSE(is_interval_code(parse("123, 1, 2, 3", 3)));
  CHECK_FALSE(is_interval_code(parse("1234, 12, 13, 14", 4)));
  CHECK_FALSE(is_interval_code(parse("12, 13, 23, 1, 2, 3", 3)));
  CHECK(is_interval_code(parse("1234, 12, 13", 4)));
  CHECK(is_interval_code(Code(5, {})));
  CHECK(is_interval_code(parse("1", 3)));
  CHECK(is_interval_code(parse("123, 24, 12, 23, 1, 2, 4", 4)));
}

TEST_CASE("both recognizers agree on every code over four indices") {
  int interval = 0;
  for (const Code& c : oracle::all_codes(4)) {
    const bool a = is_interval_code_by_enumeration(c);
    CHECK(a == is_interval_code(c));
    interval += a;
  }
  CHECK(interval == 3278);
}

TEST_CASE("atom words") {
  Code c = parse("12, 1, 2", 2);
  auto w = find_atom_word(c);
  REQUIRE(w);
  CHECK(w->valid_for(c));
  CHECK_FALSE(find_atom_word(parse("123, 12, 13, 23", 3)));

  AtomWord bad{{{Codeword::from_indices({1}), Codeword::from_indices({2})}}};
  CHECK_FALSE(bad.valid_for(parse("1, 2", 2)));
  AtomWord split{{{Codeword::from_indices({1})}, {Codeword::from_indices({2})}}};
  CHECK(split.valid_for(parse("1, 2", 2)));
  AtomWord twice{{{Codeword::from_indices({1})}, {Codeword::from_indices({1})}}};
  CHECK_FALSE(twice.valid_for(parse("1", 1)));
}

TEST_CASE("witnesses are verified and use endpoints in [1, 2n]") {
  auto w = realize_interval_code(parse("12, 1, 2", 2));
  REQUIRE(w);
  CHECK(code_of_realization(w->to_realization()) == parse("12, 1, 2", 2));
  CHECK(!realize_interval_code(parse("12, 13, 23, 1, 2, 3", 3)));

  auto ex2 = realize_interval_code(parse("123, 24, 12, 23, 1, 2, 4", 4));
  REQUIRE(ex2);
  CHECK(oracle::dense_code(ex2->to_realization()) == parse("123, 24, 12, 23, 1, 2, 4", 4));

  // Indices missing from every codeword need empty intervals.
  auto with_empty = realize_interval_code(parse("1", 2));
  REQUIRE(with_empty);
  CHECK(!with_empty->pairs[1]);

  for (const Code& c : enumerate_interval_codes(4)) {
    auto a = realize_interval_code(c);
    REQUIRE(a);
    CHECK(endpoints_in_range(*a));
    CHECK(code_of_realization(a->to_realization()) == c);
  }
}

TEST_CASE("atom-word recognizer scales past the enumeration cap") {
  Code f8 = parse_code_text("12345678, 1, 2, 3, 4, 5, 6, 7, 8", 8);
  CHECK_FALSE(is_interval_code(f8));
  // A chain of nested intervals and a path of overlapping ones.
  CHECK(is_interval_code(parse_code_text("12345678, 2345678, 345678, 45678, 5678, 678, 78, 8", 8)));
  Code path = parse_code_text("1, 12, 2, 23, 3, 34, 4, 45, 5, 56, 6, 67, 7, 78, 8", 8);
  auto w = realize_interval_code(path);
  REQUIRE(w);
  CHECK(endpoints_in_range(*w));
  CHECK(oracle::dense_code(w->to_realization()) == path);
}
