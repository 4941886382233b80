#include <doctest.h>

#include <random>
#include <stdexcept>

#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"
#include "boxcode/sampling.hpp"
#include "oracles.hpp"

using namespace boxcode;

namespace {

Realization line(std::initializer_list<std::pair<Rational, Rational>> ivs) {
  std::vector<Interval> out;
  for (const auto& [lo, hi] : ivs) out.emplace_back(lo, hi);
  return Realization::from_intervals(out);
}

Code parse(const char* text, int n) { return parse_code_text(text, n); }

}  // namespace

TEST_CASE("intervals and boxes") {
  Interval iv(1, 3);
  CHECK(iv.contains(1));
  CHECK(iv.contains(Rational(5, 2)));
  CHECK_FALSE(iv.interior_contains(1));
  CHECK(iv.interior_contains(2));
  CHECK(Interval(2, 2).is_degenerate());
  CHECK_FALSE(Interval::empty().contains(0));
  CHECK_THROWS_AS(Interval(3, 1), std::invalid_argument);

  Box b({Interval(0, 1), Interval::empty()});
  CHECK(b.is_empty());
  CHECK(Box({Interval(0, 1), Interval(2, 2)}).has_empty_interior());
  CHECK_FALSE(Box({Interval(0, 1), Interval(2, 3)}).has_empty_interior());
}

TEST_CASE("realization validation") {
  CHECK_THROWS_AS(Realization(0, {Box::empty()}), std::invalid_argument);
  CHECK_THROWS_AS(Realization(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Realization(2, {Box({Interval(0, 1)})}), std::invalid_argument);
  CHECK_THROWS_AS(Realization(1, std::vector<Box>(17, Box::empty())), std::invalid_argument);
  CHECK_NOTHROW(Realization(1, std::vector<Box>(16, Box::empty())));
}

TEST_CASE("closed codes of small line realizations") {
  CHECK(code_of_realization(line({{0, 1}})) == parse("1", 1));
  CHECK(code_of_realization(line({{0, 2}, {1, 3}})) == parse("1, 12, 2", 2));
  CHECK(code_of_realization(line({{0, 1}, {1, 2}})) == parse("1, 12, 2", 2));
  CHECK(code_of_realization(Realization::from_intervals({Interval::empty(), Interval(0, 1)})) == parse("2", 2));
}

TEST_CASE("interior codes") {
  CHECK(code_of_interiors(line({{0, 1}})) == parse("1", 1));
  CHECK(code_of_interiors(line({{1, 1}})) == Code(1, {}));
  CHECK(code_of_interiors(line({{0, 1}, {1, 2}})) == parse("1, 2", 2));
}

TEST_CASE("a square containing four small squares") {
  Realization x = line({{0, 8}, {1, 3}, {5, 7}, {1, 3}, {5, 7}});
  Realization y = line({{0, 8}, {1, 3}, {1, 3}, {5, 7}, {5, 7}});
  std::vector<Realization> parts{x, y};
  Realization r = product_realization(parts);
  CHECK(r.dim() == 2);
  CHECK(code_of_realization(r) == parse("12, 13, 14, 15, 1", 5));
  CHECK(oracle::dense_code(r) == parse("12, 13, 14, 15, 1", 5));
}

TEST_CASE("four rectangles decompose into the stated interval codes") {
  Realization x = line({{1, 4}, {2, 7}, {3, 5}, {6, 8}});
  Realization y = line({{2, 6}, {1, 4}, {3, 5}, {3, 5}});
  std::vector<Realization> parts{x, y};
  Realization r = product_realization(parts);
  CHECK(code_of_realization(r) == parse("123, 24, 12, 13, 23, 1, 2, 3, 4", 4));
  auto axes = axis_decompose(r);
  REQUIRE(axes.size() == 2);
  CHECK(code_of_realization(axes[0]) == parse("123, 24, 12, 23, 1, 2, 4", 4));
  CHECK(code_of_realization(axes[1]) == parse("1234, 134, 12, 1, 2", 4));
  CHECK(axes[0] == x);
  CHECK(axes[1] == y);
}

TEST_CASE("product and decomposition") {
  std::vector<Realization> parts{line({{0, 1}}), line({{2, 3}})};
  Realization r = product_realization(parts);
  CHECK(r.box(0) == Box({Interval(0, 1), Interval(2, 3)}));

  std::vector<Realization> with_empty{Realization::from_intervals({Interval(0, 1), Interval::empty()}),
                                      line({{0, 1}, {0, 1}})};
  CHECK(product_realization(with_empty).box(1).is_empty());

  Realization single = line({{0, 1}, {2, 5}});
  CHECK(axis_decompose(single) == std::vector<Realization>{single});

  std::vector<Realization> mismatch{line({{0, 1}}), line({{0, 1}, {1, 2}})};
  CHECK_THROWS_AS(product_realization(mismatch), std::invalid_argument);

  std::mt19937_64 rng(21);
  SamplingOptions no_empty;
  no_empty.empty_chance = 0;
  for (int t = 0; t < 200; ++t) {
    Realization r2 = random_box_realization(rng, 1 + t % 5, 1 + t % 3, no_empty);
    auto axes = axis_decompose(r2);
    CHECK(product_realization(axes) == r2);
  }
}

TEST_CASE("grid oracle agrees with dense sampling") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + t % 6, d = 1 + t % 3;
    Realization r = random_box_realization(rng, n, d);
    CHECK(code_of_realization(r) == oracle::dense_code(r));
    CHECK(code_of_interiors(r) == oracle::dense_code(r, true));
    CHECK(code_of_realization(r, 3) == code_of_realization(r));
  }
}

TEST_CASE("product theorem on random interval realizations") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    Realization u = random_interval_realization(rng, n), v = random_interval_realization(rng, n);
    std::vector<Realization> parts{u, v};
    CHECK(code_of_realization(product_realization(parts)) ==
          intersection_product(code_of_realization(u), code_of_realization(v)));
  }
}
