#include <doctest.h>

#include <random>
#include <stdexcept>

#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"
#include "boxcode/normalizer.hpp"
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

const Realization kStaircase = line({{1, 2}, {2, 4}, {3, 5}, {4, 6}});

}  // namespace

TEST_CASE("endpoint ranks") {
  CHECK(sort_endpoints(line({{10, 20}, {20, 40}})) == line({{1, 2}, {2, 4}}));
  CHECK(sort_endpoints(line({{1, 2}, {3, 4}})) == line({{1, 2}, {3, 4}}));
  CHECK(sort_endpoints(line({{5, 5}})) == line({{1, 1}}));
  Realization with_empty = Realization::from_intervals({Interval::empty(), Interval(Rational(1, 2), 7)});
  CHECK(sort_endpoints(with_empty) == Realization::from_intervals({Interval::empty(), Interval(1, 2)}));
  CHECK_THROWS_AS(sort_endpoints(Realization(2, {Box({Interval(0, 1), Interval(0, 1)})})), std::invalid_argument);
}

TEST_CASE("quarter extension") {
  Realization expected = line({{Rational(3, 4), Rational(9, 4)},
                               {Rational(7, 4), Rational(17, 4)},
                               {Rational(11, 4), Rational(21, 4)},
                               {Rational(15, 4), Rational(25, 4)}});
  CHECK(quarter_extend(kStaircase) == expected);
  CHECK(code_of_realization(expected) == code_of_realization(kStaircase));

  Realization touching = line({{0, 1}, {1, 2}});
  Realization ext = quarter_extend(touching);
  CHECK(ext == line({{Rational(-1, 4), Rational(5, 4)}, {Rational(3, 4), Rational(9, 4)}}));
  CHECK(code_of_realization(ext) == parse("1, 12, 2", 2));
  CHECK(code_of_interiors(ext) == parse("1, 12, 2", 2));
  CHECK_THROWS_AS(quarter_extend(line({{Rational(1, 2), 1}})), std::invalid_argument);
}

TEST_CASE("quarter shrink") {
  CHECK(quarter_shrink(line({{0, 1}, {1, 2}})) ==
        line({{Rational(1, 4), Rational(3, 4)}, {Rational(5, 4), Rational(7, 4)}}));
  CHECK_THROWS_AS(quarter_shrink(line({{1, 1}})), std::invalid_argument);
}

TEST_CASE("normal form of touching intervals") {
  Realization r = line({{0, 1}, {1, 2}});
  Realization norm = normalize_realization(r);
  CHECK(norm == line({{1, 3}, {2, 4}}));
  CHECK(has_integer_corners_in_range(norm));
  CHECK(code_of_realization(norm) == parse("1, 12, 2", 2));
  CHECK(code_of_interiors(norm) == parse("1, 12, 2", 2));
}

TEST_CASE("normal form in the plane from the extended collection") {
  std::vector<Realization> parts{kStaircase, kStaircase};
  Realization r = product_realization(parts);
  NormalizationReport rep = normalize_with_report(r);
  CHECK(rep.integer_corners_in_range);
  CHECK(rep.closed_code_preserved());
  CHECK(rep.interiors_match());
  for (const Box& b : rep.normalized.boxes()) {
    for (const Interval& iv : b.intervals()) {
      CHECK(Rational(1) <= iv.lo());
      CHECK(iv.hi() <= Rational(8));
    }
  }
}

TEST_CASE("normalization is idempotent up to codes") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    Realization r = random_box_realization(rng, 1 + t % 5, 1 + t % 3);
    Realization once = normalize_realization(r);
    Realization twice = normalize_realization(once);
    CHECK(code_of_realization(twice) == code_of_realization(once));
    CHECK(code_of_interiors(twice) == code_of_interiors(once));
  }
}

TEST_CASE("random normalizations satisfy both properties under dense sampling") {
  std::mt19937_64 rng(2024);
  SamplingOptions opts;
  opts.max_den = 4;
  for (int t = 0; t < 300; ++t) {
    Realization r = random_box_realization(rng, 1 + t % 5, 1 + t % 3, opts);
    Realization norm = normalize_realization(r);
    CHECK(has_integer_corners_in_range(norm));
    const Code closed = oracle::dense_code(r);
    CHECK(oracle::dense_code(norm) == closed);
    CHECK(oracle::dense_code(norm, true) == closed);
    for (int i = 0; i < r.size(); ++i) CHECK(norm.box(i).is_empty() == r.box(i).is_empty());
  }
}

TEST_CASE("open boxes to closed boxes") {
  CHECK(code_of_realization(open_to_closed(line({{0, 1}}))) == parse("1", 1));
  CHECK(code_of_realization(open_to_closed(line({{0, 1}, {1, 2}}))) == parse("1, 2", 2));
  CHECK(code_of_realization(open_to_closed(line({{0, 2}, {1, 3}}))) == parse("1, 12, 2", 2));
  Realization point = line({{1, 1}, {0, 2}});
  Realization closed = open_to_closed(point);
  CHECK(closed.box(0).is_empty());
  CHECK(code_of_realization(closed) == parse("2", 2));

  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    Realization r = random_box_realization(rng, 1 + t % 5, 1 + t % 3);
    CHECK(oracle::dense_code(open_to_closed(r)) == oracle::dense_code(r, true));
  }
}

TEST_CASE("corner range check") {
  CHECK(has_integer_corners_in_range(line({{1, 4}, {2, 3}})));
  CHECK_FALSE(has_integer_corners_in_range(line({{1, 5}, {2, 3}})));
  CHECK_FALSE(has_integer_corners_in_range(line({{Rational(3, 2), 3}, {2, 3}})));
  CHECK_FALSE(has_integer_corners_in_range(line({{0, 2}, {2, 3}})));
}
