#include "boxcode/normalizer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace boxcode {

namespace {

void require_line(const Realization& r, const char* op) {
  if (r.dim() != 1) {
    throw std::invalid_argument(std::string(op) + " needs a 1-dimensional realization, got dim " +
                                std::to_string(r.dim()));
  }
}

void require_integer_endpoints(const Realization& r, const char* op) {
  for (int i = 0; i < r.size(); ++i) {
    Interval iv = r.interval(i);
    if (!iv.is_empty() && (!iv.lo().is_integer() || !iv.hi().is_integer())) {
      throw std::invalid_argument(std::string(op) + " needs integer endpoints; interval " + std::to_string(i + 1) +
                                  " is [" + iv.lo().str() + ", " + iv.hi().str() + "]");
    }
  }
}

Realization map_intervals(const Realization& r, const std::function<Interval(const Interval&)>& f) {
  std::vector<Interval> out;
  out.reserve(r.size());
  for (int i = 0; i < r.size(); ++i) {
    Interval iv = r.interval(i);
    out.push_back(iv.is_empty() ? iv : f(iv));
  }
  return Realization::from_intervals(std::move(out));
}

Realization per_axis(const Realization& r, const std::function<Realization(const Realization&)>& f) {
  std::vector<Realization> axes;
  for (const auto& axis : axis_decompose(r)) axes.push_back(f(axis));
  return product_realization(axes);
}

}  // namespace

Realization sort_endpoints(const Realization& r) {
  require_line(r, "sort_endpoints");
  std::vector<Rational> ends;
  for (int i = 0; i < r.size(); ++i) {
    Interval iv = r.interval(i);
    if (iv.is_empty()) continue;
    ends.push_back(iv.lo());
    ends.push_back(iv.hi());
  }
  std::sort(ends.begin(), ends.end());
  auto rank = [&](const Rational& x) {
    return Rational(static_cast<std::int64_t>(std::lower_bound(ends.begin(), ends.end(), x) - ends.begin()) + 1);
  };
  return map_intervals(r, [&](const Interval& iv) { return Interval(rank(iv.lo()), rank(iv.hi())); });
}

Realization quarter_extend(const Realization& r) {
  require_line(r, "quarter_extend");
  require_integer_endpoints(r, "quarter_extend");
  const Rational q(1, 4);
  return map_intervals(r, [&](const Interval& iv) { return Interval(iv.lo() - q, iv.hi() + q); });
}

Realization quarter_shrink(const Realization& r) {
  require_line(r, "quarter_shrink");
  require_integer_endpoints(r, "quarter_shrink");
  const Rational q(1, 4);
  return map_intervals(r, [&](const Interval& iv) {
    if (iv.is_degenerate()) throw std::invalid_argument("quarter_shrink of a degenerate interval");
    return Interval(iv.lo() + q, iv.hi() - q);
  });
}

Realization normalize_realization(const Realization& r) {
  return per_axis(r, [](const Realization& axis) { return sort_endpoints(quarter_extend(sort_endpoints(axis))); });
}

Realization open_to_closed(const Realization& r) {
  // Open boxes with a degenerate factor are empty sets.
  std::vector<Box> open_boxes;
  for (const Box& b : r.boxes()) open_boxes.push_back(b.has_empty_interior() ? Box::empty() : b);
  Realization open(r.dim(), std::move(open_boxes));

  Realization out = per_axis(open, [](const Realization& axis) {
    return sort_endpoints(quarter_shrink(sort_endpoints(axis)));
  });
  if (code_of_realization(out) != code_of_interiors(r)) {
    throw std::logic_error("open_to_closed failed oracle verification");
  }
  return out;
}

bool has_integer_corners_in_range(const Realization& r) {
  const Rational lo(1), hi(2 * r.size());
  for (const Box& b : r.boxes()) {
    for (const Interval& iv : b.intervals()) {
      for (const Rational& x : {iv.lo(), iv.hi()}) {
        if (!x.is_integer() || x < lo || hi < x) return false;
      }
    }
  }
  return true;
}

NormalizationReport normalize_with_report(const Realization& r) {
  Realization v = normalize_realization(r);
  return NormalizationReport{v, code_of_realization(r), code_of_realization(v), code_of_interiors(v),
                             has_integer_corners_in_range(v)};
}

}  // namespace boxcode
