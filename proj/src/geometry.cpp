#include "boxcode/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace boxcode {

Interval::Interval(Rational lo, Rational hi) {
  if (hi < lo) throw std::invalid_argument("interval with lo=" + lo.str() + " > hi=" + hi.str());
  bounds_ = Bounds{lo, hi};
}

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (std::any_of(intervals_.begin(), intervals_.end(), [](const Interval& i) { return i.is_empty(); })) {
    intervals_.clear();
  }
}

bool Box::has_empty_interior() const {
  return is_empty() ||
         std::any_of(intervals_.begin(), intervals_.end(), [](const Interval& i) { return i.is_degenerate(); });
}

Realization::Realization(int dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
  if (dim_ < 1) throw std::invalid_argument("realization dim must be positive, got " + std::to_string(dim_));
  if (boxes_.empty()) throw std::invalid_argument("realization must contain at least one box");
  if (boxes_.size() > static_cast<std::size_t>(kMaxUniverse)) {
    throw std::invalid_argument("realization has " + std::to_string(boxes_.size()) + " boxes; at most " +
                                std::to_string(kMaxUniverse) + " supported");
  }
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (!boxes_[i].is_empty() && boxes_[i].dim() != dim_) {
      throw std::invalid_argument("box " + std::to_string(i + 1) + " has dimension " +
                                  std::to_string(boxes_[i].dim()) + ", expected " + std::to_string(dim_));
    }
  }
}

Realization Realization::from_intervals(std::vector<Interval> intervals) {
  std::vector<Box> boxes;
  boxes.reserve(intervals.size());
  for (auto& iv : intervals) boxes.emplace_back(std::vector<Interval>{std::move(iv)});
  return Realization(1, std::move(boxes));
}

Interval Realization::interval(int i) const {
  if (dim_ != 1) throw std::logic_error("interval() on a realization of dimension " + std::to_string(dim_));
  return boxes_[i].is_empty() ? Interval::empty() : boxes_[i].axis(0);
}

namespace {

/// Sample coordinates on one axis: every endpoint, `samples_per_gap` points
/// strictly inside each gap, and one point beyond each extreme.
std::vector<Rational> axis_candidates(const Realization& r, int axis, int samples_per_gap) {
  std::vector<Rational> ends;
  for (const Box& b : r.boxes()) {
    if (b.is_empty()) continue;
    ends.push_back(b.axis(axis).lo());
    ends.push_back(b.axis(axis).hi());
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  if (ends.empty()) return {Rational(0)};

  std::vector<Rational> out;
  out.push_back(ends.front() - Rational(1));
  for (std::size_t k = 0; k < ends.size(); ++k) {
    out.push_back(ends[k]);
    if (k + 1 == ends.size()) break;
    const Rational step = (ends[k + 1] - ends[k]) / Rational(samples_per_gap + 1);
    for (int s = 1; s <= samples_per_gap; ++s) out.push_back(ends[k] + step * Rational(s));
  }
  out.push_back(ends.back() + Rational(1));
  return out;
}

Code grid_code(const Realization& r, int samples_per_gap, bool interiors) {
  if (samples_per_gap < 1) throw std::invalid_argument("samples_per_gap must be at least 1");
  const int n = r.size();
  const int d = r.dim();

  // membership[j][k]: boxes whose j-th factor contains the k-th sample on axis j.
  std::vector<std::vector<std::uint32_t>> membership(d);
  for (int j = 0; j < d; ++j) {
    for (const Rational& x : axis_candidates(r, j, samples_per_gap)) {
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i) {
        const Box& b = r.box(i);
        if (b.is_empty()) continue;
        const Interval& iv = b.axis(j);
        if (interiors ? iv.interior_contains(x) : iv.contains(x)) mask |= 1u << i;
      }
      membership[j].push_back(mask);
    }
  }

  std::vector<char> seen(std::size_t{1} << n, 0);
  std::vector<std::size_t> pos(d, 0);
  for (;;) {
    std::uint32_t pattern = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (int j = 0; j < d && pattern; ++j) pattern &= membership[j][pos[j]];
    seen[pattern] = 1;
    int j = 0;
    while (j < d && ++pos[j] == membership[j].size()) pos[j++] = 0;
    if (j == d) break;
  }

  std::vector<Codeword> words;
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (seen[p]) words.emplace_back(static_cast<std::uint16_t>(p));
  }
  return Code(n, std::move(words));
}

}  // namespace

Code code_of_realization(const Realization& r, int samples_per_gap) { return grid_code(r, samples_per_gap, false); }

Code code_of_interiors(const Realization& r, int samples_per_gap) { return grid_code(r, samples_per_gap, true); }

std::vector<Realization> axis_decompose(const Realization& r) {
  std::vector<Realization> out;
  out.reserve(r.dim());
  for (int j = 0; j < r.dim(); ++j) {
    std::vector<Interval> ivs;
    ivs.reserve(r.size());
    for (const Box& b : r.boxes()) ivs.push_back(b.is_empty() ? Interval::empty() : b.axis(j));
    out.push_back(Realization::from_intervals(std::move(ivs)));
  }
  return out;
}

Realization product_realization(std::span<const Realization> parts) {
  if (parts.empty()) throw std::invalid_argument("product_realization needs at least one part");
  const int n = parts.front().size();
  int dim = 0;
  for (const auto& p : parts) {
    if (p.size() != n) {
      throw std::invalid_argument("product_realization parts have different numbers of boxes (" +
                                  std::to_string(n) + " and " + std::to_string(p.size()) + ")");
    }
    dim += p.dim();
  }
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Interval> ivs;
    ivs.reserve(dim);
    bool empty = false;
    for (const auto& p : parts) {
      const Box& b = p.box(i);
      if (b.is_empty()) {
        empty = true;
        break;
      }
      ivs.insert(ivs.end(), b.intervals().begin(), b.intervals().end());
    }
    boxes.push_back(empty ? Box::empty() : Box(std::move(ivs)));
  }
  return Realization(dim, std::move(boxes));
}

}  // namespace boxcode
