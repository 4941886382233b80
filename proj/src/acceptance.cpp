#include "boxcode/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "boxcode/box_dim.hpp"
#include "boxcode/code.hpp"
#include "boxcode/constructions.hpp"
#include "boxcode/geometry.hpp"
#include "boxcode/interval_codes.hpp"
#include "boxcode/normalizer.hpp"
#include "boxcode/sampling.hpp"

namespace boxcode {

namespace {

/// Collects failed checks; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.size() < 3) first_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    if (failures_) {
      os << "; " << failures_ << " failed";
      for (const auto& f : first_) os << " | " << f;
    }
    return os.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> first_;
};

Realization intervals(std::initializer_list<std::pair<Rational, Rational>> ivs) {
  std::vector<Interval> out;
  for (const auto& [lo, hi] : ivs) out.emplace_back(lo, hi);
  return Realization::from_intervals(std::move(out));
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every code on [3] containing ∅.
std::vector<Code> all_codes3() {
  std::vector<Code> out;
  for (unsigned subset = 0; subset < (1u << 7); ++subset) {
    std::vector<Codeword> words{Codeword{}};
    for (unsigned k = 0; k < 7; ++k) {
      if (subset >> k & 1u) words.emplace_back(static_cast<std::uint16_t>(k + 1));
    }
    out.emplace_back(3, std::move(words));
  }
  return out;
}

std::string criterion1(Checker& c) {
  std::mt19937_64 rng(20240101);
  std::uniform_int_distribution<int> pick_n(1, 6), pick_d(2, 4);
  for (int t = 0; t < 1000; ++t) {
    const int n = pick_n(rng);
    Realization u = random_interval_realization(rng, n), v = random_interval_realization(rng, n);
    std::vector<Realization> parts{u, v};
    c.expect(code_of_realization(product_realization(parts)) ==
                 intersection_product(code_of_realization(u), code_of_realization(v)),
             "pair " + std::to_string(t));
  }
  for (int t = 0; t < 200; ++t) {
    const int n = pick_n(rng), d = pick_d(rng);
    std::vector<Realization> parts;
    for (int j = 0; j < d; ++j) parts.push_back(random_interval_realization(rng, n));
    Code expected = code_of_realization(parts.front());
    for (int j = 1; j < d; ++j) expected = intersection_product(expected, code_of_realization(parts[j]));
    c.expect(code_of_realization(product_realization(parts)) == expected, "d-fold " + std::to_string(t));
  }
  return "1000 pairs, 200 d-fold products";
}

std::string criterion2(Checker& c) {
  const int n5 = 5;
  Code i1 = parse_code_text("124, 135, 1, 0", n5), j1 = parse_code_text("123, 145, 1, 0", n5);
  Code u1 = parse_code_text("12, 13, 14, 15, 1, 0", n5);
  c.expect(intersection_product(i1, j1) == u1, "five-box product identity");

  Code i2 = parse_code_text("123, 24, 12, 23, 1, 2, 4, 0", 4), j2 = parse_code_text("1234, 134, 12, 1, 2, 0", 4);
  c.expect(intersection_product(i2, j2) == named_code("fig1"), "four-rectangle product identity");

  // Five boxes: one large square with four disjoint small squares inside.
  Realization x1 = intervals({{0, 8}, {1, 3}, {5, 7}, {1, 3}, {5, 7}});
  Realization y1 = intervals({{0, 8}, {1, 3}, {1, 3}, {5, 7}, {5, 7}});
  std::vector<Realization> parts1{x1, y1};
  Realization five = product_realization(parts1);
  c.expect(code_of_realization(x1) == i1, "five-box x-axis code");
  c.expect(code_of_realization(y1) == j1, "five-box y-axis code");
  c.expect(code_of_realization(five) == u1, "five-box box code");

  Realization x2 = intervals({{1, 4}, {2, 7}, {3, 5}, {6, 8}});
  Realization y2 = intervals({{2, 6}, {1, 4}, {3, 5}, {3, 5}});
  std::vector<Realization> parts2{x2, y2};
  Realization four = product_realization(parts2);
  auto axes = axis_decompose(four);
  c.expect(code_of_realization(four) == named_code("fig1"), "four-rectangle box code");
  c.expect(axes.size() == 2 && code_of_realization(axes[0]) == i2, "four-rectangle x-axis code");
  c.expect(axes.size() == 2 && code_of_realization(axes[1]) == j2, "four-rectangle y-axis code");
  return "two product identities and their box witnesses";
}

std::string criterion3(Checker& c) {
  std::ostringstream counts;
  std::mt19937_64 rng(333);
  SamplingOptions opts;
  opts.pool = 20;
  opts.max_den = 4;
  for (int n = 1; n <= 4; ++n) {
    const auto& codes = enumerate_interval_codes(n);
    for (const Code& code : codes) {
      c.expect(static_cast<int>(code.size()) <= 2 * n + 1, "size bound " + to_string(code));
    }
    for (int t = 0; t < 1000; ++t) {
      Code code = code_of_realization(random_interval_realization(rng, n, opts));
      c.expect(std::binary_search(codes.begin(), codes.end(), code), "random code " + to_string(code));
    }
    counts << (n > 1 ? "/" : "") << codes.size();
  }
  return "interval codes per n=1..4: " + counts.str();
}

std::string criterion4(Checker& c) {
  const ClosureResult& cl = full_closure(3);
  c.expect(cl.fixpoint_reached(), "closure(3) fixpoint");
  for (const char* name : {"C1", "C2", "C3"}) {
    Code code = named_code(name);
    for (const auto& p : permutations(3)) {
      c.expect(!cl.dimension_of(permute(code, p)), std::string(name) + " present in closure");
    }
  }

  Code c1 = named_code("C1");
  std::vector<Code> anchored;
  for (const Code& code : all_codes3()) {
    if (code.contains(Codeword::full(3))) anchored.push_back(code);
  }
  auto pairs = factorizations(c1, anchored);
  c.expect(!pairs.empty(), "C1 has a factorization");
  for (const auto& [a, b] : pairs) c.expect(a == c1 || b == c1, "C1 factor pair without C1");
  return "closure(3) has " + std::to_string(cl.layers().back().size()) + " codes; " + std::to_string(pairs.size()) +
         " factorization(s) of C1 over " + std::to_string(anchored.size()) + " anchored candidates";
}

std::string criterion5(Checker& c) {
  Code c4 = named_code("C4");
  BoxDimension d = bdim(c4, BdimMode::kAnchored);
  c.expect(d.status == BoxDimension::Status::kNotBoxConvex, "anchored bdim(C4)");
  NonmonotonicityWitness w = nonmonotonicity_witness();
  c.expect(w.base == parse_code_text("1234, 12, 13, 0", 4), "base code");
  c.expect(w.base_is_interval_code, "base is an interval code");
  c.expect(w.nested, "C ⊆ C4 ⊆ Δ(C)");
  c.expect(w.holds(), "witness holds");
  const ClosureResult& full = full_closure(4);
  c.expect(full.fixpoint_reached() && !full.dimension_of(c4), "C4 absent from full closure(4)");
  return "anchored fixpoint after " + std::to_string(d.layers_explored) + " layer(s); full closure(4) has " +
         std::to_string(full.layers().back().size()) + " codes";
}

std::string criterion6(Checker& c) {
  c.expect(bdim(sunflower(2).code, BdimMode::kFull).dim == 1, "bdim(F2) = 1");
  c.expect(bdim(sunflower(4).code, BdimMode::kFull).dim == 2, "bdim(F4) = 2");

  Sunflower f6 = sunflower(6);
  Code product = f6.factors.front();
  for (std::size_t k = 1; k < f6.factors.size(); ++k) product = intersection_product(product, f6.factors[k]);
  c.expect(f6.factors.size() == 3 && product == f6.code, "three factors multiply to F6");

  // Every interval subcode of F6 containing [6] has at most two singletons,
  // so F6 (six singletons) needs at least three interval factors.
  int interval_subcodes = 0, max_singletons = 0;
  for (unsigned s = 0; s < 64; ++s) {
    std::vector<Codeword> words{Codeword{}, Codeword::full(6)};
    for (int i = 0; i < 6; ++i) {
      if (s >> i & 1u) words.push_back(Codeword::from_indices({i + 1}));
    }
    Code sub(6, std::move(words));
    if (!is_interval_code(sub)) continue;
    ++interval_subcodes;
    max_singletons = std::max(max_singletons, std::popcount(s));
  }
  c.expect(max_singletons == 2, "at most two singletons per interval subcode");
  const int lower = (6 + max_singletons - 1) / std::max(max_singletons, 1);
  c.expect(lower == 3, "pigeonhole lower bound 3");
  BoxDimension d6 = bdim(f6.code, BdimMode::kAnchored);
  c.expect(d6.dim == 3, "anchored closure gives bdim(F6) = 3");
  return std::to_string(interval_subcodes) + " of 64 anchored subcodes of F6 are interval codes";
}

std::string criterion7(Checker& c) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> pick_n(1, 5), pick_d(1, 3);
  SamplingOptions opts;
  opts.max_den = 3;
  for (int t = 0; t < 1000; ++t) {
    Realization r = random_box_realization(rng, pick_n(rng), pick_d(rng), opts);
    NormalizationReport rep = normalize_with_report(r);
    c.expect(rep.integer_corners_in_range, "corners " + std::to_string(t));
    c.expect(rep.closed_code_preserved(), "closed code " + std::to_string(t));
    c.expect(rep.interiors_match(), "interiors " + std::to_string(t));
  }
  for (int t = 0; t < 500; ++t) {
    Realization r = random_box_realization(rng, pick_n(rng), pick_d(rng), opts);
    c.expect(code_of_realization(open_to_closed(r)) == code_of_interiors(r), "open code " + std::to_string(t));
  }

  Realization j = intervals({{1, 2}, {2, 4}, {3, 5}, {4, 6}});
  Realization expected = intervals({{Rational(3, 4), Rational(9, 4)},
                                    {Rational(7, 4), Rational(17, 4)},
                                    {Rational(11, 4), Rational(21, 4)},
                                    {Rational(15, 4), Rational(25, 4)}});
  Realization extended = quarter_extend(j);
  c.expect(extended == expected, "quarter extension golden values");
  c.expect(code_of_realization(extended) == code_of_realization(j), "quarter extension keeps the code");
  c.expect(code_of_interiors(extended) == code_of_realization(j), "quarter extension interiors");
  return "1000 normalizations, 500 open-to-closed conversions";
}

std::string criterion8(Checker& c) {
  int codes = 0, extensions = 0;
  const Codeword full = Codeword::full(3);
  for (const Code& code : all_codes3()) {
    if (!is_max_intersection_complete(code)) continue;
    ++codes;
    std::vector<Codeword> ambient;
    const Code complex = simplicial_complex(code);
    for (Codeword w : complex.words()) {
      if (!code.contains(w)) ambient.push_back(w);
    }
    for (unsigned s = 0; s < (1u << ambient.size()); ++s) {
      std::vector<Codeword> d;
      for (std::size_t k = 0; k < ambient.size(); ++k) {
        if (s >> k & 1u) d.push_back(ambient[k]);
      }
      if (!is_downward_closed_in(d, ambient)) continue;
      ++extensions;
      std::vector<Codeword> e_words = d;
      e_words.push_back(full);
      Code e(3, std::move(e_words));
      std::vector<Codeword> joined(code.words().begin(), code.words().end());
      joined.insert(joined.end(), d.begin(), d.end());
      c.expect(intersection_product(code, e) == Code(3, std::move(joined)), "identity for " + to_string(code));
      auto maxima = maximal_codewords(e);
      c.expect(maxima.size() == 1 && maxima.front() == full, "unique maximal codeword of E");
    }
  }
  return std::to_string(codes) + " codes, " + std::to_string(extensions) + " downward-closed extensions";
}

std::string criterion9(Checker& c) {
  auto table = classify_three_index();
  auto reference = three_index_reference();
  std::set<Code> ours, theirs;
  for (const auto& row : table) ours.insert(row.code);
  for (const auto& [code, cls] : reference) theirs.insert(canonical_form(code).code);
  c.expect(ours == theirs, "classified codes match the reference table");
  c.expect(theirs.size() == reference.size(), "reference representatives are distinct");

  std::set<Code> star{canonical_form(named_code("C1")).code, canonical_form(named_code("C2")).code,
                      canonical_form(named_code("C3")).code};
  std::set<Code> our_star;
  int dagger = 0, plain = 0;
  for (const auto& row : table) {
    if (!row.bdim.box_convex()) our_star.insert(row.code);
  }
  c.expect(our_star == star, "non-box-convex class is {C1, C2, C3}");

  for (const auto& [code, cls] : reference) {
    const Code canon = canonical_form(code).code;
    auto it = std::find_if(table.begin(), table.end(), [&](const ClassifiedCode& r) { return r.code == canon; });
    if (it == table.end()) continue;
    switch (cls) {
      case ReferenceClass::kNotBoxConvex:
        c.expect(!it->bdim.box_convex(), "star code " + to_string(code));
        break;
      case ReferenceClass::kDimensionTwo:
        ++dagger;
        c.expect(it->bdim.dim == 2, "dagger bdim " + to_string(code));
        c.expect(!it->interval_code && !is_interval_code(code), "dagger not interval " + to_string(code));
        break;
      case ReferenceClass::kInterval: {
        ++plain;
        c.expect(it->bdim.dim == 1, "bdim 1 " + to_string(code));
        auto witness = realize_interval_code(code);
        c.expect(witness && code_of_realization(witness->to_realization()) == code, "witness " + to_string(code));
        break;
      }
    }
  }
  return std::to_string(table.size()) + " classes: " + std::to_string(plain) + " interval, " + std::to_string(dagger) +
         " of dimension two, " + std::to_string(our_star.size()) + " not box-convex";
}

std::string criterion10(Checker& c) {
  int interval = 0, anchored = 0;
  for (const Code& code : all_codes3()) {
    const bool a = is_interval_code_by_enumeration(code);
    const bool b = is_interval_code(code);
    auto witness = realize_interval_code(code);
    c.expect(a == b, "A vs B on " + to_string(code));
    c.expect(a == witness.has_value(), "A vs witness on " + to_string(code));
    if (witness) c.expect(code_of_realization(witness->to_realization()) == code, "witness " + to_string(code));
    interval += a;
    if (code.contains(Codeword::full(3))) {
      ++anchored;
      BoxDimension full = bdim(code, BdimMode::kFull), anch = bdim(code, BdimMode::kAnchored);
      c.expect(full.status == anch.status && full.dim == anch.dim, "anchored vs full on " + to_string(code));
    }
  }
  return "128 codes (" + std::to_string(interval) + " interval), " + std::to_string(anchored) + " anchored comparisons";
}

struct Criterion {
  int id;
  const char* title;
  std::string (*run)(Checker&);
};

constexpr Criterion kCriteria[] = {
    {1, "product theorem property suite", criterion1},
    {2, "worked product identities and box witnesses", criterion2},
    {3, "interval-code size bound and integer completeness", criterion3},
    {4, "C1, C2, C3 are not box-convex", criterion4},
    {5, "C4 and non-monotonicity", criterion5},
    {6, "sunflower dimensions", criterion6},
    {7, "normalization theorem", criterion7},
    {8, "weak monotonicity identity", criterion8},
    {9, "three-index classification", criterion9},
    {10, "recognizer and closure agreement", criterion10},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, int only) {
  std::vector<CriterionResult> results;
  for (const auto& crit : kCriteria) {
    if (only && crit.id != only) continue;
    Checker checker;
    std::string extra;
    const auto start = std::chrono::steady_clock::now();
    try {
      extra = crit.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CriterionResult r{crit.id, crit.title, checker.ok(), checker.summary(extra), secs};
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (" << r.detail << ") ";
    out.precision(2);
    out << std::fixed << r.seconds << "s\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace boxcode
