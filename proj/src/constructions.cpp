#include "boxcode/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "boxcode/interval_codes.hpp"

namespace boxcode {

namespace {

struct NamedEntry {
  const char* name;
  int n;
  const char* text;
};

constexpr NamedEntry kNamed[] = {
    {"C1", 3, "123, 12, 13, 23, 0"},
    {"C2", 3, "123, 12, 13, 23, 1, 0"},
    {"C3", 3, "12, 13, 23, 1, 2, 3, 0"},
    {"C4", 4, "1234, 12, 13, 14, 0"},
    {"fig1", 4, "123, 24, 12, 13, 23, 1, 2, 3, 4, 0"},
    {"nonmono_base", 4, "1234, 12, 13, 0"},
};

}  // namespace

Code named_code(std::string_view name) {
  for (const auto& e : kNamed) {
    if (name == e.name) return parse_code_text(e.text, e.n);
  }
  std::string known;
  for (const auto& e : kNamed) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown named code '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> named_code_names() {
  std::vector<std::string> out;
  for (const auto& e : kNamed) out.emplace_back(e.name);
  return out;
}

Sunflower sunflower(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxUniverse) {
    throw std::invalid_argument("sunflower needs an even n in [2, " + std::to_string(kMaxUniverse) + "], got " +
                                std::to_string(n));
  }
  const Codeword full = Codeword::full(n);
  std::vector<Codeword> words{Codeword{}, full};
  for (int i = 1; i <= n; ++i) words.push_back(Codeword::from_indices({i}));
  Sunflower s{Code(n, std::move(words)), {}};

  for (int i = 1; i <= n / 2; ++i) {
    s.factors.emplace_back(n, std::vector<Codeword>{Codeword{}, full, Codeword::from_indices({2 * i - 1}),
                                                    Codeword::from_indices({2 * i})});
  }
  Code product = s.factors.front();
  for (std::size_t k = 1; k < s.factors.size(); ++k) product = intersection_product(product, s.factors[k]);
  if (product != s.code) throw std::logic_error("sunflower factors do not multiply to F_n");
  return s;
}

std::pair<Code, Code> weak_monotone_extension(const Code& c, const std::vector<Codeword>& d) {
  const int n = c.n();
  std::vector<Codeword> ambient;
  const Code complex = simplicial_complex(c);
  for (Codeword w : complex.words()) {
    if (!c.contains(w)) ambient.push_back(w);
  }
  for (Codeword w : d) {
    if (std::find(ambient.begin(), ambient.end(), w) == ambient.end()) {
      throw std::invalid_argument("codeword " + w.str() + " of the extension is not in Δ(C) \\ C");
    }
  }
  if (!is_downward_closed_in(d, ambient)) {
    throw std::invalid_argument("extension set is not downward closed in Δ(C) \\ C");
  }

  std::vector<Codeword> joined(c.words().begin(), c.words().end());
  joined.insert(joined.end(), d.begin(), d.end());
  Code extended(n, std::move(joined));

  std::vector<Codeword> e_words = d;
  e_words.push_back(Codeword::full(n));
  e_words.emplace_back();
  Code e(n, std::move(e_words));

  if (intersection_product(c, e) != extended) {
    throw std::logic_error("C ⋒ E differs from C ∪ D for C = " + to_string(c));
  }
  return {extended, e};
}

NonmonotonicityWitness nonmonotonicity_witness() {
  Code base = named_code("nonmono_base");
  Code c4 = named_code("C4");
  const bool nested = base.subset_of(c4) && c4.subset_of(simplicial_complex(base));
  return NonmonotonicityWitness{base, c4, is_interval_code(base), nested, bdim(c4, BdimMode::kAnchored)};
}

std::vector<ClassifiedCode> classify_three_index() {
  constexpr int n = 3;
  const ClosureResult& cl = full_closure(n);
  std::set<Code> reps;
  // Bit k of the subset selects the nonempty word with mask k + 1.
  for (unsigned subset = 1; subset < (1u << 7); ++subset) {
    std::vector<Codeword> words{Codeword{}};
    for (unsigned k = 0; k < 7; ++k) {
      if (subset >> k & 1u) words.emplace_back(static_cast<std::uint16_t>(k + 1));
    }
    Code c(n, std::move(words));
    if (is_max_intersection_complete(c)) reps.insert(canonical_form(c).code);
  }

  std::vector<ClassifiedCode> out;
  for (const Code& c : reps) {
    BoxDimension d = cl.dimension_of(c)
                         ? BoxDimension{BoxDimension::Status::kFound, cl.dimension_of(c),
                                        static_cast<int>(cl.layers().size())}
                         : BoxDimension{BoxDimension::Status::kNotBoxConvex, std::nullopt,
                                        static_cast<int>(cl.layers().size())};
    out.push_back(ClassifiedCode{c, d, is_interval_code(c)});
  }
  std::stable_sort(out.begin(), out.end(), [](const ClassifiedCode& a, const ClassifiedCode& b) {
    const int da = a.bdim.dim.value_or(1000), db = b.bdim.dim.value_or(1000);
    return da != db ? da < db : a.code < b.code;
  });
  return out;
}

std::vector<std::pair<Code, ReferenceClass>> three_index_reference() {
  using enum ReferenceClass;
  static const std::pair<const char*, ReferenceClass> kTable[] = {
      {"1, 0", kInterval},
      {"1, 2, 0", kInterval},
      {"1, 2, 3, 0", kInterval},
      {"12, 0", kInterval},
      {"12, 1, 0", kInterval},
      {"12, 1, 2, 0", kInterval},
      {"12, 3, 0", kInterval},
      {"12, 3, 1, 0", kInterval},
      {"12, 3, 1, 2, 0", kInterval},
      {"12, 13, 1, 0", kInterval},
      {"12, 13, 1, 2, 0", kInterval},
      {"12, 13, 1, 2, 3, 0", kInterval},
      {"12, 13, 23, 1, 2, 3, 0", kNotBoxConvex},
      {"123, 0", kInterval},
      {"123, 1, 0", kInterval},
      {"123, 1, 2, 0", kInterval},
      {"123, 1, 2, 3, 0", kDimensionTwo},
      {"123, 12, 0", kInterval},
      {"123, 12, 1, 0", kInterval},
      {"123, 12, 3, 0", kInterval},
      {"123, 12, 1, 2, 0", kInterval},
      {"123, 12, 1, 3, 0", kInterval},
      {"123, 12, 1, 2, 3, 0", kDimensionTwo},
      {"123, 12, 13, 0", kInterval},
      {"123, 12, 13, 1, 0", kInterval},
      {"123, 12, 13, 2, 0", kInterval},
      {"123, 12, 13, 1, 2, 0", kInterval},
      {"123, 12, 13, 2, 3, 0", kInterval},
      {"123, 12, 13, 1, 2, 3, 0", kDimensionTwo},
      {"123, 12, 13, 23, 0", kNotBoxConvex},
      {"123, 12, 13, 23, 1, 0", kNotBoxConvex},
      {"123, 12, 13, 23, 1, 2, 0", kDimensionTwo},
      {"123, 12, 13, 23, 1, 2, 3, 0", kDimensionTwo},
  };
  std::vector<std::pair<Code, ReferenceClass>> out;
  for (const auto& [text, cls] : kTable) out.emplace_back(parse_code_text(text, 3), cls);
  return out;
}

}  // namespace boxcode
