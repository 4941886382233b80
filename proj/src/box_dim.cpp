#include "boxcode/box_dim.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "boxcode/interval_codes.hpp"
#include "boxcode/parallel.hpp"

namespace boxcode {

namespace {

constexpr int kMaskUniverse = 6;

/// Codes on n <= 6 as 64-bit sets of words; the product with generator g is
/// the union over words a of the precomputed image {a ∩ b : b ∈ g}.
class MaskRep {
 public:
  using Key = std::uint64_t;
  using Hash = std::hash<std::uint64_t>;

  MaskRep(int n, const std::vector<Code>& generators) : n_(n) {
    const int words = 1 << n;
    images_.reserve(generators.size());
    for (const Code& g : generators) {
      std::vector<Key> image(words, 0);
      for (int a = 0; a < words; ++a) {
        for (Codeword b : g.words()) image[a] |= Key{1} << (a & b.bits());
      }
      images_.push_back(std::move(image));
    }
  }

  static Key key(const Code& c) {
    Key k = 0;
    for (Codeword w : c.words()) k |= Key{1} << w.bits();
    return k;
  }
  Code code(Key k) const {
    std::vector<Codeword> words;
    while (k) {
      words.emplace_back(static_cast<std::uint16_t>(std::countr_zero(k)));
      k &= k - 1;
    }
    return Code(n_, std::move(words));
  }
  Key product(Key a, std::size_t g) const {
    const auto& image = images_[g];
    Key out = 0;
    while (a) {
      out |= image[std::countr_zero(a)];
      a &= a - 1;
    }
    return out;
  }
  static bool within(Key a, Key bound) { return (a & ~bound) == 0; }

 private:
  int n_;
  std::vector<std::vector<Key>> images_;
};

class GenericRep {
 public:
  using Key = Code;
  using Hash = std::hash<Code>;

  explicit GenericRep(const std::vector<Code>& generators) : generators_(generators) {}

  static Key key(const Code& c) { return c; }
  Code code(const Key& k) const { return k; }
  Key product(const Key& a, std::size_t g) const { return intersection_product(a, generators_[g]); }
  static bool within(const Key& a, const Key& bound) { return a.subset_of(bound); }

 private:
  std::vector<Code> generators_;
};

std::vector<Code> normalized_generators(int n, std::vector<Code> generators, const ClosureOptions& options) {
  for (const Code& g : generators) {
    if (g.n() != n) {
      throw std::invalid_argument("closure generator " + to_string(g) + " has n=" + std::to_string(g.n()) +
                                  ", expected n=" + std::to_string(n));
    }
  }
  generators.push_back(Code::identity(n));
  if (options.within) {
    std::erase_if(generators, [&](const Code& g) { return !g.subset_of(*options.within); });
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return generators;
}

}  // namespace

template <class Rep>
ClosureResult run_closure(Rep& rep, int n, std::vector<Code> generators, const ClosureOptions& options) {
  using Key = typename Rep::Key;
  ClosureResult result;
  result.n_ = n;
  result.generators_ = std::move(generators);
  const auto& gens = result.generators_;

  std::optional<Key> bound;
  if (options.within) bound = Rep::key(*options.within);

  std::unordered_set<Key, typename Rep::Hash> seen;
  std::vector<Key> frontier;
  std::vector<Key> current;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Key k = Rep::key(gens[g]);
    if (seen.insert(k).second) {
      frontier.push_back(k);
      result.witnesses_.emplace(gens[g], ClosureResult::Witness{std::nullopt, g, 1});
    }
  }
  current = frontier;
  result.layers_.push_back(gens);

  struct Found {
    Key key;
    std::size_t parent;
    std::size_t generator;
  };

  for (int layer = 2;; ++layer) {
    if (options.max_layers > 0 && layer > options.max_layers) break;

    std::vector<std::vector<Found>> per_worker(worker_count());
    parallel_chunks(frontier.size(), [&](unsigned w, std::size_t begin, std::size_t end) {
      auto& out = per_worker[w];
      std::unordered_set<Key, typename Rep::Hash> local;
      for (std::size_t f = begin; f < end; ++f) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          Key p = rep.product(frontier[f], g);
          if (bound && !Rep::within(p, *bound)) continue;
          if (seen.count(p) || !local.insert(p).second) continue;
          out.push_back(Found{p, f, g});
        }
      }
    });

    std::vector<Key> next;
    for (auto& found : per_worker) {
      for (auto& f : found) {
        if (!seen.insert(f.key).second) continue;
        Code c = rep.code(f.key);
        result.witnesses_.emplace(c, ClosureResult::Witness{rep.code(frontier[f.parent]), f.generator, layer});
        next.push_back(f.key);
      }
    }

    current.insert(current.end(), next.begin(), next.end());
    std::vector<Code> codes;
    codes.reserve(current.size());
    for (const Key& k : current) codes.push_back(rep.code(k));
    std::sort(codes.begin(), codes.end());
    result.layers_.push_back(std::move(codes));

    if (next.empty()) {
      result.fixpoint_reached_ = true;
      break;
    }
    frontier = std::move(next);
  }
  return result;
}

std::optional<int> ClosureResult::dimension_of(const Code& code) const {
  auto it = witnesses_.find(code);
  if (it == witnesses_.end()) return std::nullopt;
  return it->second.layer;
}

std::optional<std::vector<Code>> ClosureResult::factors(const Code& code) const {
  std::vector<Code> out;
  const Code* cur = &code;
  for (;;) {
    auto it = witnesses_.find(*cur);
    if (it == witnesses_.end()) return std::nullopt;
    out.push_back(generators_[it->second.generator]);
    if (!it->second.parent) break;
    cur = &*it->second.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ClosureResult closure(int n, std::optional<std::vector<Code>> generators, const ClosureOptions& options) {
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("closure: n=" + std::to_string(n) + " out of range");
  if (!generators && n > kFullClosureCap) {
    throw CapExceeded("full closure is capped at n=" + std::to_string(kFullClosureCap) + " (got n=" +
                      std::to_string(n) + "); supply generators or use the anchored path");
  }
  if (options.within && options.within->n() != n) throw std::invalid_argument("closure: bound code has wrong n");
  std::vector<Code> gens =
      normalized_generators(n, generators ? std::move(*generators) : enumerate_interval_codes(n), options);
  if (n <= kMaskUniverse) {
    MaskRep rep(n, gens);
    return run_closure(rep, n, std::move(gens), options);
  }
  GenericRep rep(gens);
  return run_closure(rep, n, std::move(gens), options);
}

const ClosureResult& full_closure(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ClosureResult>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<ClosureResult>(closure(n));
  return *slot;
}

std::vector<Code> anchored_generators(const Code& code) {
  const int n = code.n();
  const Codeword full = Codeword::full(n);
  if (!code.contains(full)) throw std::invalid_argument("anchored generators need [n] in " + to_string(code));

  std::vector<Codeword> optional_words;
  for (Codeword w : code.words()) {
    if (!w.empty() && w != full) optional_words.push_back(w);
  }
  constexpr std::size_t kMaxOptionalWords = 24;
  if (optional_words.size() > kMaxOptionalWords) {
    throw CapExceeded("anchored generator search over " + std::to_string(optional_words.size()) +
                      " codewords exceeds the cap of " + std::to_string(kMaxOptionalWords));
  }
  // An interval code has at most 2n - 1 nonempty words.
  const int max_extra = 2 * n - 2;
  std::vector<Code> out;
  const std::uint32_t subsets = 1u << optional_words.size();
  for (std::uint32_t s = 0; s < subsets; ++s) {
    if (std::popcount(s) > max_extra) continue;
    std::vector<Codeword> words{Codeword{}, full};
    for (std::size_t k = 0; k < optional_words.size(); ++k) {
      if (s >> k & 1u) words.push_back(optional_words[k]);
    }
    Code candidate(n, std::move(words));
    if (is_interval_code(candidate)) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BdimMode resolve_mode(const Code& code, BdimMode mode) {
  const bool anchored = code.contains(Codeword::full(code.n()));
  if (mode == BdimMode::kAuto) {
    if (anchored && code.n() <= kAnchoredCap) return BdimMode::kAnchored;
    if (code.n() <= kFullClosureCap) return BdimMode::kFull;
    throw CapExceeded("bdim: n=" + std::to_string(code.n()) + " exceeds the full-closure cap of " +
                      std::to_string(kFullClosureCap) + (anchored ? " and the anchored cap of " +
                      std::to_string(kAnchoredCap) : std::string(" and [n] is not a codeword")));
  }
  if (mode == BdimMode::kAnchored) {
    if (!anchored) throw std::invalid_argument("anchored bdim needs [n] as a codeword of " + to_string(code));
    if (code.n() > kAnchoredCap) {
      throw CapExceeded("anchored bdim is capped at n=" + std::to_string(kAnchoredCap));
    }
  }
  if (mode == BdimMode::kFull && code.n() > kFullClosureCap) {
    throw CapExceeded("full closure is capped at n=" + std::to_string(kFullClosureCap) + " (got n=" +
                      std::to_string(code.n()) + ")");
  }
  return mode;
}

BoxDimension answer(const ClosureResult& cl, const Code& code, int max_dim) {
  const int built = static_cast<int>(cl.layers().size());
  if (auto k = cl.dimension_of(code); k && (max_dim <= 0 || *k <= max_dim)) {
    return {BoxDimension::Status::kFound, *k, built};
  }
  if (cl.fixpoint_reached()) return {BoxDimension::Status::kNotBoxConvex, std::nullopt, built};
  return {BoxDimension::Status::kAboveLimit, std::nullopt, built};
}

ClosureResult anchored_closure(const Code& code, int max_dim) {
  ClosureOptions opts;
  opts.max_layers = max_dim;
  opts.within = code;
  return closure(code.n(), anchored_generators(code), opts);
}

}  // namespace

BoxDimension bdim(const Code& code, BdimMode mode, int max_dim) {
  if (resolve_mode(code, mode) == BdimMode::kAnchored) return answer(anchored_closure(code, max_dim), code, max_dim);
  return answer(full_closure(code.n()), code, max_dim);
}

bool is_box_convex_in_dim(const Code& code, int d, BdimMode mode) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  return bdim(code, mode, d).status == BoxDimension::Status::kFound;
}

std::vector<std::pair<Code, Code>> factorizations(const Code& code, std::span<const Code> candidates) {
  std::vector<Code> cands(candidates.begin(), candidates.end());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<std::pair<Code, Code>> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i; j < cands.size(); ++j) {
      if (intersection_product(cands[i], cands[j]) == code) out.emplace_back(cands[i], cands[j]);
    }
  }
  return out;
}

std::optional<std::vector<Code>> box_factors(const Code& code, BdimMode mode) {
  if (resolve_mode(code, mode) == BdimMode::kAnchored) return anchored_closure(code, 0).factors(code);
  return full_closure(code.n()).factors(code);
}

std::optional<Realization> realize_box_code(const Code& code, BdimMode mode) {
  auto factors = box_factors(code, mode);
  if (!factors) return std::nullopt;
  std::vector<Realization> parts;
  for (const Code& f : *factors) {
    auto a = realize_interval_code(f);
    if (!a) throw std::logic_error("closure generator " + to_string(f) + " is not an interval code");
    parts.push_back(a->to_realization());
  }
  Realization r = product_realization(parts);
  if (code_of_realization(r) != code) {
    throw std::logic_error("box realization for " + to_string(code) + " failed oracle verification");
  }
  return r;
}

}  // namespace boxcode
