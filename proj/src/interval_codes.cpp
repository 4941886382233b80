#include "boxcode/interval_codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "boxcode/parallel.hpp"

namespace boxcode {

Realization EndpointAssignment::to_realization() const {
  std::vector<Interval> ivs;
  ivs.reserve(pairs.size());
  for (const auto& p : pairs) ivs.push_back(p ? Interval(p->first, p->second) : Interval::empty());
  return Realization::from_intervals(std::move(ivs));
}

int AtomWord::length() const {
  if (components.empty()) return 1;
  int atoms = 0;
  for (const auto& c : components) atoms += static_cast<int>(c.size());
  return atoms + static_cast<int>(components.size()) + 1;
}

bool AtomWord::valid_for(const Code& code) const {
  std::vector<Codeword> line{Codeword{}};
  for (const auto& comp : components) {
    if (comp.empty()) return false;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      if (comp[k].empty() || !code.contains(comp[k])) return false;
      if (k > 0 && (comp[k] == comp[k - 1] || !comp[k].comparable(comp[k - 1]))) return false;
      line.push_back(comp[k]);
    }
    line.emplace_back();
  }
  if (length() > 2 * code.n() + 1) return false;
  for (int i = 1; i <= code.n(); ++i) {
    auto first = std::find_if(line.begin(), line.end(), [i](Codeword w) { return w.contains(i); });
    auto last = std::find_if(line.rbegin(), line.rend(), [i](Codeword w) { return w.contains(i); });
    if (first == line.end()) continue;
    if (!std::all_of(first, last.base(), [i](Codeword w) { return w.contains(i); })) return false;
  }
  for (Codeword w : code.words()) {
    if (!w.empty() && std::find(line.begin(), line.end(), w) == line.end()) return false;
  }
  return true;
}

namespace {

struct EnumerationCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const std::vector<Code>>> by_n;
};

EnumerationCache& enumeration_cache() {
  static EnumerationCache cache;
  return cache;
}

std::vector<Code> enumerate_uncached(int n) {
  // Choices per index: empty, or [l, r] with 1 <= l <= r <= 2n.
  std::vector<std::optional<std::pair<int, int>>> choices{std::nullopt};
  for (int l = 1; l <= 2 * n; ++l) {
    for (int r = l; r <= 2 * n; ++r) choices.emplace_back(std::pair{l, r});
  }
  const std::size_t k = choices.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= k;

  std::vector<std::unordered_set<Code>> found(worker_count());
  parallel_chunks(total, [&](unsigned worker, std::size_t begin, std::size_t end) {
    auto& local = found[worker];
    EndpointAssignment a;
    a.pairs.resize(n);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      for (int i = 0; i < n; ++i) {
        a.pairs[i] = choices[rest % k];
        rest /= k;
      }
      local.insert(code_of_realization(a.to_realization()));
    }
  });

  std::unordered_set<Code> all;
  for (auto& s : found) all.insert(s.begin(), s.end());
  std::vector<Code> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

class AtomWordSearch {
 public:
  explicit AtomWordSearch(const Code& code) : n_(code.n()) {
    for (Codeword w : code.words()) {
      if (!w.empty()) targets_.push_back(w);
    }
  }

  std::optional<std::vector<Codeword>> run() {
    // Each transition between nested atoms moves at least one index from
    // "not yet entered" to "active" or from "active" to "closed", so a line
    // has at most 2n transitions. This also keeps `used` within 32 bits.
    if (targets_.size() > 2 * static_cast<std::size_t>(n_)) return std::nullopt;
    path_.clear();
    if (dfs(Codeword{}, 0, 0)) return path_;
    return std::nullopt;
  }

 private:
  using State = std::uint64_t;

  static State key(Codeword current, std::uint16_t closed, std::uint32_t used) {
    return (static_cast<State>(used) << 32) | (static_cast<State>(closed) << 16) | current.bits();
  }

  bool dfs(Codeword current, std::uint16_t closed, std::uint32_t used) {
    const std::uint32_t all = targets_.size() == 32 ? ~0u : ((1u << targets_.size()) - 1u);
    if (current.empty() && used == all) return true;

    const int unused = std::popcount(all & ~used);
    const std::uint16_t universe = Codeword::full(n_).bits();
    const int unentered = std::popcount(static_cast<std::uint16_t>(universe & ~closed & ~current.bits()));
    if (unused > 2 * unentered + current.size()) return false;
    if (!failed_.insert(key(current, closed, used)).second) return false;

    auto try_next = [&](Codeword next, std::uint32_t next_used) {
      if (next == current || !next.comparable(current) || (next.bits() & closed)) return false;
      const auto next_closed = static_cast<std::uint16_t>(closed | (current.bits() & ~next.bits()));
      path_.push_back(next);
      if (dfs(next, next_closed, next_used)) return true;
      path_.pop_back();
      return false;
    };

    for (std::size_t t = 0; t < targets_.size(); ++t) {
      if (try_next(targets_[t], used | (1u << t))) return true;
    }
    return !current.empty() && try_next(Codeword{}, used);
  }

  int n_;
  std::vector<Codeword> targets_;
  std::vector<Codeword> path_;
  std::unordered_set<State> failed_;
};

}  // namespace

const std::vector<Code>& enumerate_interval_codes(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_interval_codes: n must be positive");
  if (n > cap) {
    throw CapExceeded("interval-code enumeration is capped at n=" + std::to_string(cap) + " (got n=" +
                      std::to_string(n) + "); use is_interval_code for larger codes");
  }
  auto& cache = enumeration_cache();
  std::lock_guard lock(cache.mutex);
  auto& slot = cache.by_n[n];
  if (!slot) slot = std::make_shared<const std::vector<Code>>(enumerate_uncached(n));
  return *slot;
}

bool is_interval_code_by_enumeration(const Code& code) {
  const auto& codes = enumerate_interval_codes(code.n());
  return std::binary_search(codes.begin(), codes.end(), code);
}

std::optional<AtomWord> find_atom_word(const Code& code) {
  auto line = AtomWordSearch(code).run();
  if (!line) return std::nullopt;
  AtomWord word;
  std::vector<Codeword> comp;
  for (Codeword w : *line) {
    if (w.empty()) {
      word.components.push_back(std::move(comp));
      comp.clear();
    } else {
      comp.push_back(w);
    }
  }
  return word;
}

bool is_interval_code(const Code& code) { return find_atom_word(code).has_value(); }

EndpointAssignment assignment_from_atom_word(int n, const AtomWord& word) {
  // Full line q_0 = ∅, q_1 .. q_L, q_{L+1} = ∅; transition t sits at x = t.
  std::vector<Codeword> line{Codeword{}};
  for (const auto& comp : word.components) {
    line.insert(line.end(), comp.begin(), comp.end());
    line.emplace_back();
  }
  EndpointAssignment a;
  a.pairs.resize(n);
  for (int i = 1; i <= n; ++i) {
    int first = -1, last = -1;
    for (int t = 0; t < static_cast<int>(line.size()); ++t) {
      if (line[t].contains(i)) {
        if (first < 0) first = t;
        last = t;
      }
    }
    if (first >= 0) a.pairs[i - 1] = std::pair{first, last + 1};
  }
  return a;
}

std::optional<EndpointAssignment> realize_interval_code(const Code& code) {
  auto word = find_atom_word(code);
  if (!word) return std::nullopt;
  EndpointAssignment a = assignment_from_atom_word(code.n(), *word);
  if (code_of_realization(a.to_realization()) != code) {
    throw std::logic_error("interval witness for " + to_string(code) + " failed oracle verification");
  }
  return a;
}

}  // namespace boxcode
