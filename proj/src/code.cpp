#include "boxcode/code.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace boxcode {

namespace {

void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw std::invalid_argument("universe size n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxUniverse) + "]");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr std::string_view kEmptySymbol = "\xE2\x88\x85";  // ∅

}  // namespace

Codeword Codeword::from_indices(std::span<const int> indices) {
  std::uint16_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxUniverse) {
      throw std::invalid_argument("codeword index " + std::to_string(i) + " outside [1, " +
                                  std::to_string(kMaxUniverse) + "]");
    }
    bits |= static_cast<std::uint16_t>(1u << (i - 1));
  }
  return Codeword(bits);
}

int Codeword::size() const { return std::popcount(bits_); }

int Codeword::max_index() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(static_cast<std::uint32_t>(bits_)); }

std::vector<int> Codeword::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxUniverse; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string Codeword::str() const {
  if (empty()) return std::string(kEmptySymbol);
  auto idx = indices();
  std::string out;
  if (idx.back() <= 9) {
    for (int i : idx) out += static_cast<char>('0' + i);
    return out;
  }
  out = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(idx[k]);
  }
  return out + "}";
}

bool display_less(Codeword a, Codeword b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

Code::Code(int n, std::vector<Codeword> words, EmptyPolicy policy) : n_(n), words_(std::move(words)) {
  check_universe(n);
  const Codeword full = Codeword::full(n);
  for (Codeword w : words_) {
    if (!w.subset_of(full)) {
      throw std::invalid_argument("codeword " + w.str() + " uses an index above n=" + std::to_string(n));
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.empty() || !words_.front().empty()) {
    if (policy == EmptyPolicy::kStrict) throw std::invalid_argument("code is missing the empty codeword");
    words_.insert(words_.begin(), Codeword{});
    inserted_empty_ = true;
  }
}

Code Code::identity(int n) { return Code(n, {Codeword{}, Codeword::full(n)}); }

bool Code::contains(Codeword w) const { return std::binary_search(words_.begin(), words_.end(), w); }

bool Code::subset_of(const Code& other) const {
  return n_ == other.n_ && std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

std::vector<Codeword> Code::display_words() const {
  std::vector<Codeword> out = words_;
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

std::strong_ordering operator<=>(const Code& a, const Code& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                b.words_.end());
}

std::size_t Code::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (Codeword w : words_) {
    h ^= w.bits();
    h *= 1099511628211ull;
  }
  return h;
}

Code parse_code_text(std::string_view text, int n) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{' && body.back() == '}') {
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<Codeword> words;
  int max_index = 0;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (token.empty()) throw std::invalid_argument("empty token in code text");
    if (token == kEmptySymbol || token == "0" || token == "{}" || token == "[]") {
      words.emplace_back();
      continue;
    }
    std::vector<int> idx;
    for (char ch : token) {
      if (ch < '1' || ch > '9') {
        throw std::invalid_argument("invalid codeword '" + std::string(token) + "' (compact form uses digits 1-9)");
      }
      idx.push_back(ch - '0');
      max_index = std::max(max_index, ch - '0');
    }
    words.push_back(Codeword::from_indices(idx));
  }
  if (n == 0) n = std::max(max_index, 1);
  return Code(n, std::move(words));
}

std::string to_string(const Code& code) {
  std::string out = "{";
  bool first = true;
  for (auto w : code.display_words()) {
    if (!first) out += ", ";
    first = false;
    out += w.str();
  }
  return out + "}";
}

Code intersection_product(const Code& a, const Code& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("intersection product of codes with different universe sizes (n=" +
                                std::to_string(a.n()) + " and n=" + std::to_string(b.n()) + ")");
  }
  std::vector<Codeword> words;
  words.reserve(a.size() * b.size());
  for (Codeword x : a.words()) {
    for (Codeword y : b.words()) words.push_back(x & y);
  }
  return Code(a.n(), std::move(words));
}

std::vector<Codeword> maximal_codewords(const Code& code) {
  std::vector<Codeword> out;
  auto words = code.words();
  for (Codeword w : words) {
    bool dominated = std::any_of(words.begin(), words.end(), [w](Codeword v) { return v != w && w.subset_of(v); });
    if (!dominated) out.push_back(w);
  }
  return out;
}

Code simplicial_complex(const Code& code) {
  std::vector<Codeword> words;
  for (Codeword m : maximal_codewords(code)) {
    // Enumerate all submasks of m.
    std::uint16_t bits = m.bits();
    for (std::uint16_t s = bits;; s = static_cast<std::uint16_t>((s - 1) & bits)) {
      words.emplace_back(s);
      if (s == 0) break;
    }
  }
  return Code(code.n(), std::move(words));
}

bool is_downward_closed_in(std::span<const Codeword> d, std::span<const Codeword> ambient) {
  auto in = [](std::span<const Codeword> set, Codeword w) { return std::find(set.begin(), set.end(), w) != set.end(); };
  for (Codeword w : d) {
    if (!in(ambient, w)) throw std::invalid_argument("codeword " + w.str() + " is not in the ambient set");
  }
  for (Codeword w : d) {
    for (Codeword v : ambient) {
      if (v.subset_of(w) && !in(d, v)) return false;
    }
  }
  return true;
}

bool is_max_intersection_complete(const Code& code) {
  auto maxima = maximal_codewords(code);
  // Intersections of all nonempty subfamilies, built incrementally.
  std::vector<Codeword> seen;
  for (Codeword m : maxima) {
    std::vector<Codeword> next = seen;
    next.push_back(m);
    for (Codeword s : seen) next.push_back(s & m);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    seen = std::move(next);
  }
  return std::all_of(seen.begin(), seen.end(), [&](Codeword w) { return code.contains(w); });
}

Codeword permute(Codeword w, std::span<const int> perm) {
  std::uint16_t bits = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (w.contains(static_cast<int>(i) + 1)) bits |= static_cast<std::uint16_t>(1u << (perm[i] - 1));
  }
  return Codeword(bits);
}

Code permute(const Code& code, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != code.n()) throw std::invalid_argument("permutation length differs from n");
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < code.n(); ++i) {
    if (check[i] != i + 1) throw std::invalid_argument("not a permutation of [n]");
  }
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (Codeword w : code.words()) words.push_back(permute(w, perm));
  return Code(code.n(), std::move(words));
}

CanonicalForm canonical_form(const Code& code) {
  constexpr int kCanonicalCap = 9;
  if (code.n() > kCanonicalCap) {
    throw CapExceeded("canonical_form enumerates n! relabelings; n=" + std::to_string(code.n()) +
                      " exceeds the cap of " + std::to_string(kCanonicalCap));
  }
  std::vector<int> perm(code.n());
  std::iota(perm.begin(), perm.end(), 1);
  CanonicalForm best{code, perm};
  std::vector<Codeword> buf(code.size());
  do {
    auto words = code.words();
    for (std::size_t k = 0; k < words.size(); ++k) buf[k] = permute(words[k], perm);
    std::sort(buf.begin(), buf.end());
    auto cur = best.code.words();
    if (std::lexicographical_compare(buf.begin(), buf.end(), cur.begin(), cur.end())) {
      best = CanonicalForm{Code(code.n(), buf), perm};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace boxcode
