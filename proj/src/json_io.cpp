#include "boxcode/json_io.hpp"

#include <stdexcept>
#include <string>

namespace boxcode {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw std::invalid_argument("field '" + field + "': " + why);
}

}  // namespace

Json code_to_json(const Code& code) {
  Json words = Json::array();
  for (Codeword w : code.display_words()) words.push_back(w.indices());
  return Json{{"n", code.n()}, {"codewords", std::move(words)}};
}

Code code_from_json(const Json& j) {
  if (!j.is_object()) bad("<root>", "expected a code object");
  if (!j.contains("n") || !j["n"].is_number_integer()) bad("n", "missing or not an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxUniverse) bad("n", "must be in [1, " + std::to_string(kMaxUniverse) + "], got " + std::to_string(n));
  if (!j.contains("codewords") || !j["codewords"].is_array()) bad("codewords", "missing or not an array");
  std::vector<Codeword> words;
  for (std::size_t k = 0; k < j["codewords"].size(); ++k) {
    const auto& w = j["codewords"][k];
    const std::string field = "codewords[" + std::to_string(k) + "]";
    if (!w.is_array()) bad(field, "expected an array of indices");
    std::vector<int> idx;
    for (const auto& i : w) {
      if (!i.is_number_integer()) bad(field, "indices must be integers");
      const int v = i.get<int>();
      if (v < 1 || v > n) bad(field, "index " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      idx.push_back(v);
    }
    words.push_back(Codeword::from_indices(idx));
  }
  return Code(n, std::move(words));
}

Code parse_code(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  // Bare numbers such as "12" are compact codes, not JSON codes.
  if (!j.is_discarded() && !j.is_number()) return code_from_json(j);
  // Quoted keys only occur in JSON; report the parse error instead of a text error.
  if (text.find('"') != std::string_view::npos) {
    try {
      Json strict = Json::parse(text.begin(), text.end());
      return code_from_json(strict);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
  }
  return parse_code_text(text);
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

Json realization_to_json(const Realization& r) {
  Json boxes = Json::array();
  for (const Box& b : r.boxes()) {
    if (b.is_empty()) {
      boxes.push_back("empty");
      continue;
    }
    Json ivs = Json::array();
    for (const Interval& iv : b.intervals()) ivs.push_back(Json::array({rational_to_json(iv.lo()), rational_to_json(iv.hi())}));
    boxes.push_back(Json{{"intervals", std::move(ivs)}});
  }
  return Json{{"dim", r.dim()}, {"boxes", std::move(boxes)}};
}

Realization realization_from_json(const Json& j) {
  if (!j.is_object()) bad("<root>", "expected a realization object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) bad("dim", "missing or not an integer");
  const int dim = j["dim"].get<int>();
  if (!j.contains("boxes") || !j["boxes"].is_array()) bad("boxes", "missing or not an array");
  std::vector<Box> boxes;
  for (std::size_t k = 0; k < j["boxes"].size(); ++k) {
    const auto& b = j["boxes"][k];
    const std::string field = "boxes[" + std::to_string(k) + "]";
    if (b.is_string() && b.get<std::string>() == "empty") {
      boxes.push_back(Box::empty());
      continue;
    }
    if (!b.is_object() || !b.contains("intervals") || !b["intervals"].is_array()) {
      bad(field, "expected \"empty\" or {\"intervals\": [...]}");
    }
    std::vector<Interval> ivs;
    for (std::size_t a = 0; a < b["intervals"].size(); ++a) {
      const auto& iv = b["intervals"][a];
      const std::string sub = field + ".intervals[" + std::to_string(a) + "]";
      if (iv.is_string() && iv.get<std::string>() == "empty") {
        ivs.push_back(Interval::empty());
        continue;
      }
      if (!iv.is_array() || iv.size() != 2) bad(sub, "expected [lo, hi]");
      try {
        ivs.emplace_back(rational_from_json(iv[0]), rational_from_json(iv[1]));
      } catch (const std::exception& e) {
        bad(sub, e.what());
      }
    }
    if (static_cast<int>(ivs.size()) != dim) {
      bad(field, "has " + std::to_string(ivs.size()) + " intervals, expected dim=" + std::to_string(dim));
    }
    boxes.emplace_back(std::move(ivs));
  }
  try {
    return Realization(dim, std::move(boxes));
  } catch (const std::invalid_argument& e) {
    bad("boxes", e.what());
  }
}

Json bdim_to_json(const BoxDimension& d) {
  switch (d.status) {
    case BoxDimension::Status::kFound:
      return Json{{"bdim", *d.dim}};
    case BoxDimension::Status::kNotBoxConvex:
      return Json{{"bdim", "NotBoxConvex"}, {"fixpoint_layers", d.layers_explored}};
    case BoxDimension::Status::kAboveLimit:
      return Json{{"bdim", nullptr}, {"above_max_dim", d.layers_explored}};
  }
  return {};
}

}  // namespace boxcode
