#pragma once

#include <string_view>

#include <json.hpp>

#include "boxcode/box_dim.hpp"
#include "boxcode/code.hpp"
#include "boxcode/geometry.hpp"
#include "boxcode/interval_codes.hpp"

namespace boxcode {

using Json = nlohmann::ordered_json;

/// {"n": 4, "codewords": [[], [1], ..., [1,2,3]]}, words in display order.
Json code_to_json(const Code& code);
/// Throws std::invalid_argument naming the offending field.
Code code_from_json(const Json& j);
/// JSON code object, or the compact text form when the input is not JSON.
Code parse_code(std::string_view text);

Json rational_to_json(const Rational& r);
/// Accepts "p/q" strings, integer strings and JSON integers.
Rational rational_from_json(const Json& j);

/// {"dim": d, "boxes": [{"intervals": [["0","1"], ...]}, "empty", ...]}
Json realization_to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json bdim_to_json(const BoxDimension& d);

}  // namespace boxcode
