// boxcode: command-line front end. JSON on stdout by default, aligned text
// with --pretty. Exit 0 on success, 1 when an --expect check fails, 2 on
// usage or validation errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcode/acceptance.hpp"
#include "boxcode/box_dim.hpp"
#include "boxcode/code.hpp"
#include "boxcode/constructions.hpp"
#include "boxcode/geometry.hpp"
#include "boxcode/interval_codes.hpp"
#include "boxcode/json_io.hpp"
#include "boxcode/normalizer.hpp"

using namespace boxcode;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string context(const std::string& path, const std::exception& e) { return path + ": " + e.what(); }

Code load_code(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_code(text);
  } catch (const std::exception& e) {
    throw UsageError(context(path, e));
  }
}

Realization load_realization(const std::string& path) {
  Json j = read_json(path);
  try {
    return realization_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(context(path, e));
  }
}

/// Codewords for monotone-extend: a bare array of index arrays or a code object.
std::vector<Codeword> load_codewords(const std::string& path, int n) {
  Json j = read_json(path);
  if (j.is_object()) {
    Code c = [&] {
      try {
        return code_from_json(j);
      } catch (const std::exception& e) {
        throw UsageError(context(path, e));
      }
    }();
    if (c.n() != n) {
      throw UsageError(path + ": field 'n': universe " + std::to_string(c.n()) + " does not match " + std::to_string(n));
    }
    return {c.words().begin() + 1, c.words().end()};
  }
  try {
    code_from_json(Json{{"n", n}, {"codewords", j}});  // field validation only
    std::vector<Codeword> out;
    for (const auto& w : j) {
      if (!w.empty()) out.push_back(Codeword::from_indices(w.get<std::vector<int>>()));
    }
    return out;
  } catch (const std::exception& e) {
    throw UsageError(context(path, e));
  }
}

bool is_code_json(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("n") && j.contains("codewords"); }
bool is_realization_json(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("dim") && j.contains("boxes"); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(std::ostream& out, const Json& j, int indent);

std::string inline_text(const Json& j) {
  if (is_code_json(j)) return to_string(code_from_json(j));
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : " ") + scalar_text(x);
    return s;
  }
  if (j.is_object() && j.contains("bdim") && j.size() <= 2) {
    std::string s = scalar_text(j["bdim"]);
    for (const auto& [k, v] : j.items()) {
      if (k != "bdim") s += " (" + k + " " + scalar_text(v) + ")";
    }
    return s;
  }
  return j.is_primitive() ? scalar_text(j) : std::string{};
}

void render_realization(std::ostream& out, const Json& j, int indent) {
  const Realization r = realization_from_json(j);
  for (int i = 0; i < r.size(); ++i) {
    out << std::string(indent, ' ') << 'U' << i + 1 << " = ";
    const Box& b = r.box(i);
    if (b.is_empty()) {
      out << "empty\n";
      continue;
    }
    for (int a = 0; a < b.dim(); ++a) {
      out << (a ? " x " : "") << '[' << b.axis(a).lo().str() << ", " << b.axis(a).hi().str() << ']';
    }
    out << '\n';
  }
}

void render(std::ostream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (is_realization_json(j)) return render_realization(out, j, indent);
  if (const std::string s = inline_text(j); !s.empty() || j.is_primitive()) {
    out << pad << s << '\n';
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_object() && !is_code_json(x) && inline_text(x).empty()) {
        render(out, x, indent);
        out << '\n';
      } else {
        render(out, x, indent);
      }
    }
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    const std::string s = inline_text(v);
    if (!s.empty() || v.is_primitive()) {
      out << pad << k << std::string(width - k.size() + 2, ' ') << s << '\n';
    } else {
      out << pad << k << ":\n";
      render(out, v, indent + 2);
    }
  }
}

struct Output {
  bool pretty = false;
  std::optional<bool> expect;

  int emit(const Json& j, std::optional<bool> answer = std::nullopt) const {
    if (pretty) {
      render(std::cout, j, 0);
    } else {
      std::cout << j.dump() << '\n';
    }
    if (expect && answer && *expect != *answer) {
      std::cerr << "boxcode: expected " << (*expect ? "true" : "false") << ", got " << (*answer ? "true" : "false")
                << '\n';
      return 1;
    }
    return 0;
  }
};

Json classify3_json() {
  Json rows = Json::array();
  for (const auto& row : classify_three_index()) {
    Json r = bdim_to_json(row.bdim);
    r.erase("fixpoint_layers");
    rows.push_back(Json{{"code", code_to_json(row.code)}, {"bdim", r["bdim"]}, {"interval_code", row.interval_code}});
  }
  return rows;
}

BdimMode mode_for(bool anchored) { return anchored ? BdimMode::kAnchored : BdimMode::kAuto; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial codes realized by axis-parallel boxes"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--pretty", out.pretty, "Aligned text instead of JSON");
  app.add_option("--expect", out.expect, "Exit 1 unless a yes/no answer equals this value");

  std::string path_a, path_b;
  int n = 0, dim = 0, max_dim = 0, only = 0;
  bool open = false, count_only = false, anchored = false;
  std::string emit_path, golden_path, name;

  auto* code_of = app.add_subcommand("code-of", "Code of a realization (closed boxes unless --open)");
  code_of->add_option("realization", path_a, "Realization JSON ('-' for stdin)")->required();
  code_of->add_flag("--open", open, "Use the interiors of the boxes");

  auto* product = app.add_subcommand("product", "Intersection product of two codes");
  product->add_option("a", path_a, "First code")->required();
  product->add_option("b", path_b, "Second code")->required();

  auto* interval_codes = app.add_subcommand("interval-codes", "Every interval code on [n]");
  interval_codes->add_option("--n", n, "Number of indices")->required();
  interval_codes->add_flag("--count-only", count_only, "Only report the count");

  auto* is_interval = app.add_subcommand("is-interval-code", "Is the code realizable by intervals?");
  is_interval->add_option("code", path_a, "Code JSON or compact text file")->required();

  auto* realize_interval = app.add_subcommand("realize-interval", "Integer interval realization of a code");
  realize_interval->add_option("code", path_a, "Code")->required();

  auto* bdim_cmd = app.add_subcommand("bdim", "Box embedding dimension");
  bdim_cmd->add_option("code", path_a, "Code")->required();
  bdim_cmd->add_option("--max-dim", max_dim, "Stop after this many dimensions");
  bdim_cmd->add_flag("--anchored", anchored, "Use subcodes containing [n] as generators");

  auto* is_box_convex = app.add_subcommand("is-box-convex", "Is the code realizable by boxes in R^d?");
  is_box_convex->add_option("code", path_a, "Code")->required();
  is_box_convex->add_option("--dim", dim, "Dimension d")->required()->check(CLI::PositiveNumber);
  is_box_convex->add_flag("--anchored", anchored, "Use subcodes containing [n] as generators");

  auto* closure_cmd = app.add_subcommand("closure", "Closure of the interval codes on [n] under the product");
  closure_cmd->add_option("--n", n, "Number of indices")->required();
  closure_cmd->add_option("--emit", emit_path, "Write every layer to this JSON file");

  auto* normalize = app.add_subcommand("normalize", "Integer normal form of a realization with a report");
  normalize->add_option("realization", path_a, "Realization JSON")->required();

  auto* sunflower_cmd = app.add_subcommand("sunflower", "Sunflower code F_n with its interval factors");
  sunflower_cmd->add_option("--n", n, "Even number of indices")->required();

  auto* monotone = app.add_subcommand("monotone-extend", "C ∪ D as the product C ⋒ (D ∪ {[n], ∅})");
  monotone->add_option("code", path_a, "Code C")->required();
  monotone->add_option("down", path_b, "Downward-closed codewords D")->required();

  auto* classify3 = app.add_subcommand("classify3", "Max-intersection-complete codes on [3] and their bdim");
  classify3->add_option("--golden", golden_path, "Compare against a stored table");

  auto* named = app.add_subcommand("named-code", "A named code");
  named->add_option("name", name, "One of C1, C2, C3, C4, fig1, nonmono_base")->required();

  auto* factorize = app.add_subcommand("factorize", "Interval factors and box realization of minimal dimension");
  factorize->add_option("code", path_a, "Code")->required();
  factorize->add_flag("--anchored", anchored, "Use subcodes containing [n] as generators");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "boxcode: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*code_of) {
      Realization r = load_realization(path_a);
      return out.emit(code_to_json(open ? code_of_interiors(r) : code_of_realization(r)));
    }
    if (*product) {
      Code a = load_code(path_a), b = load_code(path_b);
      if (a.n() != b.n()) {
        throw UsageError("field 'n': universe mismatch, " + path_a + " has n=" + std::to_string(a.n()) + " and " +
                         path_b + " has n=" + std::to_string(b.n()));
      }
      return out.emit(code_to_json(intersection_product(a, b)));
    }
    if (*interval_codes) {
      const auto& codes = enumerate_interval_codes(n);
      Json j{{"n", n}, {"count", codes.size()}};
      if (!count_only) {
        Json arr = Json::array();
        for (const Code& c : codes) arr.push_back(code_to_json(c));
        j["codes"] = std::move(arr);
      }
      return out.emit(j);
    }
    if (*is_interval) {
      const bool yes = is_interval_code(load_code(path_a));
      return out.emit(Json{{"interval_code", yes}}, yes);
    }
    if (*realize_interval) {
      auto w = realize_interval_code(load_code(path_a));
      return out.emit(w ? realization_to_json(w->to_realization()) : Json(nullptr), w.has_value());
    }
    if (*bdim_cmd) {
      BoxDimension d = bdim(load_code(path_a), mode_for(anchored), max_dim);
      return out.emit(bdim_to_json(d), d.box_convex());
    }
    if (*is_box_convex) {
      const bool yes = is_box_convex_in_dim(load_code(path_a), dim, mode_for(anchored));
      return out.emit(Json{{"dim", dim}, {"box_convex", yes}}, yes);
    }
    if (*closure_cmd) {
      const ClosureResult& cl = full_closure(n);
      Json sizes = Json::array();
      for (const auto& layer : cl.layers()) sizes.push_back(layer.size());
      if (!emit_path.empty()) {
        Json layers = Json::array();
        for (std::size_t k = 0; k < cl.layers().size(); ++k) {
          Json codes = Json::array();
          for (const Code& c : cl.layers()[k]) codes.push_back(code_to_json(c));
          layers.push_back(Json{{"dim", k + 1}, {"count", cl.layers()[k].size()}, {"codes", std::move(codes)}});
        }
        std::ofstream f(emit_path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + emit_path + "'");
        f << Json{{"n", n}, {"fixpoint", cl.fixpoint_reached()}, {"layers", std::move(layers)}}.dump() << '\n';
      }
      return out.emit(Json{{"n", n}, {"fixpoint", cl.fixpoint_reached()}, {"layer_sizes", std::move(sizes)}});
    }
    if (*normalize) {
      NormalizationReport rep = normalize_with_report(load_realization(path_a));
      const bool ok = rep.closed_code_preserved() && rep.interiors_match() && rep.integer_corners_in_range;
      return out.emit(Json{{"normalized", realization_to_json(rep.normalized)},
                           {"input_code", code_to_json(rep.input_code)},
                           {"closed_code", code_to_json(rep.closed_code)},
                           {"interior_code", code_to_json(rep.interior_code)},
                           {"closed_code_preserved", rep.closed_code_preserved()},
                           {"interiors_match", rep.interiors_match()},
                           {"integer_corners_in_range", rep.integer_corners_in_range}},
                      ok);
    }
    if (*sunflower_cmd) {
      Sunflower s = sunflower(n);
      Json factors = Json::array();
      for (const Code& f : s.factors) factors.push_back(code_to_json(f));
      return out.emit(Json{{"code", code_to_json(s.code)}, {"factors", std::move(factors)}});
    }
    if (*monotone) {
      Code c = load_code(path_a);
      auto [extended, e] = weak_monotone_extension(c, load_codewords(path_b, c.n()));
      return out.emit(Json{{"extended", code_to_json(extended)}, {"E", code_to_json(e)}});
    }
    if (*classify3) {
      Json table = classify3_json();
      if (golden_path.empty()) return out.emit(table);
      Json golden = read_json(golden_path);
      const bool same = golden == table;
      if (!same) {
        std::size_t k = 0;
        while (k < table.size() && k < golden.size() && table[k] == golden[k]) ++k;
        std::cerr << "boxcode: classification differs from '" << golden_path << "' at row " << k << '\n';
      }
      Json j{{"rows", table.size()}, {"matches_golden", same}};
      const int status = out.emit(j, same);
      return same ? status : 1;
    }
    if (*named) {
      try {
        return out.emit(code_to_json(named_code(name)));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (*factorize) {
      Code c = load_code(path_a);
      auto factors = box_factors(c, mode_for(anchored));
      if (!factors) return out.emit(Json{{"bdim", "NotBoxConvex"}, {"factors", nullptr}}, false);
      Json fs = Json::array();
      for (const Code& f : *factors) fs.push_back(code_to_json(f));
      auto r = realize_box_code(c, mode_for(anchored));
      return out.emit(Json{{"bdim", factors->size()}, {"factors", std::move(fs)}, {"realization", realization_to_json(*r)}},
                      true);
    }
    if (*selftest) {
      auto results = run_acceptance(std::cout, only);
      const bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
      std::cout << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "boxcode: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "boxcode: cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "boxcode: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "boxcode: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
