#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "boxcode/json_io.hpp"
#include "boxcode/sampling.hpp"

using namespace boxcode;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::filesystem::path scratch() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("boxcode_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  auto p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cli(const std::string& args) {
  const auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + BOXCODE_CLI_PATH + "\" " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("code JSON round trip and display order") {
  Code c = parse_code_text("123, 24, 12, 1, 0", 4);
  Json j = code_to_json(c);
  CHECK(j.dump() == R"({"n":4,"codewords":[[],[1],[1,2],[2,4],[1,2,3]]})");
  CHECK(code_from_json(j) == c);
  CHECK(parse_code(j.dump()) == c);
  CHECK(parse_code("123, 24, 12, 1, 0") == c);
  CHECK(parse_code("12") == parse_code_text("12", 2));
  CHECK(parse_code("1") == parse_code_text("1", 1));
}

TEST_CASE("code JSON errors name the field") {
  auto message = [](const std::string& text) {
    try {
      parse_code(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"codewords":[]})").find("'n'") != std::string::npos);
  CHECK(message(R"({"n":3})").find("'codewords'") != std::string::npos);
  CHECK(message(R"({"n":3,"codewords":[[1],[4]]})").find("codewords[1]") != std::string::npos);
  CHECK(message(R"({"n":3,"codewords":[[1],"x"]})").find("codewords[1]") != std::string::npos);
  CHECK(message(R"({"n":0,"codewords":[]})").find("'n'") != std::string::npos);
  CHECK(message(R"({"n":3,"codewords":[)").find("malformed JSON") != std::string::npos);
}

TEST_CASE("rationals and realizations") {
  CHECK(rational_to_json(Rational(3, 4)) == Json("3/4"));
  CHECK(rational_to_json(Rational(2)) == Json("2"));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK(rational_from_json(Json("-7/14")) == Rational(-1, 2));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), std::invalid_argument);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    Realization r = random_box_realization(rng, 1 + t % 5, 1 + t % 3);
    CHECK(realization_from_json(realization_to_json(r)) == r);
  }
  Json bad = Json::parse(R"({"dim":2,"boxes":[{"intervals":[["0","1"]]}]})");
  try {
    realization_from_json(bad);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("boxes[0]") != std::string::npos);
  }
  Json reversed = Json::parse(R"({"dim":1,"boxes":[{"intervals":[["2","1"]]}]})");
  CHECK_THROWS_WITH_AS(realization_from_json(reversed), doctest::Contains("boxes[0].intervals[0]"),
                       std::invalid_argument);
}

TEST_CASE("bdim JSON") {
  CHECK(bdim_to_json({BoxDimension::Status::kFound, 2, 2}).dump() == R"({"bdim":2})");
  CHECK(bdim_to_json({BoxDimension::Status::kNotBoxConvex, std::nullopt, 3}).dump() ==
        R"({"bdim":"NotBoxConvex","fixpoint_layers":3})");
  CHECK(bdim_to_json({BoxDimension::Status::kAboveLimit, std::nullopt, 1}).dump() ==
        R"({"bdim":null,"above_max_dim":1})");
}

TEST_CASE("cli: product of the five-box factor codes") {
  const std::string a = write("a.json", R"({"n":5,"codewords":[[1,2,4],[1,3,5],[1],[]]})");
  const std::string b = write("b.txt", "123, 145, 1, ∅");
  Run r = cli("product " + a + " " + b);
  CHECK(r.status == 0);
  CHECK(r.out == "{\"n\":5,\"codewords\":[[],[1],[1,2],[1,3],[1,4],[1,5]]}\n");
  Run pretty = cli("--pretty product " + a + " " + b);
  CHECK(pretty.out == "{∅, 1, 12, 13, 14, 15}\n");
}

TEST_CASE("cli: bdim and yes/no answers with --expect") {
  const std::string f4 = write("f4.json", R"({"n":4,"codewords":[[1,2,3,4],[1],[2],[3],[4],[]]})");
  Run r = cli("bdim " + f4);
  CHECK(r.status == 0);
  CHECK(json_of(r) == Json::parse(R"({"bdim":2})"));
  CHECK(cli("bdim " + f4 + " --max-dim 1").out == "{\"bdim\":null,\"above_max_dim\":1}\n");
  CHECK(cli("is-box-convex " + f4 + " --dim 1 --expect false").status == 0);
  CHECK(cli("is-box-convex " + f4 + " --dim 1 --expect true").status == 1);
  CHECK(cli("is-box-convex " + f4 + " --dim 2 --expect true").status == 0);
  CHECK(cli("is-interval-code " + f4).out == "{\"interval_code\":false}\n");
  CHECK(cli("is-interval-code " + f4 + " --expect true").status == 1);

  const std::string c4 = write("c4.txt", "1234, 12, 13, 14, 0");
  Run nb = cli("bdim " + c4 + " --anchored");
  CHECK(json_of(nb)["bdim"] == "NotBoxConvex");
  CHECK(cli("bdim " + c4 + " --expect false").status == 0);
}

TEST_CASE("cli: interval codes and realizations") {
  Run r = cli("interval-codes --n 3 --count-only");
  CHECK(r.out == "{\"n\":3,\"count\":93}\n");
  Json all = json_of(cli("interval-codes --n 2"));
  CHECK(all["codes"].size() == 8);

  const std::string c = write("ex2.txt", "123, 24, 12, 23, 1, 2, 4, 0");
  Run w = cli("realize-interval " + c);
  REQUIRE(w.status == 0);
  const std::string real = write("ex2_real.json", w.out);
  CHECK(json_of(cli("code-of " + real)) == code_to_json(parse_code_text("123, 24, 12, 23, 1, 2, 4, 0", 4)));
  CHECK(cli("realize-interval " + write("c3.txt", "12, 13, 23, 1, 2, 3")).out == "null\n");
}

TEST_CASE("cli: code-of with open boxes and normalization report") {
  const std::string touching = write("touch.json", R"({"dim":1,"boxes":[{"intervals":[["0","1"]]},{"intervals":[[1,2]]}]})");
  CHECK(json_of(cli("code-of " + touching)) == code_to_json(parse_code_text("1, 12, 2", 2)));
  CHECK(json_of(cli("code-of --open " + touching)) == code_to_json(parse_code_text("1, 2", 2)));
  Json rep = json_of(cli("normalize " + touching));
  CHECK(rep["normalized"] == Json::parse(R"({"dim":1,"boxes":[{"intervals":[["1","3"]]},{"intervals":[["2","4"]]}]})"));
  CHECK(rep["closed_code_preserved"] == true);
  CHECK(rep["interiors_match"] == true);
  CHECK(rep["integer_corners_in_range"] == true);
  CHECK(cli("normalize " + touching + " --expect true").status == 0);
}

TEST_CASE("cli: constructions") {
  Json s = json_of(cli("sunflower --n 4"));
  CHECK(s["code"] == code_to_json(parse_code_text("1234, 1, 2, 3, 4", 4)));
  CHECK(s["factors"].size() == 2);
  CHECK(json_of(cli("named-code C1")) == code_to_json(parse_code_text("123, 12, 13, 23", 3)));

  const std::string c = write("c123.txt", "123, 0");
  const std::string d = write("down.json", "[[1,2],[1],[2]]");
  Json ext = json_of(cli("monotone-extend " + c + " " + d));
  CHECK(ext["extended"] == code_to_json(parse_code_text("123, 12, 1, 2", 3)));
  CHECK(ext["E"] == code_to_json(parse_code_text("123, 12, 1, 2", 3)));
  Run bad = cli("monotone-extend " + c + " " + write("down_bad.json", "[[1,2]]"));
  CHECK(bad.status == 2);

  Json f = json_of(cli("factorize " + write("f4b.txt", "1234, 1, 2, 3, 4")));
  CHECK(f["bdim"] == 2);
  CHECK(f["factors"].size() == 2);
  CHECK(f["realization"]["dim"] == 2);
}

TEST_CASE("cli: closure layers") {
  const std::string emit = (scratch() / "layers.json").string();
  Run r = cli("closure --n 3 --emit " + emit);
  CHECK(r.out == "{\"n\":3,\"fixpoint\":true,\"layer_sizes\":[93,104,104]}\n");
  Json layers = Json::parse(slurp(emit));
  CHECK(layers["layers"].size() == 3);
  CHECK(layers["layers"][1]["codes"].size() == 104);
}

TEST_CASE("cli: classification golden file") {
  const std::string golden = BOXCODE_TEST_DATA "/classify3_golden.json";
  Run r = cli("classify3 --golden " + golden);
  CHECK(r.status == 0);
  CHECK(json_of(r)["matches_golden"] == true);
  Run plain = cli("classify3");
  CHECK(Json::parse(plain.out) == Json::parse(slurp(golden)));
  CHECK(cli("classify3 --golden " + write("wrong.json", "[]")).status == 1);
}

TEST_CASE("cli: output is byte-stable") {
  const std::string f = write("stable.txt", "123, 24, 12, 13, 23, 1, 2, 3, 4");
  for (const std::string& args : std::vector<std::string>{"bdim " + f, "factorize " + f, "classify3", "interval-codes --n 3"}) {
    CHECK(cli(args).out == cli(args).out);
  }
}

TEST_CASE("cli: validation errors exit 2 with one line") {
  const std::string bad_index = write("bad_index.json", R"({"n":3,"codewords":[[1,4]]})");
  Run r = cli("bdim " + bad_index);
  CHECK(r.status == 2);
  CHECK(lines(r.err) == 1);
  CHECK(r.err.find("codewords[0]") != std::string::npos);

  Run malformed = cli("bdim " + write("malformed.json", R"({"n":3,)"));
  CHECK(malformed.status == 2);
  CHECK(malformed.err.find("malformed JSON") != std::string::npos);

  Run mismatch = cli("product " + write("m1.txt", "12") + " " + write("m2.txt", "123"));
  CHECK(mismatch.status == 2);
  CHECK(mismatch.err.find("'n'") != std::string::npos);

  Run cap = cli("interval-codes --n 5");
  CHECK(cap.status == 2);
  CHECK(cap.err.find("cap") != std::string::npos);

  CHECK(cli("").status == 2);
  CHECK(cli("no-such-command").status == 2);
  CHECK(cli("bdim").status == 2);
  CHECK(cli("bdim " + (scratch() / "missing.json").string()).status == 2);
  CHECK(cli("named-code C9").status == 2);
}

TEST_CASE("cli: selftest runs a single criterion") {
  Run r = cli("selftest --only 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("[PASS] 2.") != std::string::npos);
}
