#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "builders.hpp"
#include "random.hpp"
#include "sdcalc_cli/app.hpp"
#include "sdcalc_cli/diagram_io.hpp"
#include "sdcalc_cli/reports.hpp"

using namespace sdcalc;
using namespace sdcalc::cli;

namespace {

const std::string kData = SDCALC_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run sdcalc_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

void check_round_trip(const Diagram& d) {
  const std::string sd = emit_sd(d);
  const std::string js = emit_json(d);
  CHECK(sniff(sd) == FileFormat::Sd);
  CHECK(sniff(js) == FileFormat::Json);
  CHECK(parse(sd) == d);
  CHECK(parse(js) == d);
  CHECK(emit_sd(parse(sd)) == sd);
  CHECK(emit_json(parse(js)) == js);
  CHECK(emit_sd(parse(js)) == sd);
}

}  // namespace

TEST_CASE("sd and JSON parsing examples") {
  const Diagram ab = parse("genus 1\ncurve 1 0\ncurve 0 1\nclosed true");
  CHECK(ab == build::diagram({{1, 0}, {0, 1}}));

  const Diagram three = parse(R"({"genus":1,"curves":[[1,0],[1,-1],[0,1]],"closed":true})");
  CHECK(three == build::diagram({{1, 0}, {-1, 1}, {0, -1}}));
  CHECK(three == parse("genus 1\ncurve 1 0\ncurve 1 -1\ncurve 0 1\nclosed true\n"));

  const Diagram commented = parse("# comment\n\n  genus 1   # trailing\ncurve +1 0\r\ncurve 0 1\nclosed true\n");
  CHECK(commented == ab);
  CHECK_FALSE(parse("genus 1\ncurve 1 0\ncurve 0 1\n").closed());

  try {
    parse("genus 1\ncurve 2 4\n");
    FAIL("not primitive accepted");
  } catch (const CircuitError& e) {
    CHECK(std::string(e.what()) == "curve 1: not primitive");
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_WITH_AS(parse("genus 1\ncurve 1 0\ncurve 1 0\n"), doctest::Contains("curve 1: not dual"), CircuitError);
  CHECK_THROWS_WITH_AS(parse(R"({"genus":1,"curves":[[1,0],[0,1],[1,2]],"closed":true})"),
                       doctest::Contains("curve 3: closing pair not dual"), CircuitError);
}

TEST_CASE("syntax errors are located") {
  auto where = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_file(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(where("genus 1\ncurve 1 x\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(where("genus 1\n  bogus 1\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(where("curve 1 0\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(where("genus 1\ncurve 1 0 0\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(where("genus 0\ncurve 1 0\n") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(where("genus 1\ncurve 1 0\nclosed maybe\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(where("genus 1\ncurve 1 0\nswitch 1 0 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(where("genus 1\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(where("{\"genus\": 1,\n \"curves\": [[1, 0],}") == std::pair<std::size_t, std::size_t>{2, 20});

  CHECK_THROWS_WITH_AS(parse_file(R"({"genus":1,"curves":[[1,0.5]]})"), "curves[0][1]: expected an integer",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_file(R"({"genus":1,"curves":[[1,0]],"extra":1})"), "unknown key 'extra'", ParseError);
  CHECK_THROWS_WITH_AS(parse_file(R"({"genus":2,"curves":[[1,0]]})"), "curve 1: expected 4 coefficients, got 2",
                       ParseError);
  CHECK_THROWS_AS(parse(R"({"genus":1,"curves":[[1,0],[0,1]],"closed":true,"switch":[[1,1],[1,1]]})"),
                  PreconditionError);
}

TEST_CASE("file failures list every axiom") {
  const DiagramFile f = parse_file("genus 1\ncurve 2 4\ncurve 1 0\ncurve 3 3\nclosed true\n");
  const std::vector<ValidationFailure> fs = file_failures(f);
  REQUIRE(fs.size() >= 2);
  CHECK(fs[0].index == 1);
  CHECK(fs[0].reason == "not primitive");
  for (const ValidationFailure& v : fs) CHECK(v.reason.rfind("orientation", 0) != 0);

  // orientation flips alone are not failures
  CHECK(file_failures(parse_file("genus 1\ncurve 1 0\ncurve 1 -1\ncurve 0 1\nclosed true\n")).empty());
}

TEST_CASE("round trip on generated and random diagrams") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) check_round_trip(generate(seed, 1 + seed % 30).diagram);

  rnd::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const int g = static_cast<int>(rnd::uniform(rng, 1, 3));
    const std::size_t len = static_cast<std::size_t>(rnd::uniform(rng, 1, 8));
    check_round_trip(Diagram(Circuit(rnd::chain(rng, g, len), false)));
    if (g >= 2 && len >= 2)
      if (const auto c = rnd::closed_circuit(rng, g, len)) check_round_trip(Diagram(*c));
  }

  const Diagram twisted(build::circuit({{1, 0}, {0, 1}}), twist_matrix(build::h({1, 0}), 1));
  check_round_trip(twisted);
  CHECK(contains(emit_sd(twisted), "switch 1 1 0 1"));

  const Int big("1000000000000000000000000000001");
  const Diagram huge(Circuit({build::h({1, 0}), HClass(1, {big, 1})}, false));
  check_round_trip(huge);
  CHECK(contains(emit_json(huge), "\"1000000000000000000000000000001\""));
}

TEST_CASE("run: classify, info and guards") {
  Run r = sdcalc_run({"classify", data("blowup3.sd")});
  CHECK(r.code == kSuccess);
  CHECK(contains(r.out, "result: CP2 # 2 CP2bar"));

  r = sdcalc_run({"--format", "json", "classify", data("blowup3.json")});
  CHECK(r.code == kSuccess);
  const Json j = Json::parse(r.out);
  REQUIRE(j["canonical_forms"].size() == 1);
  CHECK(j["canonical_forms"][0]["text"] == "CP2 # 2 CP2bar");

  r = sdcalc_run({"info", data("two.sd"), "--format", "json"});
  CHECK(r.code == kSuccess);
  const Json info = Json::parse(r.out);
  CHECK(info["linking_matrix"] == Json::parse("[[0,0],[0,0]]"));
  CHECK(info["euler"]["closed_manifold"] == 4);
  CHECK_FALSE(info.contains("banner"));

  r = sdcalc_run({"classify", data("genus2.sd")});
  CHECK(r.code == kUsageError);
  CHECK(contains(r.err, "classifier requires genus 1"));

  r = sdcalc_run({"info", data("genus2.sd")});
  CHECK(r.code == kSuccess);
  CHECK(r.out.rfind("HOMOLOGICAL-ONLY", 0) == 0);
  CHECK(contains(r.out, "(conjectural)"));

  r = sdcalc_run({"validate", data("not_primitive.sd")});
  CHECK(r.code == kValidationFailure);
  CHECK(contains(r.err, "curve 1: not primitive"));

  r = sdcalc_run({"info", data("missing.sd")});
  CHECK(r.code == kUsageError);
}

TEST_CASE("run: usage errors") {
  CHECK(sdcalc_run({}).code == kUsageError);
  CHECK(sdcalc_run({"frobnicate"}).code == kUsageError);
  CHECK(sdcalc_run({"--format", "yaml", "info", data("two.sd")}).code == kUsageError);
  CHECK(sdcalc_run({"switch", data("two.sd")}).code == kUsageError);
  CHECK(sdcalc_run({"substitute", data("two.sd"), "--op", "blowup", "--pos", "1"}).code == kUsageError);
  CHECK(sdcalc_run({"substitute", data("two.sd"), "--op", "blowup", "--pos", "9", "--exp", "1"}).code == kUsageError);
  CHECK(sdcalc_run({"substitute", data("two.sd"), "--op", "stab", "--pos", "1", "--k", "x"}).code == kUsageError);
  CHECK(sdcalc_run({"generate", "--seed", "1"}).code == kUsageError);
  CHECK(sdcalc_run({"--help"}).code == kSuccess);
}

TEST_CASE("run: substitution output is a parseable diagram") {
  Run r = sdcalc_run({"substitute", data("two.sd"), "--op", "blowup", "--pos", "1", "--exp", "1"});
  REQUIRE(r.code == kSuccess);
  CHECK(parse(r.out) == apply_blowup(build::diagram({{1, 0}, {0, 1}}), 1, 1));

  r = sdcalc_run({"switch", data("blowup3.sd"), "--k", "1"});
  REQUIRE(r.code == kSuccess);
  CHECK(parse(r.out) == switch_diagram(parse("genus 1\ncurve 1 0\ncurve 1 -1\ncurve 0 1\nclosed true"), 1));

  r = sdcalc_run({"generate", "--seed", "11", "--steps", "9"});
  REQUIRE(r.code == kSuccess);
  const Diagram g = parse(r.out);
  CHECK(g == generate(11, 9).diagram);
  const Classification cl = classify(g);
  for (const CanonicalForm& f : cl.canonical_forms) CHECK(contains(r.out, "# expected: " + f.str()));
}

TEST_CASE("run: determinism, --out and --jobs") {
  const std::vector<std::string> files = {data("two.sd"), data("blowup3.sd"), data("blowup3.json"),
                                          data("genus2.sd"), data("not_primitive.sd")};
  for (const char* cmd : {"info", "detect", "kirby", "validate"}) {
    std::vector<std::string> serial = {"--format", "json", cmd};
    serial.insert(serial.end(), files.begin(), files.end());
    std::vector<std::string> parallel = serial;
    parallel.insert(parallel.begin(), {"--jobs", "3"});
    const Run a = sdcalc_run(serial);
    const Run b = sdcalc_run(serial);
    const Run c = sdcalc_run(parallel);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.err == c.err);
    CHECK(a.code == c.code);
    CHECK(a.code == kValidationFailure);
  }

  const std::filesystem::path out = std::filesystem::temp_directory_path() / "sdcalc_cli_test_out.json";
  const Run r = sdcalc_run({"--format", "json", "--out", out.string(), "monodromy", data("blowup3.sd")});
  CHECK(r.code == kSuccess);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str())["verdict"]["not_obstructed"] == true);
  std::filesystem::remove(out);
}
