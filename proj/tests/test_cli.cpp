#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aoc/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  json report;
  std::string summary;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aoc::cli::run(args, out, err);
  json report;
  if (!out.str().empty() && out.str().front() == '{') report = json::parse(out.str());
  return {code, report, err.str()};
}

std::string scenario(const char* name) { return std::string(AOC_SCENARIO_DIR) + "/" + name; }

bool has_violation(const json& r) {
  return r.contains("violation") || (r.contains("verdict") && r["verdict"] == "incompatible");
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("surgery") {
    const auto r = run({"surgery", "--mult", "1", "--link", "-1", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.report["mult"] == 4);
    CHECK(r.report["link"] == -1);
    CHECK(r.report["schema"] == "aoc/1");
    CHECK_FALSE(r.summary.empty());
    const auto p = run({"surgery", "--mult", "-5", "--link", "-2", "--positivize"});
    CHECK(p.code == 0);
    CHECK(p.report["k"] == 3);
    CHECK(p.report["mult"] == 1);
    const auto bad = run({"surgery", "--mult", "1", "--link", "0", "--positivize"});
    CHECK(bad.code == 1);
    CHECK(bad.report["violation"]["code"] == "NonNegativeLink");
  }

  TEST_CASE("strip") {
    CHECK(run({"strip", "classify", "--model", "positive"}).report["nature"] == "positively-twisted");
    CHECK(run({"strip", "classify", "--model", "trivial"}).report["nature"] == "non-twisted-suspension");
    const auto loz = run({"strip", "lozenge", "--model", "negative", "--point", "0,0", "--type", "+-"});
    CHECK(loz.code == 0);
    CHECK(loz.report["lozenge"]["corner2"] == json{{"x", "1"}, {"y", "-1"}});
    CHECK(run({"strip", "lozenge", "--model", "trivial", "--point", "0,0"}).report["lozenge"].is_null());
    const auto c = run({"strip", "complete", "--model", "negative", "--point", "0,0", "--quadrant", "++"});
    CHECK(c.report["complete"] == false);
    CHECK(c.report["witness"]["stable"] == json{{"x", "9/10"}, {"y", "0"}});
    CHECK(c.report["witness"]["unstable"] == json{{"x", "0"}, {"y", "9/10"}});
    const auto outside = run({"strip", "lozenge", "--model", "positive", "--point", "2,0"});
    CHECK(outside.code == 1);
    CHECK(outside.report["violation"]["code"] == "PointOutsideModel");
  }

  TEST_CASE("drift") {
    const auto e = run({"drift", "eval", "-f", scenario("drift_square.json")});
    CHECK(e.code == 0);
    CHECK(e.report["drift"] == -1);
    CHECK(run({"drift", "check-local", "-f", scenario("drift_square.json")}).report["accepted"] == true);
    const auto w = run({"drift", "witness", "-f", scenario("drift_square.json")});
    CHECK(w.report["witness"]["local_drift"] == -2);
    const auto r = run({"drift", "rectangle", "-f", scenario("rectangle.json")});
    CHECK(r.code == 0);
    CHECK(r.report["boundary_drift"] == -2);
    CHECK(r.report["rectangle"]["g_eta1"] == json{{"x", "2/3"}, {"y", "0"}});
    CHECK(run({"drift", "rectangle", "--n1", "2", "--n2", "3"}).report["boundary_drift"] == -5);
    const auto bad = run({"drift", "rectangle", "--n1", "1", "--n2", "0"});
    CHECK(bad.code == 1);
    CHECK(bad.report["violation"]["code"] == "InvalidDeckCount");
  }

  TEST_CASE("holonomy") {
    CHECK(run({"holonomy", "exponent", "--mult", "-1", "--period", "3", "--side", "right"}).report["exponent"] == 3);
    const auto c = run({"holonomy", "compose", "-f", scenario("compose.json")});
    CHECK(c.code == 0);
    CHECK(c.report["value"] == "17/32");
    CHECK(c.report["length"] == json::parse(R"([{"coeff":"1/2","exp":-2},{"coeff":"1/2","exp":0}])"));
    const auto b = run({"holonomy", "compose", "-f", scenario("blowup.json")});
    CHECK(b.report["status"] == "undefined");
    const auto k = run({"holonomy", "contract", "-f", scenario("contract.json")});
    CHECK(k.code == 0);
    CHECK(k.report["exponents"] == json::array({-1, -3}));
    const auto s = run({"holonomy", "spacing", "-f", scenario("spacing.json")});
    CHECK(s.code == 1);
    CHECK(s.report["pair"] == json::array({0, 1}));
  }

  TEST_CASE("sections") {
    const auto x = run({"sections", "exclude", "-f", scenario("exclude_pair.json")});
    CHECK(x.code == 1);
    CHECK(x.report["verdict"] == "incompatible");
    CHECK(x.report["reasons"].back() == "shared link must be strictly positive but equation forces 0");
    const auto m = run({"sections", "exclude", "-f", scenario("exclude_mixed.json")});
    CHECK(m.code == 0);
    CHECK(m.report["verdict"] == "no-verdict");
    const auto p = run({"sections", "positivize", "-f", scenario("positivize.json")});
    CHECK(p.code == 0);
    CHECK(p.report["coefficients"][0]["k"] == 3);
    CHECK(p.report["nature"] == "positively-twisted");
    CHECK(run({"sections", "classify", "-f", scenario("classify_conflict.json")}).code == 1);
    CHECK(run({"sections", "validate", "-f", scenario("validate_bad.json")}).code == 1);
    CHECK(run({"sections", "link-eq", "-f", scenario("link_eq.json")}).code == 0);
  }

  TEST_CASE("parse and schema errors exit 2") {
    CHECK(run({"sections", "validate", "-f", scenario("unknown_field.json")}).code == 2);
    CHECK(run({"drift", "eval", "-f", scenario("exclude_pair.json")}).code == 2);
    CHECK(run({"sections", "validate", "-f", scenario("missing.json")}).code == 2);
    CHECK(run({"surgery", "--mult", "x", "--link", "-1"}).code == 2);
    CHECK(run({"strip", "lozenge", "--model", "positive", "--point", "1/0,0"}).code == 2);
    CHECK(run({"strip", "classify", "--model", "twisted"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("exit 1 iff the report carries a violation") {
    const std::vector<std::vector<std::string>> invocations{
        {"surgery", "--mult", "1", "--link", "-1", "--k", "3"},
        {"surgery", "--mult", "1", "--link", "2", "--positivize"},
        {"sections", "exclude", "-f", scenario("exclude_pair.json")},
        {"sections", "exclude", "-f", scenario("exclude_mixed.json")},
        {"sections", "classify", "-f", scenario("classify_conflict.json")},
        {"sections", "validate", "-f", scenario("validate_bad.json")},
        {"holonomy", "spacing", "-f", scenario("spacing.json")},
        {"holonomy", "contract", "-f", scenario("contract.json")},
        {"drift", "check-local", "-f", scenario("drift_square.json")},
    };
    for (const auto& args : invocations) {
      const auto r = run(args);
      CAPTURE(args[0]);
      REQUIRE(r.code != 2);
      CHECK((r.code == 1) == has_violation(r.report));
    }
  }

  TEST_CASE("reports round-trip through the parser") {
    const auto r = run({"holonomy", "compose", "-f", scenario("compose.json")});
    CHECK(json::parse(r.report.dump()) == r.report);
  }

  TEST_CASE("selftest honours the seed") {
    setenv("AOC_SEED", "1234", 1);
    const auto a = run({"selftest", "--count", "50"});
    CHECK(a.code == 0);
    CHECK(a.report["seed"] == 1234);
    CHECK(a.report["passed"] == true);
    setenv("AOC_SEED", "not-a-number", 1);
    CHECK(run({"selftest"}).code == 2);
    unsetenv("AOC_SEED");
  }
}
