#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pel/errors.hpp"
#include "pel/serialize.hpp"
#include "pel/symmetrized.hpp"
#include "support.hpp"

#include <random>

using namespace pel;
using namespace pel::test;
using nlohmann::json;

namespace {

std::string parse_error_location(const json& doc) {
  try {
    parse_locpoly(doc);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("schema instances") {
  CHECK(serialize_locpoly(LocPoly(0)) == json::parse(R"({"num": [], "dA": 0, "dL": 0})"));
  CHECK(serialize_locpoly(LocPoly(LA() + LB())) ==
        json::parse(R"({"num": [{"e":[0,0,0,1,0,0],"c":"1"},{"e":[0,0,0,0,1,0],"c":"1"}], "dA":0, "dL":0})"));
  const auto v = serialize_locpoly(LocPoly::make(X() * q(-3, 4), 2, 1));
  CHECK(v["num"][0]["c"] == "-3/4");
  CHECK(v["dA"] == 2);
  CHECK(v["dL"] == 1);
}

TEST_CASE("terms are ordered lexicographically from x") {
  const LocPoly v(LC() + X() + Y().pow(2) + X() * LA() + MPoly(5));
  const auto doc = serialize_locpoly(v);
  std::vector<std::vector<unsigned>> exps;
  for (const auto& t : doc["num"]) exps.push_back(t["e"].get<std::vector<unsigned>>());
  REQUIRE(exps.size() == 5);
  for (std::size_t i = 1; i < exps.size(); ++i) CHECK(exps[i - 1] > exps[i]);
  CHECK(exps.front() == std::vector<unsigned>{1, 0, 0, 1, 0, 0});
  CHECK(exps.back() == std::vector<unsigned>{0, 0, 0, 0, 0, 0});
}

TEST_CASE("symmetrized value round-trips") {
  const LocPoly d = d_def(1, 1, LogParams::symbolic());
  CHECK(parse_locpoly(serialize_locpoly(d)) == d);
  CHECK(serialize_locpoly(parse_locpoly(serialize_locpoly(d))) == serialize_locpoly(d));
}

TEST_CASE("round trip on random values") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const LocPoly v = random_locpoly(rng);
    const json doc = serialize_locpoly(v);
    const LocPoly back = parse_locpoly(doc);
    CHECK(back == v);
    CHECK(serialize_locpoly(back) == doc);
    CHECK(parse_locpoly(json::parse(doc.dump())) == v);
  }
}

TEST_CASE("parser normalizes redundant denominators") {
  // (La + Lb) / (La + Lb) = 1
  const json doc = json::parse(R"({"num": [{"e":[0,0,0,1,0,0],"c":"1"},{"e":[0,0,0,0,1,0],"c":"1"}], "dA":1, "dL":0})");
  CHECK(parse_locpoly(doc) == LocPoly(1));
  CHECK(serialize_locpoly(parse_locpoly(doc)) == serialize_locpoly(LocPoly(1)));
}

TEST_CASE("malformed documents") {
  CHECK(parse_error_location(json::array()) == "");
  // a missing key is reported at the object that lacks it
  CHECK(parse_error_location(json::parse(R"({"dA":0,"dL":0})")) == "");
  CHECK(parse_error_location(json::parse(R"({"num":[],"dA":-1,"dL":0})")) == "/dA");
  CHECK(parse_error_location(json::parse(R"({"num":[],"dA":0,"dL":"x"})")) == "/dL");
  CHECK(parse_error_location(json::parse(R"({"num":[{"e":[0,0,0],"c":"1"}],"dA":0,"dL":0})")) == "/num/0/e");
  CHECK(parse_error_location(json::parse(R"({"num":[{"e":[0,0,0,0,0,0],"c":"1/0"}],"dA":0,"dL":0})")) == "/num/0/c");
  CHECK(parse_error_location(json::parse(R"({"num":[{"e":[0,0,0,0,0,0],"c":"0"}],"dA":0,"dL":0})")) == "/num/0/c");
  CHECK(parse_error_location(json::parse(R"({"num":[{"e":[0,0,0,0,0,0],"c":"1"},{"e":[0,0,0,600,0,0],"c":"1"}],"dA":0,"dL":0})")) == "/num/1/e/3");
  CHECK(parse_error_location(json::parse(R"({"num":[{"e":[0,0,0,0,0,0]}],"dA":0,"dL":0})")) == "/num/0");
  CHECK_THROWS_WITH_AS(parse_locpoly(json::parse(R"({"num":[],"dL":0})")), doctest::Contains("dA"), ParseError);
  CHECK(parse_error_location(json::parse(R"({"num":[{"e":[0,0,0,0,0,0],"c":2}],"dA":0,"dL":0})")) == "/num/0/c");
  try {
    parse_locpoly(json::parse(R"({"num":{},"dA":0,"dL":0})"), "/verdicts/3/lhs");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == "/verdicts/3/lhs/num");
  }
}

TEST_CASE("LaTeX rendering") {
  CHECK(to_latex(LocPoly(0)) == "0");
  CHECK(to_latex(LocPoly(X().pow(2) * 3L - X() * 3L)) == "3 x^{2} - 3 x");
  CHECK(to_latex(LocPoly(MPoly(q(-1, 2)))) == "-\\frac{1}{2}");
  const std::string d = to_latex(d_def(1, 1, LogParams::symbolic()));
  CHECK(d.find("\\frac") != std::string::npos);
  CHECK(d.find("\\ln a") != std::string::npos);
  CHECK(d.find("\\ln c") != std::string::npos);
}
