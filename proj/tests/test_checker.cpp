#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pel/checker.hpp"
#include "pel/errors.hpp"
#include "pel/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace pel;
using nlohmann::json;

namespace {

SuiteSpec spec_for(std::string suite) {
  SuiteSpec s;
  s.suite = std::move(suite);
  return s;
}

std::size_t count(const Report& r, const std::string& variant, Status st) {
  return static_cast<std::size_t>(std::count_if(r.verdicts.begin(), r.verdicts.end(), [&](const Verdict& v) {
    return v.variant == variant && v.status == st;
  }));
}

Report fixture(std::initializer_list<Status> statuses) {
  Report r;
  for (Status s : statuses) {
    Verdict v;
    v.suite = "fixture";
    v.status = s;
    if (s == Status::discrepancy) {
      v.lhs = LocPoly(1);
      v.rhs = LocPoly(2);
    }
    r.verdicts.push_back(v);
    (s == Status::pass ? r.pass : s == Status::discrepancy ? r.discrepancy : r.error) += 1;
  }
  return r;
}

}  // namespace

TEST_CASE("registered suites") {
  const auto& ids = registered_suites();
  CHECK(ids.size() == 20);
  CHECK(ids.front() == "thm2.1");
  CHECK(ids.back() == "reductions");
  for (const auto& id : proven_suites()) CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_THROWS_AS(run_suite(spec_for("thm9.9")), UnknownSuite);
}

TEST_CASE("explicit binomial suite on its default grid") {
  const Report r = run_suite(spec_for("thm2.1"));
  CHECK(r.verdicts.size() == 63);
  CHECK(r.pass == 63);
  CHECK(exit_code(r) == 0);
  for (const auto& v : r.verdicts) {
    CHECK(!v.lhs.has_value());
    CHECK(v.point.k.has_value());
    CHECK(!v.point.convention.has_value());
  }
  // grid order: k outer, n inner
  CHECK(r.verdicts[0].point.k == std::vector<int>{-3});
  CHECK(r.verdicts[8].point.n == 8);
  CHECK(r.verdicts[9].point.k == std::vector<int>{-2});
}

TEST_CASE("k = 1 collapse through n = 10") {
  const Report r = run_suite(spec_for("reductions"));
  CHECK(count(r, "k1-collapse", Status::pass) == 11);
  CHECK(r.discrepancy == 0);
  CHECK(r.error == 0);
}

TEST_CASE("rank two closed form carries the convention tag") {
  SuiteSpec s = spec_for("thm3.6");
  s.rset = std::vector<unsigned>{2};
  const Report r = run_suite(s);
  std::set<std::string> tags;
  for (const auto& v : r.verdicts) {
    if (v.variant == "printed") {
      REQUIRE(v.point.convention.has_value());
      tags.insert(convention_name(*v.point.convention));
      CHECK(v.status == Status::pass);
    }
  }
  CHECK(tags == std::set<std::string>{"weak", "strict"});
  CHECK(count(r, "r2-collapse", Status::pass) == 25);
  const json j = report_to_json(r);
  CHECK(j["summary"]["by_suite"]["thm3.6"]["validating_conventions"]["printed r=2"] ==
        json::array({"strict", "weak"}));
}

TEST_CASE("symmetrized suites need a rank of at least two") {
  SuiteSpec s = spec_for("thm3.7");
  s.rset = std::vector<unsigned>{1};
  CHECK_THROWS_AS(run_suite(s), InvalidGrid);
  s.rset = std::vector<unsigned>{};
  CHECK_THROWS_AS(run_suite(s), InvalidGrid);
  SuiteSpec c = spec_for("thm2.1");
  c.conventions.clear();
  CHECK_THROWS_AS(run_suite(c), InvalidGrid);
  SuiteSpec l = spec_for("thm2.1");
  l.logs.la = BigRational(1);
  CHECK_THROWS_AS(run_suite(l), InvalidGrid);
}

TEST_CASE("discrepancies carry both serialized sides") {
  SuiteSpec s = spec_for("eq5");
  s.nmax = 3;
  s.kset = std::vector<int>{1, 2};
  const Report r = run_suite(s);
  REQUIRE(r.discrepancy > 0);
  const json j = report_to_json(r);
  for (const auto& v : j["verdicts"]) {
    if (v["status"] == "discrepancy") {
      REQUIRE(v.contains("lhs"));
      REQUIRE(v.contains("rhs"));
      CHECK(!(parse_locpoly(v["lhs"]) == parse_locpoly(v["rhs"])));
    } else {
      CHECK(!v.contains("lhs"));
    }
  }
  CHECK(exit_code(r) == 1);
}

TEST_CASE("summary counts equal the verdict tallies") {
  SuiteSpec s = spec_for("thm3.2b");
  s.nmax = 3;
  s.rset = std::vector<unsigned>{1, 2};
  const Report r = run_suite(s);
  std::size_t p = 0, d = 0, e = 0;
  for (const auto& v : r.verdicts) (v.status == Status::pass ? p : v.status == Status::discrepancy ? d : e) += 1;
  CHECK(r.pass == p);
  CHECK(r.discrepancy == d);
  CHECK(r.error == e);
  const json j = report_to_json(r);
  CHECK(j["summary"]["pass"] == p);
  CHECK(j["summary"]["discrepancy"] == d);
  CHECK(j["verdicts"].size() == r.verdicts.size());
  CHECK(count(r, "corrected", Status::discrepancy) == 0);
  CHECK(count(r, "printed", Status::discrepancy) > 0);
}

TEST_CASE("reports are deterministic and independent of the job count") {
  SuiteSpec s = spec_for("thm3.7");
  s.nmax = 2;
  s.mmax = 2;
  const std::string a = report_to_text(run_suite(s));
  const std::string b = report_to_text(run_suite(s));
  CHECK(a == b);
  s.jobs = 4;
  CHECK(report_to_text(run_suite(s)) == a);

  SuiteSpec m = spec_for("proven");
  m.nmax = 3;
  m.rset = std::vector<unsigned>{1, 2};
  const std::string serial = report_to_text(run_suite(m));
  m.jobs = 3;
  CHECK(report_to_text(run_suite(m)) == serial);
}

TEST_CASE("report layout") {
  SuiteSpec s = spec_for("cauchy3");
  s.nmax = 1;
  s.kset = std::vector<int>{1};
  const Report r = run_suite(s);
  const json j = report_to_json(r);
  CHECK(j["version"] == kToolVersion);
  CHECK(j["config"]["suite"] == "cauchy3");
  CHECK(j["config"]["nmax"] == 1);
  CHECK(j["config"]["mode"] == "symbolic");
  const auto& v = j["verdicts"][0];
  for (const char* key : {"suite", "variant", "point", "status", "note"}) CHECK(v.contains(key));
  for (const char* key : {"n", "m", "k", "r", "convention", "s"}) CHECK(v["point"].contains(key));
  CHECK(v["point"]["s"] == 1);
  CHECK(v["point"]["m"].is_null());
  const std::string text = report_to_text(r);
  CHECK(text.back() == '\n');
  CHECK(json::parse(text) == j);
}

TEST_CASE("CSV has one row per verdict") {
  SuiteSpec s = spec_for("eq5");
  s.nmax = 2;
  s.kset = std::vector<int>{1};
  const Report r = run_suite(s);
  const std::string csv = report_to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "suite,variant,n,m,k,r,convention,s,status,lhs,rhs,note");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == r.verdicts.size());
  CHECK(csv.find("discrepancy,\"{") != std::string::npos);
}

TEST_CASE("assigned mode") {
  SuiteSpec s = spec_for("thm2.2");
  s.logs = LogParams::assigned(0, 1, 1);
  const Report r = run_suite(s);
  CHECK(r.pass == r.verdicts.size());
  CHECK(report_to_json(r)["config"]["la"] == "0");
  SuiteSpec t = spec_for("reductions");
  t.nmax = 4;
  t.logs = LogParams::assigned(1, 2, 3);
  const Report rt = run_suite(t);
  CHECK(rt.discrepancy == 0);
  CHECK(rt.error == 0);
}

TEST_CASE("exit-code contract") {
  CHECK(exit_code(fixture({})) == 0);
  CHECK(exit_code(fixture({Status::pass, Status::pass})) == 0);
  CHECK(exit_code(fixture({Status::pass, Status::discrepancy})) == 1);
  CHECK(exit_code(fixture({Status::discrepancy, Status::error})) == 2);
  CHECK(exit_code(fixture({Status::error})) == 2);
}

TEST_CASE("integer sets") {
  CHECK(parse_int_set("-3..3") == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(parse_int_set("2") == std::vector<int>{2});
  CHECK(parse_int_set("0,2,1..3") == std::vector<int>{0, 2, 1, 3});
  CHECK_THROWS_AS(parse_int_set("3..1"), InvalidGrid);
  CHECK_THROWS_AS(parse_int_set("a"), InvalidGrid);
  CHECK_THROWS_AS(parse_int_set(""), InvalidGrid);
  CHECK_THROWS_AS(parse_int_set("1,,2"), InvalidGrid);
  CHECK(parse_convention("weak") == Convention::weak);
  CHECK_THROWS_AS(parse_convention("both"), InvalidGrid);
}
