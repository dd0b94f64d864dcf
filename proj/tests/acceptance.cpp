// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "pel/abel.hpp"
#include "pel/checker.hpp"
#include "pel/combinatorics.hpp"
#include "pel/polyeuler.hpp"
#include "pel/symmetrized.hpp"
#include "pel/tables.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace pel;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Report run(const std::string& suite, std::optional<unsigned> nmax = std::nullopt,
           std::optional<unsigned> mmax = std::nullopt, std::optional<std::vector<unsigned>> rset = std::nullopt) {
  SuiteSpec s;
  s.suite = suite;
  s.nmax = nmax;
  s.mmax = mmax;
  s.rset = std::move(rset);
  return run_suite(s);
}

struct Tally {
  std::size_t pass = 0, discrepancy = 0, error = 0;
  std::size_t total() const { return pass + discrepancy + error; }
  bool clean() const { return total() > 0 && discrepancy == 0 && error == 0; }
};

/// Counts per "suite/variant".
std::map<std::string, Tally> tally(const Report& r) {
  std::map<std::string, Tally> out;
  for (const auto& v : r.verdicts) {
    Tally& t = out[v.suite + "/" + v.variant];
    (v.status == Status::pass ? t.pass : v.status == Status::discrepancy ? t.discrepancy : t.error) += 1;
  }
  return out;
}

std::string describe(const std::map<std::string, Tally>& t) {
  std::string out;
  for (const auto& [key, c] : t) {
    if (!out.empty()) out += "; ";
    out += key + " " + std::to_string(c.pass) + "/" + std::to_string(c.total());
  }
  return out;
}

Outcome all_clean(const Report& r) {
  const auto t = tally(r);
  Outcome o;
  for (const auto& [key, c] : t) o.ok = o.ok && c.clean();
  o.ok = o.ok && !t.empty();
  o.detail = describe(t);
  return o;
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// B_0..B_n from sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<BigRational> bernoulli_by_recurrence(unsigned n) {
  std::vector<BigRational> b(n + 1, 0);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    BigRational s = 0;
    for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, static_cast<int>(j)) * b[j];
    b[m] = -s / BigRational(m + 1);
  }
  return b;
}

Outcome criterion1() {
  const auto start = Clock::now();
  Outcome o;
  for (unsigned n = 0; n <= 10; ++n) {
    const MPoly rhs = n == 0 ? MPoly(0) : euler_polynomial(n - 1) * static_cast<long>(n);
    o.ok = o.ok && pe_classical(1, n) == rhs;
  }
  const double t = seconds_since(start);
  o.ok = o.ok && t < 1.0;
  o.detail = "n = 0..10 in " + fmt_seconds(t);
  return o;
}

Outcome criterion2() {
  const auto start = Clock::now();
  Outcome o = all_clean(run("thm2.1"));
  const double t = seconds_since(start);
  o.ok = o.ok && t < 5.0;
  o.detail += " in " + fmt_seconds(t);
  return o;
}

Outcome criterion4() {
  Outcome a = all_clean(run("thm2.3"));
  const Outcome b = all_clean(run("appell"));
  a.ok = a.ok && b.ok;
  a.detail += "; " + b.detail;
  return a;
}

Outcome criterion6() {
  std::map<std::string, Tally> t;
  for (const char* s : {"thm3.2a", "thm3.2b", "thm3.2c", "multi-addition"}) t.merge(tally(run(s)));
  Outcome o;
  // every relation as printed must hold; the corrected reading is reported alongside
  for (const auto& [key, c] : t) {
    if (key != "thm3.2b/corrected") o.ok = o.ok && c.clean();
  }
  o.detail = describe(t);
  if (!o.ok) {
    o.detail += "; the scaled-argument relation with (r x ln c + ln a)/(ln a + ln b) fails for r >= 2,"
                " (x ln c + ln a)/(ln a + ln b) holds at every point";
  }
  return o;
}

Outcome criterion7() {
  const auto t = tally(run("reductions"));
  const Tally& c = t.at("reductions/r1-reduction");
  return {c.clean(), "r1-reduction " + std::to_string(c.pass) + "/" + std::to_string(c.total())};
}

Outcome criterion9() {
  const Report r = run("thm3.6", std::nullopt, std::nullopt, std::vector<unsigned>{2});
  const auto t = tally(r);
  Outcome o;
  // termwise identity of the rank-two closed form with the binomial one
  const auto S25 = thm25_rhs_series(4, 4, LogParams::symbolic());
  bool termwise = true;
  for (Convention c : {Convention::weak, Convention::strict}) {
    termwise = termwise && thm36_rhs_series(4, 4, {LogParams::symbolic(), 2, c}) == S25;
  }
  const json conv = report_to_json(r)["summary"]["by_suite"]["thm3.6"]["validating_conventions"]["printed r=2"];
  std::string names;
  for (const auto& c : conv) names += (names.empty() ? "" : ", ") + c.get<std::string>();
  o.ok = termwise && t.at("thm3.6/r2-collapse").clean() && !conv.empty();
  o.detail = std::string("termwise ") + (termwise ? "identical" : "different") + "; " + describe(t) +
             "; validating conventions at r = 2: " + (names.empty() ? "none" : names);
  return o;
}

Outcome criterion10() {
  const auto B = bernoulli_by_recurrence(9);
  const auto moments = AbelGenerating({AbelBasisElement{0, 1, 1}}).moments(8);
  Outcome o;
  for (unsigned p = 0; p <= 8; ++p) {
    // -eta(-p) = -(2^{p+1} - 1) B_{p+1} / (p+1), and 1/2 at p = 0
    const BigRational eta = p == 0 ? BigRational(make_rational(1, 2))
                                   : -(pow(BigRational(2), p + 1) - 1) * B[p + 1] / BigRational(p + 1);
    const BigRational s = abel_alternating_power_sum(p);
    o.ok = o.ok && s == eta && moments[p] == eta && abel_negative_binomial_power_sum(p, 1) == s;
  }
  for (unsigned r = 1; r <= 6; ++r) {
    o.ok = o.ok && abel_negative_binomial_power_sum(0, r) == 1 / pow(BigRational(2), r);
  }
  o.detail = "S_A(p), T(p,1) for p <= 8 and T(0,r) for r <= 6";
  return o;
}

Outcome criterion11() {
  const std::vector<std::string> suites = {"eq5", "cauchy1", "cauchy2", "cauchy3", "cauchy4",
                                           "eq14", "thm2.6", "thm3.7"};
  Outcome o;
  std::size_t verdicts = 0, discrepancies = 0;
  for (const auto& s : suites) {
    const Report a = run(s, 4, 4);
    const Report b = run(s, 4, 4);
    const bool identical = report_to_text(a) == report_to_text(b);
    bool sides = true;
    for (const auto& v : a.verdicts) {
      if (v.status == Status::discrepancy) sides = sides && v.lhs && v.rhs;
    }
    const bool ok = identical && sides && a.error == 0 && !a.verdicts.empty();
    if (!ok) o.detail += s + " failed; ";
    o.ok = o.ok && ok;
    verdicts += a.verdicts.size();
    discrepancies += a.discrepancy;
  }
  o.detail += std::to_string(verdicts) + " verdicts, " + std::to_string(discrepancies) +
              " discrepancies with both sides, runs byte-identical";
  return o;
}

Outcome criterion12() {
  const auto t = tally(run("reductions"));
  const Tally& z = t.at("reductions/zero-structure");
  const Tally& l = t.at("reductions/leading-coefficient");
  bool tables = true;
  for (const auto& f : registered_families()) {
    if (f == "ohno") continue;  // a number sequence with value 1 at n = 0
    TableSpec s;
    s.family = f;
    for (const auto& row : emit_table(s).rows) {
      if (row.point.n == 0) tables = tables && row.value.is_zero();
    }
  }
  return {z.clean() && l.clean() && tables,
          "zero-structure " + std::to_string(z.pass) + "/" + std::to_string(z.total()) +
              ", leading-coefficient " + std::to_string(l.pass) + "/" + std::to_string(l.total()) +
              ", n = 0 table rows " + (tables ? "zero" : "nonzero")};
}

Outcome criterion13() {
  const std::string bin = PEL_BINARY;
  const auto start = Clock::now();
  const int all = shell(bin + " check --suite all --out acceptance_all.json 2>acceptance_all.log");
  const double t = seconds_since(start);
  const int proven = shell(bin + " check --suite proven --out acceptance_proven.json 2>acceptance_proven.log");
  Outcome o;
  o.ok = t < 60.0 && (all == 0 || all == 1) && proven == 0;
  o.detail = "suite all exit " + std::to_string(all) + " in " + fmt_seconds(t) + "; suite proven exit " +
             std::to_string(proven);
  if (proven != 0) o.detail += " (the printed scaled-argument relation fails for r >= 2)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* text;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "k = 1 collapse to n E_(n-1)(x)", criterion1},
      {2, "binomial expansion in x, symbolic, n <= 8", criterion2},
      {3, "scaled-argument relation, n <= 8", [] { return all_clean(run("thm2.2")); }},
      {4, "derivative identities with the (n+1) ln c factor", criterion4},
      {5, "addition formula and its y-specialization", [] { return all_clean(run("addition")); }},
      {6, "multi-index relations and addition theorem, r <= 3, both conventions", criterion6},
      {7, "rank one reduces to the single-index family", criterion7},
      {8, "symmetrized closed form for n, m <= 5", [] { return all_clean(run("thm2.5")); }},
      {9, "rank-two symmetrized closed form", criterion9},
      {10, "Abel regularization sanity", criterion10},
      {11, "discrepancy-tolerant suites terminate deterministically", criterion11},
      {12, "zero structure and leading coefficients", criterion12},
      {13, "full run under 60 s and proven subset exits 0", criterion13},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s %s (%s)\n", c.id, o.ok ? "PASS" : "FAIL", c.text, o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
