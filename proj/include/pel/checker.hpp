#pragma once

#include "pel/polyeuler.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pel {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { pass, discrepancy, error };
const char* status_name(Status s);

struct GridPoint {
  unsigned n = 0;
  std::optional<unsigned> m;
  std::optional<std::vector<int>> k;
  std::optional<unsigned> r;
  std::optional<Convention> convention;
  std::optional<unsigned> s;  // order of the Cauchy-rule families
};

struct Verdict {
  std::string suite;
  std::string variant;
  GridPoint point;
  Status status = Status::pass;
  std::optional<LocPoly> lhs;  // oracle side, kept when status != pass
  std::optional<LocPoly> rhs;  // formula side
  std::string note;
};

/// Grid and parameters of a run. Unset ranges take the per-suite defaults.
struct SuiteSpec {
  std::string suite;
  std::optional<unsigned> nmax;
  std::optional<unsigned> mmax;
  std::optional<std::vector<int>> kset;
  std::optional<std::vector<unsigned>> rset;
  std::vector<Convention> conventions{Convention::weak, Convention::strict};
  LogParams logs;
  unsigned jobs = 1;
};

struct Report {
  std::string version = kToolVersion;
  nlohmann::json config;
  std::vector<Verdict> verdicts;
  std::size_t pass = 0;
  std::size_t discrepancy = 0;
  std::size_t error = 0;
};

/// Individual suite ids in run order.
const std::vector<std::string>& registered_suites();
/// The suites of proven theorems, also reachable as the id "proven".
const std::vector<std::string>& proven_suites();

/// Runs one suite, "all" or "proven". Throws UnknownSuite or InvalidGrid.
/// Verdict order is the grid order whatever the job count.
Report run_suite(const SuiteSpec& spec);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json report_to_json(const Report& r);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string report_to_text(const Report& r);
std::string report_to_csv(const Report& r);

/// 0 all pass, 1 any discrepancy, 2 any error.
int exit_code(const Report& r);

/// "a..b", "a", or a comma list of either. Throws InvalidGrid.
std::vector<int> parse_int_set(std::string_view text);
Convention parse_convention(std::string_view text);

}  // namespace pel
