#include "pel/checker.hpp"
#include "pel/errors.hpp"
#include "pel/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct GridFlags {
  std::optional<unsigned> nmax;
  std::optional<unsigned> mmax;
  std::string kset;
  std::string rset;
  std::string convention = "both";
  std::string mode;
  std::string la, lb, lc;
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--nmax", g.nmax, "largest n");
  cmd->add_option("--mmax", g.mmax, "largest m (bivariate families)");
  cmd->add_option("--kset", g.kset, "orders or index entries, e.g. -3..3 or 0,2");
  cmd->add_option("--rset", g.rset, "ranks, e.g. 1..3");
  cmd->add_option("--convention", g.convention, "weak, strict or both")
      ->check(CLI::IsMember({"weak", "strict", "both"}));
  cmd->add_option("--mode", g.mode, "symbolic or assigned")
      ->check(CLI::IsMember({"symbolic", "assigned"}));
  cmd->add_option("--la", g.la, "ln a as p/q");
  cmd->add_option("--lb", g.lb, "ln b as p/q");
  cmd->add_option("--lc", g.lc, "ln c as p/q");
}

pel::LogParams logs_of(const GridFlags& g) {
  const bool any = !g.la.empty() || !g.lb.empty() || !g.lc.empty();
  const std::string mode = g.mode.empty() ? (any ? "assigned" : "symbolic") : g.mode;
  if (mode == "symbolic") {
    if (any) throw pel::InvalidGrid("--la/--lb/--lc need --mode assigned");
    return pel::LogParams::symbolic();
  }
  if (g.la.empty() || g.lb.empty()) throw pel::InvalidGrid("assigned mode needs --la and --lb");
  pel::LogParams logs;
  logs.la = pel::parse_rational(g.la);
  logs.lb = pel::parse_rational(g.lb);
  if (!g.lc.empty()) logs.lc = pel::parse_rational(g.lc);
  logs.validate();
  return logs;
}

std::vector<pel::Convention> conventions_of(const GridFlags& g) {
  if (g.convention == "both") return {pel::Convention::weak, pel::Convention::strict};
  return {pel::parse_convention(g.convention)};
}

std::optional<std::vector<unsigned>> rset_of(const GridFlags& g) {
  if (g.rset.empty()) return std::nullopt;
  std::vector<unsigned> out;
  for (int r : pel::parse_int_set(g.rset)) {
    if (r < 1) throw pel::InvalidGrid("ranks must be >= 1");
    out.push_back(static_cast<unsigned>(r));
  }
  return out;
}

std::optional<std::vector<int>> kset_of(const GridFlags& g) {
  if (g.kset.empty()) return std::nullopt;
  return pel::parse_int_set(g.kset);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

/// argv with the key=value pairs of --config FILE spliced in right after the
/// subcommand, so that later command-line flags take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (!item.parents.empty()) throw CLI::ConversionError("config keys must be flat: " + item.fullname());
    injected.push_back("--" + item.name);
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i ? "," : "") + item.inputs[i];
    injected.push_back(value);
  }
  // rest[0] is the program; splice after the first non-option (the subcommand)
  std::size_t at = 1;
  while (at < rest.size() && rest[at].rfind("-", 0) == 0) ++at;
  if (at < rest.size()) ++at;
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
  return rest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identity checker for poly-Euler polynomial families", "pel"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", pel::kToolVersion);

  GridFlags grid;
  std::string suite, out, format = "json";
  unsigned jobs = 1;
  auto* check = app.add_subcommand("check", "run an identity suite and write a verdict report");
  check->add_option("--suite", suite, "suite id, 'all' or 'proven'")->required();
  add_grid_flags(check, grid);
  check->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  check->add_option("--out", out, "output file (stdout if omitted)");
  check->add_option("--config", "key=value file of default flags");

  std::string family, variant = "corrected", order;
  auto* table = app.add_subcommand("table", "tabulate a polynomial family");
  table->add_option("--family", family, "pe, penum, multi, sym-d, multi-d or ohno")->required();
  add_grid_flags(table, grid);
  table->add_option("--format", format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  table->add_option("--out", out, "output file (stdout if omitted)");
  table->add_option("--config", "key=value file of default flags");

  auto* egf = app.add_subcommand("egf", "raw generating-function coefficients");
  egf->add_option("--family", family, "pe, penum, multi, sym-d, multi-d or ohno")->required();
  egf->add_option("--order", order, "N, or N,M for sym-d and multi-d")->required();
  add_grid_flags(egf, grid);
  egf->add_option("--variant", variant, "closed form for multi-d")
      ->check(CLI::IsMember({"printed", "corrected"}));
  egf->add_option("--format", format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  egf->add_option("--out", out, "output file (stdout if omitted)");
  egf->add_option("--config", "key=value file of default flags");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    args.pop_back();  // program name
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) {
      pel::SuiteSpec spec;
      spec.suite = suite;
      spec.nmax = grid.nmax;
      spec.mmax = grid.mmax;
      spec.kset = kset_of(grid);
      spec.rset = rset_of(grid);
      spec.conventions = conventions_of(grid);
      spec.logs = logs_of(grid);
      spec.jobs = jobs;
      const pel::Report rep = pel::run_suite(spec);
      write_output(out, format == "csv" ? pel::report_to_csv(rep) : pel::report_to_text(rep));
      std::cerr << "pass " << rep.pass << ", discrepancy " << rep.discrepancy << ", error "
                << rep.error << "\n";
      return pel::exit_code(rep);
    }

    pel::TableSpec spec;
    spec.family = family;
    spec.nmax = grid.nmax;
    spec.mmax = grid.mmax;
    spec.kset = kset_of(grid);
    spec.rset = rset_of(grid);
    spec.conventions = conventions_of(grid);
    spec.logs = logs_of(grid);
    if (*table) {
      write_output(out, pel::render_table(pel::emit_table(spec), format));
      return 0;
    }
    spec.variant = variant == "printed" ? pel::FormulaVariant::printed : pel::FormulaVariant::corrected;
    const auto comma = order.find(',');
    const auto to_order = [](const std::string& s) {
      const auto v = pel::parse_int_set(s);
      if (v.size() != 1 || v[0] < 0) throw pel::InvalidGrid("bad order '" + s + "'");
      return static_cast<unsigned>(v[0]);
    };
    const unsigned N = to_order(order.substr(0, comma));
    std::optional<unsigned> M;
    if (comma != std::string::npos) M = to_order(order.substr(comma + 1));
    write_output(out, pel::render_table(pel::emit_egf(spec, N, M), format));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "pel: " << e.what() << "\n";
    return 2;
  }
}
