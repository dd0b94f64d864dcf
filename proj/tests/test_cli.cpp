#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(PEL_BINARY) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::current_path() / "cli_scratch";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  const auto out = scratch("pass.json");
  CHECK(run("check --suite thm2.1 --nmax 3 --kset 0..2 --out " + out.string()) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["summary"]["pass"] == 12);
  CHECK(j["summary"]["discrepancy"] == 0);
  CHECK(slurp("cli_stderr.txt").find("pass 12, discrepancy 0, error 0") != std::string::npos);

  CHECK(run("check --suite eq5 --nmax 2 --kset 1 --out " + scratch("fail.json").string()) == 1);
  CHECK(run("check --suite nosuch --out " + scratch("x.json").string()) == 2);
  CHECK(run("check --suite thm2.1 --bogus 1") == 2);
  CHECK(run("check --suite thm2.1 --la 1/0 --lb 1") == 2);
  CHECK(run("check --suite thm2.1 --la 1") == 2);
  CHECK(run("check --suite thm2.1 --kset 3..1") == 2);
  CHECK(run("check --suite thm3.6 --rset 1") == 2);
  CHECK(run("check --suite thm2.1 --mode symbolic --la 1 --lb 2") == 2);
  CHECK(run("") == 2);
  CHECK(run("--help") == 0);
  CHECK(run("--version") == 0);
  CHECK(slurp("cli_stdout.txt").find("0.1.0") != std::string::npos);
}

TEST_CASE("report to stdout in both formats") {
  CHECK(run("check --suite appell --nmax 2 --kset 1") == 0);
  const json j = json::parse(slurp("cli_stdout.txt"));
  CHECK(j["verdicts"].size() == 3);
  CHECK(j["config"]["suite"] == "appell");

  CHECK(run("check --suite appell --nmax 2 --kset 1 --format csv") == 0);
  const std::string csv = slurp("cli_stdout.txt");
  CHECK(csv.rfind("suite,variant,n,m,k,r,convention,s,status,lhs,rhs,note\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("assigned logarithms") {
  const auto out = scratch("assigned.json");
  CHECK(run("check --suite thm2.2 --nmax 3 --kset 1 --la 1/2 --lb 3/2 --lc 2 --out " + out.string()) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["config"]["mode"] == "assigned");
  CHECK(j["config"]["la"] == "1/2");
  CHECK(j["config"]["lc"] == "2");
}

TEST_CASE("config file with command-line override") {
  const auto cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "# defaults\nsuite=thm2.1\nnmax=2\nkset=0..1\n";
  }
  const auto out = scratch("cfg.json");
  CHECK(run("check --config " + cfg.string() + " --out " + out.string()) == 0);
  json j = json::parse(slurp(out));
  CHECK(j["config"]["suite"] == "thm2.1");
  CHECK(j["verdicts"].size() == 6);

  CHECK(run("check --config " + cfg.string() + " --nmax 4 --out " + out.string()) == 0);
  j = json::parse(slurp(out));
  CHECK(j["config"]["nmax"] == 4);
  CHECK(j["verdicts"].size() == 10);

  CHECK(run("check --config " + scratch("missing.cfg").string()) == 2);
}

TEST_CASE("table and egf outputs") {
  const auto csv = scratch("pe.csv");
  CHECK(run("table --family pe --kset 1 --nmax 3 --mode assigned --la 0 --lb 1 --lc 1 --format csv --out " +
            csv.string()) == 0);
  CHECK(slurp(csv) == "n,m,k,r,convention,value\n0,,1,,,0\n1,,1,,,1\n2,,1,,,2*x - 1\n3,,1,,,3*x^2 - 3*x\n");

  const auto tex = scratch("symd.tex");
  CHECK(run("table --family sym-d --nmax 1 --mmax 1 --format latex --out " + tex.string()) == 0);
  CHECK(slurp(tex).find("\\begin{tabular}") != std::string::npos);

  const auto egf = scratch("ohno.json");
  CHECK(run("egf --family ohno --kset 1 --order 2 --out " + egf.string()) == 0);
  const json j = json::parse(slurp(egf));
  CHECK(j["kind"] == "egf");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2]["text"] == "-1/2");

  CHECK(run("egf --family sym-d --order 2,1 --out " + scratch("d.json").string()) == 0);
  CHECK(run("egf --family pe --order 2,1") == 2);
  CHECK(run("table --family nosuch") == 2);
  CHECK(run("table --family pe --format xml") == 2);
}
