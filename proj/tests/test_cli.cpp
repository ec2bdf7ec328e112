#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectra/cli.hpp"

using namespace spectra;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// Scratch file that removes itself; contents written on construction.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& contents = "") {
    path = std::filesystem::temp_directory_path() / ("spectra_cli_" + name);
    if (!contents.empty()) {
      std::ofstream f(path);
      f << contents;
    }
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("enumerate lists symbols and reports the count on stderr") {
  const CliResult r = run({"enumerate", "-J", "3", "--symmetric"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"{[1,2],[3,4],[5,6]}", "{[1,6],[2,3],[4,5]}",
                                                 "{[1,6],[2,5],[3,4]}"});
  CHECK(r.err == "count: 3\n");

  CHECK(run({"enumerate", "-J", "1"}).out == "{[1,2]}\n");
  CHECK(lines(run({"enumerate", "-J", "2"}).out).size() == 2);
  CHECK(lines(run({"enumerate", "-J", "4"}).out).size() == 14);
}

TEST_CASE("enumerate emits JSON when asked") {
  const CliResult r = run({"enumerate", "-J", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0] == nlohmann::json::parse("[[1,2],[3,4]]"));
  CHECK(j[1] == nlohmann::json::parse("[[1,4],[2,3]]"));
}

TEST_CASE("enumeration cap: flag beats environment beats default") {
  CHECK(run({"enumerate", "-J", "20"}).code == 2);  // default cap 14
  CHECK(run({"enumerate", "-J", "3", "--cap", "2"}).code == 2);
  CHECK(run({"enumerate", "-J", "3", "--cap", "3"}).code == 0);

  setenv("SPECTRA_ENUM_CAP", "2", 1);
  CHECK(run({"enumerate", "-J", "3"}).code == 2);
  CHECK(run({"enumerate", "-J", "3", "--cap", "5"}).code == 0);
  setenv("SPECTRA_ENUM_CAP", "junk", 1);
  CHECK(run({"enumerate", "-J", "3"}).code == 1);
  unsetenv("SPECTRA_ENUM_CAP");
  CHECK(run({"enumerate", "-J", "3"}).code == 0);
}

TEST_CASE("count prints exact TSV tables") {
  const CliResult r = run({"count", "--J-max", "8", "--which", "P", "--route", "closed"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "J\tP");
  const std::vector<std::string> p = {"1", "1", "2", "3", "6", "10", "20", "35", "70"};
  for (int J = 0; J <= 8; ++J) CHECK(rows[J + 1] == std::to_string(J) + "\t" + p[J]);

  CHECK(run({"count", "--J-max", "0"}).out == "J\tT\tP\n0\t1\t1\n");
  CHECK(run({"count", "--J-max", "40", "--route", "all", "--which", "both"}).code == 0);
  const CliResult big = run({"count", "--J-max", "30", "--which", "T", "--route", "series"});
  CHECK(lines(big.out).back() == "30\t3814986502092304");
}

TEST_CASE("verify reports PASS for every invariant") {
  const CliResult r = run({"verify", "--enum", "6", "--series", "40"});
  CHECK(r.code == 0);
  const auto report = lines(r.out);
  CHECK(report.size() >= 6);
  for (const auto& line : report) CHECK(line.substr(0, 5) == "PASS ");

  CHECK(run({"verify", "--enum", "0", "--series", "1"}).code == 0);
}

TEST_CASE("witness and classify round-trip through a config file") {
  const std::string symbol = "{[1,6],[2,5],[3,4]}";
  TempFile config("roundtrip.json");
  const CliResult w = run({"witness", symbol, "-o", config.str()});
  REQUIRE(w.code == 0);
  CHECK(w.err == "suggested lambda_max: 3.125\n");

  const CliResult c =
      run({"classify", config.str(), "--lambda-max", "3.125", "--steps", "1000"});
  REQUIRE(c.code == 0);
  const auto out_lines = lines(c.out);
  REQUIRE(!out_lines.empty());
  CHECK(out_lines[0] == symbol);
  const auto events = nlohmann::json::parse(c.out.substr(out_lines[0].size() + 1));
  REQUIRE(events.is_array());
  REQUIRE(events.size() == 3);
  CHECK(events[0]["pair"] == nlohmann::json::parse("[3,4]"));
  CHECK(events[1]["pair"] == nlohmann::json::parse("[2,5]"));
  CHECK(events[2]["pair"] == nlohmann::json::parse("[1,6]"));
  const double l0 = events[0]["lambda_star"].get<double>();
  const double l1 = events[1]["lambda_star"].get<double>();
  CHECK(l0 < l1);  // inner pair merges first

  // Same bytes on a second identical invocation.
  const CliResult c2 =
      run({"classify", config.str(), "--lambda-max", "3.125", "--steps", "1000"});
  CHECK(c2.out == c.out);
  CHECK(c2.code == 0);
}

TEST_CASE("witness without --out prints the config") {
  const CliResult r = run({"witness", "{[1,2]}"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 2);
  CHECK(j["symmetric_hint"] == true);
  CHECK(j["A"][0][0].get<double>() == 0.5);
  CHECK(j["B"][0][1].get<double>() == 1.0);
}

TEST_CASE("witness rejects crossing and asymmetric symbols with exit 1") {
  CHECK(run({"witness", "{[1,3],[2,4]}"}).code == 1);
  CHECK(run({"witness", "{[1,2],[3,6],[4,5]}"}).code == 1);
  CHECK(run({"witness", "{[1,2"}).code == 1);
}

TEST_CASE("classify failure exit codes") {
  TempFile frozen("frozen.json", R"({"dimension": 2,
    "A": [[-1, 0], [0, 1]], "B": [[0, 0], [0, 0]]})");
  CHECK(run({"classify", frozen.str()}).code == 4);

  TempFile degenerate("degenerate.json", R"({"dimension": 4,
    "A": [[1,0,0,0],[0,-1,0,0],[0,0,2,0],[0,0,0,-2]],
    "B": [[0,1,0,0],[-1,0,0,0],[0,0,0,2],[0,0,-2,0]]})");
  CHECK(run({"classify", degenerate.str(), "--lambda-max", "2"}).code == 5);

  TempFile garbage("garbage.json", "not json at all");
  CHECK(run({"classify", garbage.str()}).code == 1);
  CHECK(run({"classify", "/no/such/file.json"}).code == 1);

  TempFile start("start.json", R"({"dimension": 2,
    "A": [[1, 0], [0, 1]], "B": [[0, 1], [-1, 0]]})");
  CHECK(run({"classify", start.str()}).code == 1);
}

TEST_CASE("paths exports a deterministic CSV grid") {
  TempFile config("paths_config.json");
  REQUIRE(run({"witness", "{[1,2]}", "-o", config.str()}).code == 0);

  TempFile csv("paths_out.csv");
  const CliResult r = run({"paths", config.str(), "--lambda-max", "1", "--steps", "2", "--out",
                           csv.str()});
  REQUIRE(r.code == 0);
  std::ifstream in(csv.path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto rows = lines(buf.str());
  REQUIRE(rows.size() == 7);  // header + 2 paths x 3 grid points
  CHECK(rows[0] == "lambda,path_id,re,im");
  CHECK(rows[1] == "0.000000000,1,-0.5,0");
  CHECK(rows[4] == "0.000000000,2,0.5,0");
  // After the merger at 0.5 both paths carry conjugate imaginary parts.
  CHECK(rows[3].substr(0, 14) == "1.000000000,1,");
  CHECK((rows[3].find(",-") != std::string::npos ||
         rows[6].find(",-") != std::string::npos));

  const CliResult again = run({"paths", config.str(), "--lambda-max", "1", "--steps", "2",
                               "--out", csv.str()});
  CHECK(again.code == 0);
  std::ifstream in2(csv.path);
  std::stringstream buf2;
  buf2 << in2.rdbuf();
  CHECK(buf2.str() == buf.str());
}

TEST_CASE("unwritable outputs exit 7") {
  TempFile config("unwritable_config.json");
  REQUIRE(run({"witness", "{[1,2]}", "-o", config.str()}).code == 0);
  CHECK(run({"paths", config.str(), "--out", "/no/such/dir/out.csv"}).code == 7);
  CHECK(run({"witness", "{[1,2]}", "-o", "/no/such/dir/w.json"}).code == 7);
}

TEST_CASE("usage errors exit 1 and help exits 0") {
  CHECK(run({}).code == 1);
  CHECK(run({"enumerate"}).code == 1);            // missing -J
  CHECK(run({"enumerate", "-J", "0"}).code == 1);  // not positive
  CHECK(run({"enumerate", "-J", "3", "--format", "yaml"}).code == 1);
  CHECK(run({"count"}).code == 1);  // missing --J-max
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"classify"}).code == 1);  // missing config

  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  const CliResult a = run({"enumerate", "-J", "5"});
  const CliResult b = run({"enumerate", "-J", "5"});
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  const CliResult c = run({"count", "--J-max", "25"});
  const CliResult d = run({"count", "--J-max", "25"});
  CHECK(c.out == d.out);
}
