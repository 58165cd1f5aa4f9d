#include "flagdomain/cli.hpp"
#include "flagdomain/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace flagdomain;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      cells.push_back(cur);
      cur.clear();
    } else cur += c;
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

TEST_CASE("classify A2 Q,Q") {
  const Run r = run({"classify", "--type", "A", "--rank", "2", "--labels", "Q,Q"});
  REQUIRE(r.code == cli::kSuccess);
  const Json j = Json::parse(r.out);
  CHECK(j["classical"] == false);
  CHECK(j["bracket_generating"] == true);
  CHECK(j["depth"] == 2);
  CHECK(j["dimC_D"] == 3);
  CHECK(j["dimC_Z"] == 1);
  CHECK(j["f_dims"] == Json::array({0, 0, 0}));
  CHECK(j["fibration"] == "none");
  CHECK(dump(j) == r.out);
}

TEST_CASE("full type names and the one-letter form agree") {
  const Run a = run({"classify", "--type", "C2", "--labels", "K,Q"});
  const Run b = run({"classify", "--type", "C", "--rank", "2", "--labels", "K,Q"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["classical"] == true);
  CHECK(j["f_dims"] == Json::array({3, 4, 3}));
}

TEST_CASE("invalid input exits 1") {
  CHECK(run({"classify", "--type", "A", "--rank", "2", "--labels", "V,V"}).code == cli::kInvalidInput);
  CHECK(run({"classify", "--type", "A", "--rank", "2", "--labels", "Q"}).code == cli::kInvalidInput);
  CHECK(run({"classify", "--type", "A", "--rank", "2", "--labels", "Q,X"}).code == cli::kInvalidInput);
  CHECK(run({"classify", "--type", "H", "--rank", "2", "--labels", "Q,Q"}).code == cli::kInvalidInput);
  CHECK(run({"classify", "--type", "C2", "--rank", "3", "--labels", "Q,Q"}).code == cli::kInvalidInput);
  CHECK(run({"classify", "--type", "A", "--labels", "Q"}).code == cli::kInvalidInput);
  CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(run({}).code == cli::kInvalidInput);
  CHECK(run({"chain", "--format", "csv"}).code == cli::kInvalidInput);
  CHECK(run({"selftest", "--format", "csv"}).code == cli::kInvalidInput);
  CHECK(run({"chain", "--tol", "0"}).code == cli::kInvalidInput);
  CHECK(run({"chain", "--pairs", "-1"}).code == cli::kInvalidInput);
  const Run vv = run({"classify", "--type", "A", "--rank", "2", "--labels", "V,V"});
  CHECK(vv.out.empty());
  CHECK(vv.err.find("error:") != std::string::npos);
}

TEST_CASE("CSV and JSON carry the same fields") {
  const Run csv = run({"enumerate", "--type", "B", "--rank", "3", "--format", "csv"});
  const Run json = run({"enumerate", "--type", "B", "--rank", "3"});
  REQUIRE(csv.code == 0);
  REQUIRE(json.code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(split_csv_line(header) == report_fields());

  const Json rows = Json::parse(json.out)["rows"];
  std::size_t n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    const auto cells = split_csv_line(line);
    REQUIRE(cells.size() == report_fields().size());
    REQUIRE(n < rows.size());
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows[n].items()) keys.push_back(k);
    CHECK(keys == report_fields());
    CHECK(cells[2] == rows[n]["labels"].get<std::string>());
  }
  CHECK(n == rows.size());
}

TEST_CASE("enumerate counts") {
  for (const auto& [type, rank] : std::vector<std::pair<std::string, int>>{{"A", 1}, {"A", 2}, {"C", 2}, {"G", 2}, {"A", 3}}) {
    const Run r = run({"enumerate", "--type", type, "--rank", std::to_string(rank)});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    int pow3 = 1, pow2 = 1;
    for (int i = 0; i < rank; ++i) pow3 *= 3, pow2 *= 2;
    CHECK(j["total_labelings"] == pow3);
    CHECK(j["valid_labelings"] == pow3 - pow2);
    CHECK(j["classical_count"].get<int>() + j["nonclassical_count"].get<int>() == pow3 - pow2);
    CHECK(j["rows"].size() == static_cast<std::size_t>(pow3 - pow2));
  }
  const Json a2 = Json::parse(run({"enumerate", "--type", "A", "--rank", "2"}).out);
  CHECK(a2["nonclassical_count"] == 1);
}

TEST_CASE("--out writes the file and leaves stdout empty") {
  const auto path = std::filesystem::temp_directory_path() / "flagdomain_cli_out.json";
  std::filesystem::remove(path);
  const Run r = run({"classify", "--type", "A", "--rank", "2", "--labels", "K,Q", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"classify", "--type", "A", "--rank", "2", "--labels", "K,Q"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("chain output") {
  const Run r = run({"chain", "--seed", "3", "--pairs", "4", "--tol", "1e-7"});
  REQUIRE(r.code == cli::kSuccess);
  const Json j = Json::parse(r.out);
  CHECK(j["seed"] == 3);
  CHECK(j["pairs"] == 4);
  CHECK(j["tol"] == 1e-7);
  CHECK(j["connected"] == 4);
  CHECK(j["certificates"].size() == 4);
  for (const auto& c : j["certificates"]) {
    CHECK(c["verified"] == true);
    CHECK(c["cycles"].size() == c["k"].get<std::size_t>());
    CHECK(c["waypoints"].size() + 1 == c["cycles"].size());
  }
  CHECK(r.out == run({"chain", "--seed", "3", "--pairs", "4", "--tol", "1e-7"}).out);
  CHECK(r.out != run({"chain", "--seed", "4", "--pairs", "4", "--tol", "1e-7"}).out);
}

TEST_CASE("chain failures exit 3") {
  const Run r = run({"chain", "--seed", "1", "--pairs", "10", "--kmax", "0"});
  CHECK(r.code == cli::kChainFailure);
  const Json j = Json::parse(r.out);
  CHECK(j["failures"].size() > 0);
  CHECK(j["failures"][0].contains("reason"));
}

TEST_CASE("selftest and text output") {
  const Run r = run({"selftest", "--rank", "2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(Json::parse(r.out)["passed"] == true);
  const Run t = run({"classify", "--type", "A", "--rank", "2", "--labels", "Q,Q", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("bracket") != std::string::npos);
}
