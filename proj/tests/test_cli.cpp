#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ssr/cli.hpp"
#include "temp_dir.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ssr");
  std::ostringstream out, err;
  const int code = ssr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("cluster on g1 is perfect and reports the graph gap") {
  const auto r = run({"cluster", "--preset", "g1", "--K", "3", "--seed", "7"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["command"] == "cluster");
  CHECK(doc["result"]["metrics"]["accuracy"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["result"]["rho"]["rho"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["result"]["weight_sum_deviation"].get<double>() < 1e-6);
  CHECK(doc["result"]["labels"].size() == 150);
}

TEST_CASE("cluster output is reproducible apart from timings") {
  TempDir dir;
  const std::vector<std::string> args = {"cluster", "--preset", "g3", "--K", "3",
                                         "--method", "rcut", "--seed", "4"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  json ja = json::parse(a.out), jb = json::parse(b.out);
  ja.erase("timings_ms");
  jb.erase("timings_ms");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("every cluster method runs on iris") {
  for (const char* method : {"ssrk-scut", "ssro-scut", "rcut", "rcuto", "kpc", "kmeans"}) {
    const auto r = run({"cluster", "--preset", "iris", "--K", "3", "--method", method});
    CAPTURE(method);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"]["metrics"]["accuracy"].get<double>() > 0.6);
  }
}

TEST_CASE("cluster from files, csv output and eval round trip") {
  TempDir dir;
  REQUIRE(run({"gen", "--preset", "g1", "--seed", "2", "--out", dir.file("g.csv")}).code == 0);
  const auto r = run({"cluster", "--input", dir.file("g.csv"), "--labels", "--K", "3",
                      "--format", "csv", "--out", dir.file("pred.csv")});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(slurp(dir.file("pred.csv")));
  REQUIRE(lines.size() == 151);
  CHECK(lines[0] == "index,label,truth");

  std::string pred, truth;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto first = lines[i].find(',');
    const auto second = lines[i].find(',', first + 1);
    pred += lines[i].substr(first + 1, second - first - 1) + "\n";
    truth += lines[i].substr(second + 1) + "\n";
  }
  const auto e = run({"eval", "--pred", dir.write("p.txt", pred), "--truth",
                      dir.write("t.txt", truth)});
  REQUIRE(e.code == 0);
  CHECK(json::parse(e.out)["result"]["accuracy"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("cluster on an edge list") {
  TempDir dir;
  const auto edges = dir.write("e.txt", "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n");
  const auto truth = dir.write("t.txt", "a\na\na\nb\nb\nb\n");
  const auto r = run({"cluster", "--edges", edges, "--truth", truth, "--K", "2"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["metrics"]["accuracy"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["result"]["components"].get<int>() == 2);
}

TEST_CASE("ssr subcommand emits codes") {
  const auto r = run({"ssr", "--preset", "g1", "--r", "3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.contains("result"));
  const auto csv = run({"ssr", "--preset", "iris", "--variant", "original", "--r", "3",
                        "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(data_lines(csv.out).size() == 150);
}

TEST_CASE("recovery sweep writes one row per profile and noise level") {
  const auto r = run({"recovery-sweep", "--r", "4", "--exp-r", "3", "--n", "64",
                      "--noise", "1/32,1/8,0.25", "--trials", "2"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "profile,r,noise_a,method,mean_score,std");
  CHECK(lines[1].rfind("uniform,4,0.03125,nscrt,", 0) == 0);
  CHECK(lines[4].rfind("exponential,3,", 0) == 0);
}

TEST_CASE("rho sweep columns and its widest separation") {
  const auto r = run({"rho-sweep", "--separations", "2,16", "--trials", "10"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "separation,rho,mean_sparsity,scut_accuracy");
  std::istringstream row(lines[2]);
  std::string sep, rho, sparsity, acc;
  std::getline(row, sep, ',');
  std::getline(row, rho, ',');
  std::getline(row, sparsity, ',');
  std::getline(row, acc, ',');
  CHECK(std::stod(sep) == 16.0);
  CHECK(std::stod(rho) == doctest::Approx(1.0));
  CHECK(std::stod(acc) == doctest::Approx(1.0));
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
  CHECK(run({}).code == 1);
  CHECK(run({"cluster", "--preset", "g1"}).code == 1);
  CHECK(run({"cluster", "--preset", "g1", "--K", "0"}).code == 1);
  CHECK(run({"cluster", "--preset", "nope", "--K", "3"}).code == 1);
  CHECK(run({"cluster", "--input", "/nonexistent/x.csv", "--K", "2"}).code == 2);
  TempDir dir;
  const auto bad = dir.write("bad.csv", "1,2\n3,oops\n");
  const auto r = run({"cluster", "--input", bad, "--K", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.csv:2") != std::string::npos);
  CHECK(run({"cluster", "--preset", "g1", "--K", "3", "--lambda", "2"}).code == 1);
}

TEST_SUITE_END();
