#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "isolation/cli.hpp"

using isolation::run_cli;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "isolation");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("solve prints iota and a note for cliques") {
  const auto r = cli({"solve", "--graph", "C~", "--family", "clique", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("iota=1\n") != std::string::npos);
  CHECK(r.out.find("certification=exact") != std::string::npos);
  CHECK(r.out.find("note=") != std::string::npos);
}

TEST_CASE("build-special describes the 36-vertex graph") {
  const auto r = cli({"build-special", "--m", "71", "--k", "5", "--seed", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pure=yes") != std::string::npos);
  CHECK(r.out.find("q=6") != std::string::npos);
}

TEST_CASE("construct with trace") {
  const auto r = cli({"construct", "--graph", "Cl", "--k", "3", "--l", "1", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size=1") != std::string::npos);
  CHECK(r.out.find("Case") != std::string::npos);
  const auto bad = cli({"construct", "--graph", "C~", "--k", "4"});
  CHECK(bad.code == isolation::kExitUsage);
}

TEST_CASE("verify exits cleanly and is reproducible") {
  const std::string a = "cli_test_a.jsonl", b = "cli_test_b.jsonl";
  const auto r1 = cli({"verify", "--max-n", "6", "--k-min", "1", "--k-max", "5", "--l", "1,2,3", "--out", a, "--threads", "1"});
  const auto r2 = cli({"verify", "--max-n", "6", "--k-min", "1", "--k-max", "5", "--l", "1,2,3", "--out", b, "--threads", "3"});
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out.find("violations=0") != std::string::npos);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("scan-extremal and cycle-check") {
  const auto scan = cli({"scan-extremal", "--max-n", "5", "--k-min", "3", "--k-max", "3", "--format", "csv"});
  CHECK(scan.code == 0);
  CHECK(scan.out.find("NotExtremal") == std::string::npos);
  CHECK(scan.out.find("C4_k3_l1or3") != std::string::npos);
  const auto cycles = cli({"cycle-check", "--max-n", "5"});
  CHECK(cycles.code == 0);
  CHECK(cycles.out.find("\"violations\":0") != std::string::npos);
}

TEST_CASE("usage and input errors") {
  CHECK(cli({"verify", "--max-n", "5", "--bogus"}).code == isolation::kExitUsage);
  CHECK(cli({"verify"}).code == isolation::kExitUsage);
  CHECK(cli({"verify", "--max-n", "9"}).code == isolation::kExitUsage);
  CHECK(cli({"frobnicate"}).code == isolation::kExitUsage);
  CHECK(cli({"solve", "--graph", "C~", "--family", "wheels"}).code == isolation::kExitUsage);
  CHECK(cli({"solve", "--graph", "C", "--family", "clique"}).code == isolation::kExitIo);
  CHECK(cli({"verify", "--corpus", "no/such/file.g6"}).code == isolation::kExitIo);
  CHECK(cli({"--help"}).code == 0);
}
