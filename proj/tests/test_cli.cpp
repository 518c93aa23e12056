#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "xyzq/cli.hpp"
#include "xyzq/graph.hpp"

namespace fs = std::filesystem;
using namespace xyzq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("xyzq_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return file(name);
  }
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("gen") {
  TempDir d;
  CHECK(run({"gen", "cycle", "6", "--out", d.file("c6.g")}).code == kExitOk);
  const auto c6 = lines(slurp(d.file("c6.g")));
  REQUIRE(c6.size() == 7);
  CHECK(c6[0] == "6 6");
  CHECK(c6[6] == "5 0");

  CHECK(run({"gen", "petersen", "--out", d.file("p.g")}).code == kExitOk);
  CHECK(lines(slurp(d.file("p.g")))[0] == "10 15");

  CHECK(run({"gen", "cycle", "2"}).code == kExitUsage);
  CHECK(run({"gen", "wheel", "5"}).code == kExitUsage);
  CHECK(run({"gen", "circulant", "8", "1", "2"}).out.substr(0, 5) == "8 16\n");
}

TEST_CASE("transform") {
  TempDir d;
  const std::string k3 = d.write("k3.g", "3 3\n0 1\n1 2\n0 2\n");
  Run r = run({"transform", k3, "--case", "001"});
  CHECK(r.code == kExitOk);
  {
    std::istringstream in(r.out);
    const Graph got = read_edge_list(in);
    std::vector<Edge> bip;
    for (int v = 0; v < 3; ++v) {
      for (int e = 3; e < 6; ++e) bip.push_back({v, e});
    }
    CHECK(got.same_edge_set(Graph::from_edge_list(6, bip)));
  }

  r = run({"transform", k3, "--case", "111", "--out", d.file("k6.g")});
  CHECK(r.code == kExitOk);
  CHECK(lines(slurp(d.file("k6.g")))[0] == "6 15");

  CHECK(run({"transform", k3, "--case=--0"}).code == kExitOk);
  CHECK(run({"transform", k3, "--case", "-01"}).code == kExitOk);

  const std::string p3 = d.write("p3.g", "3 2\n0 1\n1 2\n");
  r = run({"transform", p3, "--case", "+++"});
  CHECK(r.code == kExitIrregular);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  CHECK(run({"transform", k3, "--case", "0x1"}).code == kExitUsage);
  CHECK(run({"transform", k3, "--case", "0000"}).code == kExitUsage);
  CHECK(run({"transform", d.file("missing.g"), "--case", "000"}).code == kExitUsage);
}

TEST_CASE("charpoly") {
  TempDir d;
  const std::string k3 = d.write("k3.g", "3 3\n0 1\n1 2\n0 2\n");
  CHECK(run({"charpoly", k3, "--matrix", "Q"}).out == "-4 9 -6 1\n");
  CHECK(run({"charpoly", k3}).out == "-4 9 -6 1\n");
  CHECK(run({"charpoly", k3, "--matrix", "A"}).out == "-2 -3 0 1\n");
  CHECK(run({"charpoly", k3, "--matrix", "L"}).out == "0 9 -6 1\n");
  CHECK(run({"charpoly", d.write("e3.g", "3 0\n")}).out == "0 0 0 1\n");
  CHECK(run({"charpoly", d.write("c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n")}).out == "0 -16 20 -8 1\n");

  CHECK(run({"charpoly", d.write("bad.g", "3 2\n0 1\n")}).code == kExitUsage);
  CHECK(run({"charpoly", k3, "--matrix", "X"}).code == kExitUsage);
}

TEST_CASE("formula") {
  TempDir d;
  const std::string k3 = d.write("k3.g", "3 3\n0 1\n1 2\n0 2\n");
  Run r = run({"formula", k3, "--case", "111"});
  CHECK(r.code == kExitOk);
  // (λ-10)(λ-4)^5
  CHECK(lines(r.out)[0] == "10240 -13824 7680 -2240 360 -30 1");
  CHECK(r.out.find("(λ-10) · (λ-4)^5") != std::string::npos);

  CHECK(lines(run({"formula", k3, "--case", "000"}).out)[0] == "0 0 0 0 0 0 1");
  // λ(λ-4)(λ-1)^2(λ-3)^2
  CHECK(lines(run({"formula", k3, "--case", "00+"}).out)[0] == "0 -36 105 -112 54 -12 1");
  CHECK(lines(run({"formula", k3, "--case", "00+"}).out)[0] ==
        lines(run({"charpoly", d.write("c6.g", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")}).out)[0]);

  r = run({"formula", k3, "--case", "0-0"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("corrected") != std::string::npos);

  CHECK(run({"formula", d.write("p3.g", "3 2\n0 1\n1 2\n"), "--case", "111"}).code == kExitIrregular);
}

TEST_CASE("verify") {
  TempDir d;
  const std::string k3 = d.write("k3.g", "3 3\n0 1\n1 2\n0 2\n");
  Run r = run({"verify", k3, "--all"});
  CHECK(r.code == kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 64);
  for (const auto& l : out) CHECK(l.rfind("PASS ", 0) == 0);
  CHECK(out[0] == "PASS 000");

  r = run({"verify", d.write("c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n"), "--case", "+++"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "PASS +++\n");

  CHECK(run({"verify", k3}).code == kExitUsage);
  CHECK(run({"verify", k3, "--all", "--case", "111"}).code == kExitUsage);
  CHECK(run({"verify", d.write("p3.g", "3 2\n0 1\n1 2\n"), "--all"}).code == kExitIrregular);
}

TEST_CASE("corpus and usage") {
  TempDir d;
  const Run r = run({"corpus", "--report", d.file("report.json")});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 65);
  CHECK(lines(r.out).back() == "total 1024/1024");
  CHECK(slurp(d.file("report.json")).find("\"runtime_seconds\"") != std::string::npos);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
