#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "slicelab/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = slicelab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("walk spectrum report") {
  Run r = run({"walk", "spectrum", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, R"("lambda":["1","0","1/4"])"));
  CHECK(contains(r.out, R"("multiplicity":["1","3","2"])"));
}

TEST_CASE("degree-one scan report") {
  Run r = run({"deg1", "--n", "8", "--k", "4", "--group", "Z2", "--scan"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, R"({"min":"3/7","bound":"3/8")"));
  CHECK(contains(r.out, R"("witness":"1*x1 + 1*x2 + 1")"));
}

TEST_CASE("extremal report") {
  Run r = run({"extremal", "--n", "6", "--k", "3", "--d", "2", "--group", "Z2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, R"("min":"1/10")"));
  CHECK_FALSE(contains(r.out, "seconds"));
  CHECK(contains(run({"extremal", "--n", "4", "--k", "2", "--d", "1", "--timing"}).out, "seconds"));
}

TEST_CASE("other subcommands succeed") {
  CHECK(run({"walk", "verify", "--n", "6", "--poly", "x1x2 + x3", "--group", "Z2"}).code == 0);
  CHECK(run({"walk", "sample", "--n", "6", "--poly", "x1", "--samples", "500", "--seed", "3"}).code == 0);
  CHECK(run({"cayley", "--n", "6", "--all"}).code == 0);
  CHECK(run({"good-slice", "--k", "10", "--d", "3", "--p", "2", "--find-shift"}).code == 0);
  CHECK(run({"reduce", "--n", "8", "--k", "3", "--poly", "x1x2", "--to-balanced", "--seed", "1"}).code == 0);
  CHECK(run({"reduce", "--n", "8", "--k", "3", "--poly", "x1x2", "--fix-ones", "1", "--seed", "1"}).code == 0);
  CHECK(run({"deg1", "--n", "8", "--k", "4", "--poly", "x1 + x2 + 1"}).code == 0);
  CHECK(run({"junta", "--n", "4", "--k", "2", "--poly", "x1 - x2", "--group", "Q"}).code == 0);
  CHECK(run({"cover", "--n", "4", "--k", "2", "--point", "1100", "--field", "binary"}).code == 0);
  CHECK(run({"matching-stats", "--n", "6"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  Run unknown = run({"extremal", "--n", "4", "--k", "2", "--d", "1", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({"walk", "sample", "--n", "6", "--poly", "x1"}).code == 2);
  CHECK(run({"reduce", "--n", "8", "--k", "3", "--poly", "x1", "--to-balanced"}).code == 2);
  CHECK(run({"walk", "spectrum", "--n", "5"}).code == 2);
  CHECK(run({"walk", "spectrum", "--n", "14"}).code == 2);
  CHECK(run({"extremal", "--n", "4", "--k", "2", "--d", "1", "--group", "Z1"}).code == 2);
  CHECK(run({"deg1", "--n", "8", "--k", "4", "--poly", "x9"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("same arguments give identical bytes") {
  std::vector<std::string> args{"walk", "sample", "--n", "8", "--poly", "x1x2 + x3", "--samples", "2000", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> all{"verify-all", "--max-n", "4", "--seed", "3"};
  Run a = run(all);
  CHECK(a.code == 0);
  CHECK(a.out == run(all).out);
  CHECK(contains(a.out, R"("passed":true)"));
}

TEST_CASE("csv output and output files") {
  Run csv = run({"matching-stats", "--n", "6", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("t,", 0) == 0);
  CHECK(run({"walk", "spectrum", "--n", "4", "--format", "xml"}).code == 2);

  const std::string path = "slicelab_cli_test_output.json";
  Run to_file = run({"walk", "spectrum", "--n", "4", "--out", path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contains(contents, R"("lambda":["1","0","1/4"])"));
  std::remove(path.c_str());
}
