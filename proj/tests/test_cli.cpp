#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "rcoh/cli.hpp"
#include "rcoh/serialize.hpp"

using namespace rcoh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("dims") {
  const auto r = run({"dims", "--prime", "7", "--lambda", "zero"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "7  0,0,0,0,0,0,0  2   2    4   11"));
  const auto r2 = run({"dims", "--prime", "2", "--lambda", "1,0", "--format", "json"});
  CHECK(r2.code == 0);
  const auto j = Json::parse(r2.out);
  CHECK(j["rows"][0]["H2*"]["dim"] == 1);
  CHECK(j["pass"] == true);
  const auto bad = run({"dims", "--prime", "4"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "not prime"));
}

TEST_CASE("basis") {
  const auto r = run({"basis", "--prime", "7", "--lambda", "zero", "--degree", "2"});
  CHECK(r.code == 0);
  for (const char* s : {"e^{1,7}", "e^{2,3}", "e^{2,5} - e^{3,4}", "e^{2,7} - e^{3,6} + e^{4,5}"}) CHECK(contains(r.out, s));
  const auto r3 = run({"basis", "--prime", "3", "--lambda", "1,1,1", "--degree", "2", "--restricted"});
  CHECK(r3.code == 0);
  CHECK(contains(r3.out, "  (0, ē^1)\n  (0, ē^2)\n  (0, ē^3)\n"));
  const auto r5 = run({"basis", "--prime", "5", "--degree", "1"});
  CHECK(contains(r5.out, "  e^1\n  e^2\n"));
  CHECK(run({"basis", "--prime", "5", "--degree", "3"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--prime", "5", "--lambda", "all"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "200 random"));
  CHECK(contains(r.out, "[INFO] d2 as printed"));
  CHECK(contains(r.out, "result: pass"));
  const auto r2 = run({"verify", "--prime", "2", "--lambda", "all"});
  CHECK(r2.code == 0);
  CHECK(contains(r2.out, "lambda=(1,0): H2* = span{(0, ē^2)}"));
  CHECK(contains(r2.out, "lambda=(0,0): H2* = span{(0, ē^1), (0, ē^2), (e^{1,2}, ẽ^{1,2})}"));
  CHECK(run({"verify", "--prime", "13", "--lambda", "random:42"}).code == 0);
}

TEST_CASE("iso") {
  const auto r = run({"iso", "--prime", "3", "--lambda", "0,0,1", "--lambda-prime", "0,0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("isomorphic, mu1=1, mu2=1\n", 0) == 0);
  const auto classes = run({"iso", "--prime", "3", "--lambda", "all", "--format", "json"});
  const auto j = Json::parse(classes.out);
  CHECK(j["classes"][0] == Json::parse("[[0,0,0]]"));
  CHECK(run({"iso", "--prime", "37", "--lambda", "zero", "--lambda-prime", "zero"}).code == 2);
}

TEST_CASE("extend") {
  const auto r = run({"extend", "--prime", "5", "--lambda", "zero", "--cocycle", "ebar:3"});
  REQUIRE(r.code == 0);
  const auto doc = algebra_from_json(Json::parse(r.out));
  CHECK(doc.algebra.dim() == 6);
  CHECK(doc.pmap->basis_p_powers[2] == Vector{0, 0, 0, 0, 0, 1});
  CHECK(run({"extend", "--prime", "7", "--cocycle", "e:3,4"}).code == 2);
  CHECK(run({"extend", "--prime", "7", "--cocycle", "bogus"}).code == 2);
  const auto ord = run({"extend", "--prime", "7", "--cocycle", "rep:1", "--ordinary"});
  CHECK(ord.code == 0);
  CHECK(contains(ord.out, "e^{1,7}"));
}

TEST_CASE("sweep") {
  const auto r = run({"sweep", "--primes", "2,3,5,7,11,13", "--lambda", "zero"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# 6 rows, all match"));
  CHECK(run({"sweep", "--primes", "2,9"}).code == 2);
}

TEST_CASE("algebra files round trip through the CLI") {
  const std::string path = "cli_roundtrip.json";
  REQUIRE(run({"algebra", "--prime", "5", "--lambda", "1,2,3,4,0", "--output", path}).code == 0);
  const auto again = run({"algebra", "--algebra", path});
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(again.out == file.str());
  const auto ext = run({"extend", "--algebra", path, "--cocycle", "ebar:1"});
  CHECK(ext.code == 0);
  std::remove(path.c_str());
  CHECK(run({"algebra", "--algebra", "does-not-exist.json"}).code == 2);
}

TEST_CASE("lambda specs") {
  CHECK(cli::expand_lambda_spec(3, "all", 0).lambdas.size() == 27);
  CHECK(cli::expand_lambda_spec(5, "all", 0).lambdas.size() == 201);
  CHECK(cli::expand_lambda_spec(5, "onehot", 0).lambdas.size() == 5);
  CHECK(cli::expand_lambda_spec(5, "standard", 0).lambdas.size() == 11);
  CHECK(cli::expand_lambda_spec(5, "random:7:3", 0).lambdas.size() == 3);
  CHECK(cli::expand_lambda_spec(5, "random:7", 0).lambdas == cli::expand_lambda_spec(5, "random:7", 9).lambdas);
  CHECK(cli::expand_lambda_spec(5, "-1,0,0,0,6", 0).lambdas.front() == Vector{4, 0, 0, 0, 1});
  CHECK_THROWS_AS(cli::expand_lambda_spec(5, "1,2", 0), cli::UsageError);
  CHECK_THROWS_AS(cli::expand_lambda_spec(5, "x,0,0,0,0", 0), cli::UsageError);
  CHECK(run({"dims", "--prime", "5", "--lambda", "1,2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--prime", "7", "--lambda", "standard", "--seed", "3"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sweep{"sweep", "--primes", "3,5", "--lambda", "random:11:4", "--format", "json"};
  CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("executable exit codes") {
  const char* tool = std::getenv("RCOH_TOOL");
  if (!tool) return;
  auto status = [&](const std::string& args) {
    const int s = std::system((std::string(tool) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("dims --prime 7 --lambda zero") == 0);
  CHECK(status("dims --prime 4") == 2);
  CHECK(status("--help") == 0);
}
