#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ordext/cli.hpp"

using namespace ordext;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("empty argv prints usage") {
  Run r = run({});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("usage") != std::string::npos);
}

TEST_CASE("weyl table for A2") {
  Run r = run({"weyl", "table", "--datum", "A2", "--format", "tsv"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "word\tlength\tinversions\talpha_w_1\talpha_w_2");
  CHECK(lines[6] == "s1s2s1\t3\t3\t2\t2");
}

TEST_CASE("ext-table diag-generic") {
  Run r = run({"ext-table", "--datum", "GL2", "--field", "p=5,f=1,e=1,r=0", "--coeff", "kE:q=5", "--pair",
               "diag-generic", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result").at("verdict") == "Exactly(4)");
  CHECK(j.at("config").at("datum") == "GL2");
}

TEST_CASE("guards and input errors have distinct exit codes") {
  CHECK(run({"ext-table", "--datum", "SL2", "--pair", "diag"}).code == cli::kGuardRejected);
  CHECK(run({"ext-table", "--datum", "PGL2", "--n", "1", "--pair", "diag"}).code == cli::kGuardRejected);
  CHECK(run({"weyl", "table", "--datum", "nope"}).code == cli::kInputError);
  CHECK(run({"weyl", "alpha", "--datum", "A2", "--word", "s1s2"}).code == cli::kOk);
  CHECK(run({"weyl", "alpha", "--datum", "A2", "--word", "s1s1"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"nilpotent", "check", "--n", "3", "--p", "5", "--c", "1", "--samples", "50",
                                "--seed", "9", "--format", "json"};
  Run a = run(args), b = run(args);
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("result").at("threshold") == 1);
  CHECK(j.at("result").at("failures") == 0);
}

TEST_CASE("ordparts --char and --degree aliases") {
  Run r = run({"ordparts", "--datum", "GL3", "--field", "p=5", "--coeff", "kE:q=5", "--char", "0/1,0/2,0/3",
               "--degree", "1", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result").at("lists").at(0).at("summands").size() == 2);
}
