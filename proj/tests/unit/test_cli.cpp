#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "commands.hpp"

using mombound::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "mombound");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string data = MOMBOUND_TEST_DATA;

}  // namespace

TEST_CASE("bound prints the CSV table") {
  Result r = call({"bound", data + "/motzkin_exp.json", "--d-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("d,lambda,residual,status\n0,92,0,ok\n", 0) == 0);
  CHECK(r.out.find("2,4.30100424477,") != std::string::npos);
}

TEST_CASE("certify exit codes") {
  CHECK(call({"certify", data + "/motzkin_exp.json", "--k-max", "2"}).code == 0);
  Result neg = call({"certify", data + "/negative_gauss.json", "--k-max", "4"});
  CHECK(neg.code == 1);
  CHECK(neg.out.find("counterexample") != std::string::npos);
}

TEST_CASE("certify examples") {
  Result lin = call({"certify", data + "/x1_gauss.json"});
  CHECK(lin.code == 1);
  CHECK(lin.out.find("\"witness_value\": \"-2\"") != std::string::npos);
  Result half = call({"certify", data + "/negative_mean.json", "--k-max", "0"});
  CHECK(half.code == 1);
  CHECK(half.out.find("\"k\": 0") != std::string::npos);
}

TEST_CASE("copositive exit codes") {
  Result id = call({"copositive", data + "/identity.json", "--d-max", "3"});
  CHECK(id.code == 0);
  CHECK(id.out.find("no_refutation") != std::string::npos);
  Result r = call({"copositive", data + "/copositive_2x2.json", "--d-max", "4"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not_copositive") != std::string::npos);
}

TEST_CASE("maxcut equal weights") {
  Result r = call({"maxcut", "--n", "5", "--d-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("d,lambda,residual,status,f_star\n0,0,0,ok,-2\n", 0) == 0);
  CHECK(call({"maxcut", "--n", "5", "--random", "--seed", "3", "--d-max", "1"}).code == 0);
}

TEST_CASE("example and density grid") {
  Result r = call({"example", "double-well"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lebesgue_box") != std::string::npos);
  Result d = call({"density", data + "/motzkin_exp.json", "--d", "2", "--points", "3", "--lower", "0", "--upper", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("x1,x2,sigma\n0,0,", 0) == 0);
  CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 10);
  CHECK(call({"density", data + "/motzkin_exp.json", "--d", "2"}).code == 2);  // unbounded support needs a grid
}

TEST_CASE("error exit codes") {
  CHECK(call({"bound", data + "/missing.json"}).code == 2);
  CHECK(call({"bound", data + "/bad.json"}).code == 2);
  CHECK(call({"bound", data + "/unsupported.json"}).code == 3);
  CHECK(call({"bound"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
