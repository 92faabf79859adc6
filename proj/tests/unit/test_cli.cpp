#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rbcm::cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("factor") {
  const Run r = run({"factor", "--p", "3", "--k", "2", "--n", "4"});
  REQUIRE(r.code == rbcm::cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["product_matches"] == true);
  CHECK(j["factors"].size() == 2);
}

TEST_CASE("lift") {
  const Run r = run({"lift", "--p", "3", "--k", "2", "--n", "8", "--factor", "2,1,1", "--target", "minus"});
  REQUIRE(r.code == rbcm::cli::kExitOk);
  CHECK(nlohmann::json::parse(r.out)["poly"] == "x^2+4x+8");
  const Run bad = run({"lift", "--p", "3", "--k", "2", "--n", "4", "--factor", "2,1,1", "--target", "minus"});
  CHECK(bad.code == rbcm::cli::kExitDomain);
  CHECK(bad.err.find("NotSimpleFactor") != std::string::npos);
}

TEST_CASE("classify and export") {
  const Run c = run({"classify", "cyclic", "--p", "5", "--k", "1", "--n", "2", "--format", "json"});
  REQUIRE(c.code == rbcm::cli::kExitOk);
  CHECK(nlohmann::json::parse(c.out)["members"].size() == 2);
  const Run e = run({"export-map", "--modulus", "5", "--n", "2", "--gen", "-2,1"});
  REQUIRE(e.code == rbcm::cli::kExitOk);
  CHECK(e.out.rfind("5 10 5 1", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"--bogus"}).code == rbcm::cli::kExitUsage);
  CHECK(run({"factor", "--p", "3"}).code == rbcm::cli::kExitUsage);
  const Run r = run({"factor", "--p", "4", "--k", "1", "--n", "2"});
  CHECK(r.code == rbcm::cli::kExitDomain);
  CHECK(r.err.find("error: NotPrime") != std::string::npos);
  CHECK(run({"crosscheck", "--group", "5", "--valence", "2"}).code == rbcm::cli::kExitDomain);
}
