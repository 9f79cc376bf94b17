#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "lexgotz/serialize.hpp"

using lexgotz::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = lexgotz::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExample = R"({"n": 3, "generators": [[1,0,2],[0,3,0],[1,2,1]]})";

}  // namespace

TEST_CASE("expand") {
  auto r = invoke({"expand", "7", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "7 = C(4,3)+C(3,2); 7^<3> = 9; 7^(3) = 2\n");

  r = invoke({"expand", "0", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0 = (empty); 0^<5> = 0", 0) == 0);

  CHECK(invoke({"expand", "-1", "3"}).code == 2);
  CHECK(invoke({"expand", "seven", "3"}).code == 2);
  CHECK(invoke({"expand", "7", "0"}).code == 2);

  r = invoke({"expand", "7", "3", "--json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.dump() == R"({"a":7,"d":3,"terms":[[4,3],[3,2]],"upper_shift":9,"derivative":2})");
}

TEST_CASE("shift") {
  auto r = invoke({"shift", "3", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3^<2> = 4\n");
  r = invoke({"shift", "7", "3", "--derivative", "--json"});
  CHECK(Json::parse(r.out)["derivative"] == 2);
}

TEST_CASE("segment") {
  auto r = invoke({"segment", "-n", "3", "-u", "x1*x3^2", "-v", "x2^3", "--json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["completely"] == false);
  CHECK(j["gotzmann"] == false);
  CHECK(j["route"] == "thm43");

  r = invoke({"segment", "-n", "3", "-u", "x1^2", "-v", "x2*x3", "--json"});
  j = Json::parse(r.out);
  CHECK(j["initial"] == true);
  CHECK(j["gotzmann"] == true);

  r = invoke({"segment", "-n", "3", "-u", "[1,1,0]", "-v", "[0,1,1]", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gotzmann: true (thm34)") != std::string::npos);
  CHECK(r.out.find("oracle: true") != std::string::npos);

  CHECK(invoke({"segment", "-n", "3", "-u", "x2^3", "-v", "x1*x3^2"}).code == 2);
  CHECK(invoke({"segment", "-n", "3", "-u", "x1^2", "-v", "x2^3"}).code == 2);
  CHECK(invoke({"segment", "-n", "3", "-u", "x4", "-v", "x3"}).code == 2);
  CHECK(invoke({"segment", "-n", "3", "-u", "x1", "-v", "x3", "--colour"}).code == 2);
}

TEST_CASE("ideal subcommands") {
  auto r = invoke({"ideal", "componentwise"}, kExample);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("componentwise_lexsegment: true") != std::string::npos);
  CHECK(r.out.find("witness: L(x1*x3^2, x2^3)") != std::string::npos);
  CHECK(r.out.find("degree 4: L(x1^2*x3^2, x2^3*x3)") != std::string::npos);

  r = invoke({"ideal", "componentwise", "--json"}, kExample);
  auto j = Json::parse(r.out);
  CHECK(j["witness"]["u"] == "x1*x3^2");
  CHECK(j["witness"]["v"] == "x2^3");

  r = invoke({"ideal", "hilbert", "--to", "4", "--json"}, kExample);
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["hilbert"]["3"] == 2);
  CHECK(j["hilbert"]["4"] == 7);
  CHECK(j["quotient"]["4"] == 8);

  r = invoke({"ideal", "hilbert", "--to", "3", "--json"}, R"({"n": 2, "generators": []})");
  j = Json::parse(r.out);
  for (const auto& [q, h] : j["hilbert"].items()) CHECK(h == 0);

  r = invoke({"ideal", "lexify", "--to", "4"}, kExample);
  CHECK(r.out == "x1^3\nx1^2*x2\nx1^2*x3^2\nx1*x2^3\n");

  r = invoke({"ideal", "gotzmann", "--json"}, R"({"n": 3, "generators": ["x2^2*x3", "x2*x3^2"]})");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["gotzmann"] == true);

  r = invoke({"ideal", "gotzmann"}, kExample);
  CHECK(r.code == 2);
  CHECK(r.err.find("share one degree") != std::string::npos);

  CHECK(invoke({"ideal", "hilbert"}, "{\"n\": 3,").code == 2);
  CHECK(invoke({"ideal", "hilbert", "/nonexistent/ideal.json"}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "-n", "2", "-d", "3"});
  CHECK(r.out == "x1^3\nx1^2*x2\nx1*x2^2\nx2^3\n");
  r = invoke({"enumerate", "-n", "3", "-d", "2", "-u", "x1*x2", "-v", "x2*x3", "--json"});
  CHECK(Json::parse(r.out) == Json::parse(R"(["x1*x2","x1*x3","x2^2","x2*x3"])"));
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "thm34", "--n", "3", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "thm34: pass (41 cases)\n");
  CHECK(r.err.find("thm34:") != std::string::npos);

  r = invoke({"verify", "lemma32", "--c", "2000", "--d", "12", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["passed"] == true);

  CHECK(invoke({"verify", "thm99"}).code == 2);
  CHECK(invoke({"verify", "thm43", "--n", "40", "--d", "40"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"expand", "7", "3", "--bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("enumeration cap from the environment") {
  ::setenv("LEXGOTZ_ENUM_CAP", "5", 1);
  const auto capped = invoke({"enumerate", "-n", "3", "-d", "2"});
  ::setenv("LEXGOTZ_ENUM_CAP", "zero", 1);
  const auto malformed = invoke({"enumerate", "-n", "3", "-d", "2"});
  ::unsetenv("LEXGOTZ_ENUM_CAP");
  CHECK(capped.code == 2);
  CHECK(malformed.code == 2);
  CHECK(invoke({"enumerate", "-n", "3", "-d", "2"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"segment", "-n", "4", "-u", "x1*x2*x4", "-v", "x2*x3^2", "--json"};
  CHECK(invoke(args).out == invoke(args).out);
}
