#include <doctest.h>

#include "support.hpp"

using namespace lexgotz;
using testing::mono;
using testing::seg;

TEST_CASE("monomial grammar") {
  CHECK(parse_monomial("[2,0,1]", 3) == Monomial({2, 0, 1}));
  CHECK(parse_monomial(" [ 2 , 0 , 1 ] ", 3) == Monomial({2, 0, 1}));
  CHECK(parse_monomial("x1^2*x3", 3) == Monomial({2, 0, 1}));
  CHECK(parse_monomial("x3*x1^2", 3) == Monomial({2, 0, 1}));
  CHECK(parse_monomial("x2*x2", 3) == Monomial({0, 2, 0}));
  CHECK(parse_monomial("1", 2) == Monomial::one(2));
  CHECK(parse_monomial("x10", 10).exponent(9) == 1);

  for (const char* bad : {"", "x0", "x4", "x1^", "x1**x2", "[1,2]", "[1,2,3,4]", "[1,-2,3]", "y1", "x1^2x3", "[1,2,3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_monomial(bad, 3), InvalidArgument);
  }
}

TEST_CASE("formatting round-trips") {
  CHECK(format_monomial(Monomial({2, 0, 1})) == "x1^2*x3");
  CHECK(format_monomial(Monomial::one(3)) == "1");
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned d = 0; d <= 4; ++d) {
      for (const auto& m : enumerate_degree(n, d)) REQUIRE(parse_monomial(format_monomial(m), n) == m);
    }
  }
  CHECK(format_expansion(macaulay_expand(7, 3)) == "C(4,3)+C(3,2)");
  CHECK(format_expansion(macaulay_expand(0, 3)) == "(empty)");
}

TEST_CASE("ideal JSON") {
  const auto parsed = ideal_from_json(Json::parse(R"({"n": 3, "generators": [[1,0,2],[0,3,0],[1,2,1]]})"));
  const auto strings = ideal_from_json(Json::parse(R"({"n": 3, "generators": ["x1*x3^2", "x2^3", "x1*x2^2*x3"]})"));
  CHECK(parsed == strings);
  CHECK(ideal_from_json(ideal_to_json(parsed)) == parsed);
  CHECK(ideal_to_json(parsed).dump() == R"({"n":3,"generators":[[1,0,2],[0,3,0],[1,2,1]]})");
  CHECK(ideal_from_json(Json::parse(R"({"n": 2, "generators": []})")).is_zero());

  for (const char* bad : {R"([])", R"({"n": 3})", R"({"n": 0, "generators": []})", R"({"n": -1, "generators": []})",
                          R"({"n": 3, "generators": [[1,0]]})", R"({"n": 3, "generators": [true]})",
                          R"({"n": 3, "generators": "x1"})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ideal_from_json(Json::parse(bad)), InvalidArgument);
  }
}

TEST_CASE("numbers and tables") {
  CHECK(natural_to_json(Natural(42)) == Json(42));
  CHECK(natural_to_json(binomial(100, 50)) == Json("100891344545564193334812497256"));

  const auto table = hilbert_table(testing::ideal(3, {"x1*x3^2", "x2^3"}), 2, 4);
  CHECK(hilbert_to_json(table).dump() == R"({"2":0,"3":2,"4":6})");

  CHECK(expansion_to_json(7, 3).dump() == R"({"a":7,"d":3,"terms":[[4,3],[3,2]],"upper_shift":9,"derivative":2})");
}

TEST_CASE("report keys are stable") {
  const auto json = report_to_json(classify(seg(3, "x1*x2", "x2*x3")));
  std::vector<std::string> keys;
  for (const auto& [key, value] : json.items()) keys.push_back(key);
  const std::vector<std::string> expected{"n", "d", "u", "v", "initial", "completely", "gotzmann", "route",
                                          "linear_quotients", "componentwise_lexsegment", "taylor_minimal",
                                          "a", "b", "c", "j", "t", "size", "linear_quotients_verdict",
                                          "linear_quotients_order"};
  CHECK(keys == expected);
  CHECK(json["route"] == "thm34");
  CHECK(json["u"] == "x1*x2");
  CHECK(json["gotzmann"] == true);
}
