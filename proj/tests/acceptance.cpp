// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "lexgotz/verify.hpp"
#include "support.hpp"
#include "term_lists.hpp"

using namespace lexgotz;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_suite(const SuiteResult& r) {
  std::string detail = std::to_string(r.cases) + " cases";
  if (!r.passed()) detail += ", " + std::to_string(r.mismatches) + " mismatches, first " + r.counterexample->dump();
  return {r.passed(), detail};
}

Outcome macaulay_calculus() {
  const auto identity = verify_macaulay(10'000, 10);
  if (!identity.passed()) return from_suite(identity);
  std::uint64_t lists = 0;
  for (unsigned d = 1; d <= 10; ++d) {
    const testing::TermLists enumerated(d, 10'000);
    for (std::uint64_t a = 0; a <= 10'000; ++a) {
      if (enumerated.count(a) != 1) {
        return {false, "a=" + std::to_string(a) + " d=" + std::to_string(d) + " has " +
                           std::to_string(enumerated.count(a)) + " term lists"};
      }
      ++lists;
    }
  }
  return {true, std::to_string(identity.cases) + " expansions, " + std::to_string(lists) + " unique term lists"};
}

Outcome worked_example() {
  const auto I = testing::ideal(3, {"x1*x3^2", "x2^3", "x1*x2^2*x3"});
  const auto result = is_componentwise_lexsegment(I);
  const auto degree3 = testing::seg(3, "x1*x3^2", "x2^3");
  const auto degree4 = testing::seg(3, "x1^2*x3^2", "x2^3*x3");
  const bool ok = result.holds && result.witness == degree3 && result.verified.size() >= 2 &&
                  result.verified[1] == degree4 && graded_component(I, 3) == lexsegment_set(degree3) &&
                  graded_component(I, 4) == lexsegment_set(degree4);
  return {ok, ok ? "witness L(x1*x3^2, x2^3), degree 4 L(x1^2*x3^2, x2^3*x3)" : result.reason};
}

}  // namespace

int main() {
  const SweepBounds sweep{4, 4, 0};
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Macaulay calculus: reconstruction, uniqueness, a^<d> = a + a^(d) for a <= 10^4, d <= 10", macaulay_calculus},
      {"same-derivative criterion for 0 < b < c <= 2000, d <= 8",
       [] { return from_suite(verify_same_derivative(2000, 8)); }},
      {"vanishing-derivative criterion for 0 < c <= 2000, d <= 12",
       [] { return from_suite(verify_vanishing_derivative(2000, 12)); }},
      {"shadow-complement law for initial segments, n <= 5, d <= 5",
       [] { return from_suite(verify_shadow_law(5, 5)); }},
      {"completely lexsegment criterion vs oracle, n <= 4, d <= 4",
       [&] { return from_suite(verify_completely_criterion(sweep)); }},
      {"non-completely criterion vs oracle, n <= 4, d <= 4",
       [&] { return from_suite(verify_noncompletely_criterion(sweep)); }},
      {"Taylor / max m(u) / Gotzmann equivalence on linear-quotient segment ideals",
       [&] { return from_suite(verify_taylor_equivalence(sweep)); }},
      {"Taylor minimality equals the shape criterion on linear-quotient segment ideals",
       [&] { return from_suite(verify_taylor_shape(sweep)); }},
      {"worked example (x1*x3^2, x2^3, x1*x2^2*x3) is componentwise lexsegment", worked_example},
      {"initial lexsegment ideals are Gotzmann by the oracle",
       [&] { return from_suite(verify_initial_segments(sweep)); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << v.detail
              << ", " << ms << " ms]\n";
    failed += v.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
