#include <doctest.h>

#include <vector>

#include "lexgotz/macaulay.hpp"
#include "term_lists.hpp"

using namespace lexgotz;

namespace {

std::vector<BinomialTerm> terms(std::initializer_list<std::pair<int, unsigned>> list) {
  std::vector<BinomialTerm> out;
  for (auto [top, bottom] : list) out.push_back({Natural(top), bottom});
  return out;
}

// C(n, k) by the additive recurrence, row by row.
Natural pascal(unsigned n, unsigned k) {
  std::vector<Natural> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Natural> next(r + 1, 1);
    for (unsigned i = 1; i < r; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  return k > n ? Natural(0) : row[k];
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(60, 30) == pascal(60, 30));
  CHECK(binomial(60, 30) == Natural("118264581564861424"));
  CHECK(binomial(Natural(200), 100) == pascal(200, 100));
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == pascal(n, k));
  }
}

TEST_CASE("expansion examples") {
  CHECK(macaulay_expand(0, 5).empty());
  CHECK(macaulay_expand(10, 3).terms() == terms({{5, 3}}));
  CHECK(macaulay_expand(7, 3).terms() == terms({{4, 3}, {3, 2}}));
  CHECK(macaulay_expand(3, 3).terms() == terms({{3, 3}, {2, 2}, {1, 1}}));
  CHECK(macaulay_expand(8, 3).terms() == terms({{4, 3}, {3, 2}, {1, 1}}));
  CHECK(macaulay_expand(7, 3).lowest_bottom() == 2);
}

TEST_CASE("expansion invariants are enforced") {
  CHECK_THROWS_AS(MacaulayExpansion(3, terms({{4, 3}, {4, 2}})), InvalidArgument);
  CHECK_THROWS_AS(MacaulayExpansion(3, terms({{4, 3}, {3, 1}})), InvalidArgument);
  CHECK_THROWS_AS(MacaulayExpansion(3, terms({{2, 3}})), InvalidArgument);
  CHECK_THROWS_AS(MacaulayExpansion(3, terms({{5, 2}})), InvalidArgument);
  CHECK_THROWS_AS(macaulay_expand(4, 0), InvalidArgument);
  CHECK_THROWS_AS(MacaulayExpansion(3, {}).lowest_bottom(), InvalidArgument);
}

TEST_CASE("operators") {
  CHECK(upper_shift(0, 4) == 0);
  CHECK(upper_shift(7, 3) == 9);
  CHECK(upper_shift(3, 2) == 4);
  CHECK(upper_shift(8, 3) == 10);
  CHECK(derivative(0, 3) == 0);
  CHECK(derivative(7, 3) == 2);
  CHECK(derivative(3, 3) == 0);
  CHECK(derivative(8, 3) == 2);
  CHECK(derivative(9, 3) == 3);
  CHECK(derivative(4, 3) == 1);
  CHECK(derivative(5, 3) == 1);
}

TEST_CASE("reconstruction, identity and monotonicity up to 2000") {
  for (unsigned d = 1; d <= 10; ++d) {
    Natural previous_shift = -1;
    for (unsigned a = 0; a <= 2000; ++a) {
      const auto e = macaulay_expand(a, d);
      REQUIRE(e.value() == a);
      REQUIRE(upper_shift(a, d) == a + derivative(a, d));
      REQUIRE(upper_shift(a, d) > previous_shift);
      previous_shift = upper_shift(a, d);
    }
  }
}

TEST_CASE("greedy expansion is the only term list") {
  const std::uint64_t limit = 3000;
  for (unsigned d = 1; d <= 10; ++d) {
    const testing::TermLists lists(d, limit);
    for (std::uint64_t a = 0; a <= limit; ++a) {
      REQUIRE(lists.count(a) == 1);
      if (a == 0) continue;
      std::vector<BinomialTerm> found;
      for (auto [top, bottom] : lists.first(a)) found.push_back({Natural(top), bottom});
      REQUIRE(macaulay_expand(a, d).terms() == found);
    }
  }
}

TEST_CASE("large values stay exact") {
  const Natural a = binomial(500, 7) + binomial(300, 6) + 12345;
  const auto e = macaulay_expand(a, 7);
  CHECK(e.value() == a);
  CHECK(e.terms().front().top == 500);
  CHECK(upper_shift(a, 7) == a + derivative(a, 7));
}

TEST_CASE("same-derivative criterion") {
  CHECK(same_derivative_criterion(7, 8, 3));
  CHECK_FALSE(same_derivative_criterion(7, 9, 3));
  // derivative(4,3) = derivative(5,3) = 1: 4 = C(4,3) ends at j = 3 and c - b = 1 <= 2.
  CHECK(same_derivative_criterion(4, 5, 3));
  CHECK(derivative(4, 3) == derivative(5, 3));
  CHECK_THROWS_AS(same_derivative_criterion(5, 5, 3), InvalidArgument);
  CHECK_THROWS_AS(same_derivative_criterion(6, 5, 3), InvalidArgument);
  CHECK_THROWS_AS(same_derivative_criterion(0, 5, 3), InvalidArgument);
  for (unsigned d = 1; d <= 5; ++d) {
    for (unsigned c = 2; c <= 150; ++c) {
      for (unsigned b = 1; b < c; ++b) {
        REQUIRE(same_derivative_criterion(b, c, d) == (derivative(b, d) == derivative(c, d)));
      }
    }
  }
}

TEST_CASE("vanishing-derivative criterion") {
  CHECK(vanishing_derivative_criterion(3, 3));
  CHECK_FALSE(vanishing_derivative_criterion(4, 3));
  CHECK(vanishing_derivative_criterion(1, 1));
  CHECK_THROWS_AS(vanishing_derivative_criterion(0, 3), InvalidArgument);
  for (unsigned d = 1; d <= 12; ++d) {
    for (unsigned c = 1; c <= 300; ++c) REQUIRE(vanishing_derivative_criterion(c, d) == (derivative(c, d) == 0));
  }
}
