#include "lexgotz/macaulay.hpp"

#include <utility>

namespace lexgotz {

Natural binomial(const Natural& n, std::uint64_t k) {
  if (Natural(k) > n) return 0;
  // C(n, k) = C(n, n - k); keep the loop short.
  std::uint64_t steps = k;
  if (n - k < k) steps = static_cast<std::uint64_t>(n - k);
  Natural result = 1;
  for (std::uint64_t i = 1; i <= steps; ++i) {
    // Each prefix product is itself C(n - steps + i, i), so the division is exact.
    result *= n - steps + i;
    result /= i;
  }
  return result;
}

Natural binomial(std::uint64_t n, std::uint64_t k) { return binomial(Natural(n), k); }

MacaulayExpansion::MacaulayExpansion(unsigned degree, std::vector<BinomialTerm> terms)
    : degree_(degree), terms_(std::move(terms)) {
  if (degree_ == 0) throw InvalidArgument("Macaulay expansion degree must be positive");
  unsigned expected_bottom = degree_;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& term = terms_[i];
    if (expected_bottom == 0 || term.bottom != expected_bottom) {
      throw InvalidArgument("Macaulay expansion bottoms must be consecutive and descending from d");
    }
    if (term.top < term.bottom) {
      throw InvalidArgument("Macaulay expansion term has top smaller than bottom");
    }
    if (i > 0 && !(term.top < terms_[i - 1].top)) {
      throw InvalidArgument("Macaulay expansion tops must strictly decrease");
    }
    --expected_bottom;
  }
}

unsigned MacaulayExpansion::lowest_bottom() const {
  if (terms_.empty()) throw InvalidArgument("empty expansion has no lowest bottom");
  return terms_.back().bottom;
}

Natural MacaulayExpansion::value() const {
  Natural sum = 0;
  for (const auto& term : terms_) sum += binomial(term.top, term.bottom);
  return sum;
}

Natural MacaulayExpansion::upper_shift() const {
  Natural sum = 0;
  for (const auto& term : terms_) sum += binomial(term.top + 1, term.bottom + 1);
  return sum;
}

Natural MacaulayExpansion::derivative() const {
  Natural sum = 0;
  for (const auto& term : terms_) sum += binomial(term.top, term.bottom + 1);
  return sum;
}

namespace {

// Largest t with C(t, k) <= a, for a >= 1 and k >= 1; the answer is at least k.
Natural largest_top(const Natural& a, unsigned k) {
  if (k == 1) return a;
  Natural low = k;  // C(k, k) = 1 <= a
  Natural high = Natural(k) * 2;
  while (binomial(high, k) <= a) {
    low = high;
    high *= 2;
  }
  // Invariant: C(low, k) <= a < C(high, k).
  while (high - low > 1) {
    Natural mid = (low + high) / 2;
    if (binomial(mid, k) <= a) {
      low = std::move(mid);
    } else {
      high = std::move(mid);
    }
  }
  return low;
}

}  // namespace

MacaulayExpansion macaulay_expand(const Natural& a, unsigned d) {
  if (d == 0) throw InvalidArgument("Macaulay expansion degree must be positive");
  if (a < 0) throw InvalidArgument("Macaulay expansion of a negative integer");
  std::vector<BinomialTerm> terms;
  Natural rest = a;
  for (unsigned k = d; k >= 1 && rest > 0; --k) {
    Natural top = largest_top(rest, k);
    rest -= binomial(top, k);
    terms.push_back({std::move(top), k});
  }
  if (rest != 0) throw InternalError("greedy Macaulay expansion left a remainder");
  return MacaulayExpansion(d, std::move(terms));
}

Natural upper_shift(const Natural& a, unsigned d) { return macaulay_expand(a, d).upper_shift(); }

Natural derivative(const Natural& a, unsigned d) { return macaulay_expand(a, d).derivative(); }

bool same_derivative_criterion(const Natural& b, const Natural& c, unsigned d) {
  if (!(b > 0) || !(c > b)) throw InvalidArgument("derivative criterion requires c > b > 0");
  return same_derivative_criterion(b, macaulay_expand(b, d), c);
}

bool same_derivative_criterion(const Natural& b, const MacaulayExpansion& b_expansion, const Natural& c) {
  if (!(b > 0) || !(c > b)) throw InvalidArgument("derivative criterion requires c > b > 0");
  const unsigned j = b_expansion.lowest_bottom();
  return j >= 2 && c - b <= j - 1;
}

bool vanishing_derivative_criterion(const Natural& c, unsigned d) {
  if (!(c > 0)) throw InvalidArgument("vanishing derivative criterion requires c > 0");
  if (d == 0) throw InvalidArgument("Macaulay expansion degree must be positive");
  return c <= d;
}

}  // namespace lexgotz
