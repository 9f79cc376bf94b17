#pragma once

#include <cstdint>
#include <vector>

#include "lexgotz/common.hpp"

namespace lexgotz {

/// Exact C(n, k); zero when k > n.
Natural binomial(const Natural& n, std::uint64_t k);
Natural binomial(std::uint64_t n, std::uint64_t k);

struct BinomialTerm {
  Natural top;
  unsigned bottom = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The d-binomial (Macaulay) expansion a = C(a_d,d) + ... + C(a_j,j).
///
/// Bottoms run d, d-1, ..., j consecutively, tops strictly decrease and every
/// top is at least its bottom. The empty expansion represents zero.
class MacaulayExpansion {
 public:
  /// Validates the invariants above; throws InvalidArgument on violation.
  MacaulayExpansion(unsigned degree, std::vector<BinomialTerm> terms);

  unsigned degree() const { return degree_; }
  const std::vector<BinomialTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Smallest bottom index j. Requires a non-empty expansion.
  unsigned lowest_bottom() const;

  Natural value() const;
  /// sum C(a_i + 1, i + 1)
  Natural upper_shift() const;
  /// sum C(a_i, i + 1)
  Natural derivative() const;

  friend bool operator==(const MacaulayExpansion&, const MacaulayExpansion&) = default;

 private:
  unsigned degree_;
  std::vector<BinomialTerm> terms_;
};

/// Greedy construction of the d-binomial expansion of a. Requires d >= 1.
MacaulayExpansion macaulay_expand(const Natural& a, unsigned d);

/// a^<d>, with 0^<d> = 0.
Natural upper_shift(const Natural& a, unsigned d);

/// a^(d); always satisfies upper_shift(a, d) == a + derivative(a, d).
Natural derivative(const Natural& a, unsigned d);

/// For c > b > 0: true iff b's expansion ends at bottom j >= 2 and c - b <= j - 1.
/// This is the closed-form test for derivative(b, d) == derivative(c, d).
bool same_derivative_criterion(const Natural& b, const Natural& c, unsigned d);
/// Same test with b's expansion precomputed; `b_expansion` must expand b.
bool same_derivative_criterion(const Natural& b, const MacaulayExpansion& b_expansion, const Natural& c);

/// For c > 0: c <= d, the closed-form test for derivative(c, d) == 0.
bool vanishing_derivative_criterion(const Natural& c, unsigned d);

}  // namespace lexgotz
