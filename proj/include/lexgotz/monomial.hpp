#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lexgotz/common.hpp"
#include "lexgotz/macaulay.hpp"

namespace lexgotz {

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
///
/// Variable positions are 0-based in the API (position i is x_{i+1}); the
/// text grammar in serialize.hpp is 1-based. For monomials of equal degree
/// the defaulted ordering is the lexicographic order with x_1 > ... > x_n.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t num_vars);
  static Monomial variable(std::size_t num_vars, std::size_t position, Exponent power = 1);

  std::size_t num_vars() const { return exponents_.size(); }
  unsigned degree() const { return degree_; }
  Exponent exponent(std::size_t position) const { return exponents_.at(position); }
  std::span<const Exponent> exponents() const { return exponents_; }

  /// 1-based index of the last variable with positive exponent, 0 for the unit.
  std::size_t max_variable() const;
  /// 1-based index of the first variable with positive exponent, 0 for the unit.
  std::size_t min_variable() const;

  bool divides(const Monomial& other) const;
  Monomial times_variable(std::size_t position, Exponent power = 1) const;
  /// Exact quotient; throws InvalidArgument if `divisor` does not divide *this.
  Monomial divided_by(const Monomial& divisor) const;
  /// *this / gcd(*this, other): the generator that `other` contributes to a colon ideal.
  Monomial colon(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
  unsigned degree_ = 0;
};

/// Lexicographic comparison; throws InvalidArgument on mismatched n or degree.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

Monomial lcm(std::span<const Monomial> monomials);
Monomial gcd(std::span<const Monomial> monomials);

/// |M_d| = C(n + d - 1, d).
Natural monomial_count(std::size_t num_vars, unsigned degree);

/// Successor of m in descending lex enumeration of its degree; nullopt at x_n^d.
std::optional<Monomial> next_lower(const Monomial& m);

/// All monomials of degree d in n variables, descending lex. Subject to the enumeration cap.
std::vector<Monomial> enumerate_degree(std::size_t num_vars, unsigned degree,
                                       const Limits& limits = {});

/// Number of degree-d monomials lex-strictly below v, by the closed-form binomial sum.
Natural rank_after(const Monomial& v);
/// The same sum kept term by term; it is the Macaulay expansion of rank_after(v).
MacaulayExpansion rank_expansion(const Monomial& v);

/// L(u, v) = { w in M_d : u >= w >= v }.
class LexSegment {
 public:
  /// Throws InvalidArgument unless u, v share n and degree and u >= v.
  LexSegment(Monomial upper, Monomial lower);

  std::size_t num_vars() const { return upper_.num_vars(); }
  unsigned degree() const { return upper_.degree(); }
  const Monomial& upper() const { return upper_; }
  const Monomial& lower() const { return lower_; }

  /// rank_after(u) - rank_after(v) + 1
  Natural size() const;
  bool is_singleton() const { return upper_ == lower_; }
  /// u = x_1^d
  bool is_initial() const;
  /// v = x_n^d
  bool is_final() const;
  bool contains(const Monomial& w) const;

  /// L(x_1^k u, v x_n^k)
  LexSegment raised(unsigned k) const;

  friend bool operator==(const LexSegment&, const LexSegment&) = default;

 private:
  Monomial upper_;
  Monomial lower_;
};

/// Elements of the segment, descending lex. Subject to the enumeration cap on its size.
std::vector<Monomial> lexsegment_set(const LexSegment& segment, const Limits& limits = {});

/// { w x_i } over all inputs and variables, deduplicated, descending lex.
/// Throws InvalidArgument if the inputs do not share n and degree.
std::vector<Monomial> shadow(std::span<const Monomial> monomials);

/// Single-shadow test: shadow(L(u, v)) == L(x_1 u, v x_n).
bool is_completely_lexsegment(const LexSegment& segment, const Limits& limits = {});

/// The segment viewed in the ring of the variables it actually uses from the front:
/// leading variables absent from u (hence from every element) are dropped.
struct Restriction {
  LexSegment segment;
  std::size_t dropped_variables = 0;
};
Restriction restrict_leading(const LexSegment& segment);

/// Repeatedly drops unused leading variables and divides out the common power
/// x_1^{nu_1(v)} until x_1 divides u and not v (or the segment is a singleton
/// collapsed to degree 0). Multiplying by a monomial and adding variables both
/// preserve linear quotients, so this is the canonical form for shape checks.
struct Reduction {
  LexSegment segment;
  std::size_t dropped_variables = 0;
  unsigned stripped_degree = 0;
};
Reduction reduce_segment(const LexSegment& segment);

}  // namespace lexgotz
