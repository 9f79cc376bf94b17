#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexgotz/monomial.hpp"

namespace lexgotz {

/// A monomial ideal held by its minimal generating set G(I).
///
/// Generators are kept sorted by degree, then descending lex, and pairwise
/// incomparable under divisibility. The zero ideal has no generators.
class MonomialIdeal {
 public:
  /// Minimalizes `generators`; every generator must live in `num_vars` variables.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }

  unsigned min_degree() const;
  unsigned max_degree() const;
  /// The common degree when every generator has the same degree.
  std::optional<unsigned> generated_in_degree() const;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> generators_;
};

/// Drops every monomial divisible by another one in the list (and duplicates).
MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> generators);

/// The ideal generated by L(u, v).
MonomialIdeal segment_ideal(const LexSegment& segment, const Limits& limits = {});

/// Monomials of M_q lying in I, descending lex.
std::vector<Monomial> graded_component(const MonomialIdeal& ideal, unsigned q, const Limits& limits = {});

/// H(I, q)
Natural hilbert(const MonomialIdeal& ideal, unsigned q, const Limits& limits = {});
/// H(S/I, q) = |M_q| - H(I, q)
Natural quotient_hilbert(const MonomialIdeal& ideal, unsigned q, const Limits& limits = {});

struct HilbertTable {
  std::size_t num_vars = 0;
  // q -> H(I, q)
  std::map<unsigned, Natural> values;

  Natural quotient(unsigned q) const;
};

HilbertTable hilbert_table(const MonomialIdeal& ideal, unsigned from, unsigned to, const Limits& limits = {});

/// The lexicographic ideal with the Hilbert function of I in degrees 0..up_to,
/// returned by its minimal generators (all of degree <= up_to).
/// Requires up_to >= the largest generator degree of I.
MonomialIdeal lexify(const MonomialIdeal& ideal, unsigned up_to, const Limits& limits = {});

/// Gotzmann test through persistence: for I generated in degree d,
/// H(S/I, d+1) == H(S/I, d)^<d>. Throws InvalidArgument unless I is nonzero
/// and equigenerated.
bool is_gotzmann_oracle(const MonomialIdeal& ideal, const Limits& limits = {});

/// Gotzmann test by generator count of m*I: |shadow(G(I))| equals the shadow
/// size of the initial lexsegment with |G(I)| elements. Same preconditions.
bool is_gotzmann_by_generator_count(const MonomialIdeal& ideal, const Limits& limits = {});

struct ComponentwiseResult {
  bool holds = false;
  // (u, v) of the lowest-degree component when it is a lexsegment.
  std::optional<LexSegment> witness;
  // Degree-j segments L(x_1^{j-d} u, v x_n^{j-d}) verified explicitly, d <= j <= J.
  std::vector<LexSegment> verified;
  std::string reason;
};

/// Checks every component from the least generator degree d up to J = max
/// generator degree + 1 against L(x_1^{j-d} u, v x_n^{j-d}); degrees beyond J are
/// certified by the degree-J segment being completely lexsegment.
ComponentwiseResult is_componentwise_lexsegment(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace lexgotz
