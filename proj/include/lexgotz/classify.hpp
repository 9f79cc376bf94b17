#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexgotz/ideal.hpp"

namespace lexgotz {

// ---------------------------------------------------------------------------
// Gotzmann criteria for lexsegment ideals

/// Why a closed-form criterion refused its input.
enum class CriterionFault {
  not_completely,
  initial_segment,
  leading_variable_absent,
  completely,
  singleton,
};

std::string_view to_string(CriterionFault fault);

class CriterionPreconditionError : public InvalidArgument {
 public:
  explicit CriterionPreconditionError(CriterionFault fault);
  CriterionFault fault() const { return fault_; }

 private:
  CriterionFault fault_;
};

/// Completely lexsegment, not initial, x_1 | u: Gotzmann iff
/// rank_after(u) >= C(n+d-1, d) - (nu_n(v) + 1).
bool completely_gotzmann_criterion(const LexSegment& segment, const Limits& limits = {});

/// Non-completely, at least two elements: Gotzmann iff the segment is
/// m * {x_l, x_{l+1}, ..., x_{l+p}} for a monomial m and p >= 1.
bool noncompletely_gotzmann_criterion(const LexSegment& segment, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Linear quotients

enum class OrderStrategy { descending_lex, ascending_lex, exhaustive, automatic };
enum class Verdict { yes, no, inconclusive };

std::string_view to_string(Verdict verdict);

struct LinearQuotientsResult {
  Verdict verdict = Verdict::inconclusive;
  // An admissible order when verdict == yes.
  std::vector<Monomial> order;
  // Whether every ordering was (implicitly) examined.
  bool exhaustive = false;
  std::uint64_t states_visited = 0;
};

/// Variable positions generating (previous) : u, or nullopt when that colon
/// ideal is not generated by variables. An empty `previous` yields an empty list.
std::optional<std::vector<std::size_t>> linear_colon_variables(std::span<const Monomial> previous,
                                                               const Monomial& u);

bool is_admissible_order(std::span<const Monomial> order);

/// Requires an equigenerated ideal. The fixed-order strategies report `no`
/// only as `inconclusive`; `exhaustive` searches subsets of generators (the
/// colon ideal depends only on the set of earlier generators) and throws
/// CapExceeded above Limits::exhaustive_generators. `automatic` tries the
/// lex orders and a greedy order first, then the exhaustive search when under
/// the cap, and reports inconclusive otherwise.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, OrderStrategy strategy,
                                           const Limits& limits = {});

// ---------------------------------------------------------------------------
// Taylor resolution

struct TaylorUnit {
  std::vector<Monomial> subset;
  Monomial dropped;
};

/// Searches subsets T of G(I), |T| >= 2, for an s with lcm(T) == lcm(T \ {s}),
/// i.e. a unit coefficient of the Taylor differential. Throws CapExceeded above
/// Limits::taylor_generators.
std::optional<TaylorUnit> find_taylor_unit(const MonomialIdeal& ideal, const Limits& limits = {});
bool taylor_is_minimal(const MonomialIdeal& ideal, const Limits& limits = {});

/// Same answer without subset enumeration: a unit exists iff some generator
/// divides the lcm of the others.
bool taylor_is_minimal_by_divisibility(const MonomialIdeal& ideal);

/// G(I) = m * {x_{i_1}, ..., x_{i_l}} for a monomial m and distinct variables.
bool taylor_shape_criterion(const MonomialIdeal& ideal);

struct TaylorEquivalence {
  bool taylor_minimal = false;
  // Largest m(u) over the admissible order, where m(u) is one more than the number
  // of variables generating the colon ideal at u. On a stable ideal in descending lex
  // order this is the index of the last variable of u.
  std::size_t max_m = 0;
  bool max_m_matches = false;
  bool gotzmann_within_n = false;
  // max{ last variable index of u : u in G(I) }, read off the generators directly.
  std::size_t generator_max_variable = 0;

  bool all_equal() const { return taylor_minimal == max_m_matches && max_m_matches == gotzmann_within_n; }
};

/// Evaluates the three conditions for an equigenerated ideal with linear quotients.
/// Throws InvalidArgument when `admissible_order` is not an admissible order of G(I).
TaylorEquivalence taylor_equivalence(const MonomialIdeal& ideal, std::span<const Monomial> admissible_order,
                                     const Limits& limits = {});

/// For a segment with linear quotients: after reduce_segment, either the reduced
/// segment is completely (nullopt, no shape is claimed) or whether it has the form
/// u = x_1 x_{l+1}^{a_{l+1}} ... x_n^{a_n}, v = x_l x_n^{d-1} with 2 <= l < n.
std::optional<bool> noncompletely_linear_shape(const LexSegment& segment, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Classification

enum class GotzmannRoute {
  initial_shortcut,
  principal_shortcut,
  completely_criterion,
  noncompletely_criterion,
  // The only completely segments with x_1 not dividing u are L(x_2^d, x_n^d),
  // i.e. (x_2, ..., x_n)^d, whose quotient Hilbert function is flat from d to d+1.
  subring_power,
};

std::string_view to_string(GotzmannRoute route);

struct ClassificationReport {
  LexSegment segment;
  // 1-based index of the first variable dividing u.
  std::size_t leading_variable = 1;
  Natural size{};
  bool initial = false;
  bool completely = false;
  bool gotzmann = false;
  GotzmannRoute route = GotzmannRoute::initial_shortcut;
  LinearQuotientsResult linear_quotients{};
  bool componentwise_lexsegment = false;
  bool taylor_minimal = false;
  Natural a{};  // rank_after(u)
  Natural b{};  // rank_after(v)
  Natural c{};  // C(n+d-1, d) - |L(u, v)|
  unsigned j = 0;  // nu_n(v)
};

ClassificationReport classify(const LexSegment& segment, const Limits& limits = {});

}  // namespace lexgotz
