#include "lexgotz/classify.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace lexgotz {

std::string_view to_string(CriterionFault fault) {
  switch (fault) {
    case CriterionFault::not_completely: return "segment is not completely lexsegment";
    case CriterionFault::initial_segment: return "segment is an initial lexsegment";
    case CriterionFault::leading_variable_absent: return "x_1 does not divide the upper end";
    case CriterionFault::completely: return "segment is completely lexsegment";
    case CriterionFault::singleton: return "segment has a single element";
  }
  return "unknown";
}

CriterionPreconditionError::CriterionPreconditionError(CriterionFault fault)
    : InvalidArgument(std::string(to_string(fault))), fault_(fault) {}

bool completely_gotzmann_criterion(const LexSegment& segment, const Limits& limits) {
  if (segment.upper().exponent(0) == 0) throw CriterionPreconditionError(CriterionFault::leading_variable_absent);
  if (segment.is_initial()) throw CriterionPreconditionError(CriterionFault::initial_segment);
  if (!is_completely_lexsegment(segment, limits)) throw CriterionPreconditionError(CriterionFault::not_completely);
  const Natural a = rank_after(segment.upper());
  const unsigned j = segment.lower().exponent(segment.num_vars() - 1);
  return a + j + 1 >= monomial_count(segment.num_vars(), segment.degree());
}

namespace {

// Positions i with g = m * x_i for the common divisor m, or nullopt if some
// generator is not of that form.
std::optional<std::vector<std::size_t>> variable_multiples(std::span<const Monomial> generators) {
  const Monomial common = gcd(generators);
  std::vector<std::size_t> positions;
  for (const auto& g : generators) {
    const Monomial q = g.divided_by(common);
    if (q.degree() != 1) return std::nullopt;
    positions.push_back(q.min_variable() - 1);
  }
  std::sort(positions.begin(), positions.end());
  return positions;
}

}  // namespace

bool noncompletely_gotzmann_criterion(const LexSegment& segment, const Limits& limits) {
  if (segment.is_singleton()) throw CriterionPreconditionError(CriterionFault::singleton);
  if (is_completely_lexsegment(segment, limits)) throw CriterionPreconditionError(CriterionFault::completely);
  const auto members = lexsegment_set(segment, limits);
  const auto positions = variable_multiples(members);
  if (!positions) return false;
  for (std::size_t i = 1; i < positions->size(); ++i) {
    if ((*positions)[i] != (*positions)[i - 1] + 1) return false;
  }
  return positions->size() >= 2;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<std::vector<std::size_t>> linear_colon_variables(std::span<const Monomial> previous,
                                                               const Monomial& u) {
  std::vector<Monomial> quotients;
  quotients.reserve(previous.size());
  std::vector<std::size_t> variables;
  for (const auto& p : previous) {
    Monomial q = p.colon(u);
    if (q.degree() == 0) return std::nullopt;
    if (q.degree() == 1) variables.push_back(q.min_variable() - 1);
    quotients.push_back(std::move(q));
  }
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  for (const auto& q : quotients) {
    const bool covered = std::any_of(variables.begin(), variables.end(),
                                     [&](std::size_t i) { return q.exponent(i) > 0; });
    if (!covered) return std::nullopt;
  }
  return variables;
}

bool is_admissible_order(std::span<const Monomial> order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!linear_colon_variables(order.first(i), order[i])) return false;
  }
  return true;
}

namespace {

std::vector<Monomial> greedy_order(std::span<const Monomial> generators) {
  std::vector<Monomial> chosen;
  std::vector<Monomial> rest(generators.begin(), generators.end());
  while (!rest.empty()) {
    auto next = std::find_if(rest.begin(), rest.end(), [&](const Monomial& m) {
      return chosen.empty() || linear_colon_variables(chosen, m).has_value();
    });
    if (next == rest.end()) return {};
    chosen.push_back(std::move(*next));
    rest.erase(next);
  }
  return chosen;
}

// Depth-first search over sets of already placed generators. A set that cannot
// be completed is remembered, so each set is expanded at most once.
class OrderSearch {
 public:
  OrderSearch(std::span<const Monomial> generators, std::uint64_t budget)
      : generators_(generators),
        full_(generators.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << generators.size()) - 1),
        budget_(budget) {}

  bool run() { return extend(0); }
  bool out_of_budget() const { return out_of_budget_; }
  std::uint64_t visited() const { return visited_; }

  std::vector<Monomial> order() const {
    std::vector<Monomial> out;
    for (std::size_t k : path_) out.push_back(generators_[k]);
    return out;
  }

 private:
  bool extend(std::uint64_t placed) {
    if (placed == full_) return true;
    if (dead_.contains(placed)) return false;
    if (++visited_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    std::vector<Monomial> previous;
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      if (placed >> k & 1U) previous.push_back(generators_[k]);
    }
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (placed & bit) continue;
      if (!previous.empty() && !linear_colon_variables(previous, generators_[k])) continue;
      path_.push_back(k);
      if (extend(placed | bit)) return true;
      if (out_of_budget_) return false;
      path_.pop_back();
    }
    dead_.insert(placed);
    return false;
  }

  std::span<const Monomial> generators_;
  std::uint64_t full_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::size_t> path_;
  std::unordered_set<std::uint64_t> dead_;
};

LinearQuotientsResult accepted(std::vector<Monomial> order, bool exhaustive, std::uint64_t visited = 0) {
  return {Verdict::yes, std::move(order), exhaustive, visited};
}

}  // namespace

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, OrderStrategy strategy,
                                           const Limits& limits) {
  if (!ideal.generated_in_degree()) {
    throw InvalidArgument("linear quotients check needs a nonzero ideal generated in one degree");
  }
  const auto& gens = ideal.generators();  // descending lex
  const std::size_t cap = std::min<std::size_t>(limits.exhaustive_generators, 64);
  if (strategy == OrderStrategy::exhaustive && gens.size() > cap) {
    throw CapExceeded("exhaustive linear-quotients search over " + std::to_string(gens.size()) +
                      " generators exceeds the cap of " + std::to_string(cap));
  }
  if (gens.size() == 1) return accepted(gens, true);

  if (strategy != OrderStrategy::ascending_lex && is_admissible_order(gens)) return accepted(gens, false);
  if (strategy == OrderStrategy::descending_lex) return {};

  std::vector<Monomial> ascending(gens.rbegin(), gens.rend());
  if (is_admissible_order(ascending)) return accepted(std::move(ascending), false);
  if (strategy == OrderStrategy::ascending_lex) return {};

  if (auto greedy = greedy_order(gens); !greedy.empty()) return accepted(std::move(greedy), false);
  if (gens.size() > cap) return {};

  OrderSearch search(gens, limits.exhaustive_states);
  if (search.run()) return accepted(search.order(), true, search.visited());
  if (search.out_of_budget()) return {Verdict::inconclusive, {}, false, search.visited()};
  return {Verdict::no, {}, true, search.visited()};
}

std::optional<TaylorUnit> find_taylor_unit(const MonomialIdeal& ideal, const Limits& limits) {
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > limits.taylor_generators || r > 63) {
    throw CapExceeded("Taylor subset enumeration over " + std::to_string(r) + " generators exceeds the cap of " +
                      std::to_string(limits.taylor_generators));
  }
  const std::uint64_t end = std::uint64_t{1} << r;
  // Smallest subsets first, so the witness is as small as possible.
  for (std::size_t size = 2; size <= r; ++size) {
    // Gosper's hack walks the masks with exactly `size` bits set.
    for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < end;) {
      std::vector<Monomial> subset;
      for (std::size_t k = 0; k < r; ++k) {
        if (mask >> k & 1U) subset.push_back(gens[k]);
      }
      const Monomial whole = lcm(subset);
      for (std::size_t s = 0; s < subset.size(); ++s) {
        std::vector<Monomial> rest = subset;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
        if (lcm(rest) == whole) return TaylorUnit{subset, subset[s]};
      }
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

bool taylor_is_minimal(const MonomialIdeal& ideal, const Limits& limits) {
  return !find_taylor_unit(ideal, limits).has_value();
}

bool taylor_is_minimal_by_divisibility(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.size() < 2) return true;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    std::vector<Monomial> others = gens;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(s));
    if (gens[s].divides(lcm(others))) return false;
  }
  return true;
}

bool taylor_shape_criterion(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return false;
  if (gens.size() == 1) return gens.front().degree() >= 1;
  return variable_multiples(gens).has_value();
}

TaylorEquivalence taylor_equivalence(const MonomialIdeal& ideal, std::span<const Monomial> admissible_order,
                                     const Limits& limits) {
  std::vector<Monomial> sorted(admissible_order.begin(), admissible_order.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (!ideal.generated_in_degree() || sorted != ideal.generators()) {
    throw InvalidArgument("order is not a permutation of the generators of an equigenerated ideal");
  }
  TaylorEquivalence out;
  out.max_m = 1;
  for (std::size_t k = 1; k < admissible_order.size(); ++k) {
    const auto colon = linear_colon_variables(admissible_order.first(k), admissible_order[k]);
    if (!colon) throw InvalidArgument("order is not admissible for linear quotients");
    out.max_m = std::max(out.max_m, colon->size() + 1);
  }
  const std::size_t r = ideal.size();
  out.max_m_matches = out.max_m == r;
  out.taylor_minimal = r <= limits.taylor_generators ? taylor_is_minimal(ideal, limits)
                                                     : taylor_is_minimal_by_divisibility(ideal);
  out.gotzmann_within_n = r <= ideal.num_vars() && is_gotzmann_oracle(ideal, limits);
  for (const auto& g : ideal.generators()) out.generator_max_variable = std::max(out.generator_max_variable, g.max_variable());
  return out;
}

std::optional<bool> noncompletely_linear_shape(const LexSegment& segment, const Limits& limits) {
  const LexSegment reduced = reduce_segment(segment).segment;
  if (reduced.degree() == 0 || is_completely_lexsegment(reduced, limits)) return std::nullopt;
  const auto& u = reduced.upper();
  const auto& v = reduced.lower();
  const std::size_t n = reduced.num_vars();
  const unsigned d = reduced.degree();
  if (u.exponent(0) != 1) return false;
  // v = x_l x_n^{d-1} fixes l; then u must avoid x_2, ..., x_l.
  const std::size_t l = v.min_variable();
  if (l < 2 || l >= n) return false;
  if (v != Monomial::variable(n, l - 1) * Monomial::variable(n, n - 1, d - 1)) return false;
  for (std::size_t i = 1; i < l; ++i) {
    if (u.exponent(i) != 0) return false;
  }
  return true;
}

std::string_view to_string(GotzmannRoute route) {
  switch (route) {
    case GotzmannRoute::initial_shortcut: return "initial-shortcut";
    case GotzmannRoute::principal_shortcut: return "principal-shortcut";
    case GotzmannRoute::completely_criterion: return "thm34";
    case GotzmannRoute::noncompletely_criterion: return "thm43";
    case GotzmannRoute::subring_power: return "subring-power";
  }
  return "unknown";
}

ClassificationReport classify(const LexSegment& segment, const Limits& limits) {
  if (segment.degree() == 0) throw InvalidArgument("classification needs segments of positive degree");
  const std::size_t n = segment.num_vars();
  const unsigned d = segment.degree();

  ClassificationReport report{.segment = segment};
  report.leading_variable = segment.upper().min_variable();
  report.a = rank_after(segment.upper());
  report.b = rank_after(segment.lower());
  report.size = report.a - report.b + 1;
  report.c = monomial_count(n, d) - report.size;
  report.j = segment.lower().exponent(n - 1);
  report.initial = segment.is_initial();
  report.completely = is_completely_lexsegment(segment, limits);

  if (report.initial) {
    report.route = GotzmannRoute::initial_shortcut;
    report.gotzmann = true;
  } else if (segment.is_singleton()) {
    report.route = GotzmannRoute::principal_shortcut;
    report.gotzmann = true;
  } else if (report.completely && segment.upper().exponent(0) > 0) {
    report.route = GotzmannRoute::completely_criterion;
    report.gotzmann = completely_gotzmann_criterion(segment, limits);
  } else if (report.completely) {
    if (segment.upper() != Monomial::variable(n, 1, d) || !segment.is_final()) {
      throw InternalError("completely lexsegment without x_1 | u is not L(x_2^d, x_n^d)");
    }
    // H(S/I, d+1) = H(S/I, d) = c here, so Gotzmann means c^(d) = 0.
    report.route = GotzmannRoute::subring_power;
    report.gotzmann = vanishing_derivative_criterion(report.c, d);
  } else {
    report.route = GotzmannRoute::noncompletely_criterion;
    report.gotzmann = noncompletely_gotzmann_criterion(segment, limits);
  }

  const MonomialIdeal ideal = segment_ideal(segment, limits);
  report.linear_quotients = has_linear_quotients(ideal, OrderStrategy::automatic, limits);
  report.componentwise_lexsegment = is_componentwise_lexsegment(ideal, limits).holds;
  report.taylor_minimal = taylor_is_minimal_by_divisibility(ideal);
  return report;
}

}  // namespace lexgotz
