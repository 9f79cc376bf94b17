#include "lexgotz/ideal.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lexgotz {

namespace {

bool generator_order(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a > b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  if (num_vars_ == 0) throw InvalidArgument("an ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars_) throw InvalidArgument("generator lives in a different ring");
  }
  std::sort(generators.begin(), generators.end(), generator_order);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // After sorting by degree, a divisor always precedes its multiples.
  for (auto& candidate : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& kept) { return kept.divides(candidate); });
    if (!redundant) generators_.push_back(std::move(candidate));
  }
}

unsigned MonomialIdeal::min_degree() const {
  if (is_zero()) throw InvalidArgument("the zero ideal has no generator degrees");
  return generators_.front().degree();
}

unsigned MonomialIdeal::max_degree() const {
  if (is_zero()) throw InvalidArgument("the zero ideal has no generator degrees");
  return generators_.back().degree();
}

std::optional<unsigned> MonomialIdeal::generated_in_degree() const {
  if (is_zero() || min_degree() != max_degree()) return std::nullopt;
  return min_degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> generators) {
  return MonomialIdeal(num_vars, std::move(generators));
}

MonomialIdeal segment_ideal(const LexSegment& segment, const Limits& limits) {
  return MonomialIdeal(segment.num_vars(), lexsegment_set(segment, limits));
}

std::vector<Monomial> graded_component(const MonomialIdeal& ideal, unsigned q, const Limits& limits) {
  if (ideal.is_zero() || q < ideal.min_degree()) return {};
  auto all = enumerate_degree(ideal.num_vars(), q, limits);
  std::erase_if(all, [&](const Monomial& w) { return !ideal.contains(w); });
  return all;
}

Natural hilbert(const MonomialIdeal& ideal, unsigned q, const Limits& limits) {
  return graded_component(ideal, q, limits).size();
}

Natural quotient_hilbert(const MonomialIdeal& ideal, unsigned q, const Limits& limits) {
  return monomial_count(ideal.num_vars(), q) - hilbert(ideal, q, limits);
}

Natural HilbertTable::quotient(unsigned q) const {
  return monomial_count(num_vars, q) - values.at(q);
}

HilbertTable hilbert_table(const MonomialIdeal& ideal, unsigned from, unsigned to, const Limits& limits) {
  HilbertTable table{ideal.num_vars(), {}};
  for (unsigned q = from; q <= to; ++q) table.values.emplace(q, hilbert(ideal, q, limits));
  return table;
}

MonomialIdeal lexify(const MonomialIdeal& ideal, unsigned up_to, const Limits& limits) {
  if (!ideal.is_zero() && up_to < ideal.max_degree()) {
    throw InvalidArgument("lexify horizon lies below the largest generator degree");
  }
  const std::size_t n = ideal.num_vars();
  std::vector<Monomial> generators;
  std::vector<Monomial> previous;  // initial segment of degree q - 1
  for (unsigned q = 0; q <= up_to; ++q) {
    const auto size = static_cast<std::size_t>(hilbert(ideal, q, limits));
    std::vector<Monomial> current;
    if (size > 0) {
      auto all = enumerate_degree(n, q, limits);
      current.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    }
    // Both lists are descending lex, so inclusion is a sorted-range check.
    const auto grown = shadow(previous);
    if (!std::includes(current.begin(), current.end(), grown.begin(), grown.end(), std::greater<>())) {
      throw InternalError("initial lexsegments of I do not form an ideal in degree " + std::to_string(q));
    }
    std::set_difference(current.begin(), current.end(), grown.begin(), grown.end(),
                        std::back_inserter(generators), std::greater<>());
    previous = std::move(current);
  }
  return MonomialIdeal(n, std::move(generators));
}

namespace {

unsigned require_equigenerated(const MonomialIdeal& ideal) {
  const auto degree = ideal.generated_in_degree();
  if (!degree) throw InvalidArgument("Gotzmann test needs a nonzero ideal generated in one degree");
  if (*degree == 0) throw InvalidArgument("Gotzmann test is undefined for the unit ideal");
  return *degree;
}

}  // namespace

bool is_gotzmann_oracle(const MonomialIdeal& ideal, const Limits& limits) {
  const unsigned d = require_equigenerated(ideal);
  const Natural complement = quotient_hilbert(ideal, d, limits);
  return quotient_hilbert(ideal, d + 1, limits) == upper_shift(complement, d);
}

bool is_gotzmann_by_generator_count(const MonomialIdeal& ideal, const Limits& limits) {
  const unsigned d = require_equigenerated(ideal);
  const auto all = enumerate_degree(ideal.num_vars(), d, limits);
  const std::vector<Monomial> initial(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(ideal.size()));
  return shadow(ideal.generators()).size() == shadow(initial).size();
}

ComponentwiseResult is_componentwise_lexsegment(const MonomialIdeal& ideal, const Limits& limits) {
  ComponentwiseResult result;
  if (ideal.is_zero()) {
    result.reason = "zero ideal";
    return result;
  }
  const unsigned d = ideal.min_degree();
  if (d == 0) {
    result.reason = "unit ideal";
    return result;
  }
  const auto base = graded_component(ideal, d, limits);
  const LexSegment lowest(base.front(), base.back());
  if (lexsegment_set(lowest, limits) != base) {
    result.reason = "degree " + std::to_string(d) + " component is not a lexsegment";
    return result;
  }
  result.witness = lowest;
  result.verified.push_back(lowest);
  const unsigned horizon = ideal.max_degree() + 1;
  for (unsigned j = d + 1; j <= horizon; ++j) {
    const auto segment = lowest.raised(j - d);
    if (graded_component(ideal, j, limits) != lexsegment_set(segment, limits)) {
      result.reason = "degree " + std::to_string(j) + " component differs from the raised segment";
      return result;
    }
    result.verified.push_back(segment);
  }
  if (!is_completely_lexsegment(result.verified.back(), limits)) {
    result.reason = "degree " + std::to_string(horizon) + " segment is not completely lexsegment";
    return result;
  }
  result.holds = true;
  return result;
}

}  // namespace lexgotz
