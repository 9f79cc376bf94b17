#include "lexgotz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace lexgotz {

Json SuiteResult::to_json() const {
  Json out{{"suite", name}, {"passed", passed()}, {"cases", cases}, {"mismatches", mismatches}};
  if (counterexample) out["counterexample"] = *counterexample;
  return out;
}

namespace {

void record(SuiteResult& result, bool agrees, const std::function<Json()>& describe) {
  ++result.cases;
  if (agrees) return;
  ++result.mismatches;
  if (!result.counterexample) result.counterexample = describe();
}

// ---------------------------------------------------------------------------
// Segment sweeps

struct CaseOutcome {
  bool applies = false;
  bool agrees = true;
  Json detail;
};

using SegmentCheck = std::function<CaseOutcome(const LexSegment&)>;

Json segment_json(const LexSegment& segment) {
  return Json{{"n", segment.num_vars()},
              {"d", segment.degree()},
              {"u", format_monomial(segment.upper())},
              {"v", format_monomial(segment.lower())}};
}

std::vector<LexSegment> sweep_cases(const SweepBounds& bounds) {
  if (bounds.n_max == 0 || bounds.d_max == 0) throw InvalidArgument("sweep bounds must be positive");
  std::vector<LexSegment> cases;
  for (std::size_t n = 1; n <= bounds.n_max; ++n) {
    for (unsigned d = 1; d <= bounds.d_max; ++d) {
      const auto all = enumerate_degree(n, d);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t k = i; k < all.size(); ++k) cases.emplace_back(all[i], all[k]);
      }
    }
  }
  return cases;
}

SuiteResult run_sweep(std::string name, const SweepBounds& bounds, const SegmentCheck& check,
                      const Progress& progress) {
  const auto cases = sweep_cases(bounds);
  std::vector<CaseOutcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::uint64_t done = 0;

  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        outcomes[i] = check(cases[i]);
      } catch (const std::exception& e) {
        outcomes[i] = {true, false, Json{{"error", e.what()}}};
      }
      if (progress) {
        std::lock_guard lock(progress_mutex);
        ++done;
        if (done % 256 == 0 || done == cases.size()) progress(done, cases.size());
      }
    }
  };

  unsigned threads = bounds.threads != 0 ? bounds.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cases.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  SuiteResult result{std::move(name)};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!outcomes[i].applies) continue;
    record(result, outcomes[i].agrees, [&] {
      Json out = segment_json(cases[i]);
      for (auto& [key, value] : outcomes[i].detail.items()) out[key] = value;
      return out;
    });
  }
  return result;
}

bool leading_variable_divides(const LexSegment& segment) { return segment.upper().exponent(0) > 0; }

}  // namespace

// ---------------------------------------------------------------------------
// Macaulay calculus

SuiteResult verify_macaulay(std::uint64_t a_max, unsigned d_max) {
  SuiteResult result{"macaulay"};
  for (unsigned d = 1; d <= d_max; ++d) {
    for (std::uint64_t a = 0; a <= a_max; ++a) {
      const auto expansion = macaulay_expand(a, d);
      const auto& terms = expansion.terms();
      bool shaped = expansion.degree() == d;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        shaped = shaped && terms[i].bottom == d - i && terms[i].top >= terms[i].bottom;
        if (i > 0) shaped = shaped && terms[i].top < terms[i - 1].top;
      }
      const Natural shift = upper_shift(a, d);
      const Natural deriv = derivative(a, d);
      const bool agrees = shaped && expansion.value() == a && shift == a + deriv &&
                          shift == expansion.upper_shift() && deriv == expansion.derivative();
      record(result, agrees, [&] {
        return Json{{"a", a}, {"d", d}, {"expansion", format_expansion(expansion)},
                    {"upper_shift", natural_to_json(shift)}, {"derivative", natural_to_json(deriv)}};
      });
    }
  }
  return result;
}

SuiteResult verify_same_derivative(std::uint64_t c_max, unsigned d_max, const Progress& progress) {
  SuiteResult result{"lemma31"};
  for (unsigned d = 1; d <= d_max; ++d) {
    std::vector<MacaulayExpansion> expansions;
    std::vector<Natural> derivatives;
    std::vector<Natural> values;
    expansions.reserve(c_max + 1);
    for (std::uint64_t x = 0; x <= c_max; ++x) {
      expansions.push_back(macaulay_expand(x, d));
      derivatives.push_back(expansions.back().derivative());
      values.emplace_back(x);
    }
    for (std::uint64_t c = 2; c <= c_max; ++c) {
      for (std::uint64_t b = 1; b < c; ++b) {
        const bool predicted = same_derivative_criterion(values[b], expansions[b], values[c]);
        record(result, predicted == (derivatives[b] == derivatives[c]), [&] {
          return Json{{"b", b}, {"c", c}, {"d", d}, {"criterion", predicted},
                      {"b_derivative", natural_to_json(derivatives[b])},
                      {"c_derivative", natural_to_json(derivatives[c])}};
        });
      }
    }
    if (progress) progress(d, d_max);
  }
  return result;
}

SuiteResult verify_vanishing_derivative(std::uint64_t c_max, unsigned d_max) {
  SuiteResult result{"lemma32"};
  for (unsigned d = 1; d <= d_max; ++d) {
    for (std::uint64_t c = 1; c <= c_max; ++c) {
      const Natural deriv = derivative(c, d);
      const bool predicted = vanishing_derivative_criterion(c, d);
      record(result, predicted == (deriv == 0), [&] {
        return Json{{"c", c}, {"d", d}, {"criterion", predicted}, {"derivative", natural_to_json(deriv)}};
      });
    }
  }
  return result;
}

SuiteResult verify_shadow_law(std::size_t n_max, unsigned d_max) {
  SuiteResult result{"shadow-law"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (unsigned d = 1; d <= d_max; ++d) {
      const auto all = enumerate_degree(n, d);
      const auto above = static_cast<std::uint64_t>(monomial_count(n, d + 1));
      // Grow the initial segment one monomial at a time and track its shadow.
      std::vector<Monomial> grown;
      for (std::size_t r = 0; r <= all.size(); ++r) {
        if (r > 0) {
          for (std::size_t i = 0; i < n; ++i) grown.push_back(all[r - 1].times_variable(i));
          std::sort(grown.begin(), grown.end(), std::greater<>());
          grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        }
        const std::uint64_t complement = all.size() - r;
        const Natural predicted = upper_shift(complement, d);
        const std::uint64_t counted = above - grown.size();
        record(result, predicted == counted, [&] {
          return Json{{"n", n}, {"d", d}, {"initial_size", r}, {"counted", counted},
                      {"upper_shift", natural_to_json(predicted)}};
        });
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Segment criteria

SuiteResult verify_completely_criterion(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("thm34", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    if (segment.is_initial() || !leading_variable_divides(segment) || !is_completely_lexsegment(segment)) return out;
    out.applies = true;
    const bool predicted = completely_gotzmann_criterion(segment);
    const bool oracle = is_gotzmann_oracle(segment_ideal(segment));
    out.agrees = predicted == oracle;
    out.detail = Json{{"a", natural_to_json(rank_after(segment.upper()))},
                      {"j", segment.lower().exponent(segment.num_vars() - 1)},
                      {"criterion", predicted}, {"oracle", oracle}};
    return out;
  }, progress);
}

SuiteResult verify_noncompletely_criterion(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("thm43", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    if (segment.is_singleton() || is_completely_lexsegment(segment)) return out;
    out.applies = true;
    const bool predicted = noncompletely_gotzmann_criterion(segment);
    const bool oracle = is_gotzmann_oracle(segment_ideal(segment));
    out.agrees = predicted == oracle;
    out.detail = Json{{"criterion", predicted}, {"oracle", oracle}};
    return out;
  }, progress);
}

namespace {

// Exhaustive linear-quotients verdict for the segment ideal; a budget overrun
// is reported as a mismatch by the caller.
LinearQuotientsResult exhaustive_quotients(const MonomialIdeal& ideal) {
  return has_linear_quotients(ideal, OrderStrategy::exhaustive);
}

Json order_json(const std::vector<Monomial>& order) {
  Json out = Json::array();
  for (const auto& m : order) out.push_back(format_monomial(m));
  return out;
}

}  // namespace

SuiteResult verify_taylor_equivalence(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("thm42", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    const MonomialIdeal ideal = segment_ideal(segment);
    const auto quotients = exhaustive_quotients(ideal);
    if (quotients.verdict == Verdict::no) return out;
    out.applies = true;
    if (quotients.verdict == Verdict::inconclusive) {
      out.agrees = false;
      out.detail = Json{{"error", "linear-quotients search ran out of budget"}};
      return out;
    }
    const auto triple = taylor_equivalence(ideal, quotients.order);
    out.agrees = triple.all_equal();
    out.detail = Json{{"taylor_minimal", triple.taylor_minimal},
                      {"max_m", triple.max_m},
                      {"generators", ideal.size()},
                      {"gotzmann_within_n", triple.gotzmann_within_n},
                      {"order", order_json(quotients.order)}};
    return out;
  }, progress);
}

SuiteResult verify_taylor_shape(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("thm41", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    const MonomialIdeal ideal = segment_ideal(segment);
    const auto quotients = exhaustive_quotients(ideal);
    if (quotients.verdict == Verdict::no) return out;
    out.applies = true;
    const Limits limits;
    const bool minimal = ideal.size() <= limits.taylor_generators ? taylor_is_minimal(ideal, limits)
                                                                  : taylor_is_minimal_by_divisibility(ideal);
    const bool shaped = taylor_shape_criterion(ideal);
    out.agrees = quotients.verdict == Verdict::yes && minimal == shaped;
    out.detail = Json{{"taylor_minimal", minimal}, {"shape", shaped},
                      {"linear_quotients", std::string(to_string(quotients.verdict))}};
    return out;
  }, progress);
}

SuiteResult verify_initial_segments(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("initial", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    if (!segment.is_initial()) return out;
    out.applies = true;
    out.agrees = is_gotzmann_oracle(segment_ideal(segment));
    out.detail = Json{{"oracle", out.agrees}};
    return out;
  }, progress);
}

SuiteResult verify_classification(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("classify", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    out.applies = true;
    const auto report = classify(segment);
    const MonomialIdeal ideal = segment_ideal(segment);
    const bool oracle = is_gotzmann_oracle(ideal);
    const bool by_count = is_gotzmann_by_generator_count(ideal);
    const std::size_t n = segment.num_vars();
    const unsigned d = segment.degree();

    bool route_sound = true;
    switch (report.route) {
      case GotzmannRoute::completely_criterion:
        route_sound = report.completely && !report.initial && leading_variable_divides(segment);
        break;
      case GotzmannRoute::noncompletely_criterion:
        route_sound = !report.completely && !segment.is_singleton();
        break;
      case GotzmannRoute::subring_power:
        route_sound = report.completely && !leading_variable_divides(segment);
        break;
      case GotzmannRoute::initial_shortcut:
        route_sound = report.initial;
        break;
      case GotzmannRoute::principal_shortcut:
        route_sound = segment.is_singleton();
        break;
    }
    const bool formula = report.c == monomial_count(n, d) - (report.a + 1) + report.b;
    const bool sized = report.size == lexsegment_set(segment).size() && ideal.size() == report.size;

    out.agrees = report.gotzmann == oracle && oracle == by_count && route_sound && formula && sized;
    out.detail = Json{{"route", std::string(to_string(report.route))},
                      {"gotzmann", report.gotzmann},
                      {"oracle", oracle},
                      {"generator_count_oracle", by_count},
                      {"route_sound", route_sound},
                      {"formula", formula},
                      {"size_consistent", sized}};
    return out;
  }, progress);
}

SuiteResult verify_linear_shape(const SweepBounds& bounds, const Progress& progress) {
  return run_sweep("shape", bounds, [](const LexSegment& segment) {
    CaseOutcome out;
    if (segment.is_singleton() || is_completely_lexsegment(segment)) return out;
    const auto quotients = exhaustive_quotients(segment_ideal(segment));
    if (quotients.verdict == Verdict::no) return out;
    out.applies = true;
    const auto shaped = noncompletely_linear_shape(segment);
    out.agrees = quotients.verdict == Verdict::yes && shaped.value_or(true);
    const auto reduced = reduce_segment(segment).segment;
    out.detail = Json{{"reduced_u", format_monomial(reduced.upper())},
                      {"reduced_v", format_monomial(reduced.lower())},
                      {"reduced_completely", !shaped.has_value()}};
    return out;
  }, progress);
}

// ---------------------------------------------------------------------------

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"macaulay", "lemma31", "lemma32", "shadow-law", "initial",
                                                   "classify", "thm34",   "thm43",   "thm42",      "thm41",
                                                   "shape"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options, const Progress& progress) {
  if (name == "macaulay") return verify_macaulay(options.a_max, options.macaulay_d_max);
  if (name == "lemma31") return verify_same_derivative(options.c_max, options.same_derivative_d_max, progress);
  if (name == "lemma32") return verify_vanishing_derivative(options.c_max, options.vanishing_derivative_d_max);
  if (name == "shadow-law") return verify_shadow_law(options.shadow_n_max, options.shadow_d_max);
  if (name == "initial") return verify_initial_segments(options.sweep, progress);
  if (name == "classify") return verify_classification(options.sweep, progress);
  if (name == "thm34") return verify_completely_criterion(options.sweep, progress);
  if (name == "thm43") return verify_noncompletely_criterion(options.sweep, progress);
  if (name == "thm42") return verify_taylor_equivalence(options.sweep, progress);
  if (name == "thm41") return verify_taylor_shape(options.sweep, progress);
  if (name == "shape") return verify_linear_shape(options.sweep, progress);
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

}  // namespace lexgotz
