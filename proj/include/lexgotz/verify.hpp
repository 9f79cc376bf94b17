#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexgotz/serialize.hpp"

namespace lexgotz {

// Exhaustive verification suites. Each one compares a closed-form criterion
// with an enumeration oracle over a bounded range. Every case is checked and
// the first mismatch in sweep order is kept.

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;       // cases the suite applied to
  std::uint64_t mismatches = 0;
  std::optional<Json> counterexample{};
  bool passed() const { return mismatches == 0; }
  Json to_json() const;
};

/// Called with (done, total) as work progresses; may be invoked from worker threads
/// but never concurrently.
using Progress = std::function<void(std::uint64_t, std::uint64_t)>;

struct SweepBounds {
  std::size_t n_max = 4;
  unsigned d_max = 4;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

/// Reconstruction, strict term structure and a^<d> = a + a^(d) for 0 <= a <= a_max, 1 <= d <= d_max.
SuiteResult verify_macaulay(std::uint64_t a_max, unsigned d_max);

/// same_derivative_criterion(b, c, d) == (b^(d) == c^(d)) for 0 < b < c <= c_max, 1 <= d <= d_max.
SuiteResult verify_same_derivative(std::uint64_t c_max, unsigned d_max, const Progress& progress = {});

/// vanishing_derivative_criterion(c, d) == (c^(d) == 0) for 0 < c <= c_max, 1 <= d <= d_max.
SuiteResult verify_vanishing_derivative(std::uint64_t c_max, unsigned d_max);

/// For every initial lexsegment I_d with n <= n_max, d <= d_max:
/// |M_{d+1} \ shadow| == (|M_d| - |I_d|)^<d>.
SuiteResult verify_shadow_law(std::size_t n_max, unsigned d_max);

/// Every sweep below visits all pairs u >= v in M_d, 1 <= n <= n_max, 1 <= d <= d_max,
/// in the order n, d, then descending lex on u and v.

/// Completely, non-initial, x_1 | u: completely_gotzmann_criterion against the oracle.
SuiteResult verify_completely_criterion(const SweepBounds& bounds, const Progress& progress = {});

/// Non-completely, at least two elements: noncompletely_gotzmann_criterion against the oracle.
SuiteResult verify_noncompletely_criterion(const SweepBounds& bounds, const Progress& progress = {});

/// Segment ideals with linear quotients: the three conditions of TaylorEquivalence agree.
SuiteResult verify_taylor_equivalence(const SweepBounds& bounds, const Progress& progress = {});

/// Segment ideals with linear quotients: taylor_is_minimal == taylor_shape_criterion.
SuiteResult verify_taylor_shape(const SweepBounds& bounds, const Progress& progress = {});

/// Initial lexsegments are Gotzmann by the oracle.
SuiteResult verify_initial_segments(const SweepBounds& bounds, const Progress& progress = {});

/// Every pair: classify's verdict equals both oracles, the route is sound and
/// c == C(n+d-1, d) - (a + 1) + b.
SuiteResult verify_classification(const SweepBounds& bounds, const Progress& progress = {});

/// Non-completely segments with linear quotients (exhaustive search): after
/// reduce_segment they are completely or match the linear-resolution shape.
SuiteResult verify_linear_shape(const SweepBounds& bounds, const Progress& progress = {});

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string_view>& suite_names();

struct SuiteOptions {
  SweepBounds sweep;
  std::uint64_t a_max = 10'000;
  std::uint64_t c_max = 2000;
  unsigned macaulay_d_max = 10;
  unsigned same_derivative_d_max = 8;
  unsigned vanishing_derivative_d_max = 12;
  std::size_t shadow_n_max = 5;
  unsigned shadow_d_max = 5;
};

/// Dispatches by name; throws InvalidArgument for an unknown suite.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options, const Progress& progress = {});

}  // namespace lexgotz
