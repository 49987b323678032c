#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdcalc/subst.hpp"
#include "sdcalc/sum_form.hpp"

namespace sdcalc {

/// k_3, ..., k_c with gamma_i = k_i gamma_{i-1} - gamma_{i-2}. Requires genus
/// 1, length >= 3 and adjacent pairings +1; the closing pair is not used.
std::vector<Int> duality_coefficients(const Circuit& c);

/// sigma_1 = 0, sigma_2 = 1, sigma_i = k_i sigma_{i-1} - sigma_{i-2}.
std::vector<Int> sigma_sequence(const std::vector<Int>& ks);

/// |sigma_c| = 1, i.e. gamma_c is dual to gamma_1 (genus 1).
bool closed_by_recursion(const Circuit& c);

struct ReductionStep {
  std::size_t step;  // 1-based
  Detection detection;
  SumForm delta;
  std::size_t length_after;
};

struct Classification {
  /// One form, or two when the two closures differ after normalization.
  std::vector<CanonicalForm> canonical_forms;
  /// Summands split off during the reduction; closure left Unclosed.
  SumForm reduced;
  std::vector<ReductionStep> trace;
};

struct ClassifyOptions {
  /// Pick uniformly among all available contractions instead of preferring
  /// blow-ups. Any order has to give the same result.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Reduces a closed genus-1 diagram to length 2 by contractions, then closes
/// it off both ways. Throws PreconditionError for genus != 1, twisted or open
/// input; InvariantViolation if no contraction is available on a closed
/// circuit of length >= 3 or if the result contradicts the intersection form.
Classification classify(const Diagram& d, const ClassifyOptions& options = {});

}  // namespace sdcalc
