#pragma once

#include <functional>
#include <optional>

#include "cdc/bound_value.hpp"

namespace cdc {

/// Trivial resolution of A_q(v,d;k) before any bound formula: the full
/// Grassmannian count for d <= 2 or k <= 1, and 1 when d exceeds
/// 2 min{k, v-k}.  Returns nullopt for nontrivial parameters.
std::optional<Int> trivial_code_size(std::uint32_t q, int v, int d, int k);

BoundValue sphere_packing_upper(std::uint32_t q, int v, int d, int k);
BoundValue singleton_upper(std::uint32_t q, int v, int d, int k);
BoundValue anticode_upper(std::uint32_t q, int v, int d, int k);

/// Applicable iff (q^k-1)^2 > (q^v-1)(q^(k-d/2)-1), which happens exactly
/// for d = 2 min{k, v-k}.
std::optional<BoundValue> johnson_I_upper(std::uint32_t q, int v, int d, int k);

/// One Johnson II step: min of the two branch values fed by `lookup`, a
/// provider of upper values for (v-1, d, k-1) and (v-1, d, k).
BoundValue johnson_II_step(std::uint32_t q, int v, int d, int k,
                           const std::function<Int(int, int)>& lookup);

/// Fully iterated Johnson II bound, applying the dimension-reducing branch
/// after normalising to k <= v/2, down to the partial-spread base case.
BoundValue johnson_iterated_upper(std::uint32_t q, int v, int d, int k);

/// Counting bound for one admissible pair (t, m); inner code sizes come from
/// the aggregator with this bound itself excluded, which keeps the recursion
/// finite.
std::optional<BoundValue> ahlswede_upper(std::uint32_t q, int v, int d, int k,
                                         int t, int m);
std::optional<BoundValue> ahlswede_best(std::uint32_t q, int v, int d, int k);

/// Upper bound for codes that contain a lifted MRD subcode; valid only for
/// v >= 2k with d = 2(k-1), k >= 3, or d = k even.  Reported separately and
/// never folded into the unconditional best upper bound.
std::optional<BoundValue> mrd_containing_upper(std::uint32_t q, int v, int d,
                                               int k);

/// Best unconditional upper bound (memoised); safe for concurrent use.
Int best_upper_value(std::uint32_t q, int v, int d, int k);

/// All applicable upper bounds with provenance plus the aggregated best.
BoundReport upper_bound_report(std::uint32_t q, int v, int d, int k);

}  // namespace cdc
