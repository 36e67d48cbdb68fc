#pragma once

#include "cdc/combinatorics.hpp"

namespace cdc {

/// Finite-v ratio of the lifted-MRD size to the Singleton bound value.
Rat lmrd_singleton_ratio(std::uint32_t q, int v, int d, int k);
/// Its limit (1/q;1/q)_(k-d/2+1) as v grows, exact.
Rat lmrd_singleton_ratio_limit(std::uint32_t q, int d, int k);

/// Finite-v ratio of the lifted-MRD size to the Anticode bound value.
Rat lmrd_anticode_ratio(std::uint32_t q, int v, int d, int k);
/// Its limit (1/q;1/q)_k / (1/q;1/q)_(d/2-1), exact.
Rat lmrd_anticode_ratio_limit(std::uint32_t q, int d, int k);

/// Limit ratio between the arithmetic-progression lower bound a(v0 + l*s)
/// and the Anticode bound as l grows: exact interval propagated from
/// intervals on a(v0) and a(s - d/2 + k).
RatInterval linkage_anticode_limit(std::uint32_t q, int d, int k, int v0,
                                   int s, const RatInterval& a_v0,
                                   const RatInterval& a_shift);

/// Best lower bound for A_q(v,4;3) divided by the MRD-subclass bound
/// q^(2v-6) + [v-3 2]_q, exact.
Rat better_than_mrd_ratio(std::uint32_t q, int v);

/// Best lower bound for A_q(v0,4;3) divided by the v -> infinity limit of
/// the MRD-subclass bound along v = v0 + 3l, i.e. by
/// q^(2 v0 - 10) (q^4 + 1/(1/q;1/q)_2); exact.  This is the quantity whose
/// minimum over v0 in {19,20,21} governs the q = 2 threshold 1.3056.
Rat better_than_mrd_liminf(std::uint32_t q, int v0);

}  // namespace cdc
