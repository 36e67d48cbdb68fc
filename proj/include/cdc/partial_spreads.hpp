#pragma once

#include <optional>

#include "cdc/bound_value.hpp"

namespace cdc {

/// Parameters of a partial spread query A_q(v, 2k; k): the unique
/// decomposition v = t*k + r with 0 <= r < k.
struct PartialSpreadParams {
  std::uint32_t q;
  int v, k, t, r;

  PartialSpreadParams(std::uint32_t q_, int v_, int k_);
};

/// GF(q)^v contains a k-spread iff k divides v (Segre).
bool spread_exists(std::uint32_t q, int v, int k);

/// Point-counting bound floor((q^v-1)/(q^k-1)).
Int trivial_ps_upper(std::uint32_t q, int v, int k);

/// Beutelspacher's construction size (q^v - q^(k+r) + q^k - 1)/(q^k - 1);
/// requires t >= 2 and 1 <= r <= k-1.
Int beutelspacher_lower(std::uint32_t q, int v, int k);

/// Drake--Freeman upper bound; requires 0 < r < k.  The radical is resolved
/// exactly through isqrt and parity analysis, never through floats.
Int drake_freeman_upper(std::uint32_t q, int v, int k);

/// Nastase--Sissokho exact value, present when k > [r 1]_q.
std::optional<Int> nastase_sissokho_exact(std::uint32_t q, int v, int k);

/// Parametric upper bound l*q^k + 1 + z(q-1), minimised over the admissible
/// (z, u) search space; absent when no parameterisation applies.
std::optional<Int> kurz29_upper(std::uint32_t q, int v, int k);

/// Parametric upper bound with lambda = q^y, minimised over admissible y;
/// ceilings of radical expressions evaluated exactly via isqrt.
std::optional<Int> kurz210_upper(std::uint32_t q, int v, int k);

/// Tightest implemented upper/lower bounds for A_q(v, 2k; k); exact and
/// equal when k | v (spreads) or the Nastase--Sissokho condition holds.
BoundValue ps_best_upper(std::uint32_t q, int v, int k);
BoundValue ps_best_lower(std::uint32_t q, int v, int k);

}  // namespace cdc
