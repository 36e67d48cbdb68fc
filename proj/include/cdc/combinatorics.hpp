#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace cdc {

/// Exact arbitrary-precision integer.  Bound values never touch floating
/// point.
using Int = mpz_class;
/// Exact rational.
using Rat = mpq_class;

/// q^e as an exact integer.
Int int_pow(const Int& q, std::uint64_t e);
Int int_pow(std::uint32_t q, std::uint64_t e);

/// Gaussian binomial coefficient [v k]_q.  Zero outside 0 <= k <= v; plain
/// binomial for q = 1; q need not be a prime power.
Int q_binomial(long v, long k, const Int& q);
Int q_binomial(long v, long k, std::uint32_t q);

/// Number of k-spaces of GF(q)^v meeting a fixed m-space in dimension at
/// least k-t:  sum_{i=0..t} q^((m+i-k)i) [m k-i]_q [v-m i]_q.
Int count_close_subspaces(std::uint32_t q, int v, int k, int m, int t);

/// Size M(q,k,v,d) of a lifted MRD code: q^(max{k,v-k}(min{k,v-k}-d/2+1))
/// for even d <= 2 min{k,v-k}, and 1 for larger d.  Throws on odd d.
Int lifted_mrd_size(std::uint32_t q, int k, int v, int d);

struct SqrtResult {
  Int root;    ///< floor(sqrt(n))
  bool exact;  ///< n is a perfect square
};
SqrtResult isqrt(const Int& n);

/// Closed interval with exact rational endpoints.
struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  RatInterval(Rat x) : lo(x), hi(std::move(x)) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
};

/// Finite q-Pochhammer value (1/q;1/q)_n = prod_{i=1..n} (1 - q^-i), exact.
Rat q_pochhammer_finite(std::uint32_t q, unsigned n);

/// Rigorous enclosure of (1/q;1/q)_n of width at most 10^-precision; pass
/// n = nullopt for the infinite product.  Finite n yields a point interval.
RatInterval q_pochhammer(std::uint32_t q, std::optional<unsigned> n,
                         unsigned precision);

}  // namespace cdc
