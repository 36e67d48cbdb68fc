#include "cdc/combinatorics.hpp"

#include "cdc/errors.hpp"

namespace cdc {

Int int_pow(const Int& q, std::uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Int int_pow(std::uint32_t q, std::uint64_t e) { return int_pow(Int(q), e); }

Int q_binomial(long v, long k, const Int& q) {
  if (v < 0) throw ParameterError("q_binomial requires v >= 0");
  if (q < 1) throw ParameterError("q_binomial requires q >= 1");
  if (k < 0 || k > v) return 0;
  if (q == 1) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(v),
                 static_cast<unsigned long>(k));
    return r;
  }
  if (k > v - k) k = v - k;
  // running product of [v-k+i i]_q, exact division at every step
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= int_pow(q, static_cast<std::uint64_t>(v - k + i)) - 1;
    Int den = int_pow(q, static_cast<std::uint64_t>(i)) - 1;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
  }
  return r;
}

Int q_binomial(long v, long k, std::uint32_t q) {
  return q_binomial(v, k, Int(q));
}

Int count_close_subspaces(std::uint32_t q, int v, int k, int m, int t) {
  if (!(0 <= t && t <= k && k <= v && k - t <= m && m <= v))
    throw ParameterError("count_close_subspaces parameter range");
  Int total = 0;
  for (int i = 0; i <= t; ++i) {
    if (k - i > m || i > v - m) continue;  // vanishing q-binomial factor
    Int term = int_pow(q, static_cast<std::uint64_t>(m + i - k) * i);
    term *= q_binomial(m, k - i, q);
    term *= q_binomial(v - m, i, q);
    total += term;
  }
  return total;
}

Int lifted_mrd_size(std::uint32_t q, int k, int v, int d) {
  if (d % 2 != 0) throw ParameterError("lifted MRD size requires even d");
  if (k < 0 || k > v) throw ParameterError("lifted MRD size requires 0 <= k <= v");
  int lo = std::min(k, v - k), hi = std::max(k, v - k);
  if (d > 2 * lo) return 1;
  return int_pow(q, static_cast<std::uint64_t>(hi) * (lo - d / 2 + 1));
}

SqrtResult isqrt(const Int& n) {
  if (n < 0) throw ParameterError("isqrt of negative value");
  SqrtResult r;
  Int rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = rem == 0;
  return r;
}

Rat q_pochhammer_finite(std::uint32_t q, unsigned n) {
  if (q < 2) throw ParameterError("q_pochhammer requires q >= 2");
  Rat r = 1;
  for (unsigned i = 1; i <= n; ++i) {
    Rat f(int_pow(q, i) - 1, int_pow(q, i));
    f.canonicalize();
    r *= f;
  }
  return r;
}

RatInterval q_pochhammer(std::uint32_t q, std::optional<unsigned> n,
                         unsigned precision) {
  if (n.has_value()) return RatInterval(q_pochhammer_finite(q, *n));
  // partial product P_N times a tail in [1 - sum_{i>N} q^-i, 1]
  Int bound = int_pow(10u, precision);
  unsigned N = 1;
  while (int_pow(q, N) * (q - 1) < bound) ++N;
  Rat pn = q_pochhammer_finite(q, N);
  Rat tail(1, int_pow(q, N) * (q - 1));  // sum_{i>N} q^-i = q^-N/(q-1)
  tail.canonicalize();
  return RatInterval(pn * (Rat(1) - tail), pn);
}

}  // namespace cdc
