#include "cdc/asymptotics.hpp"

#include "cdc/bounds_lower.hpp"
#include "cdc/errors.hpp"

namespace cdc {

namespace {

Rat exact_ratio(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

}  // namespace

Rat lmrd_singleton_ratio(std::uint32_t q, int v, int d, int k) {
  if (k > v - k) throw ParameterError("requires k <= v - k");
  return exact_ratio(lifted_mrd_size(q, k, v, d),
                     q_binomial(v - d / 2 + 1, v - k, q));
}

Rat lmrd_singleton_ratio_limit(std::uint32_t q, int d, int k) {
  return q_pochhammer_finite(q, static_cast<unsigned>(k - d / 2 + 1));
}

Rat lmrd_anticode_ratio(std::uint32_t q, int v, int d, int k) {
  if (k > v - k) throw ParameterError("requires k <= v - k");
  Int anticode_num = q_binomial(v, k, q);
  Int anticode_den = q_binomial(v - k + d / 2 - 1, d / 2 - 1, q);
  // unrounded anticode value; the ratio stays exact as a rational
  return exact_ratio(lifted_mrd_size(q, k, v, d) * anticode_den, anticode_num);
}

Rat lmrd_anticode_ratio_limit(std::uint32_t q, int d, int k) {
  return q_pochhammer_finite(q, static_cast<unsigned>(k)) /
         q_pochhammer_finite(q, static_cast<unsigned>(d / 2 - 1));
}

RatInterval linkage_anticode_limit(std::uint32_t q, int d, int k, int v0,
                                   int s, const RatInterval& a_v0,
                                   const RatInterval& a_shift) {
  if (k > v0 || 2 * s < d || d % 2 != 0 || k < d / 2)
    throw ParameterError("linkage_anticode_limit preconditions");
  const int kp = k - d / 2 + 1;
  Rat geom_den(int_pow(q, static_cast<std::uint64_t>(s) * kp) - 1);
  Rat scale(1, int_pow(q, static_cast<std::uint64_t>(v0 - k) * kp));
  scale.canonicalize();
  Rat prod = 1;
  for (int i = d / 2; i <= k; ++i) {
    Rat f(int_pow(q, i) - 1, int_pow(q, i));
    f.canonicalize();
    prod *= f;
  }
  auto eval = [&](const Rat& av, const Rat& ash) -> Rat {
    return (av + ash / geom_den) * scale * prod;
  };
  // increasing in both arguments
  return RatInterval(eval(a_v0.lo, a_shift.lo), eval(a_v0.hi, a_shift.hi));
}

Rat better_than_mrd_ratio(std::uint32_t q, int v) {
  Int lower = best_lower_value(q, v, 4, 3);
  Int mrdb = int_pow(q, 2 * v - 6) + q_binomial(v - 3, 2, q);
  return exact_ratio(std::move(lower), std::move(mrdb));
}

Rat better_than_mrd_liminf(std::uint32_t q, int v0) {
  Int lower = best_lower_value(q, v0, 4, 3);
  // limit denominator: q^(2 v0 - 10) (q^4 + q^3/((q-1)^2 (q+1)))
  Rat poch2_inv(int_pow(q, 3), Int(q - 1) * (q - 1) * (q + 1));
  poch2_inv.canonicalize();
  Rat den = Rat(int_pow(q, 2 * v0 - 10)) * (Rat(int_pow(q, 4)) + poch2_inv);
  return Rat(lower) / den;
}

}  // namespace cdc
