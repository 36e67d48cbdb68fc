#include "cdc/partial_spreads.hpp"

#include <algorithm>

#include "cdc/errors.hpp"
#include "cdc/field.hpp"

namespace cdc {

PartialSpreadParams::PartialSpreadParams(std::uint32_t q_, int v_, int k_)
    : q(q_), v(v_), k(k_) {
  if (!is_prime_power(q_)) throw ParameterError("q must be a prime power");
  if (k_ < 1 || k_ > v_) throw ParameterError("need 1 <= k <= v");
  t = v_ / k_;
  r = v_ % k_;
}

bool spread_exists(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  return p.r == 0;
}

Int trivial_ps_upper(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  return (int_pow(q, v) - 1) / (int_pow(q, k) - 1);
}

Int beutelspacher_lower(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0) throw ParameterError("k divides v; use the spread value");
  if (p.t < 2) throw ParameterError("needs t >= 2");
  Int num = int_pow(q, v) - int_pow(q, k + p.r) + int_pow(q, k) - 1;
  Int r;
  Int den = int_pow(q, k) - 1;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

Int drake_freeman_upper(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0) throw ParameterError("k divides v; use the spread value");
  // 2*theta = sqrt(D) - c with D = 1 + 4 q^k (q^k - q^r), c = 2q^k - 2q^r + 1.
  Int qk = int_pow(q, k), qr = int_pow(q, p.r);
  Int D = 1 + 4 * qk * (qk - qr);
  Int c = 2 * qk - 2 * qr + 1;
  auto s = isqrt(D);
  // floor((sqrt(D) - c)/2) equals floor((f - c)/2) both for exact roots and
  // for sqrt(D) in (f, f+1): c is odd, so the open interval never straddles
  // an integer boundary of the halved expression.
  Int theta_floor;
  Int num = s.root - c;
  mpz_fdiv_q_ui(theta_floor.get_mpz_t(), num.get_mpz_t(), 2);
  Int lead = qr * (int_pow(q, static_cast<std::uint64_t>(k) * p.t) - 1);
  Int den = qk - 1;
  mpz_divexact(lead.get_mpz_t(), lead.get_mpz_t(), den.get_mpz_t());
  return lead - theta_floor - 1;
}

std::optional<Int> nastase_sissokho_exact(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0 || p.t < 1) return std::nullopt;
  if (Int(k) <= q_binomial(p.r, 1, q)) return std::nullopt;
  Int num = int_pow(q, v) - int_pow(q, k + p.r) + int_pow(q, k) - 1;
  Int res;
  Int den = int_pow(q, k) - 1;
  mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return res;
}

namespace {

// l = (q^(v-k) - q^r)/(q^k - 1), exact for v = kt + r with t >= 2.
Int ps_ell(std::uint32_t q, int v, int k, int r) {
  Int num = int_pow(q, v - k) - int_pow(q, r);
  Int den = int_pow(q, k) - 1;
  Int l;
  mpz_divexact(l.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return l;
}

}  // namespace

std::optional<Int> kurz29_upper(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0 || p.t < 2) return std::nullopt;
  Int gr = q_binomial(p.r, 1, q);
  // Admissible z: u = k - ([r 1]_q + 1 - z) >= 0 and 2z <= [r 1]_q.  The
  // bound l q^k + 1 + z(q-1) increases with z, so the minimum sits at the
  // smallest admissible z.
  Int z = gr + 1 - k;
  if (z < 0) z = 0;
  if (2 * z > gr) return std::nullopt;
  Int l = ps_ell(q, v, k, p.r);
  return l * int_pow(q, k) + 1 + z * (q - 1);
}

std::optional<Int> kurz210_upper(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0 || p.t < 2) return std::nullopt;
  Int gr = q_binomial(p.r, 1, q);
  Int z = gr + 1 - k;  // forced by k = [r 1]_q + 1 - z
  if (z < 0) return std::nullopt;
  Int l = ps_ell(q, v, k, p.r);
  std::optional<Int> best;
  for (int y = std::max(p.r, 2); y <= k; ++y) {
    Int lambda = int_pow(q, y);
    // radicand 1 + 4*lambda*(lambda - (z+y-1)(q-1) - 1)
    Int rad = 1 + 4 * lambda * (lambda - (z + y - 1) * (q - 1) - 1);
    if (rad < 0) continue;
    auto s = isqrt(rad);
    // ceil(lambda - 1/2 - sqrt(rad)/2) = ceil((2*lambda - 1 - sqrt(rad))/2)
    Int term;
    if (s.exact) {
      Int num = 2 * lambda - 1 - s.root;
      mpz_cdiv_q_ui(term.get_mpz_t(), num.get_mpz_t(), 2);
    } else {
      // sqrt(rad) in (f, f+1): the expression lies strictly between
      // (2l-2-f)/2 and (2l-1-f)/2, so the ceiling is floor((2l-2-f)/2)+1.
      Int num = 2 * lambda - 2 - s.root;
      mpz_fdiv_q_ui(term.get_mpz_t(), num.get_mpz_t(), 2);
      term += 1;
    }
    Int val = l * int_pow(q, k) + term;
    if (!best || val < *best) best = val;
  }
  return best;
}

BoundValue ps_best_upper(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0) return {trivial_ps_upper(q, v, k), "spread"};
  if (p.t < 2) return {1, "ambient-too-small"};  // two k-spaces need v >= 2k
  BoundValue best{trivial_ps_upper(q, v, k), "trivial-count"};
  auto consider = [&](std::optional<Int> val, const char* name) {
    if (val && *val < best.value) best = {*val, name};
  };
  consider(drake_freeman_upper(q, v, k), "drake-freeman");
  consider(nastase_sissokho_exact(q, v, k), "nastase-sissokho");
  consider(kurz29_upper(q, v, k), "kurz-2.9");
  consider(kurz210_upper(q, v, k), "kurz-2.10");
  return best;
}

BoundValue ps_best_lower(std::uint32_t q, int v, int k) {
  PartialSpreadParams p(q, v, k);
  if (p.r == 0) return {trivial_ps_upper(q, v, k), "spread"};
  if (p.t < 2) return {1, "single-codeword"};
  return {beutelspacher_lower(q, v, k), "beutelspacher"};
}

}  // namespace cdc
