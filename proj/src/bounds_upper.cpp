#include "cdc/bounds_upper.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "cdc/errors.hpp"
#include "cdc/field.hpp"
#include "cdc/partial_spreads.hpp"

namespace cdc {

namespace {

void check_params(std::uint32_t q, int v, int d, int k) {
  if (!is_prime_power(q)) throw ParameterError("q must be a prime power");
  if (v < 0 || k < 0 || k > v) throw ParameterError("need 0 <= k <= v");
  if (d < 0 || d % 2 != 0) throw ParameterError("d must be a non-negative even integer");
}

int normalized_k(int v, int k) { return std::min(k, v - k); }

Int aggregate_upper(std::uint32_t q, int v, int d, int k, bool allow_ahlswede);

}  // namespace

std::optional<Int> trivial_code_size(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  int kk = normalized_k(v, k);
  if (d <= 2) return q_binomial(v, k, q);
  if (d > 2 * kk) return Int(1);
  return std::nullopt;  // now k >= 2, 4 <= d <= 2 min{k, v-k}
}

BoundValue sphere_packing_upper(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  if (auto t = trivial_code_size(q, v, d, k)) return {*t, "sphere-packing"};
  int kk = normalized_k(v, k);
  Int denom = 0;
  for (int i = 0; i <= (d / 2 - 1) / 2; ++i)
    denom += int_pow(q, static_cast<std::uint64_t>(i) * i) *
             q_binomial(kk, i, q) * q_binomial(v - kk, i, q);
  return {q_binomial(v, k, q) / denom, "sphere-packing"};
}

BoundValue singleton_upper(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  if (auto t = trivial_code_size(q, v, d, k)) return {*t, "singleton"};
  return {q_binomial(v - d / 2 + 1, std::max(k, v - k), q), "singleton"};
}

BoundValue anticode_upper(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  if (auto t = trivial_code_size(q, v, d, k)) return {*t, "anticode"};
  Int denom = q_binomial(std::max(k, v - k) + d / 2 - 1, d / 2 - 1, q);
  return {q_binomial(v, k, q) / denom, "anticode"};
}

std::optional<BoundValue> johnson_I_upper(std::uint32_t q, int v, int d,
                                          int k) {
  check_params(q, v, d, k);
  if (k < 1 || d / 2 > k) return std::nullopt;
  Int qk = int_pow(q, k);
  Int lhs = (qk - 1) * (qk - 1);
  Int rhs = (int_pow(q, v) - 1) * (int_pow(q, k - d / 2) - 1);
  if (lhs <= rhs) return std::nullopt;
  Int num = (qk - int_pow(q, k - d / 2)) * (int_pow(q, v) - 1);
  return BoundValue{num / (lhs - rhs), "johnson-I"};
}

BoundValue johnson_II_step(std::uint32_t q, int v, int d, int k,
                           const std::function<Int(int, int)>& lookup) {
  check_params(q, v, d, k);
  if (k < 1 || k > v - 1)
    throw ParameterError("johnson step needs 1 <= k <= v-1");
  Int qv = int_pow(q, v) - 1;
  Int a = qv * lookup(v - 1, k - 1) / (int_pow(q, k) - 1);
  Int b = qv * lookup(v - 1, k) / (int_pow(q, v - k) - 1);
  return {std::min(a, b), "johnson-II"};
}

BoundValue johnson_iterated_upper(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  if (auto t = trivial_code_size(q, v, d, k)) return {*t, "johnson"};
  int kk = normalized_k(v, k);
  // peel codeword dimension down to d/2, then the partial-spread value
  Int val = ps_best_upper(q, v - kk + d / 2, d / 2).value;
  for (int j = d / 2 + 1; j <= kk; ++j) {
    int vv = v - kk + j;
    val = (int_pow(q, vv) - 1) * val / (int_pow(q, j) - 1);
  }
  return {val, "johnson"};
}

std::optional<BoundValue> ahlswede_upper(std::uint32_t q, int v, int d, int k,
                                         int t, int m) {
  check_params(q, v, d, k);
  if (!(0 <= t && t < d / 2 && d / 2 <= k)) return std::nullopt;
  if (!(k - t <= m && m <= v && t <= v - m)) return std::nullopt;
  Int inner = aggregate_upper(q, m, d - 2 * t, k - t, /*allow_ahlswede=*/false);
  Int denom = count_close_subspaces(q, v, k, m, t);
  return BoundValue{q_binomial(v, k, q) * inner / denom, "ahlswede"};
}

std::optional<BoundValue> ahlswede_best(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  if (trivial_code_size(q, v, d, k)) return std::nullopt;
  int kk = normalized_k(v, k);
  std::optional<BoundValue> best;
  for (int t = 0; t < d / 2; ++t)
    for (int m = kk - t; m <= v - t; ++m) {
      if (t == 0 && m == v) continue;  // the identity A <= A, not a bound
      auto b = ahlswede_upper(q, v, d, kk, t, m);
      if (b && (!best || b->value < best->value)) best = b;
    }
  return best;
}

std::optional<BoundValue> mrd_containing_upper(std::uint32_t q, int v, int d,
                                               int k) {
  check_params(q, v, d, k);
  if (v < 2 * k || k < 1) return std::nullopt;
  if (d == 2 * (k - 1) && k >= 3) {
    Int val = int_pow(q, 2 * (v - k)) +
              aggregate_upper(q, v - k, 2 * (k - 2), k - 1, true);
    return BoundValue{val, "mrd-subclass"};
  }
  if (d == k && k % 2 == 0) {
    // middle term q^(v-k-k/2) (q^(k/2)+1) [v-k k/2]_q, exactly divisible
    Int middle = q_binomial(v - k, k / 2, q) *
                 (int_pow(q, v) - int_pow(q, v - k));
    Int den = int_pow(q, k) - int_pow(q, k / 2);
    mpz_divexact(middle.get_mpz_t(), middle.get_mpz_t(), den.get_mpz_t());
    Int val = int_pow(q, static_cast<std::uint64_t>(v - k) * (k / 2 + 1)) +
              middle + aggregate_upper(q, v - k, k, k, true);
    return BoundValue{val, "mrd-subclass"};
  }
  return std::nullopt;
}

namespace {

// Exact values known only from exhaustive computer searches.
std::optional<BoundValue> known_upper_constant(std::uint32_t q, int v, int d,
                                               int kk) {
  if (q == 2 && v == 6 && d == 4 && kk == 3)
    return BoundValue{77, "exact:A2(6,4;3)"};
  if (q == 2 && v == 8 && d == 6 && kk == 4)
    return BoundValue{272, "search:A2(8,6;4)"};
  return std::nullopt;
}

Int aggregate_upper(std::uint32_t q, int v, int d, int k,
                    bool allow_ahlswede) {
  if (auto t = trivial_code_size(q, v, d, k)) return *t;
  int kk = normalized_k(v, k);
  if (d == 2 * kk) return ps_best_upper(q, v, kk).value;

  using Key = std::tuple<std::uint32_t, int, int, int, bool>;
  static std::map<Key, Int> cache;
  static std::mutex mtx;
  Key key{q, v, d, kk, allow_ahlswede};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  Int best = johnson_iterated_upper(q, v, d, kk).value;
  best = std::min(best, sphere_packing_upper(q, v, d, kk).value);
  best = std::min(best, singleton_upper(q, v, d, kk).value);
  best = std::min(best, anticode_upper(q, v, d, kk).value);
  if (auto c = known_upper_constant(q, v, d, kk))
    best = std::min(best, c->value);
  if (allow_ahlswede) {
    if (auto a = ahlswede_best(q, v, d, kk))
      best = std::min(best, a->value);
  }

  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(key, best);
  return best;
}

}  // namespace

Int best_upper_value(std::uint32_t q, int v, int d, int k) {
  return aggregate_upper(q, v, d, k, true);
}

BoundReport upper_bound_report(std::uint32_t q, int v, int d, int k) {
  check_params(q, v, d, k);
  BoundReport rep;
  rep.params = {q, v, d, k};
  if (auto t = trivial_code_size(q, v, d, k)) {
    rep.upper.push_back({*t, d <= 2 ? "full-grassmannian" : "dimension"});
    rep.best_upper = rep.upper.back();
    return rep;
  }
  int kk = normalized_k(v, k);
  if (auto c = known_upper_constant(q, v, d, kk)) rep.upper.push_back(*c);
  if (d == 2 * kk) {
    rep.upper.push_back(ps_best_upper(q, v, kk));
    auto& b = rep.upper.back();
    b.source = "partial-spread:" + b.source;
  }
  rep.upper.push_back(sphere_packing_upper(q, v, d, kk));
  rep.upper.push_back(singleton_upper(q, v, d, kk));
  rep.upper.push_back(anticode_upper(q, v, d, kk));
  rep.upper.push_back(johnson_iterated_upper(q, v, d, kk));
  if (auto j1 = johnson_I_upper(q, v, d, kk)) rep.upper.push_back(*j1);
  if (auto a = ahlswede_best(q, v, d, kk)) rep.upper.push_back(*a);
  rep.best_upper = rep.upper.front();
  for (const auto& b : rep.upper)
    if (b.value < rep.best_upper.value) rep.best_upper = b;
  rep.mrd_subclass_upper = mrd_containing_upper(q, v, d, k);
  return rep;
}

}  // namespace cdc
