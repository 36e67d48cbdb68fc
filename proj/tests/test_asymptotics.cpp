#include "cdc/asymptotics.hpp"
#include "cdc/bounds_lower.hpp"
#include "cdc/tables.hpp"
#include "doctest.h"

using namespace cdc;

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("LMRD vs singleton limit values") {
  CHECK(lmrd_singleton_ratio_limit(2, 4, 2) == Rat(1, 2));  // k = d/2
  CHECK(lmrd_singleton_ratio_limit(3, 4, 3) == Rat(16, 27));
  // large-k limit stays above the infinite product
  auto inf = q_pochhammer(2, std::nullopt, 8);
  for (int k = 2; k <= 12; ++k)
    CHECK(lmrd_singleton_ratio_limit(2, 4, k) > inf.lo);
  CHECK(lmrd_singleton_ratio_limit(2, 4, 12) > Rat(288788, 1000000));
}

TEST_CASE("LMRD vs anticode limit values") {
  // d=4: denominator is the single factor (1 - 1/q)
  CHECK(lmrd_anticode_ratio_limit(2, 4, 3) == Rat(21, 32));
  for (std::uint32_t q : {2u, 3u})
    for (int k = 2; k <= 10; ++k)
      CHECK(lmrd_anticode_ratio_limit(q, 4, k) ==
            q_pochhammer_finite(q, k) / (Rat(1) - Rat(1, q)));
  // the global worst case stays strictly above 0.577576
  auto inf = q_pochhammer(2, std::nullopt, 8);
  CHECK(2 * inf.lo > Rat(577576, 1000000));
  for (int k = 2; k <= 14; ++k)
    CHECK(lmrd_anticode_ratio_limit(2, 4, k) > Rat(577576, 1000000));
}

TEST_CASE("finite ratios decrease monotonically in v") {
  for (std::uint32_t q : {2u, 3u})
    for (int k : {2, 3, 4}) {
      const int d = 4;
      Rat prev_s = 0, prev_a = 0;
      for (int v = 2 * k; v <= 40; ++v) {
        Rat s = lmrd_singleton_ratio(q, v, d, k);
        Rat a = lmrd_anticode_ratio(q, v, d, k);
        if (v > 2 * k) {
          CHECK(s < prev_s);
          CHECK(a < prev_a);
        }
        CHECK(s > lmrd_singleton_ratio_limit(q, d, k));
        CHECK(a > lmrd_anticode_ratio_limit(q, d, k));
        prev_s = s;
        prev_a = a;
      }
      // the finite values converge to the limit
      CHECK(lmrd_singleton_ratio(q, 40, d, k) -
                lmrd_singleton_ratio_limit(q, d, k) <
            Rat(1, 1000000));
    }
}

TEST_CASE("q-binomial over power ratio approaches the pochhammer limit") {
  for (std::uint32_t q : {2u, 3u})
    for (int b : {1, 2, 3}) {
      Rat limit = Rat(1) / q_pochhammer_finite(q, b);
      Rat prev_diff = -1;
      for (int a = 1; a <= 30; ++a) {
        Rat ratio(q_binomial(a + b, b, q),
                  int_pow(q, static_cast<std::uint64_t>(a) * b));
        ratio.canonicalize();
        Rat diff = limit - ratio;  // approach from below
        CHECK(diff > 0);
        if (a > 1) CHECK(diff < prev_diff);
        prev_diff = diff;
      }
    }
}

TEST_CASE("progression vs anticode limit on the survey instance") {
  RatInterval a13(Rat(1597245));
  RatInterval a7(Rat(333), Rat(381));
  auto iv = linkage_anticode_limit(2, 4, 3, 13, 6, a13, a7);
  // the quoted enclosure
  CHECK(iv.lo >= Rat(99963386, 100000000));
  CHECK(iv.hi <= Rat(99963388, 100000000));
  // degenerate second input: pure power ratio
  auto degenerate = linkage_anticode_limit(2, 4, 3, 13, 6, a13, RatInterval(Rat(0)));
  Rat expect = Rat(1597245) * Rat(21, 32) / Rat(int_pow(2u, 20));
  CHECK(degenerate.lo == expect);
  CHECK(degenerate.hi == expect);
}

TEST_CASE("progression ratio converges to the limit from finite l") {
  // compare the closed-form lower bound at l = 10 against the limit interval
  Int a13 = 1597245, a7 = 333;
  auto pb = arithmetic_progression_lower(2, 4, 3, 13, 6, 10, a13, a7);
  int v = 13 + 6 * 10;
  Rat anticode(q_binomial(v, 3, 2u), 1);
  anticode /= Rat(q_binomial(v - 3 + 1, 1, 2u));
  Rat finite = Rat(pb.form1) / anticode;
  auto iv = linkage_anticode_limit(2, 4, 3, 13, 6, RatInterval(Rat(a13)),
                                   RatInterval(Rat(a7)));
  CHECK(finite > iv.lo - Rat(1, 1000000));
  CHECK(finite < iv.hi + Rat(1, 1000000));
}

TEST_CASE("ratios against the MRD-subclass bound") {
  // survey value at v = 19
  CHECK(format_fixed(better_than_mrd_ratio(2, 19), 6) == "1.305653");
  // the limit-denominator value whose minimum over {19,20,21} is the
  // binary threshold
  Rat v20 = better_than_mrd_liminf(2, 20);
  Rat target(Int("13056442377"), Int("10000000000"));
  target.canonicalize();
  Rat err = v20 - target;
  if (err < 0) err = -err;
  CHECK(err <= Rat(1, 1000000000));
  CHECK(better_than_mrd_liminf(2, 19) >= v20);
  CHECK(better_than_mrd_liminf(2, 21) >= v20);
  CHECK(v20 >= Rat(13056, 10000));
}

TEST_CASE("larger fields exceed the MRD-subclass bound asymptotically") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    // the closed-form limit ratio from the parametric construction
    Rat qr(q);
    Rat bound = 1 + Rat(1, int_pow(q, 3)) -
                Rat(Int(q + 1), int_pow(q, 2) * (int_pow(q, 4) - int_pow(q, 3) -
                                                 int_pow(q, 2) + q + 1));
    CHECK(bound >= 1 + Rat(1, 2 * int_pow(q, 3)));
    // the construction lower bound A_q(v,4;3) >= q^(2v-10)(q^4+q+1)
    for (int v = 12; v <= 18; ++v)
      CHECK(Rat(best_lower_value(q, v, 4, 3)) >=
            Rat(int_pow(q, 2 * v - 10) * (int_pow(q, 4) + q + 1)));
  }
}

TEST_SUITE_END();
