#include "cdc/combinatorics.hpp"
#include "cdc/errors.hpp"
#include "doctest.h"

using namespace cdc;

TEST_SUITE_BEGIN("combinatorics");

TEST_CASE("q-binomial quoted values") {
  CHECK(q_binomial(6, 4, 2u) == 651);
  CHECK(q_binomial(7, 3, 2u) == 11811);
  CHECK(q_binomial(8, 4, 2u) == 200787);
  CHECK(q_binomial(4, 2, 2u) == 35);
  CHECK(q_binomial(6, 3, 2u) == 1395);
}

TEST_CASE("q-binomial conventions") {
  CHECK(q_binomial(5, -1, 2u) == 0);
  CHECK(q_binomial(3, 4, 2u) == 0);
  CHECK(q_binomial(5, 0, 2u) == 1);
  CHECK(q_binomial(5, 5, 2u) == 1);
  // q = 1 degenerates to the ordinary binomial
  CHECK(q_binomial(6, 2, 1u) == 15);
  // q need not be a prime power
  CHECK(q_binomial(3, 1, 6u) == 43);
  CHECK_THROWS_AS(q_binomial(-1, 0, 2u), ParameterError);
}

TEST_CASE("pascal recurrence and symmetry") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (long v = 1; v <= 30; ++v)
      for (long k = 0; k <= v; ++k) {
        CHECK(q_binomial(v, k, q) == int_pow(q, k) * q_binomial(v - 1, k, q) +
                                         q_binomial(v - 1, k - 1, q));
        CHECK(q_binomial(v, k, q) == q_binomial(v, v - k, q));
      }
  }
}

TEST_CASE("counting subspaces with large intersection") {
  // every 2-space meets the full space in dimension 2
  CHECK(count_close_subspaces(2, 4, 2, 4, 0) == 35);
  CHECK(count_close_subspaces(2, 4, 2, 2, 1) == 19);
  // the sphere-packing denominator at (2,8,6,4): m=k, 2t = d/2-1
  CHECK(count_close_subspaces(2, 8, 4, 4, 1) == 451);
  CHECK_THROWS_AS(count_close_subspaces(2, 4, 2, 1, 0), ParameterError);
}

TEST_CASE("lifted MRD sizes") {
  CHECK(lifted_mrd_size(2, 3, 7, 4) == 256);
  CHECK(lifted_mrd_size(2, 3, 7, 6) == 16);
  CHECK(lifted_mrd_size(2, 3, 4, 4) == 1);
  CHECK_THROWS_AS(lifted_mrd_size(2, 3, 7, 3), ParameterError);
}

TEST_CASE("integer square root") {
  CHECK(isqrt(Int(0)).root == 0);
  CHECK(isqrt(Int(0)).exact);
  CHECK(isqrt(Int(129)).root == 11);
  CHECK(!isqrt(Int(129)).exact);
  CHECK(isqrt(Int(4096)).root == 64);
  CHECK(isqrt(Int(4096)).exact);
  Int big = int_pow(10u, 30) + 12345;
  CHECK(isqrt(big).root * isqrt(big).root <= big);
  CHECK((isqrt(big).root + 1) * (isqrt(big).root + 1) > big);
}

TEST_CASE("q-pochhammer exact values") {
  CHECK(q_pochhammer_finite(2, 0) == 1);
  CHECK(q_pochhammer_finite(2, 2) == Rat(3, 8));
  CHECK(q_pochhammer_finite(2, 1) == Rat(1, 2));
  auto point = q_pochhammer(2, 2, 10);
  CHECK(point.lo == point.hi);
  CHECK(point.lo == Rat(3, 8));
}

TEST_CASE("q-pochhammer infinite product enclosure") {
  auto iv = q_pochhammer(2, std::nullopt, 7);
  CHECK(iv.width() <= Rat(1, int_pow(10u, 7)));
  CHECK(iv.lo > Rat(288788, 1000000));
  CHECK(iv.hi < Rat(288789, 1000000));
  // the reciprocal matches the quoted 3.4627
  CHECK(Rat(1) / iv.hi > Rat(34626, 10000));
  CHECK(Rat(1) / iv.lo < Rat(34628, 10000));
  // enclosures are nested as precision increases
  auto coarse = q_pochhammer(2, std::nullopt, 3);
  CHECK(coarse.contains(iv));
  auto fine = q_pochhammer(2, std::nullopt, 12);
  CHECK(iv.contains(fine));
}

TEST_CASE("sandwich bounds for q-binomials") {
  for (std::uint32_t q : {2u, 3u}) {
    for (long v = 2; v <= 14; ++v)
      for (long k = 1; k < v; ++k) {
        Rat ratio(q_binomial(v, k, q),
                  int_pow(q, static_cast<std::uint64_t>(k) * (v - k)));
        ratio.canonicalize();
        CHECK(ratio >= 1);
        CHECK(ratio <= Rat(1) / q_pochhammer_finite(q, static_cast<unsigned>(k)));
      }
  }
}

TEST_SUITE_END();
