#include "cdc/bounds_lower.hpp"
#include "cdc/bounds_upper.hpp"
#include "cdc/errors.hpp"
#include "cdc/partial_spreads.hpp"
#include "doctest.h"

using namespace cdc;

TEST_SUITE_BEGIN("bounds_upper");

TEST_CASE("sphere-packing") {
  CHECK(sphere_packing_upper(2, 8, 6, 4).value == 445);
  CHECK(sphere_packing_upper(2, 8, 4, 4).value == 200787);
  CHECK(sphere_packing_upper(2, 8, 2, 4).value == q_binomial(8, 4, 2u));
}

TEST_CASE("singleton") {
  CHECK(singleton_upper(2, 8, 6, 4).value == 651);
  CHECK(singleton_upper(2, 8, 4, 4).value == 11811);
  CHECK(singleton_upper(2, 8, 2, 4).value == q_binomial(8, 4, 2u));
}

TEST_CASE("anticode") {
  CHECK(anticode_upper(2, 6, 4, 3).value == 93);
  // the value for (2,13,4,3) is met with equality by a Steiner structure
  CHECK(anticode_upper(2, 13, 4, 3).value == 1597245);
  CHECK(anticode_upper(2, 6, 2, 3).value == q_binomial(6, 3, 2u));
}

TEST_CASE("johnson type I") {
  auto a = johnson_I_upper(2, 7, 6, 3);
  REQUIRE(a.has_value());
  CHECK(a->value == 18);
  CHECK(!johnson_I_upper(2, 8, 4, 3).has_value());
  auto b = johnson_I_upper(2, 6, 4, 4);  // d = 2(v-k)
  REQUIRE(b.has_value());
  CHECK(b->value == 21);
  // applicability exactly at d = 2 min{k, v-k}
  for (int v = 4; v <= 10; ++v)
    for (int k = 2; k <= v - 2; ++k)
      for (int d = 4; d <= 2 * std::min(k, v - k); d += 2)
        CHECK(johnson_I_upper(2, v, d, k).has_value() ==
              (d == 2 * std::min(k, v - k)));
}

TEST_CASE("johnson type II single step") {
  auto lookup = [](int v, int k) { return best_upper_value(2, v, 4, k); };
  CHECK(johnson_II_step(2, 7, 4, 3, lookup).value == 381);
  CHECK(johnson_II_step(2, 9, 4, 3, lookup).value == 6205);
  CHECK(johnson_II_step(2, 13, 4, 3, lookup).value == 1597245);
  // both branches coincide at v = 2k
  Int qv = int_pow(2u, 8) - 1;
  Int sub = best_upper_value(2, 7, 4, 3);  // = A(7,4;4) by orthogonality
  CHECK(qv * sub / (int_pow(2u, 4) - 1) == qv * sub / (int_pow(2u, 8 - 4) - 1));
}

TEST_CASE("iterated johnson with partial-spread base cases") {
  CHECK(johnson_iterated_upper(2, 7, 4, 3).value == 381);
  CHECK(johnson_iterated_upper(2, 8, 4, 3).value == 1493);
  CHECK(johnson_iterated_upper(2, 6, 4, 3).value == 81);
}

TEST_CASE("counting bound reductions") {
  // t=0, m=v-1 reproduces the unrounded codeword-preserving branch
  for (int v : {6, 7, 8}) {
    auto a = ahlswede_upper(2, v, 4, 3, 0, v - 1);
    REQUIRE(a.has_value());
    Int inner = best_upper_value(2, v - 1, 4, 3);
    Int expect = (int_pow(2u, v) - 1) * inner / (int_pow(2u, v - 3) - 1);
    CHECK(a->value == expect);
  }
  // t=1, m=v-1 collapses to A(v-1, d-2; k-1)
  for (int v : {7, 8}) {
    auto a = ahlswede_upper(2, v, 6, 3, 1, v - 1);
    REQUIRE(a.has_value());
    CHECK(a->value == best_upper_value(2, v - 1, 4, 2));
  }
  // the large-k partial-spread route
  auto b = ahlswede_best(2, 11, 10, 5);
  REQUIRE(b.has_value());
  CHECK(b->value <= 65);
  CHECK(b->value < 66);  // the strict comparison against q^(k+w)+q^w
}

TEST_CASE("MRD-subclass bound") {
  auto a = mrd_containing_upper(2, 6, 4, 3);
  REQUIRE(a.has_value());
  CHECK(a->value == 71);
  auto b = mrd_containing_upper(2, 7, 4, 3);
  REQUIRE(b.has_value());
  CHECK(b->value == 291);
  auto c = mrd_containing_upper(2, 8, 4, 4);
  REQUIRE(c.has_value());
  CHECK(c->value == 4797);
  auto d = mrd_containing_upper(2, 8, 4, 3);
  REQUIRE(d.has_value());
  CHECK(d->value == 1179);
  CHECK(!mrd_containing_upper(2, 5, 4, 3).has_value());   // v < 2k
  CHECK(!mrd_containing_upper(2, 12, 4, 5).has_value());  // d matches no case
}

TEST_CASE("aggregated best upper") {
  CHECK(best_upper_value(2, 6, 4, 3) == 77);
  CHECK(best_upper_value(2, 8, 6, 4) == 272);
  CHECK(best_upper_value(2, 7, 4, 3) == 381);
  CHECK(best_upper_value(2, 7, 4, 4) == 381);  // orthogonal parameters
  CHECK(best_upper_value(2, 6, 2, 3) == 1395);
  CHECK(best_upper_value(2, 6, 8, 3) == 1);
  // the survey column for A_2(v,4;3)
  const Int bkub[] = {77,      381,      1493,      6205,      24698,
                      99718,   398385,   1597245,   6387029,   25562941,
                      Int("102243962"), Int("409035142"), Int("1636109361"),
                      Int("6544674621")};
  for (int v = 6; v <= 19; ++v) CHECK(best_upper_value(2, v, 4, 3) == bkub[v - 6]);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(best_upper_value(6, 7, 4, 3), ParameterError);
  CHECK_THROWS_AS(best_upper_value(2, 7, 3, 3), ParameterError);
  CHECK_THROWS_AS(best_upper_value(2, 3, 4, 5), ParameterError);
  CHECK_THROWS_AS(sphere_packing_upper(1, 7, 4, 3), ParameterError);
}

TEST_CASE("report lists applicable bounds") {
  auto rep = upper_bound_report(2, 7, 4, 3);
  CHECK(rep.best_upper.value == 381);
  CHECK(rep.upper.size() >= 4);
  REQUIRE(rep.mrd_subclass_upper.has_value());
  CHECK(rep.mrd_subclass_upper->value == 291);
  for (const auto& b : rep.upper) CHECK(b.value >= 381);
}

TEST_CASE("ordering invariants over the sweep") {
  for (std::uint32_t q : {2u, 3u}) {
    for (int v = 4; v <= 12; ++v)
      for (int k = 2; 2 * k <= v; ++k)
        for (int d = 4; d <= 2 * k; d += 2) {
          Int sphere = sphere_packing_upper(q, v, d, k).value;
          Int single = singleton_upper(q, v, d, k).value;
          Int anti = anticode_upper(q, v, d, k).value;
          Int johnson = johnson_iterated_upper(q, v, d, k).value;
          CHECK(anti <= sphere);
          CHECK(anti <= single);
          CHECK(johnson <= anti);
          // sphere-packing beats singleton exactly at q=2, v=2k, d=6
          CHECK((sphere < single) == (q == 2 && v == 2 * k && d == 6));
          CHECK(best_upper_value(q, v, d, k) >= best_lower_value(q, v, d, k));
          // invariance under k -> v-k
          CHECK(best_upper_value(q, v, d, k) == best_upper_value(q, v, d, v - k));
        }
  }
}

TEST_SUITE_END();
