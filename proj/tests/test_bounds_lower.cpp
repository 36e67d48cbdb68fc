#include <sstream>

#include "cdc/bounds_lower.hpp"
#include "cdc/bounds_upper.hpp"
#include "doctest.h"

using namespace cdc;

namespace {

// Survey columns for A_2(v,4;3), v = 6..19.
const Int kBklb[] = {77,       333,      1326,      5986,      23870,
                     97526,    385515,   1597245,   6241665,   24966665,
                     Int("102223681"), Int("408894729"), Int("1635578957"),
                     Int("6542315853")};
const Int kLold[] = {65,       257,      1033,      4929,      21313,
                     85249,    383105,   1532417,   6241665,   24966657,
                     Int("102223681"), Int("408894721"), Int("1635578889"),
                     Int("6542315597")};
const Int kLnew[] = {65,       265,      1101,      4929,      21313,
                     85257,    383105,   1532425,   6241665,   24966665,
                     Int("102223681"), Int("408894729"), Int("1635578957"),
                     Int("6542315853")};

}  // namespace

TEST_SUITE_BEGIN("bounds_lower");

TEST_CASE("seed table") {
  auto seeds = SeedTable::builtin();
  auto a = seeds.lookup(2, 6, 4, 3);
  REQUIRE(a.has_value());
  CHECK(a->value == 77);
  auto b = seeds.lookup(2, 13, 4, 3);
  REQUIRE(b.has_value());
  CHECK(b->value == 1597245);
  // parametric family at (q,7,4,3)
  auto c = seeds.lookup(3, 7, 4, 3);
  REQUIRE(c.has_value());
  CHECK(c->value == 6561 + 243 + 81 + 9 - 3);
  // for q=2 the explicit record beats the parametric value
  auto d = seeds.lookup(2, 7, 4, 3);
  REQUIRE(d.has_value());
  CHECK(d->value == 333);
  CHECK(!seeds.lookup(5, 9, 4, 3).has_value());

  std::istringstream extra("2 20 4 3 999999999999 mytag\n# comment\n");
  seeds.load_stream(extra);
  auto e = seeds.lookup(2, 20, 4, 3);
  REQUIRE(e.has_value());
  CHECK(e->value == Int("999999999999"));
  CHECK(e->source == "mytag");
}

TEST_CASE("lifted MRD lower bound") {
  CHECK(lmrd_lower(2, 7, 4, 3).value == 256);
  CHECK(lmrd_lower(2, 6, 4, 3).value == 64);
  CHECK(lmrd_lower(2, 4, 4, 3).value == 1);
}

TEST_CASE("linkage against best-known smaller values") {
  auto dp = linkage_dp(2, 4, 3, 19, SeedTable::builtin());
  auto lookup = [&](int n) { return dp[n].value; };
  CHECK(original_linkage_lower(2, 7, 4, 3, lookup).value == 257);
  CHECK(improved_linkage_lower(2, 7, 4, 3, lookup).value == 265);
  CHECK(original_linkage_lower(2, 19, 4, 3, lookup).value ==
        Int("6542315597"));
  CHECK(improved_linkage_lower(2, 19, 4, 3, lookup).value ==
        Int("6542315853"));
  CHECK(improved_linkage_lower(2, 13, 4, 3, lookup).value == 1532425);
  for (int v = 6; v <= 19; ++v) {
    CHECK(original_linkage_lower(2, v, 4, 3, lookup).value == kLold[v - 6]);
    CHECK(improved_linkage_lower(2, v, 4, 3, lookup).value == kLnew[v - 6]);
    // the improved construction never loses to the original one
    CHECK(improved_linkage_lower(2, v, 4, 3, lookup).value >=
          original_linkage_lower(2, v, 4, 3, lookup).value);
  }
}

TEST_CASE("dynamic program reproduces the survey lower bounds") {
  auto dp = linkage_dp(2, 4, 3, 19, SeedTable::builtin());
  CHECK(dp[10].value == 23870);  // seed
  CHECK(dp[14].value == 6241665);
  CHECK(dp[19].value == Int("6542315853"));
  for (int v = 6; v <= 19; ++v) CHECK(dp[v].value == kBklb[v - 6]);
}

TEST_CASE("dynamic program on spread parameters") {
  // with d = 2k the spread values regenerate themselves through linkage
  auto dp = linkage_dp(2, 4, 2, 12, SeedTable::builtin());
  for (int v = 2; v <= 12; v += 2)
    CHECK(dp[v].value == (int_pow(2u, v) - 1) / 3);
  auto dp3 = linkage_dp(3, 6, 3, 12, SeedTable::builtin());
  for (int v = 3; v <= 12; v += 3)
    CHECK(dp3[v].value == (int_pow(3u, v) - 1) / 26);
}

TEST_CASE("dynamic program without seeds degenerates to lifted MRD") {
  SeedTable empty;
  auto dp = linkage_dp(2, 4, 3, 6, empty);
  CHECK(dp[4].value == 1);
  CHECK(dp[5].value == 9);             // 1*8 + 1 via linkage
  CHECK(dp[6].value == 65);            // 1*64 + 1
  CHECK(dp[6].value >= lmrd_lower(2, 6, 4, 3).value);
}

TEST_CASE("dynamic program is monotone in the seeds") {
  auto base = linkage_dp(2, 4, 3, 19, SeedTable::builtin());
  SeedTable bigger = SeedTable::builtin();
  bigger.add(2, 9, 4, 3, 6000, "test");
  auto boosted = linkage_dp(2, 4, 3, 19, bigger);
  for (int v = 3; v <= 19; ++v) CHECK(boosted[v].value >= base[v].value);
  CHECK(boosted[9].value == 6000);
}

TEST_CASE("arithmetic progression closed forms") {
  // paper instance: q=2, d=4, k=3, v0=13, s=6
  Int a13 = 1597245, a7 = 333;
  auto l0 = arithmetic_progression_lower(2, 4, 3, 13, 6, 0, a13, a7);
  CHECK(l0.form1 == a13);
  for (unsigned l : {1u, 2u, 3u}) {
    auto pb = arithmetic_progression_lower(2, 4, 3, 13, 6, l, a13, a7);
    Int pw = int_pow(Int(4096), l);
    CHECK(pb.form1 == pw * 1597245 + 333 * (pw - 1) / 4095);
    REQUIRE(pb.form2.has_value());
    CHECK(*pb.form2 == 333 * Int(16777216) * (pw - 1) / 4095 + 1597245);
  }
  // form one at l=1 equals one linkage step with m = v0
  auto one = arithmetic_progression_lower(2, 4, 3, 13, 6, 1, a13, a7);
  Int step = a13 * lifted_mrd_size(2, 3, 6 + 3, 4) + a7;
  CHECK(one.form1 == step);
  // form two at l=1 equals one linkage step with m = s + k - d/2
  Int step2 = a7 * lifted_mrd_size(2, 3, 13 + 6 - 7 + 3, 4) + a13;
  REQUIRE(one.form2.has_value());
  CHECK(*one.form2 == step2);
}

TEST_CASE("aggregated best lower") {
  CHECK(best_lower_value(2, 13, 4, 3) == 1597245);
  CHECK(best_lower_value(2, 16, 4, 3) == Int("102223681"));
  CHECK(best_lower_value(2, 6, 4, 2) == 21);   // spread
  CHECK(best_lower_value(2, 8, 6, 3) == 34);   // seed beats beutelspacher
  CHECK(best_lower_value(2, 7, 4, 4) == 333);  // orthogonal parameters
  for (int v = 6; v <= 19; ++v) CHECK(best_lower_value(2, v, 4, 3) == kBklb[v - 6]);
}

TEST_CASE("improved linkage never loses to original linkage on the sweep") {
  for (std::uint32_t q : {2u, 3u})
    for (int v = 4; v <= 12; ++v)
      for (int k = 2; 2 * k <= v; ++k)
        for (int d = 4; d <= 2 * k; d += 2) {
          auto dp = linkage_dp(q, d, k, v, SeedTable::builtin());
          auto lookup = [&](int n) { return dp[n].value; };
          CHECK(improved_linkage_lower(q, v, d, k, lookup).value >=
                original_linkage_lower(q, v, d, k, lookup).value);
        }
}

TEST_CASE("report lists applicable bounds") {
  auto rep = lower_bound_report(2, 7, 4, 3);
  CHECK(rep.best_lower.value == 333);
  bool has_linkage = false;
  for (const auto& b : rep.lower) {
    CHECK(b.value <= 333);
    has_linkage |= b.source.rfind("improved-linkage", 0) == 0;
  }
  CHECK(has_linkage);
}

TEST_SUITE_END();
