#include <sstream>

#include "cdc/codefile.hpp"
#include "cdc/errors.hpp"
#include "cdc/verify.hpp"
#include "doctest.h"

using namespace cdc;

TEST_SUITE_BEGIN("codefile");

namespace {

std::string to_text(const SubspaceCode& c) {
  std::ostringstream out;
  write_code_file(out, c);
  return out.str();
}

SubspaceCode from_text(const std::string& s) {
  std::istringstream in(s);
  return read_code_file(in);
}

}  // namespace

TEST_CASE("round trip preserves the code") {
  for (auto code : {spread_construct(2, 6, 2), spread_construct(3, 4, 2),
                    lift(gabidulin(4, 2, 2, 2)),
                    orthogonal_code(greedy_cdc(2, 5, 4, 2))}) {
    auto text = to_text(code);
    auto back = from_text(text);
    CHECK(back.v == code.v);
    CHECK(back.k == code.k);
    CHECK(back.claimed_d == code.claimed_d);
    CHECK(back.field->q() == code.field->q());
    CHECK(back.field->modulus() == code.field->modulus());
    REQUIRE(back.words.size() == code.words.size());
    for (std::size_t i = 0; i < code.words.size(); ++i)
      CHECK(back.words[i] == code.words[i]);
    // emission is deterministic
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("header sanity") {
  auto code = spread_construct(2, 4, 2);
  auto text = to_text(code);
  std::istringstream first(text.substr(0, text.find('\n')));
  int q, v, k, n, d, p, e, c0, c1, c2;
  first >> q >> v >> k >> n >> d >> p >> e >> c0 >> c1 >> c2;
  CHECK(q == 2);
  CHECK(v == 4);
  CHECK(k == 2);
  CHECK(n == 5);
  CHECK(d == 4);
  CHECK(p == 2);
  CHECK(e == 1);
  CHECK((c0 == 0 && c1 == 1));  // modulus x for the prime field
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(from_text(""), ParameterError);
  CHECK_THROWS_AS(from_text("garbage\n"), ParameterError);
  // wrong codeword count
  CHECK_THROWS_AS(from_text("2 3 1 2 2 2 1 0 1\n\n1 0 0\n"), ParameterError);
  // entry outside the field
  CHECK_THROWS_AS(from_text("2 3 1 1 2 2 1 0 1\n\n1 0 2\n"), ParameterError);
  // block not in rref
  CHECK_THROWS_AS(from_text("2 3 2 1 2 2 1 0 1\n\n0 1 0\n1 0 0\n"),
                  ParameterError);
  // q inconsistent with p^e
  CHECK_THROWS_AS(from_text("3 3 1 1 2 2 1 0 1\n\n1 0 0\n"), ParameterError);
}

TEST_CASE("claimed distance verifies through the file") {
  auto code = lift(gabidulin(2, 3, 4, 2));
  auto back = from_text(to_text(code));
  auto rep = verify_code(back);
  CHECK(rep.meets(back.claimed_d));

  // a file that over-claims the distance fails verification with a witness
  SubspaceCode bold = back;
  bold.claimed_d = 6;
  auto rep2 = verify_code(bold);
  CHECK(!rep2.meets(bold.claimed_d));
  REQUIRE(rep2.witness.has_value());
  auto [i, j] = *rep2.witness;
  CHECK(subspace_distance(bold.words[i], bold.words[j]) < 6);
}

TEST_SUITE_END();
