#include "doctest.h"
#include "ko/arith.hpp"

#include <vector>

using namespace ko;

namespace {

// Pascal's triangle in exact integers, reduced only at the end.
unsigned long long exact_binom(unsigned a, unsigned b) {
  std::vector<std::vector<unsigned long long>> t(a + 1);
  for (unsigned i = 0; i <= a; ++i) {
    t[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return b > a ? 0 : t[a][b];
}

}  // namespace

TEST_CASE("field construction rejects bad characteristics") {
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(3), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_NOTHROW(PrimeField(5));
  CHECK_NOTHROW(PrimeField(7));
}

TEST_CASE("basic field arithmetic") {
  PrimeField F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.neg(0) == 0);
  CHECK(F.reduce(-1) == 6);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.sign(3) == 6);
  CHECK_THROWS_AS(F.inv(0), DivisionByZero);
  CHECK_THROWS_AS(F.div(1, 7), DivisionByZero);
}

TEST_CASE("inverse is a two-sided inverse for every unit") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    PrimeField F(p);
    for (Scalar a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("Lucas binomials agree with exact integer binomials") {
  for (std::uint32_t p : {5u, 7u}) {
    PrimeField F(p);
    for (unsigned a = 0; a <= 40; ++a)
      for (unsigned b = 0; b <= a + 2; ++b) CHECK(F.lucas_binom(a, b) == exact_binom(a, b) % p);
  }
}

TEST_CASE("small binomials mod 5") {
  PrimeField F(5);
  CHECK(F.lucas_binom(4, 2) == 1);
  CHECK(F.lucas_binom(5, 1) == 0);
  CHECK(F.lucas_binom(3, 1) == 3);
}
