#include "doctest.h"
#include "ko/linalg.hpp"

#include <random>

using namespace ko;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Scalar>(rng() % p);
  return m;
}

}  // namespace

TEST_CASE("rank, nullspace and solve are consistent") {
  PrimeField F(7);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 6, 9, 7);
    auto ns = nullspace(F, a);
    CHECK(rank(F, a) + ns.size() == 9);
    for (const auto& v : ns) CHECK(is_zero(mat_vec(F, a, v)));
    Vec x(9);
    for (auto& e : x) e = rng() % 7;
    Vec b = mat_vec(F, a, x);
    auto sol = solve(F, a, b);
    REQUIRE(sol);
    CHECK(mat_vec(F, a, *sol) == b);
  }
}

TEST_CASE("inverse and matrix power") {
  PrimeField F(5);
  std::mt19937_64 rng(2);
  Matrix a = random_matrix(rng, 5, 5, 5);
  while (rank(F, a) < 5) a = random_matrix(rng, 5, 5, 5);
  auto inv = inverse(F, a);
  REQUIRE(inv);
  CHECK(mat_mul(F, a, *inv) == Matrix::identity(5));
  CHECK(mat_pow(F, a, 3) == mat_mul(F, a, mat_mul(F, a, a)));
  Matrix z(3, 3);
  z(0, 1) = 1;
  z(1, 0) = 1;
  CHECK_FALSE(inverse(F, Matrix(2, 2)));
}

TEST_CASE("subspaces are canonical") {
  PrimeField F(5);
  Subspace a(F, 4, {{1, 2, 0, 0}, {0, 0, 1, 1}});
  Subspace b(F, 4, {{1, 2, 1, 1}, {2, 4, 4, 4}});
  CHECK(a == b);
  CHECK(a.contains(F, Vec{3, 1, 2, 2}));
  CHECK_FALSE(a.contains(F, Vec{0, 1, 0, 0}));
  Subspace c(F, 4, {{0, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(intersect(F, a, c).dim() == 1);
  CHECK(sum(F, a, c).dim() == 3);
  Vec v{2, 4, 3, 3};
  Vec co = a.coordinates(v);
  Vec back(4, 0);
  for (std::size_t k = 0; k < co.size(); ++k) vec_axpy(F, back, co[k], a.basis()[k]);
  CHECK(back == v);
}

TEST_CASE("sparse and dense products agree") {
  PrimeField F(7);
  std::mt19937_64 rng(3);
  Matrix a = random_matrix(rng, 8, 8, 7), b = random_matrix(rng, 8, 8, 7);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (rng() % 3) a(i, j) = 0;
  auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
  CHECK(sp_mul(F, sa, sb).to_dense() == mat_mul(F, a, b));
  CHECK(sa.transpose().to_dense() == a.transpose());
  CHECK(sp_pow(F, sa, 4).to_dense() == mat_pow(F, a, 4));
  CHECK(sp_lincomb(F, 2, sa, 3, sb).to_dense() == mat_add(F, mat_scale(F, 2, a), mat_scale(F, 3, b)));
  Vec v{1, 2, 3, 4, 5, 6, 0, 1};
  CHECK(sa.apply(F, v) == mat_vec(F, a, v));
}
