#include <random>

#include "doctest.h"
#include "ko/kac.hpp"

using namespace ko;

namespace {

GModule direct_sum(const GModule& a, const GModule& b) {
  GModule out;
  out.field = a.field;
  out.dim = a.dim + b.dim;
  out.acting = a.acting;
  out.parity = a.parity;
  out.parity.insert(out.parity.end(), b.parity.begin(), b.parity.end());
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> t;
    auto add = [&](const SparseMatrix& m, std::uint32_t off) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto q = m.row_ptr()[r]; q < m.row_ptr()[r + 1]; ++q)
          t.emplace_back(static_cast<std::uint32_t>(r) + off, m.col_idx()[q] + off, m.vals()[q]);
    };
    add(a.action[k], 0);
    add(b.action[k], static_cast<std::uint32_t>(a.dim));
    out.action.push_back(SparseMatrix::from_triples(out.field, out.dim, out.dim, std::move(t)));
  }
  return out;
}

PChar height_two_chi(const ContactAlgebra& g) {
  PChar chi = zero_pchar(g.lsa);
  chi.values[g.monomial_index(MultiIndex({2, 1, 0}))] = 1;
  chi.values[g.monomial_index(MultiIndex({1, 0, 1}))] = 1;
  return chi;
}

GModule trivial_g0(const ContactAlgebra& g) {
  auto g0 = filtration_basis(g.lsa, 0);
  return character_module(g.F(), g0, std::vector<Scalar>(g0.size(), 0));
}

}  // namespace

TEST_CASE("verify_module accepts the trivial module and rejects corruption") {
  auto g = build_m({1, 5, 0});
  auto chi = zero_pchar(g.lsa);
  auto M = trivial_g0(g);
  CHECK(verify_module(g.lsa, M, chi).passed());

  auto K = kac_module(g, chi, M).as_module(filtration_basis(g.lsa, -2));
  CHECK(verify_module(g.lsa, K, chi).passed());
  auto bad = K;
  bad.action[3] = sp_lincomb(g.F(), 1, bad.action[3], 1, SparseMatrix::identity(bad.dim));
  CHECK_FALSE(verify_module(g.lsa, bad, chi).passed());
}

TEST_CASE("Kac dimension law and the induction unit") {
  auto g1 = build_m({1, 5, 0});
  auto chi1 = zero_pchar(g1.lsa);
  CHECK(kac_module(g1, chi1, trivial_g0(g1)).dim() == 20);

  auto g2 = build_m({2, 5, 0});
  auto chi2 = zero_pchar(g2.lsa);
  CHECK(kac_module(g2, chi2, trivial_g0(g2)).dim() == 200);

  // A 10-dimensional simple module at height 2: dim K = 20 * 10, and the
  // span of 1 (x) M carries M.
  auto chi = height_two_chi(g1);
  auto fam = simple_g0_modules(g1, chi, 3);
  REQUIRE(!fam.modules.empty());
  const auto& M = fam.modules[0];
  auto K = kac_module(g1, chi, M);
  CHECK(K.dim() == 20 * M.dim);
  for (std::size_t k = 0; k < M.acting.size(); ++k) {
    auto A = K.action_matrix(M.acting[k]).to_dense();
    auto B = M.action[k].to_dense();
    for (std::size_t i = 0; i < M.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) CHECK(A(i, j) == B(i, j));
    for (std::size_t i = M.dim; i < K.dim(); ++i)
      for (std::size_t j = 0; j < M.dim; ++j) CHECK(A(i, j) == 0);
  }
}

TEST_CASE("MeatAxe basics") {
  auto g = build_m({1, 5, 0});
  auto M1 = trivial_g0(g);
  CHECK(meataxe_irreducible(M1, 0).verdict == Verdict::Irreducible);

  auto chi = height_two_chi(g);
  auto fam = simple_g0_modules(g, chi, 3);
  const auto& S = fam.modules[0];
  CHECK(meataxe_irreducible(S, 5).verdict == Verdict::Irreducible);
  auto SS = direct_sum(S, S);
  auto r = meataxe_irreducible(SS, 5);
  REQUIRE(r.verdict == Verdict::Reducible);
  CHECK(!r.submodule.empty());
  CHECK(r.submodule.size() < SS.dim);
  // The returned subspace really is invariant.
  Subspace U(g.F(), SS.dim, r.submodule);
  for (const auto& A : SS.action)
    for (const auto& u : U.basis()) CHECK(U.contains(g.F(), A.apply(g.F(), u)));
  CHECK(simple_head(SS, 9).dim == S.dim);
  CHECK(composition_factors(SS, 9).size() == 2);
}

TEST_CASE("MeatAxe never certifies a module with a known submodule") {
  // S + S and the reducible chi = 0 Kac module, under many seeds.
  auto g = build_m({1, 5, 0});
  auto chi = height_two_chi(g);
  auto fam = simple_g0_modules(g, chi, 3);
  const auto& S = fam.modules[0];
  auto E = direct_sum(S, S);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto r = meataxe_irreducible(E, seed);
    CHECK(r.verdict != Verdict::Irreducible);
  }
  auto K = kac_module(g, zero_pchar(g.lsa), trivial_g0(g)).as_module(filtration_basis(g.lsa, -2));
  for (std::uint64_t seed = 0; seed < 4; ++seed) CHECK(meataxe_irreducible(K, seed).verdict == Verdict::Reducible);
}

TEST_CASE("spin") {
  auto g = build_m({1, 5, 0});
  auto chi = height_two_chi(g);
  auto fam = simple_g0_modules(g, chi, 3);
  const auto& M = fam.modules[0];
  CHECK(spin(M, Vec(M.dim, 0)).dim() == 0);
  auto K = kac_module(g, chi, M);
  auto KM = K.as_module(filtration_basis(g.lsa, -2));
  for (std::size_t j = 0; j < M.dim; ++j) CHECK(spin(KM, unit_vec(KM.dim, K.index(0, j))).dim() == KM.dim);
}

TEST_CASE("baby Verma modules") {
  auto g = build_m({1, 5, 0});
  auto chi = zero_pchar(g.lsa);
  auto V = baby_verma_module(g, chi, {0, 0});
  CHECK(V.dim == 1);
  CHECK(verify_module(g.lsa, V, chi).passed());
  for (const auto& A : simple_head(V, 1).action) CHECK(A.is_zero());

  auto g2 = build_m({2, 5, 0});
  auto split = triangular_split(g2);
  REQUIRE(split.n_minus_basis.size() == 2);
  auto chi0 = zero_pchar(g2.lsa);
  auto V0 = baby_verma_module(g2, chi0, {1, 2, 3});
  CHECK(V0.dim == 5 * 2);
  CHECK(verify_module(g2.lsa, V0, chi0).passed());

  // chi(h_1) != 0 forces the rational Borel module of dimension p.
  PChar c = zero_pchar(g2.lsa);
  c.values[g2.monomial_index(MultiIndex({1, 0, 1, 0, 0}))] = 1;
  auto V1 = baby_verma_module(g2, c, {0, 4, 2});
  CHECK(V1.dim == 5 * 5 * 2);
  CHECK(verify_module(g2.lsa, V1, c).passed());

  auto fam = simple_g0_modules(g2, c, 2, 2);
  REQUIRE(fam.modules.size() == 2);
  for (const auto& M : fam.modules) CHECK(verify_module(g2.lsa, M, c).passed());
}

TEST_CASE("extend_trivially rejects a nonzero g^1 action") {
  auto g = build_m({1, 5, 0});
  PChar c = zero_pchar(g.lsa);
  c.values[g.monomial_index(MultiIndex({1, 1, 0}))] = 2;
  auto fam = simple_g0_modules(g, c, 1, 1);
  REQUIRE(!fam.modules.empty());
  auto M = fam.modules[0];
  CHECK(verify_module(g.lsa, M, c).passed());
  for (std::size_t k = 0; k < M.acting.size(); ++k)
    if (g.lsa.vec_degree(M.acting[k]) == 1 && g.lsa.vec_parity(M.acting[k]) == 0u) {
      M.action[k] = SparseMatrix::identity(M.dim);
      break;
    }
  CHECK_FALSE(verify_module(g.lsa, M, c).passed());
}

TEST_CASE("twisting by grading automorphisms") {
  auto g = build_m({1, 5, 0});
  auto chi = height_two_chi(g);
  auto fam = simple_g0_modules(g, chi, 3);
  auto K = kac_module(g, chi, fam.modules[0]).as_module(filtration_basis(g.lsa, -2));
  auto same = twist_module(g.lsa, K, {1});
  CHECK(same.action == K.action);
  for (Scalar c = 2; c < 5; ++c) {
    auto T = twist_module(g.lsa, K, {c});
    auto tchi = coadjoint_apply(g.lsa, {c}, chi);
    CHECK(verify_module(g.lsa, T, tchi).passed());
    CHECK(meataxe_irreducible(T, c).verdict == meataxe_irreducible(K, c).verdict);
  }
}

TEST_CASE("height-two Kac modules are simple with a unique socle") {
  auto g = build_m({1, 5, 0});
  auto chi = height_two_chi(g);
  CHECK(height(g.lsa, chi) == 2);
  auto fam = simple_g0_modules(g, chi, 7);
  CHECK(fam.complete);
  for (const auto& M : fam.modules) {
    auto K = kac_module(g, chi, M);
    auto KM = K.as_module(filtration_basis(g.lsa, -2));
    CHECK(verify_module(g.lsa, KM, chi).passed());
    CHECK(meataxe_irreducible(KM, 11).verdict == Verdict::Irreducible);
    auto s = unique_socle_check(g, chi, K, 64, 5);
    CHECK(s.exact);
    CHECK(s.sample_pass == 64);
  }
}

TEST_CASE("structural Kac certificate agrees with the dense MeatAxe") {
  auto g = build_m({1, 5, 0});
  std::mt19937_64 rng(4);
  auto all = filtration_basis(g.lsa, -2);
  int certified = 0;
  for (int trial = 0; trial < 6; ++trial) {
    PChar chi = zero_pchar(g.lsa);
    for (auto k : g.lsa.indices_of_degree(0))
      if (!g.lsa.parity[k]) chi.values[k] = static_cast<Scalar>(rng() % 5);
    for (const auto& M : simple_g0_modules(g, chi, trial).modules) {
      auto K = kac_module(g, chi, M);
      auto cert = kac_simplicity_certificate(g, chi, K, trial);
      auto verdict = meataxe_irreducible(K.as_module(all), trial).verdict;
      if (cert.passed()) {
        ++certified;
        CHECK(verdict == Verdict::Irreducible);
      }
    }
  }
  CHECK(certified > 0);

  auto g2 = build_m({2, 5, 0});
  auto z = zero_pchar(g2.lsa);
  auto K = kac_module(g2, z, trivial_g0(g2));
  CHECK_FALSE(kac_simplicity_certificate(g2, z, K, 1).passed());
  std::vector<Vec> gens;
  for (int d = -2; d <= 1; ++d)
    for (auto& v : graded_basis(g2.lsa, d)) gens.push_back(v);
  auto sampled = verify_induced_sampled(g2.lsa, K, z, gens, 1, 3);
  CHECK(sampled.passed());
}
