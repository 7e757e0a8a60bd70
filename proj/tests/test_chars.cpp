#include <random>

#include "doctest.h"
#include "ko/chars.hpp"
#include "ko/kac.hpp"

using namespace ko;

namespace {

// chi([M_f, M_{x_b}]) straight from the contact bracket of functions.
Scalar oracle_entry(const ContactAlgebra& g, const PChar& chi, const Vec& v, unsigned slot) {
  const Shape s = g.shape.dps();
  auto f = contact_bracket(g.function_of(v), SuperElement::generator(s, slot));
  return chi(g.coords(f), g.F());
}

PChar random_high(const ContactAlgebra& g, std::mt19937_64& rng) {
  const auto& L = g.lsa;
  for (;;) {
    PChar chi = zero_pchar(L);
    const int top = 1 + static_cast<int>(rng() % 3);
    for (std::size_t k = 0; k < L.dim; ++k)
      if (!L.parity[k] && L.degree[k] <= top) chi.values[k] = static_cast<Scalar>(rng() % g.shape.p);
    const int h = height(L, chi);
    if (h >= 2 && !L.indices_of_degree(h + 1).empty()) return chi;
  }
}

}  // namespace

TEST_CASE("char_matrix preconditions") {
  auto g = build_m({1, 5, 0});
  CHECK_THROWS_AS(char_matrix(g, zero_pchar(g.lsa)), Error);
  PChar one = zero_pchar(g.lsa);
  one.values[g.monomial_index(MultiIndex({1, 1, 0}))] = 1;
  CHECK(height(g.lsa, one) == 1);
  CHECK_THROWS_AS(is_nonsingular(g, one), Error);
  // chi on g_[4] gives h = 5 with g_[6] = 0.
  PChar top = zero_pchar(g.lsa);
  top.values[g.monomial_index(MultiIndex({4, 0, 1}))] = 1;
  CHECK_THROWS_AS(char_matrix(g, top), Error);
}

TEST_CASE("characteristic matrix against the function-level bracket") {
  std::mt19937_64 rng(11);
  for (auto shape : {ContactShape{1, 5, 0}, ContactShape{2, 5, 0}, ContactShape{1, 7, 0}}) {
    auto g = build_m(shape);
    for (int t = 0; t < 10; ++t) {
      auto chi = random_high(g, rng);
      auto m = char_matrix(g, chi);
      for (std::size_t a = 0; a < m.top_basis.size(); ++a)
        for (unsigned b = 0; b < 2 * shape.n; ++b) CHECK(m.a1(a, b) == oracle_entry(g, chi, m.top_basis[a], b));
      const Shape s = shape.dps();
      for (std::size_t c = 0; c < m.next_basis.size(); ++c) {
        auto f = contact_bracket(g.function_of(m.next_basis[c]), SuperElement::one(s));
        CHECK(m.a2(c, 0) == chi(g.coords(f), g.F()));
      }
    }
  }
}

TEST_CASE("rank does not depend on the basis of g_[h] and g_[h+1]") {
  auto g = build_m({2, 5, 0});
  const auto& F = g.F();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    auto chi = random_high(g, rng);
    auto m = char_matrix(g, chi);
    // A random invertible parity-preserving change of basis on the rows.
    auto par = [&](std::size_t i) { return g.lsa.vec_parity(m.top_basis[i]); };
    Matrix P;
    do {
      P = Matrix(m.a1.rows(), m.a1.rows());
      for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j)
          if (par(i) == par(j)) P(i, j) = static_cast<Scalar>(rng() % 5);
    } while (rank(F, P) != P.rows());
    Matrix rebased(m.a1.rows(), m.a1.cols());
    for (std::size_t i = 0; i < P.rows(); ++i) {
      Vec f(g.dim(), 0);
      for (std::size_t j = 0; j < P.cols(); ++j) vec_axpy(F, f, P(i, j), m.top_basis[j]);
      for (unsigned b = 0; b < 4; ++b) rebased(i, b) = oracle_entry(g, chi, f, b);
    }
    CHECK(rank(F, rebased) == rank(F, m.a1));
  }
}

TEST_CASE("minimal-element construction of nonsingular characters") {
  auto g = build_m({1, 5, 0});
  auto chi = build_example_nonsingular(g, 2);
  CHECK(height(g.lsa, chi) == 2);
  CHECK(rank_chi(g, chi) == 3);
  CHECK(is_nonsingular(g, chi));
  CHECK_THROWS_AS(build_example_nonsingular(g, 3), Error);
  CHECK_THROWS_AS(build_example_nonsingular(g, 1), Error);

  auto g7 = build_m({1, 7, 0});
  for (int h = 2; h <= 4; ++h) {
    auto c = build_example_nonsingular(g7, h);
    CHECK(height(g7.lsa, c) == h);
    CHECK(is_nonsingular(g7, c));
  }
  auto g2 = build_m({2, 5, 0});
  CHECK(rank_chi(g2, build_example_nonsingular(g2, 2)) == 5);
}

TEST_CASE("the minimal elements give a triangular submatrix") {
  auto g = build_m({2, 7, 0});
  const auto& F = g.F();
  const Shape s = g.shape.dps();
  const unsigned n = 2, top = top_slot(s);
  for (int h = 2; h <= 4; ++h) {
    auto chi = build_example_nonsingular(g, h);
    // Minimal elements of Sigma_k, k = n+1 .. 2n+1 (1-based), by brute force.
    auto less = [&](const MultiIndex& a, const MultiIndex& b) {
      if (a[top] != b[top]) return a[top] < b[top];
      for (unsigned i = 0; i < top; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    };
    std::vector<MultiIndex> r(2 * n + 1);
    for (unsigned k = n; k <= 2 * n; ++k) {
      std::optional<MultiIndex> best;
      for (std::size_t i = 0; i < g.dim(); ++i) {
        if (!chi.values[i]) continue;
        const auto& m = g.ambient[i];
        bool in = true;
        if (k < 2 * n - 1)
          for (unsigned j = n; j <= k; ++j) in = in && m[j] == 0;
        else
          in = m[k] == 0;
        if (in && (!best || less(m, *best))) best = m;
      }
      REQUIRE(best);
      r[k] = *best;
    }
    for (unsigned k = 0; k < n; ++k) r[k] = r[n];
    // Rows M_{x^(r^i + e_i)}, columns M_{x_{n+1}} .. M_{x_{2n}}, M_{x_1} .. M_{x_n}.
    Matrix A(2 * n, 2 * n);
    for (unsigned i = 0; i < 2 * n; ++i) {
      auto ri = r[i];
      ri[i] += 1;
      REQUIRE(ri.valid_for(s));
      auto row = g.coords(SuperElement::monomial(s, ri));
      for (unsigned j = 0; j < 2 * n; ++j) A(i, j) = oracle_entry(g, chi, row, (j + n) % (2 * n));
    }
    for (unsigned i = 0; i < 2 * n; ++i) {
      CHECK(A(i, i) != 0);
      for (unsigned j = i + 1; j < 2 * n; ++j) CHECK(A(i, j) == 0);
    }
    auto rt = r[2 * n];
    rt[top] += 1;
    auto last = g.coords(SuperElement::monomial(s, rt));
    CHECK(chi(g.coords(contact_bracket(g.function_of(last), SuperElement::one(s))), F) != 0);
  }
}

TEST_CASE("a nonsingular character of height three on m(1,5)") {
  // Exhaustive over chi supported on the even part of g_[2].
  auto g = build_m({1, 5, 0});
  std::vector<std::size_t> idx;
  for (auto k : g.lsa.indices_of_degree(2))
    if (!g.lsa.parity[k]) idx.push_back(k);
  REQUIRE(idx.size() == 2);
  int found = 0;
  for (Scalar a = 0; a < 5; ++a)
    for (Scalar b = 0; b < 5; ++b) {
      PChar chi = zero_pchar(g.lsa);
      chi.values[idx[0]] = a;
      chi.values[idx[1]] = b;
      if (height(g.lsa, chi) != 3) continue;
      if (is_nonsingular(g, chi)) ++found;
    }
  CHECK(found > 0);
}

TEST_CASE("the singular example") {
  auto g = build_m({2, 5, 0});
  auto chi = build_example_singular(g);
  CHECK(height(g.lsa, chi) == 3);
  CHECK_FALSE(is_nonsingular(g, chi));
  auto m = char_matrix(g, chi);
  for (std::size_t a = 0; a < m.a1.rows(); ++a) CHECK(m.a1(a, 1) == 0);
  CHECK(chi.at(g.monomial_index(MultiIndex({0, 0, 1, 1, 1}))) == 1);
  CHECK_THROWS_AS(build_example_singular(build_m({1, 5, 0})), Error);

  auto g7 = build_m({2, 7, 0});
  auto c7 = build_example_singular(g7);
  CHECK(height(g7.lsa, c7) == 5);
  CHECK_FALSE(is_nonsingular(g7, c7));
}

TEST_CASE("height and rank are invariant under grading automorphisms") {
  auto g = build_m({1, 5, 0});
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto chi = random_high(g, rng);
    const int h = height(g.lsa, chi);
    const auto r = rank_chi(g, chi);
    for (Scalar c = 1; c < 5; ++c) {
      auto tc = coadjoint_apply(g.lsa, {c}, chi);
      CHECK(height(g.lsa, tc) == h);
      CHECK(rank_chi(g, tc) == r);
    }
  }
}

TEST_CASE("regular semisimple characters") {
  auto g = build_m({2, 5, 0});
  PChar chi = zero_pchar(g.lsa);
  chi.values[g.monomial_index(MultiIndex({1, 0, 1, 0, 0}))] = 1;
  REQUIRE(height(g.lsa, chi) == 1);
  auto hs = cartan_h(g);
  REQUIRE(hs.size() == 1);
  CHECK(chi(hs[0], g.F()) == 1);
  auto r = is_regular_semisimple(g, chi, OrbitMode::Identity);
  CHECK(r.value);
  CHECK_FALSE(r.degenerate);
  CHECK(is_regular_semisimple(g, chi, OrbitMode::GradingOrbit).value);

  // chi(h_1) = 0.
  chi.values[g.monomial_index(MultiIndex({0, 1, 0, 1, 0}))] = 1;
  CHECK(chi(hs[0], g.F()) == 0);
  CHECK_FALSE(is_regular_semisimple(g, chi, OrbitMode::Identity).value);

  // Nonzero on n^+.
  PChar bad = zero_pchar(g.lsa);
  bad.values[g.monomial_index(MultiIndex({1, 0, 1, 0, 0}))] = 1;
  bad.values[g.monomial_index(MultiIndex({1, 0, 0, 1, 0}))] = 1;
  CHECK_FALSE(is_regular_semisimple(g, bad, OrbitMode::Identity).value);

  CHECK_THROWS_AS(is_regular_semisimple(g, zero_pchar(g.lsa), OrbitMode::Identity), Error);

  auto g1 = build_m({1, 5, 0});
  PChar c1 = zero_pchar(g1.lsa);
  c1.values[g1.monomial_index(MultiIndex({1, 1, 0}))] = 1;
  auto d = is_regular_semisimple(g1, c1, OrbitMode::Identity);
  CHECK(d.value);
  CHECK(d.degenerate);
  CHECK(!d.warning.empty());
}

TEST_CASE("delta-invertibility") {
  auto g5 = build_m({1, 5, 0});
  auto ns = build_example_nonsingular(g5, 2);
  CHECK(is_delta_invertible(g5, ns, OrbitMode::Identity).decision == Decision::No);
  CHECK(is_delta_invertible(g5, ns, OrbitMode::GradingOrbit).decision == Decision::No);

  auto g = build_m({1, 7, 0});
  auto s = search_char(g, SearchTarget::DeltaInvertible, 0, 500);
  REQUIRE(s.found);
  auto d = is_delta_invertible(g, s.chi, OrbitMode::Identity);
  REQUIRE(d.decision == Decision::Yes);
  CHECK(validate_delta_witness(g, s.chi, d.witness).empty());
  CHECK(height(g.lsa, s.chi) >= 5);
  CHECK(rank_chi(g, s.chi) == d.witness.r + 1);

  // Each corruption is caught.
  auto w = d.witness;
  std::swap(w.I, w.J);
  CHECK(!validate_delta_witness(g, s.chi, w).empty());
  w = d.witness;
  w.e[0] = vec_scale(g.F(), 0, w.e[0]);
  CHECK(!validate_delta_witness(g, s.chi, w).empty());
  w = d.witness;
  w.delta.push_back(g.lsa.basis_vec(g.lsa.indices_of_degree(height(g.lsa, s.chi) - 1).front()));
  CHECK(!validate_delta_witness(g, s.chi, w).empty());
  w = d.witness;
  w.f.pop_back();
  CHECK(!validate_delta_witness(g, s.chi, w).empty());

  // A singular chi of height 6 failing the conditions: No for the identity,
  // Inconclusive over the grading orbit.
  bool checked = false;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000 && !checked; ++t) {
    PChar c = zero_pchar(g.lsa);
    for (auto k : g.lsa.indices_of_degree(5))
      if (!g.lsa.parity[k]) c.values[k] = static_cast<Scalar>(rng() % 7);
    if (height(g.lsa, c) != 6 || rank_chi(g, c) == 3) continue;
    if (is_delta_invertible(g, c, OrbitMode::Identity).decision != Decision::No) continue;
    CHECK(is_delta_invertible(g, c, OrbitMode::GradingOrbit).decision == Decision::Inconclusive);
    checked = true;
  }
  CHECK(checked);
}

TEST_CASE("search_char") {
  auto g = build_m({1, 5, 0});
  auto none = search_char(g, SearchTarget::Nonsingular, 0, 0);
  CHECK_FALSE(none.found);
  CHECK(none.evaluations == 0);

  auto a = search_char(g, SearchTarget::Nonsingular, 7, 50);
  REQUIRE(a.found);
  CHECK(is_nonsingular(g, a.chi));
  auto b = search_char(g, SearchTarget::Nonsingular, 7, 50);
  CHECK(a.chi == b.chi);
  CHECK(a.log == b.log);

  auto g2 = build_m({2, 5, 0});
  auto r = search_char(g2, SearchTarget::RegularSemisimple, 1, 20);
  REQUIRE(r.found);
  CHECK(is_regular_semisimple(g2, r.chi, OrbitMode::Identity).value);
  for (Scalar k : {0u, 1u}) {
    auto sm = build_sm({2, 5, k});
    auto rs = search_char(sm, SearchTarget::RegularSemisimple, 1, 20);
    REQUIRE(rs.found);
    CHECK(height(sm.lsa, rs.chi) == 1);
  }

  // The random stage of an unreachable target runs to the budget.
  auto sm = build_sm({1, 5, 1});
  auto e = search_char(sm, SearchTarget::Nonsingular, 3, 40);
  CHECK_FALSE(e.found);
  CHECK(e.evaluations == 40);
  CHECK(e.log.back().find("exhausted") != std::string::npos);
}
