#include "ko/chars.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "ko/kac.hpp"

namespace ko {

namespace {

Vec generator_vec(const ContactAlgebra& g, unsigned slot) {
  return g.coords(SuperElement::generator(g.shape.dps(), slot));
}

}  // namespace

CharMatrix char_matrix(const ContactAlgebra& g, const PChar& chi) {
  validate_pchar(g.lsa, chi);
  const auto& L = g.lsa;
  const auto& F = g.F();
  const int h = height(L, chi);
  if (h < 2) throw Error("char_matrix: needs ht(chi) >= 2, got " + std::to_string(h));
  CharMatrix m;
  m.h = h;
  m.top_basis = graded_basis(L, h);
  m.next_basis = graded_basis(L, h + 1);
  if (m.top_basis.empty() || m.next_basis.empty())
    throw Error("char_matrix: g_[h] or g_[h+1] is zero at h = " + std::to_string(h));
  const unsigned n2 = 2 * g.shape.n;
  m.a1 = Matrix(m.top_basis.size(), n2);
  for (unsigned b = 0; b < n2; ++b) {
    const Vec x = generator_vec(g, b);
    for (std::size_t a = 0; a < m.top_basis.size(); ++a) m.a1(a, b) = chi(L.bracket(m.top_basis[a], x), F);
  }
  const Vec one = g.coords(SuperElement::one(g.shape.dps()));
  m.a2 = Matrix(m.next_basis.size(), 1);
  for (std::size_t c = 0; c < m.next_basis.size(); ++c) m.a2(c, 0) = chi(L.bracket(m.next_basis[c], one), F);
  return m;
}

std::size_t rank_of(const PrimeField& F, const CharMatrix& m) { return rank(F, m.a1) + rank(F, m.a2); }

std::size_t rank_chi(const ContactAlgebra& g, const PChar& chi) { return rank_of(g.F(), char_matrix(g, chi)); }

bool is_nonsingular(const ContactAlgebra& g, const PChar& chi) {
  return rank_chi(g, chi) == 2 * g.shape.n + 1;
}

namespace {

// Even monomials of m_[h-1] (||r|| = h+1) satisfying pred, minimal first under
// r < s iff r_top < s_top, or equal tops and r > s lexicographically.
std::vector<MultiIndex> candidates(const ContactAlgebra& g, int h, auto pred) {
  const Shape s = g.shape.dps();
  const unsigned top = top_slot(s);
  std::vector<MultiIndex> out;
  for (const auto& r : g.ambient)
    if (static_cast<int>(r.contact_norm(s)) == h + 1 && r.parity(s) == 1 && pred(r)) out.push_back(r);
  std::sort(out.begin(), out.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    if (a[top] != b[top]) return a[top] < b[top];
    return a > b;
  });
  return out;
}

}  // namespace

PChar build_example_nonsingular(const ContactAlgebra& g, int h) {
  if (g.kind != AlgebraKind::M) throw Error("build_example_nonsingular: defined on m only");
  const auto p = static_cast<int>(g.shape.p);
  if (h < 2 || h >= p - 2) throw Error("build_example_nonsingular: needs 2 <= h < p-2");
  for (int d : {h - 1, h, h + 1})
    if (g.lsa.indices_of_degree(d).empty()) throw Error("build_example_nonsingular: empty graded piece");
  const Shape s = g.shape.dps();
  const unsigned n = g.shape.n, top = top_slot(s);
  // Sigma_{n+1} .. Sigma_{2n} are met by an element with every primed slot
  // zero (so x_{2n+1} is set), and Sigma_{2n+1} by one with x_{2n+1} unset.
  auto no_primed = candidates(g, h, [&](const MultiIndex& r) {
    for (unsigned i = n; i < 2 * n; ++i)
      if (r[i]) return false;
    return true;
  });
  auto no_top = candidates(g, h, [&](const MultiIndex& r) { return r[top] == 0; });
  for (const auto& u : no_primed)
    for (const auto& v : no_top) {
      PChar chi = zero_pchar(g.lsa);
      chi.values[g.monomial_index(u)] = 1;
      chi.values[g.monomial_index(v)] = 1;
      if (height(g.lsa, chi) == h && is_nonsingular(g, chi)) return chi;
    }
  throw Error("build_example_nonsingular: no nonsingular support at h = " + std::to_string(h));
}

PChar build_example_singular(const ContactAlgebra& g) {
  if (g.kind != AlgebraKind::M) throw Error("build_example_singular: defined on m only");
  const int h = static_cast<int>(g.shape.p) - 2;
  const Shape s = g.shape.dps();
  const unsigned n = g.shape.n, top = top_slot(s);
  PChar chi = zero_pchar(g.lsa);
  bool any = false;
  for (const auto& r : candidates(g, h, [&](const MultiIndex& r) { return r[2 * n - 1] == 1 && r[top] == 1; })) {
    chi.values[g.monomial_index(r)] = 1;
    any = true;
  }
  if (!any) throw Error("build_example_singular: no even monomial with x_{n'} and x_{2n+1} at this (n, p)");
  if (height(g.lsa, chi) != h) throw Error("build_example_singular: height check failed");
  auto m = char_matrix(g, chi);
  for (std::size_t a = 0; a < m.a1.rows(); ++a)
    if (m.a1(a, n - 1)) throw Error("build_example_singular: M_{x_n} column is not zero");
  if (rank_of(g.F(), m) == 2 * n + 1) throw Error("build_example_singular: result is nonsingular");
  return chi;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Largest g_[0]-submodule of g_[h-1] on which chi vanishes.
Subspace delta_max(const LSA& L, const PChar& chi, int h) {
  const auto& F = L.F();
  std::vector<Vec> kernel;
  for (auto k : L.indices_of_degree(h - 1))
    if (L.parity[k] || !chi.values[k]) kernel.push_back(L.basis_vec(k));
  // Even directions with chi != 0: add differences against a pivot.
  std::optional<std::size_t> piv;
  for (auto k : L.indices_of_degree(h - 1)) {
    if (L.parity[k] || !chi.values[k]) continue;
    if (!piv) {
      piv = k;
      continue;
    }
    Vec v = L.basis_vec(k);
    v[*piv] = F.neg(F.div(chi.values[k], chi.values[*piv]));
    kernel.push_back(std::move(v));
  }
  Subspace D(F, L.dim, kernel);
  const auto g0 = graded_basis(L, 0);
  while (!D.empty()) {
    // a with [x, sum a_i d_i] in D for all x in g_[0].
    Matrix cond(g0.size() * L.dim, D.dim());
    for (std::size_t i = 0; i < D.dim(); ++i)
      for (std::size_t k = 0; k < g0.size(); ++k) {
        Vec r = D.reduce(F, L.bracket(g0[k], D.basis()[i]));
        for (std::size_t t = 0; t < L.dim; ++t) cond(k * L.dim + t, i) = r[t];
      }
    auto ns = nullspace(F, cond);
    if (ns.size() == D.dim()) break;
    std::vector<Vec> next;
    for (const auto& a : ns) {
      Vec v(L.dim, 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) vec_axpy(F, v, a[i], D.basis()[i]);
      next.push_back(std::move(v));
    }
    D = Subspace(F, L.dim, next);
  }
  return D;
}

// Indices of linearly independent rows of m (the pivot columns of m^t).
std::vector<std::size_t> independent_rows(const PrimeField& F, const Matrix& m) {
  Matrix t = m.transpose();
  return rref(F, t);
}

std::optional<DeltaWitness> delta_identity(const ContactAlgebra& g, const PChar& chi, Scalar c,
                                           std::vector<std::string>& log) {
  const auto& L = g.lsa;
  const auto& F = g.F();
  const unsigned n2 = 2 * g.shape.n;
  auto m = char_matrix(g, chi);
  const int h = m.h;
  const std::string tag = "c=" + std::to_string(c) + ": ";
  if (m.a2.is_zero()) {
    log.push_back(tag + "chi([g_[h+1], M_1]) = 0, outside the definition's standing assumption");
    return std::nullopt;
  }
  DeltaWitness w;
  w.c = c;
  w.r = rank(F, m.a1);
  // Condition (3) forces J inside the zero columns, and (2) then needs the
  // nonzero columns to be exactly r independent ones.
  for (unsigned b = 0; b < n2; ++b) (m.a1.col_vec(b) == Vec(m.a1.rows(), 0) ? w.J : w.I).push_back(b);
  if (w.I.size() != w.r) {
    log.push_back(tag + std::to_string(w.I.size()) + " nonzero columns of A1 but rank " + std::to_string(w.r));
    return std::nullopt;
  }
  w.f = m.top_basis;
  Matrix sub(m.a1.rows(), w.I.size());
  for (std::size_t a = 0; a < sub.rows(); ++a)
    for (std::size_t i = 0; i < w.I.size(); ++i) sub(a, i) = m.a1(a, w.I[i]);
  w.minor_rows = independent_rows(F, sub);
  const Subspace D = delta_max(L, chi, h);
  w.delta = D.basis();
  Matrix pair(D.dim(), w.J.size());
  for (std::size_t j = 0; j < w.J.size(); ++j) {
    const Vec x = generator_vec(g, w.J[j]);
    for (std::size_t i = 0; i < D.dim(); ++i) pair(i, j) = chi(L.bracket(D.basis()[i], x), F);
  }
  auto rows = independent_rows(F, pair);
  log.push_back(tag + "r=" + std::to_string(w.r) + " |J|=" + std::to_string(w.J.size()) +
                " dim Delta_max=" + std::to_string(D.dim()) + " pairing rank=" + std::to_string(rows.size()));
  if (rows.size() != w.J.size()) return std::nullopt;
  for (auto i : rows) w.e.push_back(D.basis()[i]);
  return w;
}

}  // namespace

DeltaResult is_delta_invertible(const ContactAlgebra& g, const PChar& chi, OrbitMode mode) {
  validate_pchar(g.lsa, chi);
  DeltaResult out;
  const int h = height(g.lsa, chi);
  if (h < 5) {
    out.log.push_back("ht(chi) = " + std::to_string(h) + " < 5");
    return out;
  }
  if (g.lsa.indices_of_degree(h).empty() || g.lsa.indices_of_degree(h + 1).empty()) {
    out.log.push_back("g_[h] or g_[h+1] is zero");
    return out;
  }
  const auto rk = rank_chi(g, chi);
  if (rk >= 2 * g.shape.n + 1) {
    out.log.push_back("rank " + std::to_string(rk) + ": nonsingular");
    return out;
  }
  const Scalar last = mode == OrbitMode::Identity ? 1 : static_cast<Scalar>(g.shape.p - 1);
  for (Scalar c = 1; c <= last; ++c) {
    const PChar t = c == 1 ? chi : coadjoint_apply(g.lsa, {c}, chi);
    if (auto w = delta_identity(g, t, c, out.log)) {
      auto why = validate_delta_witness(g, chi, *w);
      if (!why.empty()) throw Error("is_delta_invertible: witness failed revalidation: " + why);
      out.decision = Decision::Yes;
      out.witness = std::move(*w);
      return out;
    }
  }
  if (mode == OrbitMode::GradingOrbit) {
    out.decision = Decision::Inconclusive;
    out.log.push_back("grading orbit exhausted; automorphisms outside it not searched");
  }
  return out;
}

std::string validate_delta_witness(const ContactAlgebra& g, const PChar& chi0, const DeltaWitness& w) {
  const auto& L = g.lsa;
  const auto& F = g.F();
  if (w.c == 0 || w.c >= F.p()) return "grading parameter";
  const PChar chi = coadjoint_apply(L, {w.c}, chi0);
  const int h = height(L, chi);
  if (h < 5) return "height below 5";
  const unsigned n2 = 2 * g.shape.n;
  const auto g_h = graded_basis(L, h);
  const auto g_h1 = graded_basis(L, h + 1);
  const Vec one = g.coords(SuperElement::one(g.shape.dps()));
  bool a2 = false;
  for (const auto& v : g_h1) a2 = a2 || chi(L.bracket(v, one), F) != 0;
  if (!a2) return "A2 block is zero";
  if (rank_chi(g, chi) != w.r + 1 || w.r + 1 >= n2 + 1) return "rank is not r+1 < 2n+1";

  // (1)
  std::vector<int> seen(n2, 0);
  for (auto i : w.I) i < n2 ? ++seen[i] : seen[0] += 2;
  for (auto j : w.J) j < n2 ? ++seen[j] : seen[0] += 2;
  if (std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; })) return "(1) I, J not a partition";
  if (w.I.size() != w.r || w.I.size() == n2) return "(1) |I| != r or I is everything";

  // (2)
  if (w.f.size() != g_h.size() || Subspace(F, L.dim, w.f) != Subspace(F, L.dim, g_h)) return "(2) f not a basis of g_[h]";
  for (const auto& f : w.f)
    if (L.vec_degree(f) != h) return "(2) f not in g_[h]";
  if (w.minor_rows.size() != w.r) return "(2) minor size";
  Matrix minor(w.r, w.r);
  for (std::size_t a = 0; a < w.r; ++a) {
    if (w.minor_rows[a] >= w.f.size()) return "(2) minor row index";
    for (std::size_t i = 0; i < w.r; ++i)
      minor(a, i) = chi(L.bracket(w.f[w.minor_rows[a]], generator_vec(g, w.I[i])), F);
  }
  if (rank(F, minor) != w.r) return "(2) minor not invertible";

  // (3)
  for (auto j : w.J) {
    const Vec x = generator_vec(g, j);
    for (const auto& f : g_h)
      if (chi(L.bracket(f, x), F)) return "(3) chi([g_[h], M_{x_j}]) != 0";
  }

  // (4)
  const Subspace D(F, L.dim, w.delta);
  for (const auto& d : w.delta) {
    if (is_zero(d) || L.vec_degree(d) != h - 1) return "(4) Delta not in g_[h-1]";
    if (chi(d, F)) return "(4) chi(Delta) != 0";
    for (const auto& x : graded_basis(L, 0))
      if (!D.contains(F, L.bracket(x, d))) return "(4) Delta not g_[0]-stable";
  }

  // (5)
  if (w.e.size() != w.J.size()) return "(5) wrong number of e_j";
  Matrix pair(w.e.size(), w.J.size());
  for (std::size_t a = 0; a < w.e.size(); ++a) {
    if (!D.contains(F, w.e[a]) || !L.vec_parity(w.e[a]) || !L.vec_degree(w.e[a])) return "(5) e_j not homogeneous in Delta";
    for (std::size_t j = 0; j < w.J.size(); ++j) pair(a, j) = chi(L.bracket(w.e[a], generator_vec(g, w.J[j])), F);
  }
  if (rank(F, pair) != w.J.size()) return "(5) pairing not invertible";
  return {};
}

std::vector<Vec> cartan_h(const ContactAlgebra& g) {
  const Shape s = g.shape.dps();
  const unsigned n = g.shape.n;
  auto pair = [&](unsigned j) {
    auto r = MultiIndex::zero(s.slots());
    r[j] = 1;
    r[n + j] = 1;
    return SuperElement::monomial(s, r);
  };
  std::vector<Vec> out;
  for (unsigned j = 0; j + 1 < n; ++j) out.push_back(g.coords(pair(j) - pair(j + 1)));
  return out;
}

RegularResult is_regular_semisimple(const ContactAlgebra& g, const PChar& chi, OrbitMode mode) {
  validate_pchar(g.lsa, chi);
  const int h = height(g.lsa, chi);
  if (h != 1) throw Error("is_regular_semisimple: needs ht(chi) = 1, got " + std::to_string(h));
  const auto& F = g.F();
  const auto split = triangular_split(g);
  const auto hs = cartan_h(g);
  RegularResult out;
  if (hs.empty()) {
    out.degenerate = true;
    out.warning = "n = 1: no h_j, the nonvanishing conditions hold vacuously";
  }
  const Scalar last = mode == OrbitMode::Identity ? 1 : static_cast<Scalar>(g.shape.p - 1);
  for (Scalar c = 1; c <= last && !out.value; ++c) {
    const PChar t = c == 1 ? chi : coadjoint_apply(g.lsa, {c}, chi);
    bool ok = true;
    for (const auto* part : {&split.n_minus_basis, &split.n_plus_basis})
      for (const auto& v : *part) ok = ok && t(v, F) == 0;
    Vec total(g.dim(), 0);
    for (const auto& v : hs) {
      ok = ok && t(v, F) != 0;
      total = vec_add(F, total, v);
    }
    if (!hs.empty()) ok = ok && t(total, F) != 0;
    out.value = ok;
  }
  return out;
}

std::string to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::Nonsingular: return "nonsingular";
    case SearchTarget::DeltaInvertible: return "delta-invertible";
    case SearchTarget::RegularSemisimple: return "regular-semisimple";
  }
  return "?";
}

namespace {

std::vector<std::size_t> even_of_degree(const LSA& L, int d) {
  std::vector<std::size_t> out;
  for (auto k : L.indices_of_degree(d))
    if (!L.parity[k]) out.push_back(k);
  return out;
}

class Searcher {
 public:
  Searcher(const ContactAlgebra& g, SearchTarget target, std::uint64_t seed, std::uint64_t budget)
      : g_(g), target_(target), rng_(seed) {
    out.seed = seed;
    out.budget = budget;
  }

  bool spent() const { return out.found || out.evaluations >= out.budget; }

  // One predicate evaluation; false when the budget is gone.
  bool evaluate(const PChar& chi, const std::string& what) {
    if (spent()) return false;
    ++out.evaluations;
    if (!holds(chi)) return false;
    out.found = true;
    out.chi = chi;
    out.log.push_back("found at evaluation " + std::to_string(out.evaluations) + ": " + what);
    return true;
  }

  void stage(const std::string& name, std::uint64_t before) {
    out.log.push_back(name + ": " + std::to_string(out.evaluations - before) + " evaluations");
  }

  Scalar nonzero() { return static_cast<Scalar>(1 + rng_() % (g_.shape.p - 1)); }
  Scalar any() { return static_cast<Scalar>(rng_() % g_.shape.p); }
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(rng_() % k); }

  SearchResult out;

 private:
  bool holds(const PChar& chi) const {
    const int h = height(g_.lsa, chi);
    switch (target_) {
      case SearchTarget::Nonsingular:
        if (h < 2 || g_.lsa.indices_of_degree(h).empty() || g_.lsa.indices_of_degree(h + 1).empty()) return false;
        return is_nonsingular(g_, chi);
      case SearchTarget::DeltaInvertible:
        return is_delta_invertible(g_, chi, OrbitMode::Identity).decision == Decision::Yes;
      case SearchTarget::RegularSemisimple:
        return h == 1 && is_regular_semisimple(g_, chi, OrbitMode::Identity).value;
    }
    return false;
  }

  const ContactAlgebra& g_;
  SearchTarget target_;
  std::mt19937_64 rng_;
};

// Heights h for which g_[h-1], g_[h] and g_[h+1] are all nonzero.
std::vector<int> usable_heights(const LSA& L, int from) {
  std::vector<int> out;
  for (int h = from; h + 1 <= L.max_degree(); ++h)
    if (!even_of_degree(L, h - 1).empty() && !L.indices_of_degree(h).empty()) out.push_back(h);
  return out;
}

void search_nonsingular(const ContactAlgebra& g, Searcher& s) {
  const auto& L = g.lsa;
  const auto hs = usable_heights(L, 2);
  auto t = s.out.evaluations;
  if (g.kind == AlgebraKind::M)
    for (int h : hs) {
      if (h >= static_cast<int>(g.shape.p) - 2 || s.spent()) continue;
      try {
        if (s.evaluate(build_example_nonsingular(g, h), "minimal-element recipe h=" + std::to_string(h))) return;
      } catch (const Error&) {
      }
    }
  s.stage("recipe", t);
  t = s.out.evaluations;
  for (int h : hs) {
    const auto idx = even_of_degree(L, h - 1);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a; b < idx.size(); ++b) {
        PChar chi = zero_pchar(L);
        chi.values[idx[a]] = 1;
        chi.values[idx[b]] = 1;
        if (s.evaluate(chi, "support {" + L.labels[idx[a]] + ", " + L.labels[idx[b]] + "}")) return;
        if (s.spent()) return s.stage("sparse", t);
      }
  }
  s.stage("sparse", t);
  t = s.out.evaluations;
  while (!hs.empty() && !s.spent()) {
    const int h = hs[s.below(hs.size())];
    PChar chi = zero_pchar(L);
    for (auto k : L.indices_of_degree(h - 1))
      if (!L.parity[k]) chi.values[k] = s.any();
    if (is_zero(chi.values)) {
      ++s.out.evaluations;
      continue;
    }
    for (int d = L.min_degree(); d < h - 1; ++d)
      for (auto k : even_of_degree(L, d)) chi.values[k] = s.any();
    if (s.evaluate(chi, "random functional h=" + std::to_string(h))) return;
  }
  s.stage("random", t);
}

void search_delta(const ContactAlgebra& g, Searcher& s) {
  const auto& L = g.lsa;
  const auto hs = usable_heights(L, 5);
  auto t = s.out.evaluations;
  for (int h : hs) {
    const auto top = even_of_degree(L, h - 1);
    auto next = even_of_degree(L, h - 2);
    for (auto a : top)
      for (std::size_t b = 0; b <= next.size(); ++b) {
        PChar chi = zero_pchar(L);
        chi.values[a] = 1;
        std::string what = "support {" + L.labels[a];
        if (b < next.size()) {
          chi.values[next[b]] = 1;
          what += ", " + L.labels[next[b]];
        }
        if (s.evaluate(chi, what + "}")) return;
        if (s.spent()) return s.stage("sparse", t);
      }
  }
  s.stage("sparse", t);
  t = s.out.evaluations;
  while (!hs.empty() && !s.spent()) {
    const int h = hs[s.below(hs.size())];
    PChar chi = zero_pchar(L);
    for (int d = L.min_degree(); d <= h - 1; ++d)
      for (auto k : even_of_degree(L, d))
        if (d >= h - 3 || s.below(2)) chi.values[k] = s.any();
    if (s.evaluate(chi, "random functional h=" + std::to_string(h))) return;
  }
  s.stage("random", t);
}

void search_regular(const ContactAlgebra& g, Searcher& s) {
  const auto& L = g.lsa;
  const auto& F = g.F();
  const auto split = triangular_split(g);
  const auto idx = even_of_degree(L, 0);
  std::vector<Vec> rows;
  for (const auto* part : {&split.n_minus_basis, &split.n_plus_basis, &split.cartan_basis})
    for (const auto& v : *part)
      if (L.vec_parity(v) == 0u) {
        Vec r(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) r[i] = v[idx[i]];
        rows.push_back(std::move(r));
      }
  const Matrix A = Matrix::from_rows(rows, idx.size());
  const std::size_t nc = split.cartan_basis.size(), off = rows.size() - nc;
  // chi vanishing on n^+ and n^- with the given values on the Cartan basis.
  auto make = [&](const Vec& target) -> std::optional<PChar> {
    Vec b(rows.size(), 0);
    for (std::size_t k = 0; k < nc; ++k) b[off + k] = target[k];
    auto x = solve(F, A, b);
    if (!x) return std::nullopt;
    PChar chi = zero_pchar(L);
    for (std::size_t i = 0; i < idx.size(); ++i) chi.values[idx[i]] = (*x)[i];
    return chi;
  };
  auto t = s.out.evaluations;
  for (std::size_t k = 0; k < nc && !s.spent(); ++k)
    if (auto chi = make(unit_vec(nc, k)))
      if (s.evaluate(*chi, "Cartan support {" + std::to_string(k) + "}")) return;
  for (std::size_t a = 0; a < nc && !s.spent(); ++a)
    for (std::size_t b = a + 1; b < nc && !s.spent(); ++b) {
      Vec v(nc, 0);
      v[a] = v[b] = 1;
      if (auto chi = make(v))
        if (s.evaluate(*chi, "Cartan support {" + std::to_string(a) + ", " + std::to_string(b) + "}")) return;
    }
  s.stage("sparse", t);
  t = s.out.evaluations;
  while (nc > 0 && !s.spent()) {
    Vec v(nc);
    for (auto& x : v) x = s.any();
    auto chi = make(v);
    if (!chi) {
      ++s.out.evaluations;
      continue;
    }
    if (s.evaluate(*chi, "random Cartan values")) return;
  }
  s.stage("random", t);
}

}  // namespace

SearchResult search_char(const ContactAlgebra& g, SearchTarget target, std::uint64_t seed, std::uint64_t budget) {
  Searcher s(g, target, seed, budget);
  s.out.log.push_back("target " + to_string(target) + " seed " + std::to_string(seed) + " budget " +
                      std::to_string(budget));
  switch (target) {
    case SearchTarget::Nonsingular: search_nonsingular(g, s); break;
    case SearchTarget::DeltaInvertible: search_delta(g, s); break;
    case SearchTarget::RegularSemisimple: search_regular(g, s); break;
  }
  if (!s.out.found) s.out.log.push_back("exhausted after " + std::to_string(s.out.evaluations) + " evaluations");
  return s.out;
}

}  // namespace ko
