#include "ko/repn.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ko/fastmod.hpp"

namespace ko {

SpanCoords::SpanCoords(const PrimeField& F, std::vector<Vec> basis) : F_(F), basis_(std::move(basis)) {
  const std::size_t k = basis_.size();
  const std::size_t n = k ? basis_[0].size() : 0;
  Matrix aug(k, n + k);
  for (std::size_t i = 0; i < k; ++i) {
    if (basis_[i].size() != n) throw Error("SpanCoords: ragged basis");
    for (std::size_t c = 0; c < n; ++c) aug(i, c) = basis_[i][c];
    aug(i, n + i) = 1;
  }
  auto piv = rref(F, aug);
  std::vector<Vec> rows;
  to_basis_ = Matrix(k, k);
  std::size_t r = 0;
  for (; r < piv.size() && piv[r] < n; ++r) {
    Vec row(aug.row(r), aug.row(r) + n);
    rows.push_back(row);
    for (std::size_t c = 0; c < k; ++c) to_basis_(r, c) = aug(r, n + c);
  }
  if (r != k) throw Error("SpanCoords: basis is linearly dependent");
  echelon_ = Subspace(F, n, rows);
}

std::optional<Vec> SpanCoords::coords(const Vec& v) const {
  if (!echelon_.contains(F_, v)) return std::nullopt;
  Vec e = echelon_.coordinates(v);
  Vec out(basis_.size(), 0);
  for (std::size_t r = 0; r < e.size(); ++r)
    if (e[r]) vec_axpy(F_, out, e[r], to_basis_.row_vec(r));
  return out;
}

// ---------------------------------------------------------------------------

SparseMatrix GModule::action_of(const Vec& z) const {
  // Fast path: z is one of the acting vectors.
  for (std::size_t k = 0; k < acting.size(); ++k)
    if (acting[k] == z) return action[k];
  SpanCoords sc(field, acting);
  auto c = sc.coords(z);
  if (!c) throw Error("element outside the acting subalgebra");
  SparseMatrix out(dim, dim);
  for (std::size_t k = 0; k < c->size(); ++k)
    if ((*c)[k]) out = sp_lincomb(field, 1, out, (*c)[k], action[k]);
  return out;
}

std::vector<Matrix> GModule::dense_actions() const {
  std::vector<Matrix> out;
  out.reserve(action.size());
  for (const auto& a : action) out.push_back(a.to_dense());
  return out;
}

SparseMatrix GModule::parity_operator() const {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> t;
  for (std::size_t i = 0; i < dim; ++i)
    t.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), field.sign(parity[i]));
  return SparseMatrix::from_triples(field, dim, dim, std::move(t));
}

CheckReport verify_module(const LSA& g, const GModule& M, const PChar& chi) {
  const auto& F = M.field;
  CheckReport rep;
  rep.name = "module";
  const std::size_t k = M.acting.size();
  std::vector<unsigned> par(k);
  for (std::size_t a = 0; a < k; ++a) {
    auto pa = g.vec_parity(M.acting[a]);
    if (!pa) throw Error("verify_module: acting element of mixed parity");
    par[a] = *pa;
  }
  if (M.parity.size() != M.dim) throw Error("verify_module: parity vector has wrong length");
  SpanCoords span(F, M.acting);
  auto rho = [&](const Vec& z, const char* what, std::vector<std::size_t> idx) -> std::optional<SparseMatrix> {
    auto c = span.coords(z);
    if (!c) {
      rep.add({std::move(idx), std::string(what) + " leaves the acting subalgebra"});
      return std::nullopt;
    }
    SparseMatrix out(M.dim, M.dim);
    for (std::size_t i = 0; i < c->size(); ++i)
      if ((*c)[i]) out = sp_lincomb(F, 1, out, (*c)[i], M.action[i]);
    return out;
  };

  for (std::size_t a = 0; a < k; ++a) {
    ++rep.checked;
    const auto& A = M.action[a];
    bool ok = true;
    for (std::size_t r = 0; r < A.rows() && ok; ++r)
      for (auto q = A.row_ptr()[r]; q < A.row_ptr()[r + 1]; ++q)
        if (M.parity[r] != (M.parity[A.col_idx()[q]] ^ par[a])) {
          ok = false;
          break;
        }
    if (!ok) rep.add({{a}, "action does not respect parity"});
  }

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      ++rep.checked;
      auto br = rho(g.bracket(M.acting[a], M.acting[b]), "bracket", {a, b});
      if (!br) continue;
      Scalar s = F.sign(par[a] * par[b]);
      auto lhs = sp_lincomb(F, 1, sp_mul(F, M.action[a], M.action[b]), F.neg(s),
                            sp_mul(F, M.action[b], M.action[a]));
      if (!(sp_lincomb(F, 1, lhs, F.neg(1), *br)).is_zero())
        rep.add({{a, b}, "bracket relation fails"});
    }
  }

  for (std::size_t a = 0; a < k; ++a) {
    if (par[a]) continue;
    ++rep.checked;
    auto pp = rho(g.p_power(M.acting[a]), "p-power", {a});
    if (!pp) continue;
    Scalar c = F.pow(chi(M.acting[a], F), F.p());
    auto lhs = sp_lincomb(F, 1, sp_pow(F, M.action[a], F.p()), F.neg(1), *pp);
    auto diff = sp_lincomb(F, 1, lhs, F.neg(c), SparseMatrix::identity(M.dim));
    if (!diff.is_zero()) rep.add({{a}, "x^p - x^[p] - chi(x)^p does not vanish"});
  }
  return rep;
}

GModule character_module(const PrimeField& F, std::vector<Vec> acting, const std::vector<Scalar>& values) {
  if (values.size() != acting.size()) throw Error("character_module: size mismatch");
  GModule M;
  M.field = F;
  M.dim = 1;
  M.parity = {0};
  M.acting = std::move(acting);
  for (auto v : values) M.action.push_back(SparseMatrix::from_triples(F, 1, 1, {{0, 0, v}}));
  return M;
}

GModule extend_trivially(const LSA& g, const GModule& M, const std::vector<Vec>& acting) {
  GModule out;
  out.field = M.field;
  out.dim = M.dim;
  out.parity = M.parity;
  out.acting = acting;
  for (const auto& z : acting) {
    auto d = g.vec_degree(z);
    if (d && *d > 0)
      out.action.emplace_back(M.dim, M.dim);
    else
      out.action.push_back(M.action_of(z));
  }
  return out;
}

GModule twist_module(const LSA& g, const GModule& M, GradingAut phi) {
  const auto& F = M.field;
  GModule out = M;
  GradingAut inv{F.inv(phi.c)};
  SpanCoords span(F, M.acting);
  for (std::size_t k = 0; k < M.acting.size(); ++k) {
    auto c = span.coords(apply_grading_aut(g, inv, M.acting[k]));
    if (!c) throw Error("twist_module: acting set is not stable under the grading automorphism");
    SparseMatrix a(M.dim, M.dim);
    for (std::size_t i = 0; i < c->size(); ++i)
      if ((*c)[i]) a = sp_lincomb(F, 1, a, (*c)[i], M.action[i]);
    out.action[k] = std::move(a);
  }
  return out;
}

namespace {

std::uint8_t pivot_parity(const GModule& M, const Subspace& U, std::size_t r) {
  const auto& v = U.basis()[r];
  const std::uint8_t p = M.parity[U.pivots()[r]];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] && M.parity[i] != p) throw Error("subspace is not graded");
  return p;
}

}  // namespace

GModule submodule_action(const GModule& M, const Subspace& U) {
  const auto& F = M.field;
  GModule out;
  out.field = F;
  out.dim = U.dim();
  out.acting = M.acting;
  for (std::size_t r = 0; r < U.dim(); ++r) out.parity.push_back(pivot_parity(M, U, r));
  for (const auto& A : M.action) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> t;
    for (std::size_t c = 0; c < U.dim(); ++c) {
      Vec w = A.apply(F, U.basis()[c]);
      if (!U.contains(F, w)) throw Error("submodule_action: subspace is not invariant");
      Vec co = U.coordinates(w);
      for (std::size_t r = 0; r < co.size(); ++r)
        if (co[r]) t.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), co[r]);
    }
    out.action.push_back(SparseMatrix::from_triples(F, out.dim, out.dim, std::move(t)));
  }
  return out;
}

GModule quotient_action(const GModule& M, const Subspace& U) {
  const auto& F = M.field;
  for (std::size_t r = 0; r < U.dim(); ++r) pivot_parity(M, U, r);
  std::vector<char> is_piv(M.dim, 0);
  for (auto p : U.pivots()) is_piv[p] = 1;
  std::vector<std::size_t> free;
  std::vector<std::int64_t> pos(M.dim, -1);
  for (std::size_t i = 0; i < M.dim; ++i)
    if (!is_piv[i]) {
      pos[i] = static_cast<std::int64_t>(free.size());
      free.push_back(i);
    }
  GModule out;
  out.field = F;
  out.dim = free.size();
  out.acting = M.acting;
  for (auto i : free) out.parity.push_back(M.parity[i]);
  for (const auto& A : M.action) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> t;
    for (std::size_t c = 0; c < free.size(); ++c) {
      Vec w = U.reduce(F, A.apply(F, unit_vec(M.dim, free[c])));
      for (std::size_t r = 0; r < M.dim; ++r)
        if (w[r]) t.emplace_back(static_cast<std::uint32_t>(pos[r]), static_cast<std::uint32_t>(c), w[r]);
    }
    out.action.push_back(SparseMatrix::from_triples(F, out.dim, out.dim, std::move(t)));
  }
  return out;
}

// ---------------------------------------------------------------------------

SemiEchelon::SemiEchelon(const PrimeField& F, std::size_t n) : F_(F), fm_(F.p()), n_(n), work_(n) {}

Vec SemiEchelon::reduce(const Vec& v) const {
  for (std::size_t i = 0; i < n_; ++i) work_[i] = v[i];
  std::uint64_t budget = 0;
  const std::uint64_t p = F_.p();
  const std::uint64_t limit = (~0ULL) / ((p - 1) * (p - 1) + 1) - 2;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = piv_[r];
    const Scalar c = fm_(work_[piv]);
    if (!c) {
      work_[piv] = 0;
      continue;
    }
    if (++budget >= limit) {
      for (auto& x : work_) x = fm_(x);
      budget = 1;
    }
    const std::uint64_t m = p - c;
    const Scalar* row = rows_[r].data();
    for (std::size_t i = 0; i < n_; ++i) work_[i] += m * row[i];
  }
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = fm_(work_[i]);
  return out;
}

bool SemiEchelon::insert(const Vec& v, Vec* reduced) {
  Vec w = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && !w[piv]) ++piv;
  if (piv == n_) return false;
  Scalar inv = F_.inv(w[piv]);
  for (auto& x : w) x = F_.mul(x, inv);
  if (reduced) *reduced = w;
  rows_.push_back(std::move(w));
  piv_.push_back(piv);
  return true;
}

Subspace SemiEchelon::to_subspace() const { return Subspace(F_, n_, rows_); }

namespace {

template <class Apply>
Subspace spin_impl(const PrimeField& F, std::size_t n, std::size_t ngens, const std::vector<Vec>& seeds, Apply apply) {
  SemiEchelon se(F, n);
  std::deque<Vec> queue;
  for (const auto& s : seeds) {
    Vec r;
    if (se.insert(s, &r)) queue.push_back(s);
  }
  while (!queue.empty() && se.dim() < n) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < ngens && se.dim() < n; ++k) {
      Vec w = apply(k, v);
      if (se.insert(w, nullptr)) queue.push_back(std::move(w));
    }
  }
  if (se.dim() == n) return Subspace::whole(n);
  return se.to_subspace();
}

}  // namespace

Subspace spin(const PrimeField& F, const std::vector<Matrix>& gens, const std::vector<Vec>& seeds) {
  std::vector<SparseMatrix> sp;
  for (const auto& g : gens) sp.push_back(SparseMatrix::from_dense(g));
  const std::size_t n = gens.empty() ? (seeds.empty() ? 0 : seeds[0].size()) : gens[0].rows();
  return spin_impl(F, n, sp.size(), seeds, [&](std::size_t k, const Vec& v) { return sp[k].apply(F, v); });
}

Subspace spin(const std::vector<SparseMatrix>& gens, const PrimeField& F, std::size_t n, const std::vector<Vec>& seeds) {
  return spin_impl(F, n, gens.size(), seeds, [&](std::size_t k, const Vec& v) { return gens[k].apply(F, v); });
}

Subspace spin(const GModule& M, const Vec& v) {
  auto gens = M.action;
  gens.push_back(M.parity_operator());
  return spin(gens, M.field, M.dim, {v});
}

}  // namespace ko
