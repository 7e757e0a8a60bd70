#include "ko/kac.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ko {

std::vector<Vec> kac_order(const ContactAlgebra& g) {
  const Shape s = g.shape.dps();
  const unsigned n = g.shape.n;
  std::vector<Vec> out;
  auto gen = [&](unsigned slot) { return g.coords(SuperElement::generator(s, slot)); };
  for (unsigned i = 0; i < n; ++i) out.push_back(gen(n + i));
  for (unsigned i = n; i-- > 0;) out.push_back(gen(i));
  out.push_back(g.coords(SuperElement::one(s)));
  return out;
}

std::vector<Vec> filtration_basis(const LSA& g, int i) {
  std::vector<Vec> out;
  for (auto k : g.indices_with_degree_at_least(i)) out.push_back(g.basis_vec(k));
  return out;
}

std::vector<Vec> graded_basis(const LSA& g, int d) {
  std::vector<Vec> out;
  for (auto k : g.indices_of_degree(d)) out.push_back(g.basis_vec(k));
  return out;
}

InducedModule kac_module(const ContactAlgebra& g, const PChar& chi, const GModule& M) {
  validate_pchar(g.lsa, chi);
  const auto g0 = filtration_basis(g.lsa, 0);
  if (Subspace(g.F(), g.dim(), M.acting) != Subspace(g.F(), g.dim(), g0))
    throw Error("kac_module: M must act through a basis of g^0");
  return InducedModule(g.lsa, chi, kac_order(g), M);
}

namespace {

std::optional<std::size_t> first_nonzero(const std::vector<Scalar>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) return i;
  return std::nullopt;
}

std::vector<Scalar> cartan_values(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi) {
  std::vector<Scalar> c;
  for (const auto& h : split.cartan_basis) c.push_back(chi(h, g.F()));
  return c;
}

}  // namespace

GModule borel_module(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi,
                     const WeightParams& params) {
  const auto& F = g.F();
  const std::uint32_t p = F.p();
  const auto c = cartan_values(g, split, chi);
  if (params.size() != c.size()) throw Error("borel_module: wrong number of weight parameters");
  for (const auto& e : split.n_plus_basis)
    if (g.lsa.vec_parity(e) == 0u && chi(e, F)) throw Error("borel_module: chi does not vanish on n^+");
  const auto i0 = first_nonzero(c);
  const std::size_t d = i0 ? p : 1;
  Matrix T(d, d);
  if (i0) {
    for (std::size_t k = 0; k + 1 < d; ++k) T(k + 1, k) = 1;
    T(1, d - 1) = 1;
    T(0, d - 1) = c[*i0];
  }
  GModule M;
  M.field = F;
  M.dim = d;
  M.parity.assign(d, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    M.acting.push_back(split.cartan_basis[i]);
    Matrix a(d, d);
    if (!c[i]) {
      for (std::size_t k = 0; k < d; ++k) a(k, k) = params[i] % p;
    } else if (i == *i0) {
      a = T;
    } else {
      a = mat_scale(F, F.div(c[i], c[*i0]), T);
      for (std::size_t k = 0; k < d; ++k) a(k, k) = F.add(a(k, k), params[i] % p);
    }
    M.action.push_back(SparseMatrix::from_dense(a));
  }
  for (const auto& e : split.n_plus_basis) {
    M.acting.push_back(e);
    M.action.emplace_back(d, d);
  }
  return M;
}

std::vector<WeightParams> weight_sweep(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi) {
  const auto c = cartan_values(g, split, chi);
  const auto i0 = first_nonzero(c);
  std::vector<WeightParams> out{WeightParams(c.size(), 0)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i0 && i == *i0) continue;
    std::vector<WeightParams> next;
    for (const auto& w : out)
      for (Scalar v = 0; v < g.F().p(); ++v) {
        auto x = w;
        x[i] = v;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

InducedModule baby_verma(const ContactAlgebra& g, const TriangularSplit& split, const PChar& chi,
                         const WeightParams& params) {
  return InducedModule(g.lsa, chi, split.n_minus_basis, borel_module(g, split, chi, params));
}

GModule baby_verma_module(const ContactAlgebra& g, const PChar& chi, const WeightParams& params) {
  const auto split = triangular_split(g);
  return baby_verma(g, split, chi, params).as_module(graded_basis(g.lsa, 0));
}

InducedModule ideal_induction(const ContactAlgebra& g, const PChar& chi) {
  const auto& L = g.lsa;
  const int h = height(L, chi);
  if (h < 2) throw Error("ideal_induction: needs ht(chi) >= 2");
  std::vector<Vec> Y, B;
  std::vector<Scalar> mu;
  for (std::size_t k = 0; k < L.dim; ++k) {
    if (L.degree[k] < 0) continue;
    if (L.degree[k] < h - 1) {
      Y.push_back(L.basis_vec(k));
    } else {
      B.push_back(L.basis_vec(k));
      mu.push_back(L.degree[k] == h - 1 && !L.parity[k] ? chi.at(k) : 0);
    }
  }
  return InducedModule(L, chi, std::move(Y), character_module(L.F(), std::move(B), mu), true);
}

SimpleFamily simple_g0_modules(const ContactAlgebra& g, const PChar& chi, std::uint64_t seed, std::size_t limit) {
  const auto& L = g.lsa;
  SimpleFamily fam;
  const auto g0 = filtration_basis(L, 0);
  const int h = height(L, chi);
  if (h >= 2) {
    auto I = ideal_induction(g, chi);
    auto factors = composition_factors(I.as_module(g0), seed);
    fam.complete = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (limit && fam.modules.size() >= limit) {
        fam.complete = false;
        break;
      }
      fam.modules.push_back(std::move(factors[i]));
      fam.origin.push_back("composition factor " + std::to_string(i) + " of the induced module from g^" +
                           std::to_string(h - 1));
    }
    return fam;
  }
  const auto split = triangular_split(g);
  const auto degree0 = graded_basis(L, 0);
  std::size_t idx = 0;
  for (const auto& w : weight_sweep(g, split, chi)) {
    if (limit && fam.modules.size() >= limit) break;
    auto V = baby_verma(g, split, chi, w).as_module(degree0);
    auto head = simple_head(V, seed + idx++);
    fam.modules.push_back(extend_trivially(L, head, g0));
    std::ostringstream o;
    o << "head of baby Verma with parameters (";
    for (std::size_t i = 0; i < w.size(); ++i) o << (i ? "," : "") << w[i];
    o << ")";
    fam.origin.push_back(o.str());
  }
  return fam;
}

CheckReport verify_induced_sampled(const LSA& g, const InducedModule& K, const PChar& chi,
                                   const std::vector<Vec>& elements, unsigned samples, std::uint64_t seed) {
  const auto& F = g.F();
  CheckReport rep;
  rep.name = "module (sampled)";
  std::mt19937_64 rng(seed);
  const std::size_t k = elements.size();
  std::vector<unsigned> par(k);
  for (std::size_t a = 0; a < k; ++a) par[a] = g.vec_parity(elements[a]).value_or(0);
  for (unsigned t = 0; t < samples; ++t) {
    Vec v(K.dim());
    for (auto& x : v) x = static_cast<Scalar>(rng() % F.p());
    std::vector<Vec> av(k);
    for (std::size_t a = 0; a < k; ++a) av[a] = K.apply(elements[a], v);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        ++rep.checked;
        Vec lhs = K.apply(elements[a], av[b]);
        vec_axpy(F, lhs, F.neg(F.sign(par[a] * par[b])), K.apply(elements[b], av[a]));
        Vec rhs = K.apply(g.bracket(elements[a], elements[b]), v);
        if (lhs != rhs) rep.add({{a, b}, "bracket relation fails on a sample vector"});
      }
    for (std::size_t a = 0; a < k; ++a) {
      if (par[a]) continue;
      ++rep.checked;
      Vec w = v;
      for (std::uint32_t i = 0; i < F.p(); ++i) w = K.apply(elements[a], w);
      vec_axpy(F, w, F.neg(1), K.apply(g.p_power(elements[a]), v));
      vec_axpy(F, w, F.neg(F.pow(chi(elements[a], F), F.p())), v);
      if (!is_zero(w)) rep.add({{a}, "u_chi relation fails on a sample vector"});
    }
  }
  return rep;
}

SocleReport unique_socle_check(const ContactAlgebra& g, const PChar& chi, const InducedModule& K,
                               unsigned samples, std::uint64_t seed) {
  const auto& L = g.lsa;
  const auto& F = L.F();
  const int h = height(L, chi);
  if (h < 2) throw Error("unique_socle_check: needs ht(chi) >= 2");
  std::vector<Vec> xs;
  std::vector<Scalar> mu;
  for (auto k : L.indices_with_degree_at_least(h - 1)) {
    xs.push_back(L.basis_vec(k));
    mu.push_back(L.degree[k] == h - 1 && !L.parity[k] ? chi.at(k) : 0);
  }
  auto shifted = [&](std::size_t i, const Vec& v) {
    Vec w = K.apply(xs[i], v);
    if (mu[i]) vec_axpy(F, w, F.neg(mu[i]), v);
    return w;
  };
  const std::size_t n = K.dim(), d0 = K.base_dim();
  auto in_bottom = [&](const Vec& v) {
    for (std::size_t i = d0; i < n; ++i)
      if (v[i]) return false;
    return !is_zero(v);
  };

  SocleReport rep;
  rep.samples = samples;
  // Joint eigenspace, shrinking one element at a time.
  std::vector<Vec> basis;
  bool whole = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (whole) {
      Matrix a = K.action_matrix(xs[i]).to_dense();
      for (std::size_t r = 0; r < n; ++r) a(r, r) = F.sub(a(r, r), mu[i]);
      basis = fast_nullspace(F, a);
      whole = false;
    } else {
      std::vector<Vec> cols;
      for (const auto& b : basis) cols.push_back(shifted(i, b));
      auto ker = fast_nullspace(F, Matrix::from_columns(cols, n));
      std::vector<Vec> next;
      for (const auto& c : ker) {
        Vec v(n, 0);
        for (std::size_t j = 0; j < c.size(); ++j)
          if (c[j]) vec_axpy(F, v, c[j], basis[j]);
        next.push_back(std::move(v));
      }
      basis = std::move(next);
    }
    if (basis.empty()) break;
  }
  rep.eigen_dim = basis.size();
  rep.exact = !basis.empty() && std::all_of(basis.begin(), basis.end(), in_bottom);

  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < samples; ++t) {
    Vec v(n);
    do {
      for (auto& x : v) x = static_cast<Scalar>(rng() % F.p());
    } while (is_zero(v));
    for (std::size_t step = 0; step <= n; ++step) {
      bool moved = false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        Vec w = shifted(i, v);
        if (!is_zero(w)) {
          v = std::move(w);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (in_bottom(v)) ++rep.sample_pass;
  }
  return rep;
}

KacCertificate kac_simplicity_certificate(const ContactAlgebra& g, const PChar& chi, const InducedModule& K,
                                          std::uint64_t seed) {
  const auto& L = g.lsa;
  const auto& F = L.F();
  KacCertificate cert;
  if (height(L, chi) > 1) throw Error("kac_simplicity_certificate: needs ht(chi) <= 1");
  for (const auto& y : K.complement())
    if (chi(y, F)) throw Error("kac_simplicity_certificate: chi must vanish on g_-");
  std::ostringstream note;

  cert.free_action = K.complement_acts_freely();
  const std::size_t m = K.monomial_count(), d = K.base_dim(), top = K.top_monomial();
  if (cert.free_action) {
    const std::size_t nY = K.complement().size();
    Matrix stacked(nY * m, m);
    for (std::size_t k = 0; k < nY; ++k) {
      Matrix r = K.regular_action(k);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) stacked(k * m + i, j) = r(i, j);
    }
    auto ker = fast_nullspace(F, stacked);
    cert.top_kernel = ker.size() == 1 && ker[0] == unit_vec(m, top);
  }
  note << "g_- free=" << cert.free_action << " kernel=top:" << cert.top_kernel;

  // W = X^top (x) M as a g_[0]-module.
  const auto degree0 = graded_basis(L, 0);
  const auto par = K.parity();
  GModule W;
  W.field = F;
  W.dim = d;
  W.acting = degree0;
  for (std::size_t j = 0; j < d; ++j) W.parity.push_back(par[K.index(top, j)]);
  bool stable = true;
  for (const auto& x : degree0) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> t;
    for (std::size_t j = 0; j < d; ++j) {
      Vec v = K.apply(x, unit_vec(K.dim(), K.index(top, j)));
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        if (i / d != top) {
          stable = false;
          continue;
        }
        t.emplace_back(static_cast<std::uint32_t>(i % d), static_cast<std::uint32_t>(j), v[i]);
      }
    }
    W.action.push_back(SparseMatrix::from_triples(F, d, d, std::move(t)));
  }
  if (stable) {
    cert.top = meataxe_irreducible(W, seed);
  } else {
    cert.top.verdict = Verdict::Reducible;
    cert.top.note = "top layer is not g_[0]-stable";
  }
  note << "; top: " << to_string(cert.top.verdict);

  const int depth = -K.monomial_degree(top);
  std::vector<std::vector<Vec>> pieces(depth + 1);
  for (int s = 0; s <= depth; ++s) pieces[s] = graded_basis(L, s);

  // Cheap attempt: raise a random vector of W by random homogeneous elements
  // of g_[s], smallest s first, until it lands in 1 (x) M.
  std::mt19937_64 rng(seed ^ 0x6b6f6b6163ULL);
  auto random_in = [&](const std::vector<Vec>& basis, unsigned parity) {
    Vec y(L.dim, 0);
    for (const auto& b : basis)
      if (L.vec_parity(b) == parity) vec_axpy(F, y, static_cast<Scalar>(rng() % F.p()), b);
    return y;
  };
  for (int attempt = 0; attempt < 32 && !cert.reaches_bottom; ++attempt) {
    Vec v(K.dim(), 0);
    for (std::size_t j = 0; j < d; ++j) v[K.index(top, j)] = static_cast<Scalar>(rng() % F.p());
    int k = depth;
    while (k > 0) {
      bool moved = false;
      for (int s = 1; s <= k && !moved; ++s)
        for (unsigned parity = 0; parity < 2 && !moved; ++parity) {
          Vec y = random_in(pieces[s], (parity + static_cast<unsigned>(rng() & 1)) & 1);
          if (is_zero(y)) continue;
          Vec w = K.apply(y, v);
          if (is_zero(w)) continue;
          v = std::move(w);
          k -= s;
          moved = true;
        }
      if (!moved) break;
    }
    if (k == 0) {
      cert.reaches_bottom = true;
      note << "; raising path found on attempt " << attempt + 1;
    }
  }

  // u(g) W = u(g_-) u(g^0) W because g_- kills W, so the submodule generated
  // by W meets 1 (x) M iff u(g^0) W does.  Build u(g^0) W layer by layer:
  // V_k is the g_[0]-closure of the sum of g_[s] V_{k+s}.
  if (!cert.reaches_bottom) {
    std::vector<std::vector<std::size_t>> layer(depth + 1);  // K indices per -degree
    for (std::size_t s = 0; s < m; ++s) {
      auto& l = layer[-K.monomial_degree(s)];
      for (std::size_t j = 0; j < d; ++j) l.push_back(K.index(s, j));
    }
    std::vector<std::vector<Vec>> V(depth + 1);  // full K vectors, indexed by -degree
    for (std::size_t j = 0; j < d; ++j) V[depth].push_back(unit_vec(K.dim(), K.index(top, j)));
    for (int k = depth - 1; k >= 0; --k) {
      SemiEchelon E(F, layer[k].size());
      std::vector<Vec> queue;
      auto offer = [&](const Vec& full) {
        Vec loc(layer[k].size(), 0);
        for (std::size_t i = 0; i < layer[k].size(); ++i) loc[i] = full[layer[k][i]];
        if (E.insert(loc, nullptr)) queue.push_back(full);
      };
      for (int s = 1; k + s <= depth; ++s)
        for (const auto& y : pieces[s])
          for (const auto& v : V[k + s]) offer(K.apply(y, v));
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& x : pieces[0]) offer(K.apply(x, queue[q]));
      V[k] = std::move(queue);
    }
    cert.reaches_bottom = !V[0].empty();
    cert.proved_reducible = V[0].empty();
    note << "; u(g^0) W meets 1 (x) M in dimension " << V[0].size();
    if (cert.proved_reducible) note << ", so u(g) W is a proper submodule";
  }

  cert.base = meataxe_irreducible(K.base(), seed + 1);
  note << "; M: " << to_string(cert.base.verdict);
  cert.note = note.str();
  return cert;
}

}  // namespace ko
