#include "ko/contact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ko {

unsigned prime_slot(const Shape& s, unsigned i) {
  const unsigned n = s.n_even;
  if (i >= 2 * n) throw Error("prime_slot: index " + std::to_string(i) + " has no partner");
  return i < n ? i + n : i - n;
}

namespace {

void require_contact(const Shape& s) {
  if (s.n_odd != s.n_even + 1) throw Error("contact operators need shape (n, n+1)");
}

unsigned homogeneous_parity(const SuperElement& f, const char* what) {
  auto q = f.parity();
  if (!q) throw Error(std::string(what) + ": input is not parity-homogeneous");
  return *q;
}

std::string function_label(const SuperElement& f) {
  std::ostringstream os;
  os << "M[";
  bool first = true;
  for (const auto& [r, c] : f.terms()) {
    if (!first) os << '+';
    if (c != 1) os << c << '*';
    os << 'x' << r.to_string();
    first = false;
  }
  if (first) os << '0';
  os << ']';
  return os.str();
}

using FieldKey = std::pair<unsigned, MultiIndex>;

std::map<FieldKey, Scalar> flatten(const VectorField& d) {
  std::map<FieldKey, Scalar> out;
  for (const auto& [k, f] : d.components())
    for (const auto& [r, c] : f.terms()) out.emplace(FieldKey{k, r}, c);
  return out;
}

// {f, g} with M_f and d_{2n+1} f already at hand.
SuperElement bracket_with(const VectorField& mf, const SuperElement& df, unsigned pf,
                          const SuperElement& g) {
  const PrimeField& F = g.shape().field;
  SuperElement out = vf_apply(mf, g);
  if (!df.is_zero()) out += multiply(df, g).scaled(pf ? F.neg(2) : 2);
  return out;
}

struct Prepared {
  std::vector<VectorField> mf;
  std::vector<SuperElement> df;
  std::vector<unsigned> pf;
};

Prepared prepare(const std::vector<SuperElement>& fs) {
  Prepared pr;
  for (const auto& f : fs) {
    pr.mf.push_back(m_field(f));
    pr.df.push_back(partial(top_slot(f.shape()), f));
    pr.pf.push_back(homogeneous_parity(f, "contact bracket"));
  }
  return pr;
}

int contact_degree(const Shape& s, const MultiIndex& r) { return static_cast<int>(r.contact_norm(s)) - 2; }

void set_ambient(ContactAlgebra& g) {
  const Shape s = g.shape.dps();
  g.ambient = all_indices(s);
  std::stable_sort(g.ambient.begin(), g.ambient.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    return a.contact_norm(s) < b.contact_norm(s);
  });
  for (std::size_t i = 0; i < g.ambient.size(); ++i) g.ambient_index.emplace(g.ambient[i], i);
}

// M_f^p re-expressed as an ambient vector (coefficients of M_{x^(r)}).
Vec ambient_pmap(const ContactAlgebra& g, const SuperElement& f) {
  const Shape s = g.shape.dps();
  const PrimeField& F = s.field;
  VectorField dp = p_power(m_field(f));
  Vec out(g.ambient.size(), 0);
  if (dp.is_zero()) return out;
  std::optional<int> d;
  for (const auto& [r, c] : f.terms()) d = contact_degree(s, r);
  const long target = static_cast<long>(*d) * s.p();
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < g.ambient.size(); ++i)
    if (contact_degree(s, g.ambient[i]) == target && g.ambient[i].parity(s) == 1) cand.push_back(i);
  std::map<FieldKey, std::size_t> row_of;
  std::vector<std::map<FieldKey, Scalar>> cols;
  for (auto i : cand) cols.push_back(flatten(m_field(SuperElement::monomial(s, g.ambient[i]))));
  auto target_flat = flatten(dp);
  for (const auto& col : cols)
    for (const auto& [key, c] : col) row_of.try_emplace(key, row_of.size());
  for (const auto& [key, c] : target_flat) row_of.try_emplace(key, row_of.size());
  Matrix a(row_of.size(), cand.size());
  Vec rhs(row_of.size(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [key, v] : cols[c]) a(row_of.at(key), c) = v;
  for (const auto& [key, v] : target_flat) rhs[row_of.at(key)] = v;
  auto sol = solve(F, a, rhs);
  if (!sol) throw Error("p-th power of " + function_label(f) + " is not a contact field");
  for (std::size_t c = 0; c < cand.size(); ++c) out[cand[c]] = (*sol)[c];
  return out;
}

std::optional<Vec> coords_from_ambient(const ContactAlgebra& g, const Vec& a) {
  if (g.kind == AlgebraKind::M) return a;
  const PrimeField& F = g.F();
  Vec c(g.embed.size(), 0);
  Vec residual = a;
  for (std::size_t k = 0; k < g.embed.size(); ++k) {
    c[k] = a[g.pivot[k]];
    if (c[k]) vec_axpy(F, residual, F.neg(c[k]), g.embed[k]);
  }
  if (!is_zero(residual)) return std::nullopt;
  return c;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

// Labels, parity, degree, structure constants and p-map from g.functions.
void fill_structure(ContactAlgebra& g) {
  const Shape s = g.shape.dps();
  LSA& L = g.lsa;
  L.field = s.field;
  L.dim = g.functions.size();
  L.labels.clear();
  L.parity.clear();
  L.degree.clear();
  L.basis_terms.clear();
  for (const auto& f : g.functions) {
    L.labels.push_back(function_label(f));
    L.parity.push_back(static_cast<std::uint8_t>((homogeneous_parity(f, "basis") + 1) & 1u));
    L.degree.push_back(contact_degree(s, f.terms().begin()->first));
    std::vector<std::pair<std::vector<int>, Scalar>> terms;
    for (const auto& [r, c] : f.terms()) terms.emplace_back(std::vector<int>(r.entries().begin(), r.entries().end()), c);
    L.basis_terms.push_back(std::move(terms));
  }
  Prepared pr = prepare(g.functions);
  L.sc.assign(L.dim * L.dim, {});
  for (std::size_t i = 0; i < L.dim; ++i)
    for (std::size_t j = 0; j < L.dim; ++j) {
      SuperElement b = bracket_with(pr.mf[i], pr.df[i], pr.pf[i], g.functions[j]);
      if (b.is_zero()) continue;
      auto c = g.try_coords(b);
      if (!c) throw Error("bracket of " + L.labels[i] + " and " + L.labels[j] + " leaves the algebra");
      L.sc[i * L.dim + j] = to_sparse(*c);
    }
  L.pmap.clear();
  for (std::size_t i = 0; i < L.dim; ++i) {
    if (L.parity[i] != 0) continue;
    auto c = coords_from_ambient(g, ambient_pmap(g, g.functions[i]));
    if (!c) throw Error("p-th power of " + L.labels[i] + " leaves the algebra");
    L.pmap.emplace(i, *c);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

SuperElement euler(const SuperElement& f) {
  const Shape& s = f.shape();
  require_contact(s);
  SuperElement out(s);
  for (const auto& [r, c] : f.terms()) {
    unsigned w = 0;
    for (unsigned i = 0; i < 2 * s.n_even; ++i) w += r[i];
    out.add_term(r, s.field.mul(w % s.p(), c));
  }
  return out;
}

VectorField euler_field(const Shape& s) {
  require_contact(s);
  VectorField e(s);
  for (unsigned i = 0; i < 2 * s.n_even; ++i) e.add_component(i, SuperElement::generator(s, i));
  return e;
}

VectorField le_field(const SuperElement& f) {
  const Shape& s = f.shape();
  require_contact(s);
  const unsigned pf = homogeneous_parity(f, "le_field");
  VectorField out(s);
  for (unsigned i = 0; i < 2 * s.n_even; ++i) {
    const unsigned pd = s.is_odd_slot(i) ? 1u : 0u;
    out.add_component(prime_slot(s, i), partial(i, f).scaled(s.field.sign(pd * pf)));
  }
  return out;
}

VectorField m_field(const SuperElement& f) {
  const Shape& s = f.shape();
  require_contact(s);
  const unsigned pf = homogeneous_parity(f, "m_field");
  const PrimeField& F = s.field;
  const unsigned t = top_slot(s);
  VectorField out(s);
  out.add_component(t, f.scaled(2) - euler(f));
  out -= le_field(f);
  SuperElement dt = partial(t, f);
  if (!dt.is_zero()) {
    const Scalar sg = F.neg(F.sign(pf));
    for (unsigned i = 0; i < 2 * s.n_even; ++i)
      out.add_component(i, multiply(dt, SuperElement::generator(s, i)).scaled(sg));
  }
  return out;
}

SuperElement contact_bracket(const SuperElement& f, const SuperElement& g) {
  if (!(f.shape() == g.shape())) throw ShapeMismatch();
  require_contact(f.shape());
  const unsigned pf = homogeneous_parity(f, "contact_bracket");
  return bracket_with(m_field(f), partial(top_slot(f.shape()), f), pf, g);
}

SuperElement div_kappa(const SuperElement& f, Scalar kappa) {
  const Shape& s = f.shape();
  require_contact(s);
  const PrimeField& F = s.field;
  const unsigned pf = homogeneous_parity(f, "div_kappa");
  const unsigned n = s.n_even;
  SuperElement lap(s);
  for (unsigned i = 0; i < n; ++i) lap += partial(i, partial(i + n, f));
  SuperElement dt = partial(top_slot(s), f);
  const Scalar nk = F.mul(n % s.p(), kappa % s.p());
  SuperElement inner = lap + euler(dt) - dt.scaled(nk);
  return inner.scaled(F.mul(F.sign(pf), 2));
}

std::string to_string(AlgebraKind k) { return k == AlgebraKind::M ? "m" : "sm"; }

// ---------------------------------------------------------------------------

Vec ContactAlgebra::ambient_coords(const SuperElement& f) const {
  if (!(f.shape() == shape.dps())) throw ShapeMismatch();
  Vec a(ambient.size(), 0);
  for (const auto& [r, c] : f.terms()) a[ambient_index.at(r)] = c;
  return a;
}

std::optional<Vec> ContactAlgebra::try_coords(const SuperElement& f) const {
  return coords_from_ambient(*this, ambient_coords(f));
}

Vec ContactAlgebra::coords(const SuperElement& f) const {
  auto c = try_coords(f);
  if (!c) throw Error(function_label(f) + " is not in " + to_string(kind));
  return *c;
}

SuperElement ContactAlgebra::function_of(const Vec& v) const {
  if (v.size() != dim()) throw Error("function_of: vector length mismatch");
  SuperElement out(shape.dps());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out += functions[i].scaled(v[i]);
  return out;
}

std::size_t ContactAlgebra::monomial_index(const MultiIndex& r) const {
  if (kind != AlgebraKind::M) throw Error("monomial_index is defined for m only");
  auto it = ambient_index.find(r);
  if (it == ambient_index.end()) throw Error("no basis element for " + r.to_string());
  return it->second;
}

std::vector<std::size_t> ContactAlgebra::graded_dims() const {
  std::vector<std::size_t> out;
  for (int d = lsa.min_degree(); d <= lsa.max_degree(); ++d) out.push_back(lsa.indices_of_degree(d).size());
  return out;
}

ContactAlgebra build_m(const ContactShape& cs) {
  ContactAlgebra g;
  g.kind = AlgebraKind::M;
  g.shape = cs;
  const Shape s = cs.dps();
  set_ambient(g);
  for (const auto& r : g.ambient) g.functions.push_back(SuperElement::monomial(s, r));
  fill_structure(g);
  return g;
}

ContactAlgebra build_sm(const ContactShape& cs) {
  ContactAlgebra g;
  g.kind = AlgebraKind::SM;
  g.shape = cs;
  const Shape s = cs.dps();
  const PrimeField& F = s.field;
  set_ambient(g);
  const int dmax = contact_degree(s, g.ambient.back());
  struct Item {
    std::size_t pivot;
    Vec embed;
  };
  std::vector<Item> items;
  for (int d = -2; d <= dmax; ++d) {
    std::vector<Item> piece;
    for (unsigned q = 0; q < 2; ++q) {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < g.ambient.size(); ++i)
        if (contact_degree(s, g.ambient[i]) == d && g.ambient[i].parity(s) == q) cols.push_back(i);
      if (cols.empty()) continue;
      std::map<MultiIndex, std::size_t> row_of;
      std::vector<SuperElement> divs;
      for (auto i : cols) {
        divs.push_back(div_kappa(SuperElement::monomial(s, g.ambient[i]), cs.kappa));
        for (const auto& [r, c] : divs.back().terms()) row_of.try_emplace(r, row_of.size());
      }
      Matrix a(row_of.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : divs[c].terms()) a(row_of.at(r), c) = v;
      Subspace ker(F, cols.size(), nullspace(F, a));
      for (std::size_t k = 0; k < ker.dim(); ++k) {
        Item it{cols[ker.pivots()[k]], Vec(g.ambient.size(), 0)};
        for (std::size_t c = 0; c < cols.size(); ++c) it.embed[cols[c]] = ker.basis()[k][c];
        piece.push_back(std::move(it));
      }
    }
    std::sort(piece.begin(), piece.end(), [](const Item& a, const Item& b) { return a.pivot < b.pivot; });
    for (auto& it : piece) items.push_back(std::move(it));
  }
  for (auto& it : items) {
    SuperElement f(s);
    for (std::size_t i = 0; i < it.embed.size(); ++i)
      if (it.embed[i]) f.add_term(g.ambient[i], it.embed[i]);
    g.functions.push_back(std::move(f));
    g.pivot.push_back(it.pivot);
    g.embed.push_back(std::move(it.embed));
  }
  fill_structure(g);
  return g;
}

ContactAlgebra build_algebra(AlgebraKind kind, const ContactShape& cs) {
  return kind == AlgebraKind::M ? build_m(cs) : build_sm(cs);
}

// ---------------------------------------------------------------------------

namespace {

MultiIndex idx2(const Shape& s, unsigned a, unsigned b) {
  MultiIndex r = MultiIndex::zero(s.slots());
  ++r[a];
  ++r[b];
  return r;
}

}  // namespace

CartanData cartan_and_roots(const ContactAlgebra& g) {
  const Shape s = g.shape.dps();
  const PrimeField& F = g.F();
  const unsigned n = s.n_even;
  CartanData out;
  std::vector<SuperElement> hs;
  if (g.kind == AlgebraKind::M) {
    for (unsigned i = 0; i < n; ++i) hs.push_back(SuperElement::monomial(s, idx2(s, i, i + n)));
  } else {
    for (unsigned i = 0; i + 1 < n; ++i)
      hs.push_back(SuperElement::monomial(s, idx2(s, i, i + n)) -
                   SuperElement::monomial(s, idx2(s, i + 1, i + 1 + n)));
  }
  SuperElement last = SuperElement::generator(s, top_slot(s));
  if (g.kind == AlgebraKind::SM)
    last += SuperElement::monomial(s, idx2(s, 0, n), F.mul(n % s.p(), g.shape.kappa % s.p()));
  hs.push_back(last);
  for (const auto& h : hs) {
    out.cartan.push_back(g.coords(h));
    out.cartan_labels.push_back(function_label(h));
  }

  struct Piece {
    Vec weight;
    Subspace space;
  };
  std::vector<Piece> pieces{{Vec{}, Subspace::whole(g.dim())}};
  for (const auto& h : out.cartan) {
    Matrix ad = g.lsa.ad(h);
    std::vector<Subspace> eig;
    for (Scalar lam = 0; lam < F.p(); ++lam) {
      Matrix a = ad;
      for (std::size_t i = 0; i < g.dim(); ++i) a(i, i) = F.sub(a(i, i), lam);
      eig.emplace_back(F, g.dim(), nullspace(F, a));
    }
    std::vector<Piece> next;
    for (const auto& pc : pieces)
      for (Scalar lam = 0; lam < F.p(); ++lam) {
        Subspace w = intersect(F, pc.space, eig[lam]);
        if (w.empty()) continue;
        Vec wt = pc.weight;
        wt.push_back(lam);
        next.push_back({std::move(wt), std::move(w)});
      }
    pieces = std::move(next);
  }
  out.zero_weight = Subspace(g.dim());
  for (auto& pc : pieces) {
    if (is_zero(pc.weight))
      out.zero_weight = pc.space;
    else
      out.roots.push_back({pc.weight, pc.space});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootSpace& a, const RootSpace& b) { return a.weight < b.weight; });
  return out;
}

TriangularSplit triangular_split(const ContactAlgebra& g) {
  const Shape s = g.shape.dps();
  const PrimeField& F = g.F();
  const unsigned n = s.n_even;
  TriangularSplit t;
  auto add = [&](std::vector<Vec>& dst, const MultiIndex& r) { dst.push_back(g.coords(SuperElement::monomial(s, r))); };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < i; ++j) add(t.n_minus_basis, idx2(s, i, j + n));
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = k + 1; l < n; ++l) add(t.n_minus_basis, idx2(s, k + n, l + n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) add(t.n_plus_basis, idx2(s, i, j + n));
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = k; l < n; ++l) add(t.n_plus_basis, idx2(s, k, l));
  t.cartan_basis = cartan_and_roots(g).cartan;
  t.n_minus = Subspace(F, g.dim(), t.n_minus_basis);
  t.n_plus = Subspace(F, g.dim(), t.n_plus_basis);
  t.cartan = Subspace(F, g.dim(), t.cartan_basis);
  return t;
}

// ---------------------------------------------------------------------------

CheckReport verify_homomorphism(const ContactShape& cs) {
  const Shape s = cs.dps();
  CheckReport rep;
  rep.name = "homomorphism";
  std::vector<SuperElement> fs;
  for (const auto& r : all_indices(s)) fs.push_back(SuperElement::monomial(s, r));
  Prepared pr = prepare(fs);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      ++rep.checked;
      SuperElement b = bracket_with(pr.mf[i], pr.df[i], pr.pf[i], fs[j]);
      if (!(vf_bracket(pr.mf[i], pr.mf[j]) == m_field(b)))
        rep.add({{i, j}, "[M_f, M_g] != M_{f,g} for " + fs[i].to_string() + ", " + fs[j].to_string()});
    }
  return rep;
}

CheckReport verify_divergence_closure(const ContactAlgebra& g) {
  CheckReport rep;
  rep.name = "divergence-closure";
  const Scalar kappa = g.shape.kappa;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    ++rep.checked;
    if (!div_kappa(g.functions[i], kappa).is_zero()) rep.add({{i}, "basis function outside ker div"});
  }
  Prepared pr = prepare(g.functions);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      ++rep.checked;
      SuperElement b = bracket_with(pr.mf[i], pr.df[i], pr.pf[i], g.functions[j]);
      if (b.parity() && !div_kappa(b, kappa).is_zero()) rep.add({{i, j}, "bracket leaves ker div"});
    }
  return rep;
}

CheckReport verify_parity_degree(const ContactAlgebra& g) {
  CheckReport rep;
  rep.name = "parity-degree";
  const Shape s = g.shape.dps();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    ++rep.checked;
    const auto& f = g.functions[i];
    auto q = f.parity();
    if (!q || g.lsa.parity[i] != ((*q + 1) & 1u)) rep.add({{i}, "|M_f| != |f| + 1"});
    if (!(m_field(f).parity() == std::optional<unsigned>(g.lsa.parity[i])))
      rep.add({{i}, "vector field parity disagrees"});
    for (const auto& [r, c] : f.terms())
      if (contact_degree(s, r) != g.lsa.degree[i]) rep.add({{i}, "degree != ||r|| - 2"});
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<GoldenEntry> golden_entries(AlgebraKind kind, Scalar kappa) {
  const Shape s(1, 2, 5);
  const PrimeField& F = s.field;
  auto mono = [&](int a, int b, int c, Scalar coef = 1) {
    return SuperElement::monomial(
        s, MultiIndex({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)}), coef);
  };
  const Scalar nk = kappa % 5;  // n = 1
  auto nk_minus = [&](Scalar k) { return F.sub(nk, k); };
  std::vector<GoldenEntry> out;
  auto put = [&](int d, SuperElement f) { out.push_back({d, std::move(f)}); };
  put(-2, mono(0, 0, 0));
  put(-1, mono(1, 0, 0));
  put(-1, mono(0, 1, 0));
  if (kind == AlgebraKind::M) {
    put(0, mono(2, 0, 0));
    put(0, mono(1, 1, 0));
    put(0, mono(0, 0, 1));
    put(1, mono(3, 0, 0));
    put(1, mono(2, 1, 0));
    put(1, mono(1, 0, 1));
    put(1, mono(0, 1, 1));
    put(2, mono(2, 0, 1));
    put(2, mono(1, 1, 1));
    put(2, mono(3, 1, 0));
    put(2, mono(4, 0, 0));
    put(3, mono(3, 0, 1));
    put(3, mono(4, 1, 0));
    put(3, mono(2, 1, 1));
    put(4, mono(3, 1, 1));
    put(4, mono(4, 0, 1));
    put(5, mono(4, 1, 1));
  } else {
    put(0, mono(2, 0, 0));
    put(0, mono(0, 0, 1) + mono(1, 1, 0, nk));
    put(1, mono(3, 0, 0));
    put(1, mono(1, 0, 1) + mono(2, 1, 0, nk_minus(1)));
    put(2, mono(2, 0, 1) + mono(3, 1, 0, nk_minus(2)));
    put(2, mono(4, 0, 0));
    put(3, mono(3, 0, 1) + mono(4, 1, 0, nk_minus(3)));
  }
  return out;
}

CheckReport verify_golden(const ContactAlgebra& g) {
  if (g.shape.n != 1 || g.shape.p != 5) throw Error("the published basis lists are for n = 1, p = 5");
  CheckReport rep;
  rep.name = "golden";
  const PrimeField& F = g.F();
  const auto entries = golden_entries(g.kind, g.shape.kappa);
  std::map<int, Subspace> spans;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    ++rep.checked;
    auto c = g.try_coords(entries[e].f);
    if (!c) {
      rep.add({{e}, function_label(entries[e].f) + " is not in the algebra"});
      continue;
    }
    for (std::size_t i = 0; i < c->size(); ++i)
      if ((*c)[i] && g.lsa.degree[i] != entries[e].degree)
        rep.add({{e}, function_label(entries[e].f) + " has the wrong degree"});
    spans.try_emplace(entries[e].degree, g.dim()).first->second.insert(F, *c);
  }
  for (int d = g.lsa.min_degree(); d <= g.lsa.max_degree(); ++d) {
    ++rep.checked;
    auto it = spans.find(d);
    const std::size_t have = it == spans.end() ? 0 : it->second.dim();
    if (have != g.lsa.indices_of_degree(d).size())
      rep.add({{static_cast<std::size_t>(d + 2)}, "listed elements do not span degree " + std::to_string(d)});
  }
  return rep;
}

}  // namespace ko
