#include <algorithm>
#include <random>
#include <sstream>

#include "ko/fastmod.hpp"
#include "ko/repn.hpp"

namespace ko {

namespace {

// Row echelon form with lazy 64-bit rows.  Returns normalized rows and pivots.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
};

Echelon lazy_echelon(const PrimeField& F, const Matrix& a) {
  const FastMod fm(F.p());
  const std::size_t m = a.rows(), n = a.cols();
  const std::uint64_t p = F.p();
  std::vector<std::vector<std::uint64_t>> w(m, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  Echelon out;
  std::size_t top = 0;
  for (std::size_t c = 0; c < n && top < m; ++c) {
    std::size_t found = m;
    for (std::size_t r = top; r < m; ++r) {
      auto& x = w[order[r]][c];
      x = fm(x);
      if (x) {
        found = r;
        break;
      }
    }
    if (found == m) continue;
    std::swap(order[top], order[found]);
    auto& prow = w[order[top]];
    const Scalar inv = F.inv(static_cast<Scalar>(prow[c]));
    Vec norm(n, 0);
    for (std::size_t j = c; j < n; ++j) norm[j] = F.mul(fm(prow[j]), inv);
    for (std::size_t r = top + 1; r < m; ++r) {
      auto& row = w[order[r]];
      const Scalar x = fm(row[c]);
      row[c] = 0;
      if (!x) continue;
      const std::uint64_t mult = p - x;
      for (std::size_t j = c + 1; j < n; ++j) row[j] += mult * norm[j];
    }
    out.rows.push_back(std::move(norm));
    out.piv.push_back(c);
    ++top;
  }
  return out;
}

// Kernel basis from an echelon form by back substitution.
std::vector<Vec> kernel_from(const PrimeField& F, const Echelon& e, std::size_t n, std::size_t limit) {
  std::vector<char> is_piv(n, 0);
  for (auto c : e.piv) is_piv[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n && out.size() < limit; ++f) {
    if (is_piv[f]) continue;
    Vec x(n, 0);
    x[f] = 1;
    for (std::size_t r = e.rows.size(); r-- > 0;) {
      const auto& row = e.rows[r];
      std::uint64_t s = 0;
      for (std::size_t j = e.piv[r] + 1; j < n; ++j) s += static_cast<std::uint64_t>(row[j]) * x[j];
      x[e.piv[r]] = F.neg(static_cast<Scalar>(s % F.p()));
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Dense w times sparse g.
Matrix dense_times_sparse(const PrimeField& F, const Matrix& w, const SparseMatrix& g) {
  const FastMod fm(F.p());
  const std::size_t n = w.rows(), m = g.cols();
  Matrix out(n, m);
  std::vector<std::uint64_t> acc(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < g.rows(); ++k) {
      const Scalar a = w(i, k);
      if (!a) continue;
      for (auto q = g.row_ptr()[k]; q < g.row_ptr()[k + 1]; ++q)
        acc[g.col_idx()[q]] += static_cast<std::uint64_t>(a) * g.vals()[q];
    }
    for (std::size_t j = 0; j < m; ++j) out(i, j) = fm(acc[j]);
  }
  return out;
}

}  // namespace

std::vector<Vec> fast_nullspace(const PrimeField& F, const Matrix& a) {
  Echelon e = lazy_echelon(F, a);
  return kernel_from(F, e, a.cols(), a.cols());
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::Reducible: return "reducible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Polynomials over F_p, coefficients from the constant term up, no trailing zeros.
using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && !a.back()) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly monic(const PrimeField& F, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Scalar inv = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, inv);
  return a;
}

// Remainder and quotient of a by a nonzero b.
Poly poly_divmod(const PrimeField& F, Poly a, const Poly& b, Poly* quot) {
  trim(a);
  const int db = deg(b);
  const Scalar inv = F.inv(b.back());
  if (quot) quot->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  for (int i = deg(a); i >= db; --i) {
    const Scalar c = F.mul(a[i], inv);
    if (!c) continue;
    if (quot) (*quot)[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
  }
  trim(a);
  if (quot) trim(*quot);
  return a;
}

Poly poly_mulmod(const PrimeField& F, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  const FastMod fm(F.p());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    if ((i & 1023) == 1023)
      for (auto& x : acc) x = fm(x);
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = fm(acc[i]);
  return poly_divmod(F, std::move(r), m, nullptr);
}

Poly poly_powmod(const PrimeField& F, Poly a, std::uint64_t e, const Poly& m) {
  Poly r{1};
  r = poly_divmod(F, r, m, nullptr);
  a = poly_divmod(F, a, m, nullptr);
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, a, m);
    a = poly_mulmod(F, a, a, m);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(const PrimeField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(F, a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly poly_sub(const PrimeField& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Cantor-Zassenhaus split of a squarefree h whose factors all have degree k.
void equal_degree(const PrimeField& F, const Poly& h, int k, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(h) == k) {
    out.push_back(h);
    return;
  }
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= F.p();
  for (;;) {
    Poly a(static_cast<std::size_t>(deg(h)));
    for (auto& x : a) x = static_cast<Scalar>(rng() % F.p());
    trim(a);
    if (deg(a) < 1) continue;
    Poly b = poly_sub(F, poly_powmod(F, a, (q - 1) / 2, h), Poly{1});
    Poly g = poly_gcd(F, b, h);
    if (deg(g) > 0 && deg(g) < deg(h)) {
      Poly rest;
      poly_divmod(F, h, g, &rest);
      equal_degree(F, g, k, rng, out);
      equal_degree(F, monic(F, rest), k, rng, out);
      return;
    }
  }
}

// Distinct monic irreducible factors of m of degree at most kmax, by degree.
std::vector<Poly> small_factors(const PrimeField& F, Poly m, int kmax, std::mt19937_64& rng) {
  std::vector<Poly> out;
  m = monic(F, m);
  const Poly x{0, 1};
  Poly xp = poly_divmod(F, x, m, nullptr);  // x^{p^k} mod m
  for (int k = 1; k <= kmax && deg(m) >= k; ++k) {
    xp = poly_powmod(F, xp, F.p(), m);
    Poly h = poly_gcd(F, poly_sub(F, xp, x), m);
    if (deg(h) < 1) continue;
    std::vector<Poly> found;
    equal_degree(F, h, k, rng, found);
    for (const auto& f : found) {
      for (;;) {
        Poly q;
        Poly r = poly_divmod(F, m, f, &q);
        if (!r.empty()) break;
        m = q;
      }
      out.push_back(f);
    }
    if (deg(m) < 1) break;
    xp = poly_divmod(F, xp, m, nullptr);
  }
  return out;
}

// Minimal polynomial of v under a (Krylov sequence with tracked coefficients).
Poly krylov_minpoly(const PrimeField& F, const Matrix& a, const Vec& v) {
  const std::size_t n = a.rows();
  const FastMod fm(F.p());
  const std::uint64_t p = F.p();
  std::vector<Vec> rows;   // normalized reduced Krylov vectors
  std::vector<Poly> tags;  // row = tags(a) v
  std::vector<std::size_t> piv;
  Vec w = v;
  Poly tag{1};
  std::vector<std::uint64_t> acc(n), tacc;
  for (std::size_t step = 0; step <= n; ++step) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = w[i];
    tacc.assign(step + 1, 0);
    for (std::size_t i = 0; i < tag.size(); ++i) tacc[i] = tag[i];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar c = fm(acc[piv[r]]);
      if (!c) continue;
      const std::uint64_t mlt = p - c;
      const auto& row = rows[r];
      for (std::size_t i = 0; i < n; ++i) acc[i] += mlt * row[i];
      const auto& t = tags[r];
      for (std::size_t i = 0; i < t.size(); ++i) tacc[i] += mlt * t[i];
    }
    Vec red(n);
    std::size_t pv = n;
    for (std::size_t i = 0; i < n; ++i) {
      red[i] = fm(acc[i]);
      if (red[i] && pv == n) pv = i;
    }
    Poly t(tacc.size());
    for (std::size_t i = 0; i < tacc.size(); ++i) t[i] = fm(tacc[i]);
    if (pv == n) return monic(F, t);
    const Scalar inv = F.inv(red[pv]);
    for (auto& x : red) x = F.mul(x, inv);
    for (auto& x : t) x = F.mul(x, inv);
    rows.push_back(std::move(red));
    tags.push_back(std::move(t));
    piv.push_back(pv);
    w = mat_vec(F, a, w);
    tag.assign(step + 2, 0);
    tag[step + 1] = 1;
  }
  throw Error("krylov_minpoly: sequence did not terminate");
}

Matrix dense_mul(const PrimeField& F, const Matrix& a, const Matrix& b) {
  const FastMod fm(F.p());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Matrix out(n, m);
  std::vector<std::uint64_t> acc(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint64_t x = a(i, l);
      if (!x) continue;
      const Scalar* br = b.row(l);
      for (std::size_t j = 0; j < m; ++j) acc[j] += x * br[j];
      if ((l & 4095) == 4095)
        for (auto& y : acc) y = fm(y);
    }
    for (std::size_t j = 0; j < m; ++j) out(i, j) = fm(acc[j]);
  }
  return out;
}

Matrix poly_eval(const PrimeField& F, const Poly& f, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix r(n, n);
  for (int i = deg(f); i >= 0; --i) {
    if (i != deg(f)) r = dense_mul(F, r, a);
    for (std::size_t j = 0; j < n; ++j) r(j, j) = F.add(r(j, j), f[i]);
  }
  return r;
}

std::string poly_string(const Poly& f) {
  std::ostringstream o;
  o << "[";
  for (std::size_t i = 0; i < f.size(); ++i) o << (i ? "," : "") << f[i];
  o << "]";
  return o.str();
}

MeatAxeResult meataxe_sparse(const PrimeField& F, std::vector<SparseMatrix> gens, std::size_t n,
                             std::uint64_t seed, const MeatAxeOptions& opt) {
  MeatAxeResult res;
  res.seed = seed;
  if (n == 0) throw Error("meataxe: zero-dimensional module");
  if (n == 1) {
    res.verdict = Verdict::Irreducible;
    res.note = "dimension 1";
    return res;
  }
  if (gens.empty()) {
    res.verdict = Verdict::Reducible;
    res.submodule = {unit_vec(n, 0)};
    res.note = "no generators";
    return res;
  }
  std::vector<SparseMatrix> gens_t;
  for (const auto& g : gens) gens_t.push_back(g.transpose());
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto scalar = [&]() { return static_cast<Scalar>(rng() % F.p()); };
  const int kmax = static_cast<int>(std::max<unsigned>(opt.max_factor_degree, F.p() + 1));

  auto reducible = [&](std::vector<Vec> basis, std::string why) {
    res.verdict = Verdict::Reducible;
    res.submodule = Subspace(F, n, basis).basis();
    res.note = std::move(why);
    return res;
  };

  Matrix word = gens[pick(gens.size())].to_dense();
  unsigned len = 1;
  for (unsigned attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    res.attempts = attempt;
    if (len >= opt.max_word_length) {
      word = gens[pick(gens.size())].to_dense();
      len = 1;
    }
    word = dense_times_sparse(F, word, gens[pick(gens.size())]);
    ++len;
    Matrix a = mat_scale(F, scalar() | 1u, word);
    for (const auto& g : gens) {
      Scalar c = scalar();
      if (!c) continue;
      const auto& rp = g.row_ptr();
      for (std::size_t r = 0; r < n; ++r)
        for (auto q = rp[r]; q < rp[r + 1]; ++q)
          a(r, g.col_idx()[q]) = F.add(a(r, g.col_idx()[q]), F.mul(c, g.vals()[q]));
    }
    Vec v0(n);
    for (auto& x : v0) x = scalar();
    if (is_zero(v0)) v0[0] = 1;
    const Poly mp = krylov_minpoly(F, a, v0);
    for (const auto& f : small_factors(F, mp, kmax, rng)) {
      Matrix b = deg(f) == 1 ? a : poly_eval(F, f, a);
      if (deg(f) == 1)
        for (std::size_t i = 0; i < n; ++i) b(i, i) = F.add(b(i, i), f[0]);
      Echelon e = lazy_echelon(F, b);
      const std::size_t nullity = n - e.rows.size();
      auto kernel = kernel_from(F, e, n, nullity);
      std::ostringstream note;
      note << "seed=" << seed << " attempt=" << attempt << " factor=" << poly_string(f) << " nullity=" << nullity;
      // A proper spin from any kernel vector is a certificate of reducibility.
      Vec v = kernel[0];
      if (nullity > 1)
        for (std::size_t j = 1; j < kernel.size(); ++j) vec_axpy(F, v, scalar(), kernel[j]);
      Subspace s = spin(gens, F, n, {v});
      if (s.dim() < n) return reducible(s.basis(), note.str() + " kernel vector spins to dim " + std::to_string(s.dim()));
      if (nullity != static_cast<std::size_t>(deg(f))) continue;
      Echelon et = lazy_echelon(F, b.transpose());
      Vec w = kernel_from(F, et, n, 1)[0];
      Subspace sd = spin(gens_t, F, n, {w});
      if (sd.dim() < n) {
        // The annihilator of a proper dual submodule is a proper submodule.
        auto ann = nullspace(F, Matrix::from_rows(sd.basis(), n));
        return reducible(ann, note.str() + " dual kernel vector spins to dim " + std::to_string(sd.dim()));
      }
      res.verdict = Verdict::Irreducible;
      res.factor_degree = static_cast<unsigned>(deg(f));
      res.note = note.str() + " kernel and dual kernel vectors both spin to the whole space";
      return res;
    }
  }
  res.verdict = Verdict::Inconclusive;
  res.note = "seed=" + std::to_string(seed) + " no good factor within " + std::to_string(opt.max_attempts) +
             " attempts";
  return res;
}

}  // namespace

MeatAxeResult meataxe(const PrimeField& F, const std::vector<Matrix>& gens, std::uint64_t seed,
                      const MeatAxeOptions& opt) {
  std::vector<SparseMatrix> sp;
  for (const auto& g : gens) sp.push_back(SparseMatrix::from_dense(g));
  const std::size_t n = gens.empty() ? 0 : gens[0].rows();
  return meataxe_sparse(F, std::move(sp), n, seed, opt);
}

MeatAxeResult meataxe_irreducible(const GModule& M, std::uint64_t seed, const MeatAxeOptions& opt) {
  auto gens = M.action;
  if (opt.graded) gens.push_back(M.parity_operator());
  return meataxe_sparse(M.field, std::move(gens), M.dim, seed, opt);
}

std::vector<GModule> composition_factors(const GModule& M, std::uint64_t seed) {
  auto r = meataxe_irreducible(M, seed);
  if (r.verdict == Verdict::Irreducible) return {M};
  if (r.verdict == Verdict::Inconclusive) throw Error("composition_factors: " + r.note);
  Subspace U(M.field, M.dim, r.submodule);
  auto out = composition_factors(submodule_action(M, U), seed + 1);
  auto top = composition_factors(quotient_action(M, U), seed + 2);
  out.insert(out.end(), top.begin(), top.end());
  return out;
}

GModule simple_head(const GModule& M, std::uint64_t seed) {
  GModule cur = M;
  for (;;) {
    auto r = meataxe_irreducible(cur, seed++);
    if (r.verdict == Verdict::Irreducible) return cur;
    if (r.verdict == Verdict::Inconclusive) throw Error("simple_head: " + r.note);
    cur = quotient_action(cur, Subspace(cur.field, cur.dim, r.submodule));
  }
}

}  // namespace ko
