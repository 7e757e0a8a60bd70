#include "ko/lsa.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ko {

namespace {

// Dense accumulator with a touched list, reused across many sparse updates.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : acc_(n, 0), mark_(n, 0) {}
  void add(std::uint32_t k, std::uint64_t v) {
    if (!mark_[k]) {
      mark_[k] = 1;
      touched_.push_back(k);
    }
    acc_[k] += v;
  }
  // Returns the nonzero entries mod p (sorted) and resets.
  SparseVec flush(const PrimeField& F) {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    for (auto k : touched_) {
      Scalar v = static_cast<Scalar>(acc_[k] % F.p());
      if (v) out.emplace_back(k, v);
      acc_[k] = 0;
      mark_[k] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<std::uint64_t> acc_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

// sum over (l, v) in inner of sign * v * [e_a, e_l]
void add_bracket_with(const LSA& g, Accumulator& acc, std::size_t a, const SparseVec& inner,
                      Scalar coef) {
  const auto& F = g.F();
  for (const auto& [l, v] : inner) {
    Scalar w = F.mul(coef, v);
    for (const auto& [k, c] : g.bracket_basis(a, l)) acc.add(k, static_cast<std::uint64_t>(w) * c);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Vec LSA::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim || v.size() != dim) throw Error("bracket: vector length mismatch");
  std::vector<std::uint64_t> acc(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!v[j]) continue;
      const std::uint64_t w = field.mul(u[i], v[j]);
      for (const auto& [k, c] : bracket_basis(i, j)) acc[k] += w * c;
    }
  }
  Vec out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = static_cast<Scalar>(acc[k] % p());
  return out;
}

Matrix LSA::ad(const Vec& x) const {
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = bracket(x, basis_vec(j));
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

int LSA::min_degree() const { return degree.empty() ? 0 : *std::min_element(degree.begin(), degree.end()); }
int LSA::max_degree() const { return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end()); }

std::vector<std::size_t> LSA::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i)
    if (degree[i] == d) out.push_back(i);
  return out;
}

std::vector<std::size_t> LSA::indices_with_degree_at_least(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i)
    if (degree[i] >= d) out.push_back(i);
  return out;
}

std::size_t LSA::even_count() const {
  return static_cast<std::size_t>(std::count(parity.begin(), parity.end(), 0));
}

std::optional<unsigned> LSA::vec_parity(const Vec& v) const {
  std::optional<unsigned> par;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!v[i]) continue;
    if (par && *par != parity[i]) return std::nullopt;
    par = parity[i];
  }
  return par.value_or(0);
}

std::optional<int> LSA::vec_degree(const Vec& v) const {
  std::optional<int> d;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!v[i]) continue;
    if (d && *d != degree[i]) return std::nullopt;
    d = degree[i];
  }
  return d;
}

Vec LSA::ad_power_apply(const Vec& x, Vec v, std::uint64_t e) const {
  for (std::uint64_t t = 0; t < e && !is_zero(v); ++t) v = bracket(x, v);
  return v;
}

Vec LSA::p_power(const Vec& x) const {
  auto par = vec_parity(x);
  if (!par || *par != 0) throw Error("p_power: element is not even");
  std::size_t nonzero = 0, last = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (x[i]) ++nonzero, last = i;
  if (nonzero == 0) return Vec(dim, 0);
  if (nonzero == 1) {
    auto it = pmap.find(last);
    if (it == pmap.end()) throw Error("p_power: no p-mapping entry for basis element " + labels[last]);
    // (c e)^[p] = c^p e^[p]
    return vec_scale(field, field.pow(x[last], p()), it->second);
  }
  auto d = vec_degree(x);
  if (!d) throw Error("p_power: element is not degree-homogeneous");
  const long target = static_cast<long>(*d) * static_cast<long>(p());
  std::vector<std::size_t> cols;
  if (target >= min_degree() && target <= max_degree()) cols = indices_of_degree(static_cast<int>(target));
  std::vector<std::size_t> probes = indices_of_degree(min_degree());
  for (auto i : indices_of_degree(min_degree() + 1)) probes.push_back(i);

  Vec y(dim, 0);
  if (!cols.empty()) {
    Matrix a(dim * probes.size(), cols.size());
    Vec rhs(dim * probes.size(), 0);
    for (std::size_t q = 0; q < probes.size(); ++q) {
      Vec target_vec = ad_power_apply(x, basis_vec(probes[q]), p());
      for (std::size_t r = 0; r < dim; ++r) rhs[q * dim + r] = target_vec[r];
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, v] : bracket_basis(cols[c], probes[q])) a(q * dim + k, c) = v;
    }
    auto sol = solve(field, a, rhs);
    if (!sol) throw Error("p_power: ad(x)^p is not inner on the expected graded piece");
    for (std::size_t c = 0; c < cols.size(); ++c) y[cols[c]] = (*sol)[c];
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (bracket(y, basis_vec(j)) != ad_power_apply(x, basis_vec(j), p()))
      throw Error("p_power: solved element fails ad(y) = ad(x)^p");
  }
  return y;
}

bool LSA::structurally_equal(const LSA& o) const {
  return field == o.field && dim == o.dim && labels == o.labels && parity == o.parity &&
         degree == o.degree && sc == o.sc && pmap == o.pmap && basis_terms == o.basis_terms;
}

// ---------------------------------------------------------------------------

void CheckReport::add(Violation v) {
  ++violation_count;
  if (violations.size() < 16) violations.push_back(std::move(v));
}

CheckReport verify_antisymmetry(const LSA& g) {
  CheckReport rep;
  rep.name = "antisymmetry";
  const auto& F = g.F();
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i; j < g.dim; ++j) {
      ++rep.checked;
      // [e_i, e_j] = -(-1)^{|i||j|} [e_j, e_i]
      Scalar s = F.neg(F.sign(g.parity[i] * g.parity[j]));
      SparseVec rhs;
      for (const auto& [k, c] : g.bracket_basis(j, i)) rhs.emplace_back(k, F.mul(s, c));
      if (rhs != g.bracket_basis(i, j)) rep.add({{i, j}, "super-antisymmetry fails"});
    }
  return rep;
}

CheckReport verify_jacobi(const LSA& g) {
  CheckReport rep = verify_antisymmetry(g);
  rep.name = "jacobi";
  const auto& F = g.F();
  Accumulator acc(g.dim);
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = 0; b < g.dim; ++b)
      for (std::size_t c = 0; c < g.dim; ++c) {
        ++rep.checked;
        const unsigned pa = g.parity[a], pb = g.parity[b], pc = g.parity[c];
        // (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]] = 0
        add_bracket_with(g, acc, a, g.bracket_basis(b, c), F.sign(pa * pc));
        add_bracket_with(g, acc, b, g.bracket_basis(c, a), F.sign(pb * pa));
        add_bracket_with(g, acc, c, g.bracket_basis(a, b), F.sign(pc * pb));
        if (!acc.flush(F).empty()) rep.add({{a, b, c}, "super Jacobi identity fails"});
      }
  return rep;
}

CheckReport verify_restricted(const LSA& g) {
  CheckReport rep;
  rep.name = "restricted";
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (g.parity[i] != 0) continue;
    auto it = g.pmap.find(i);
    if (it == g.pmap.end()) {
      rep.add({{i}, "missing p-mapping entry"});
      continue;
    }
    const Vec& y = it->second;
    if (g.vec_parity(y).value_or(1) != 0) rep.add({{i}, "p-mapping image is not even"});
    const Vec ei = g.basis_vec(i);
    for (std::size_t j = 0; j < g.dim; ++j) {
      ++rep.checked;
      if (g.ad_power_apply(ei, g.basis_vec(j), g.p()) != g.bracket(y, g.basis_vec(j)))
        rep.add({{i, j}, "ad(x^[p]) != ad(x)^p"});
    }
  }
  return rep;
}

CheckReport verify_degree_additivity(const LSA& g) {
  CheckReport rep;
  rep.name = "degree-additivity";
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) {
      ++rep.checked;
      for (const auto& [k, c] : g.bracket_basis(i, j))
        if (g.degree[k] != g.degree[i] + g.degree[j] ||
            g.parity[k] != ((g.parity[i] + g.parity[j]) & 1u))
          rep.add({{i, j, k}, "bracket leaves the expected graded piece"});
    }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

Subspace close_under(const LSA& g, const std::vector<Vec>& seed, bool with_all_basis) {
  const auto& F = g.F();
  Subspace s(g.dim);
  std::deque<Vec> queue;
  for (const auto& v : seed)
    if (s.insert(F, v)) queue.push_back(v);
  std::vector<Vec> members(queue.begin(), queue.end());
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    if (with_all_basis) {
      for (std::size_t j = 0; j < g.dim; ++j) {
        Vec w = g.bracket(g.basis_vec(j), v);
        if (s.insert(F, w)) queue.push_back(std::move(w));
      }
    } else {
      for (std::size_t m = 0; m < members.size(); ++m) {
        Vec w = g.bracket(members[m], v);
        if (s.insert(F, w)) {
          queue.push_back(w);
          members.push_back(std::move(w));
        }
      }
    }
    if (s.dim() == g.dim) break;
  }
  return s;
}

}  // namespace

Subspace ideal_closure(const LSA& g, const std::vector<Vec>& seed) { return close_under(g, seed, true); }

Subspace subalgebra_closure(const LSA& g, const std::vector<Vec>& seed) {
  return close_under(g, seed, false);
}

Subspace bracket_span(const LSA& g, const Subspace& a, const Subspace& b) {
  Subspace out(g.dim);
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) out.insert(g.F(), g.bracket(u, v));
  return out;
}

Subspace derived_subalgebra(const LSA& g, int k) {
  if (k < 0) throw Error("derived_subalgebra: k must be non-negative");
  Subspace s = Subspace::whole(g.dim);
  for (int t = 0; t < k; ++t) s = bracket_span(g, s, s);
  return s;
}

Subspace filtration_piece(const LSA& g, int i) {
  Subspace s(g.dim);
  for (auto idx : g.indices_with_degree_at_least(i)) s.insert(g.F(), g.basis_vec(idx));
  return s;
}

Subspace graded_piece(const LSA& g, int d) {
  Subspace s(g.dim);
  for (auto idx : g.indices_of_degree(d)) s.insert(g.F(), g.basis_vec(idx));
  return s;
}

// ---------------------------------------------------------------------------

Scalar grading_factor(const PrimeField& F, Scalar c, int d) {
  if (c % F.p() == 0) throw Error("grading automorphism needs c != 0");
  return d >= 0 ? F.pow(c, static_cast<std::uint64_t>(d)) : F.pow(F.inv(c), static_cast<std::uint64_t>(-d));
}

Vec apply_grading_aut(const LSA& g, GradingAut phi, const Vec& v) {
  Vec out(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) out[i] = g.F().mul(grading_factor(g.F(), phi.c, g.degree[i]), v[i]);
  return out;
}

void validate_pchar(const LSA& g, const PChar& chi) {
  if (chi.values.size() != g.dim) throw Error("p-character has wrong length");
  for (std::size_t i = 0; i < g.dim; ++i)
    if (g.parity[i] && chi.values[i]) throw Error("p-character must vanish on the odd part");
}

PChar zero_pchar(const LSA& g) { return PChar{Vec(g.dim, 0)}; }

PChar coadjoint_apply(const LSA& g, GradingAut phi, const PChar& chi) {
  validate_pchar(g, chi);
  PChar out{Vec(g.dim)};
  const auto& F = g.F();
  for (std::size_t i = 0; i < g.dim; ++i)
    out.values[i] = F.mul(grading_factor(F, phi.c, -g.degree[i]), chi.values[i]);
  return out;
}

int height(const LSA& g, const PChar& chi) {
  validate_pchar(g, chi);
  int top = g.min_degree() - 1;
  for (std::size_t i = 0; i < g.dim; ++i)
    if (chi.values[i]) top = std::max(top, g.degree[i]);
  return top + 1 < g.min_degree() ? g.min_degree() : top + 1;
}

}  // namespace ko
