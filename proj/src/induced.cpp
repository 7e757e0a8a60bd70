#include "ko/repn.hpp"

namespace ko {

InducedModule::InducedModule(const LSA& g, const PChar& chi, std::vector<Vec> Y, GModule base, bool character_mode)
    : g_(&g), chi_(chi), Y_(std::move(Y)), base_(std::move(base)), character_mode_(character_mode) {
  const auto& F = g.F();
  if (character_mode_ && base_.dim != 1) throw Error("character mode needs a 1-dimensional base module");
  const std::size_t nY = Y_.size();
  std::uint64_t count = 1;
  for (const auto& y : Y_) {
    auto par = g.vec_parity(y);
    if (!par) throw Error("induced module: complement element of mixed parity");
    ypar_.push_back(static_cast<std::uint8_t>(*par));
    auto d = g.vec_degree(y);
    ydeg_.push_back(d ? *d : 0);
    bound_.push_back(*par ? 2 : g.p());
    stride_.push_back(static_cast<std::uint32_t>(count));
    count *= bound_.back();
    if (count > (1u << 26)) throw Error("induced module: too many PBW monomials");
  }
  monomials_.resize(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::vector<std::uint8_t> e(nY);
    std::uint64_t r = s;
    for (std::size_t i = 0; i < nY; ++i) {
      e[i] = static_cast<std::uint8_t>(r % bound_[i]);
      r /= bound_[i];
    }
    monomials_[s] = std::move(e);
  }
  for (const auto& b : base_.acting) {
    auto par = g.vec_parity(b);
    if (!par) throw Error("induced module: base element of mixed parity");
    bpar_.push_back(static_cast<std::uint8_t>(*par));
  }
  std::vector<Vec> all = Y_;
  all.insert(all.end(), base_.acting.begin(), base_.acting.end());
  abasis_ = SpanCoords(F, all);
  const Scalar half = F.inv(2);
  ypow_.resize(nY);
  ysq_.resize(nY);
  for (std::size_t i = 0; i < nY; ++i) {
    if (ypar_[i])
      ysq_[i] = decompose(vec_scale(F, half, g.bracket(Y_[i], Y_[i])));
    else
      ypow_[i] = decompose(g.p_power(Y_[i]));
  }
}

SparseVec InducedModule::decompose(const Vec& z) const {
  auto c = abasis_.coords(z);
  if (!c) throw Error("induced module: element outside the induced subalgebra");
  SparseVec out;
  for (std::size_t k = 0; k < c->size(); ++k)
    if ((*c)[k]) out.emplace_back(static_cast<std::uint32_t>(k), (*c)[k]);
  return out;
}

InducedModule::ZVec InducedModule::fold(ZVec z) const {
  const auto& F = g_->F();
  for (auto it = z.begin(); it != z.end();) it = it->second ? std::next(it) : z.erase(it);
  if (!character_mode_) return z;
  Scalar s = 0;
  for (const auto& [k, c] : z) {
    Scalar mu = 1;
    if (k) {
      const auto& a = base_.action[k - 1];
      mu = a.nnz() ? a.vals()[0] : 0;
    }
    s = F.add(s, F.mul(c, mu));
  }
  ZVec out;
  if (s) out[0] = s;
  return out;
}

InducedModule::ZVec InducedModule::mul(const ZVec& a, const ZVec& b) const {
  const auto& F = g_->F();
  auto scalar_only = [](const ZVec& z) { return z.empty() || (z.size() == 1 && z.begin()->first == 0); };
  auto scaled = [&](const ZVec& z, Scalar c) {
    ZVec out;
    if (!c) return out;
    for (const auto& [k, v] : z) out[k] = F.mul(v, c);
    return out;
  };
  if (scalar_only(a)) return scaled(b, a.empty() ? 0 : a.begin()->second);
  if (scalar_only(b)) return scaled(a, b.empty() ? 0 : b.begin()->second);
  throw Error("induced module: product in u(B) needed; the complement is not a subalgebra");
}

namespace {

using ZVec = std::map<std::uint32_t, Scalar>;
using Acc = std::map<std::uint32_t, ZVec>;

void add_z(const PrimeField& F, ZVec& dst, const ZVec& src, Scalar c) {
  for (const auto& [k, v] : src) {
    Scalar& d = dst[k];
    d = F.add(d, F.mul(v, c));
  }
}

std::vector<std::pair<std::uint32_t, ZVec>> finish(Acc&& acc) {
  std::vector<std::pair<std::uint32_t, ZVec>> out;
  for (auto& [t, z] : acc) {
    for (auto it = z.begin(); it != z.end();) it = it->second ? std::next(it) : z.erase(it);
    if (!z.empty()) out.emplace_back(t, std::move(z));
  }
  return out;
}

}  // namespace

InducedModule::Result InducedModule::act_coords(const SparseVec& c, std::uint32_t s) const {
  const auto& F = g_->F();
  Acc acc;
  for (const auto& [k, v] : c)
    for (const auto& [t, z] : act(k, s)) add_z(F, acc[t], z, v);
  return finish(std::move(acc));
}

InducedModule::Result InducedModule::left_y(std::size_t a, const Result& r) const {
  const auto& F = g_->F();
  Acc acc;
  for (const auto& [t, z] : r)
    for (const auto& [t2, z2] : act(a, t)) add_z(F, acc[t2], mul(z2, z), 1);
  return finish(std::move(acc));
}

const InducedModule::Result& InducedModule::act(std::size_t k, std::uint32_t s) const {
  const auto key = std::make_pair(k, s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (busy_.count(key)) throw Error("induced module: straightening does not terminate");
  busy_[key] = true;

  const auto& F = g_->F();
  const std::size_t nY = Y_.size();
  const auto& e = monomials_[s];
  std::size_t a = 0;
  while (a < nY && !e[a]) ++a;
  auto merge = [&](Acc& acc, const Result& r, Scalar c) {
    for (const auto& [t, z] : r) add_z(F, acc[t], z, c);
  };
  Acc acc;

  if (k < nY) {
    const std::size_t b = k;
    if (a == nY || b < a) {
      acc[s + stride_[b]][0] = 1;
    } else if (b == a) {
      if (!ypar_[b]) {
        if (e[b] + 1u < bound_[b]) {
          acc[s + stride_[b]][0] = 1;
        } else {
          const std::uint32_t sp = s - (bound_[b] - 1) * stride_[b];
          merge(acc, act_coords(ypow_[b], sp), 1);
          const Scalar c = F.pow(chi_(Y_[b], F), F.p());
          if (c) add_z(F, acc[sp], ZVec{{0, c}}, 1);
        }
      } else {
        merge(acc, act_coords(ysq_[b], s - stride_[b]), 1);
      }
    } else {
      const std::uint32_t sp = s - stride_[a];
      const Scalar sign = F.sign(ypar_[b] * ypar_[a]);
      Result moved = left_y(a, act(b, sp));
      merge(acc, moved, sign);
      merge(acc, act_coords(decompose(g_->bracket(Y_[b], Y_[a])), sp), 1);
    }
  } else {
    const std::size_t j = k - nY;
    if (a == nY) {
      acc[s] = fold(ZVec{{static_cast<std::uint32_t>(1 + j), 1}});
    } else {
      const std::uint32_t sp = s - stride_[a];
      const Scalar sign = F.sign(bpar_[j] * ypar_[a]);
      Result moved = left_y(a, act(k, sp));
      merge(acc, moved, sign);
      merge(acc, act_coords(decompose(g_->bracket(base_.acting[j], Y_[a])), sp), 1);
    }
  }

  Result r = finish(std::move(acc));
  if (character_mode_)
    for (auto& [t, z] : r) z = fold(std::move(z));
  busy_.erase(key);
  return memo_.emplace(key, std::move(r)).first->second;
}

int InducedModule::monomial_degree(std::size_t s) const {
  int d = 0;
  for (std::size_t i = 0; i < Y_.size(); ++i) d += monomials_[s][i] * ydeg_[i];
  return d;
}

std::size_t InducedModule::top_monomial() const { return monomials_.size() - 1; }

std::vector<std::uint8_t> InducedModule::parity() const {
  std::vector<std::uint8_t> out(dim());
  for (std::size_t s = 0; s < monomials_.size(); ++s) {
    unsigned ps = 0;
    for (std::size_t i = 0; i < Y_.size(); ++i) ps += monomials_[s][i] * ypar_[i];
    for (std::size_t j = 0; j < base_.dim; ++j) out[index(s, j)] = static_cast<std::uint8_t>((ps + base_.parity[j]) & 1u);
  }
  return out;
}

Matrix InducedModule::rho(const ZVec& z) const {
  const auto& F = g_->F();
  const std::size_t d = base_.dim;
  Matrix m(d, d);
  for (const auto& [k, c] : z) {
    if (k == 0) {
      for (std::size_t i = 0; i < d; ++i) m(i, i) = F.add(m(i, i), c);
      continue;
    }
    const auto& A = base_.action[k - 1];
    for (std::size_t r = 0; r < d; ++r)
      for (auto q = A.row_ptr()[r]; q < A.row_ptr()[r + 1]; ++q)
        m(r, A.col_idx()[q]) = F.add(m(r, A.col_idx()[q]), F.mul(c, A.vals()[q]));
  }
  return m;
}

Vec InducedModule::apply(const Vec& z, const Vec& v) const {
  const auto& F = g_->F();
  if (v.size() != dim()) throw Error("induced module: vector length mismatch");
  const std::size_t d = base_.dim;
  Vec out(dim(), 0);
  Vec block(d);
  for (const auto& [k, ck] : decompose(z)) {
    for (std::uint32_t s = 0; s < monomials_.size(); ++s) {
      bool nz = false;
      for (std::size_t j = 0; j < d; ++j) nz |= (block[j] = v[index(s, j)]) != 0;
      if (!nz) continue;
      for (const auto& [t, zt] : act(k, s)) {
        Vec w(d, 0);
        for (const auto& [q, c] : zt) {
          if (q == 0) {
            vec_axpy(F, w, c, block);
          } else {
            vec_axpy(F, w, c, base_.action[q - 1].apply(F, block));
          }
        }
        for (std::size_t i = 0; i < d; ++i)
          if (w[i]) out[index(t, i)] = F.add(out[index(t, i)], F.mul(ck, w[i]));
      }
    }
  }
  return out;
}

SparseMatrix InducedModule::action_matrix(const Vec& z) const {
  const auto& F = g_->F();
  const std::size_t d = base_.dim;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> trip;
  for (const auto& [k, ck] : decompose(z)) {
    for (std::uint32_t s = 0; s < monomials_.size(); ++s) {
      for (const auto& [t, zt] : act(k, s)) {
        Matrix R = rho(zt);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (R(i, j))
              trip.emplace_back(static_cast<std::uint32_t>(index(t, i)), static_cast<std::uint32_t>(index(s, j)),
                                F.mul(ck, R(i, j)));
      }
    }
  }
  return SparseMatrix::from_triples(F, dim(), dim(), std::move(trip));
}

GModule InducedModule::as_module(const std::vector<Vec>& acting) const {
  GModule M;
  M.field = g_->F();
  M.dim = dim();
  M.parity = parity();
  M.acting = acting;
  for (const auto& z : acting) M.action.push_back(action_matrix(z));
  return M;
}

bool InducedModule::complement_acts_freely() const {
  for (std::size_t k = 0; k < Y_.size(); ++k)
    for (std::uint32_t s = 0; s < monomials_.size(); ++s)
      for (const auto& [t, z] : act(k, s))
        for (const auto& [q, c] : z)
          if (q != 0) return false;
  return true;
}

Matrix InducedModule::regular_action(std::size_t k) const {
  const std::size_t m = monomials_.size();
  Matrix out(m, m);
  for (std::uint32_t s = 0; s < m; ++s)
    for (const auto& [t, z] : act(k, s)) {
      for (const auto& [q, c] : z)
        if (q != 0) throw Error("regular_action: complement does not act freely");
      if (auto it = z.find(0); it != z.end()) out(t, s) = it->second;
    }
  return out;
}

}  // namespace ko
