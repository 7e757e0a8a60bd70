#include "ko/dps.hpp"

#include <sstream>

namespace ko {

bool MultiIndex::valid_for(const Shape& s) const {
  if (e_.size() != s.slots()) return false;
  for (unsigned i = 0; i < e_.size(); ++i) {
    if (s.is_odd_slot(i) ? e_[i] > 1 : e_[i] >= s.p()) return false;
  }
  return true;
}

unsigned MultiIndex::parity(const Shape& s) const {
  unsigned par = 0;
  for (unsigned i = s.n_even; i < e_.size(); ++i) par += e_[i];
  return par & 1u;
}

unsigned MultiIndex::contact_norm(const Shape& s) const {
  if (s.n_odd != s.n_even + 1) throw Error("contact grading needs m = n + 1");
  unsigned norm = 0;
  for (unsigned i = 0; i + 1 < e_.size(); ++i) norm += e_[i];
  return norm + 2u * e_.back();
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r = *this;
  for (unsigned i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] + o.e_[i]);
  return r;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (unsigned i = 0; i < e_.size(); ++i) os << (i ? "," : "") << int(e_[i]);
  os << ')';
  return os.str();
}

std::vector<MultiIndex> all_indices(const Shape& s) {
  std::vector<MultiIndex> out;
  MultiIndex r = MultiIndex::zero(s.slots());
  while (true) {
    out.push_back(r);
    int i = static_cast<int>(s.slots()) - 1;
    for (; i >= 0; --i) {
      unsigned limit = s.is_odd_slot(i) ? 2 : s.p();
      if (r[i] + 1u < limit) {
        ++r[i];
        break;
      }
      r[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SuperElement

SuperElement SuperElement::one(const Shape& s) { return monomial(s, MultiIndex::zero(s.slots())); }

SuperElement SuperElement::monomial(const Shape& s, const MultiIndex& r, Scalar c) {
  if (!r.valid_for(s)) throw Error("multi-index " + r.to_string() + " outside I(n,m)");
  SuperElement e(s);
  e.add_term(r, c);
  return e;
}

SuperElement SuperElement::generator(const Shape& s, unsigned i) {
  if (i >= s.slots()) throw Error("generator index out of range");
  return monomial(s, MultiIndex::unit(s.slots(), i));
}

Scalar SuperElement::coeff(const MultiIndex& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? 0 : it->second;
}

void SuperElement::add_term(const MultiIndex& r, Scalar c) {
  c %= shape_.p();
  if (!c) return;
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second = shape_.field.add(it->second, c);
    if (!it->second) terms_.erase(it);
  }
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  if (!(shape_ == o.shape_)) throw ShapeMismatch();
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  if (!(shape_ == o.shape_)) throw ShapeMismatch();
  for (const auto& [r, c] : o.terms_) add_term(r, shape_.field.neg(c));
  return *this;
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
  SuperElement r = *this;
  r += o;
  return r;
}

SuperElement SuperElement::operator-(const SuperElement& o) const {
  SuperElement r = *this;
  r -= o;
  return r;
}

SuperElement SuperElement::scaled(Scalar c) const {
  SuperElement r(shape_);
  c %= shape_.p();
  if (!c) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, shape_.field.mul(c, v));
  return r;
}

std::optional<unsigned> SuperElement::parity() const {
  std::optional<unsigned> par;
  for (const auto& [r, c] : terms_) {
    unsigned q = r.parity(shape_);
    if (par && *par != q) return std::nullopt;
    par = q;
  }
  return par.value_or(0);
}

std::string SuperElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    os << (first ? "" : " + ") << c << "*x^" << r.to_string();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Products and derivations

std::pair<Scalar, MultiIndex> dp_product(const Shape& s, const MultiIndex& r, const MultiIndex& t) {
  if (r.size() != s.slots() || t.size() != s.slots()) throw ShapeMismatch();
  MultiIndex sum = r + t;
  for (unsigned i = s.n_even; i < s.slots(); ++i)
    if (sum[i] > 1) return {0, sum};
  // Sign (-1)^{sum_{i<j odd} r_j t_i}: each odd t_i passes the odd r_j to its right.
  unsigned swaps = 0;
  for (unsigned i = s.n_even; i < s.slots(); ++i) {
    if (!t[i]) continue;
    for (unsigned j = i + 1; j < s.slots(); ++j) swaps += r[j];
  }
  Scalar c = s.field.tuple_binom(r.entries(), t.entries(), s.n_even);
  if (!c) return {0, sum};
  return {s.field.mul(s.field.sign(swaps), c), sum};
}

SuperElement multiply(const SuperElement& f, const SuperElement& g) {
  if (!(f.shape() == g.shape())) throw ShapeMismatch();
  const Shape& s = f.shape();
  SuperElement out(s);
  for (const auto& [r, a] : f.terms())
    for (const auto& [t, b] : g.terms()) {
      auto [c, idx] = dp_product(s, r, t);
      if (c) out.add_term(idx, s.field.mul(c, s.field.mul(a, b)));
    }
  return out;
}

SuperElement partial(unsigned i, const SuperElement& f) {
  const Shape& s = f.shape();
  if (i >= s.slots()) throw Error("partial derivative direction out of range");
  SuperElement out(s);
  for (const auto& [r, c] : f.terms()) {
    if (!r[i]) continue;
    MultiIndex q = r;
    --q[i];
    unsigned passes = 0;
    if (s.is_odd_slot(i))
      for (unsigned j = s.n_even; j < i; ++j) passes += r[j];
    out.add_term(q, s.field.mul(s.field.sign(passes), c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// VectorField

VectorField VectorField::partial_field(const Shape& s, unsigned k) {
  VectorField d(s);
  d.add_component(k, SuperElement::one(s));
  return d;
}

const SuperElement* VectorField::component(unsigned k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? nullptr : &it->second;
}

void VectorField::add_component(unsigned k, const SuperElement& f) {
  if (!(f.shape() == shape_)) throw ShapeMismatch();
  if (k >= shape_.slots()) throw Error("vector field direction out of range");
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(k, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (const auto& [k, f] : o.comps_) add_component(k, f);
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (const auto& [k, f] : o.comps_) add_component(k, f.scaled(shape_.field.neg(1)));
  return *this;
}

VectorField VectorField::scaled(Scalar c) const {
  VectorField r(shape_);
  for (const auto& [k, f] : comps_) r.add_component(k, f.scaled(c));
  return r;
}

std::optional<unsigned> VectorField::parity() const {
  std::optional<unsigned> par;
  for (const auto& [k, f] : comps_) {
    auto fp = f.parity();
    if (!fp) return std::nullopt;
    unsigned q = (*fp + (shape_.is_odd_slot(k) ? 1u : 0u)) & 1u;
    if (par && *par != q) return std::nullopt;
    par = q;
  }
  return par.value_or(0);
}

std::string VectorField::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : comps_) {
    os << (first ? "" : " + ") << "(" << f.to_string() << ")d" << (k + 1);
    first = false;
  }
  return os.str();
}

SuperElement vf_apply(const VectorField& d, const SuperElement& f) {
  if (!(d.shape() == f.shape())) throw ShapeMismatch();
  SuperElement out(f.shape());
  for (const auto& [k, fk] : d.components()) out += multiply(fk, partial(k, f));
  return out;
}

VectorField vf_bracket(const VectorField& d1, const VectorField& d2) {
  if (!(d1.shape() == d2.shape())) throw ShapeMismatch();
  auto p1 = d1.parity(), p2 = d2.parity();
  if (!p1 || !p2) throw Error("vf_bracket needs parity-homogeneous fields");
  const Shape& s = d1.shape();
  const Scalar sgn = s.field.sign(*p1 * *p2);
  VectorField out(s);
  // A distinguished field is determined by its values on the generators x_j,
  // and D(x_j) is the j-th component.
  for (unsigned j = 0; j < s.slots(); ++j) {
    SuperElement c(s);
    if (auto f2 = d2.component(j)) c += vf_apply(d1, *f2);
    if (auto f1 = d1.component(j)) c -= vf_apply(d2, *f1).scaled(sgn);
    out.add_component(j, c);
  }
  return out;
}

VectorField p_power(const VectorField& d) {
  auto par = d.parity();
  if (!par || *par != 0) throw Error("p_power is defined for even vector fields only");
  const Shape& s = d.shape();
  VectorField out(s);
  for (const auto& [j, fj] : d.components()) {
    SuperElement c = fj;
    for (std::uint32_t t = 1; t < s.p() && !c.is_zero(); ++t) c = vf_apply(d, c);
    out.add_component(j, c);
  }
  return out;
}

}  // namespace ko
