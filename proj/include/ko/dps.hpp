#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ko/arith.hpp"

namespace ko {

/// Shape of O(n, m): n even generators x_1..x_n, then m odd generators.
/// Slots are 0-based internally; slot i < n is even, n <= i < n+m is odd.
struct Shape {
  unsigned n_even = 1;
  unsigned n_odd = 2;
  PrimeField field{5};

  Shape() = default;
  Shape(unsigned n, unsigned m, std::uint32_t p) : n_even(n), n_odd(m), field(p) {}

  unsigned slots() const { return n_even + n_odd; }
  std::uint32_t p() const { return field.p(); }
  bool is_odd_slot(unsigned i) const { return i >= n_even; }
  bool operator==(const Shape& o) const {
    return n_even == o.n_even && n_odd == o.n_odd && field == o.field;
  }
};

class ShapeMismatch : public Error {
 public:
  ShapeMismatch() : Error("operands belong to different divided power algebras") {}
};

/// Exponent tuple r in I(n, m).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint8_t> entries) : e_(std::move(entries)) {}
  static MultiIndex zero(unsigned slots) { return MultiIndex(std::vector<std::uint8_t>(slots, 0)); }
  static MultiIndex unit(unsigned slots, unsigned i) {
    auto m = zero(slots);
    m.e_[i] = 1;
    return m;
  }

  const std::vector<std::uint8_t>& entries() const { return e_; }
  std::uint8_t operator[](unsigned i) const { return e_[i]; }
  std::uint8_t& operator[](unsigned i) { return e_[i]; }
  unsigned size() const { return static_cast<unsigned>(e_.size()); }

  bool valid_for(const Shape& s) const;
  /// Z2-degree: number of odd slots set, mod 2.
  unsigned parity(const Shape& s) const;
  /// ||r|| for the contact grading (m = n+1): odd-type weights 1,1,2.
  unsigned contact_norm(const Shape& s) const;
  MultiIndex operator+(const MultiIndex& o) const;
  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<std::uint8_t> e_;
};

/// Every r in I(n, m), lexicographically ordered.
std::vector<MultiIndex> all_indices(const Shape& s);

/// Element of O(n, m) as a sparse map; zero coefficients are never stored.
class SuperElement {
 public:
  explicit SuperElement(Shape s) : shape_(std::move(s)) {}

  static SuperElement zero(const Shape& s) { return SuperElement(s); }
  static SuperElement one(const Shape& s);
  static SuperElement monomial(const Shape& s, const MultiIndex& r, Scalar c = 1);
  /// x_i = x^{(eps_i)} (0-based slot).
  static SuperElement generator(const Shape& s, unsigned i);

  const Shape& shape() const { return shape_; }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiIndex& r) const;

  /// Adds c * x^{(r)}.
  void add_term(const MultiIndex& r, Scalar c);
  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement operator+(const SuperElement& o) const;
  SuperElement operator-(const SuperElement& o) const;
  SuperElement scaled(Scalar c) const;

  /// Parity if every term shares it; nullopt for mixed elements, 0 for zero.
  std::optional<unsigned> parity() const;
  std::string to_string() const;

  bool operator==(const SuperElement& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }

 private:
  Shape shape_;
  std::map<MultiIndex, Scalar> terms_;
};

/// x^{(r)} x^{(s)} = coefficient * x^{(r+s)}; coefficient is 0 on truncation.
std::pair<Scalar, MultiIndex> dp_product(const Shape& s, const MultiIndex& r, const MultiIndex& t);
SuperElement multiply(const SuperElement& f, const SuperElement& g);
/// Distinguished partial derivative along slot i (0-based).
SuperElement partial(unsigned i, const SuperElement& f);

/// Sum_k f_k d_k with 0-based direction keys.
class VectorField {
 public:
  explicit VectorField(Shape s) : shape_(std::move(s)) {}
  static VectorField partial_field(const Shape& s, unsigned k);

  const Shape& shape() const { return shape_; }
  const std::map<unsigned, SuperElement>& components() const { return comps_; }
  const SuperElement* component(unsigned k) const;
  bool is_zero() const { return comps_.empty(); }

  void add_component(unsigned k, const SuperElement& f);
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField scaled(Scalar c) const;

  /// parity(f_k) + parity(x_k) when constant over components; 0 for the zero field.
  std::optional<unsigned> parity() const;
  std::string to_string() const;

  bool operator==(const VectorField& o) const { return shape_ == o.shape_ && comps_ == o.comps_; }

 private:
  Shape shape_;
  std::map<unsigned, SuperElement> comps_;
};

SuperElement vf_apply(const VectorField& d, const SuperElement& f);
/// [D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1, for homogeneous fields.
VectorField vf_bracket(const VectorField& d1, const VectorField& d2);
/// The associative p-th power of an even field, as a field again.
VectorField p_power(const VectorField& d);

}  // namespace ko
