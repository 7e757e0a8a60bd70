#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace ko {

/// Canonical residue in [0, p).
using Scalar = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in F_p") {}
};

/// The prime field F_p with p > 3.  Every operation returns a canonical
/// residue.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Scalar reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// (-1)^k as a field element.
  Scalar sign(unsigned k) const { return (k & 1u) ? p_ - 1 : 1; }

  /// binomial(a, b) mod p via Lucas' theorem; 0 when b > a.
  Scalar lucas_binom(std::uint64_t a, std::uint64_t b) const;

  /// Product over the even slots of binomial(r_i + s_i, r_i).
  Scalar tuple_binom(std::span<const std::uint8_t> r,
                     std::span<const std::uint8_t> s, unsigned n_even) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

}  // namespace ko
