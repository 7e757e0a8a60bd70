#include "ko/arith.hpp"

namespace ko {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p <= 3)
    throw Error("characteristic must be a prime p > 3, got " + std::to_string(p));
  // Keeps lazy-reduction accumulators in 64 bits for any matrix we build.
  if (p >= (1u << 15)) throw Error("characteristic too large: " + std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw DivisionByZero();
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::lucas_binom(std::uint64_t a, std::uint64_t b) const {
  if (b > a) return 0;
  Scalar result = 1;
  while (a || b) {
    std::uint64_t ai = a % p_, bi = b % p_;
    if (bi > ai) return 0;
    // Small binomial binom(ai, bi) with ai < p, computed in the field.
    Scalar num = 1, den = 1;
    for (std::uint64_t k = 0; k < bi; ++k) {
      num = mul(num, static_cast<Scalar>(ai - k));
      den = mul(den, static_cast<Scalar>(k + 1));
    }
    result = mul(result, div(num, den));
    a /= p_;
    b /= p_;
  }
  return result;
}

Scalar PrimeField::tuple_binom(std::span<const std::uint8_t> r,
                               std::span<const std::uint8_t> s,
                               unsigned n_even) const {
  Scalar result = 1;
  for (unsigned i = 0; i < n_even; ++i) {
    result = mul(result, lucas_binom(r[i] + s[i], r[i]));
    if (result == 0) break;
  }
  return result;
}

}  // namespace ko
