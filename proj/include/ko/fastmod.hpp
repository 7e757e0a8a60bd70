#pragma once

#include <cstdint>

namespace ko {

// x mod p for 64-bit x without a hardware divide.
class FastMod {
 public:
  explicit FastMod(std::uint32_t p) : p_(p), m_(~0ULL / p) {}
  std::uint32_t operator()(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t p() const { return static_cast<std::uint32_t>(p_); }

 private:
  std::uint64_t p_, m_;
};

}  // namespace ko
