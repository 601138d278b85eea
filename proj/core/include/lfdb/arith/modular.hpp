#pragma once

#include <cstdint>

namespace lfdb::arith {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Least non-negative residue of a signed value.
inline std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  const auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(m));
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

}  // namespace lfdb::arith
