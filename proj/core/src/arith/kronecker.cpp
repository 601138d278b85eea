#include "lfdb/arith/kronecker.hpp"

#include <cstdlib>
#include <string>

#include "lfdb/arith/factor.hpp"
#include "lfdb/error.hpp"

namespace lfdb::arith {

namespace {

bool squarefree(std::uint64_t n) {
  for (const auto& pp : factor_u64(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

int jacobi(std::int64_t a, std::int64_t b) {
  // b odd and positive, 0 <= a < b
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = b % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, b);
    if (a % 4 == 3 && b % 4 == 3) t = -t;
    a %= b;
  }
  return b == 1 ? t : 0;
}

}  // namespace

bool is_discriminant(std::int64_t d) {
  const std::int64_t r = ((d % 4) + 4) % 4;
  return r == 0 || r == 1;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1 || !is_discriminant(d)) return false;
  const auto abs_d = static_cast<std::uint64_t>(std::llabs(d));
  if (((d % 4) + 4) % 4 == 1) return squarefree(abs_d);
  const std::int64_t m = d / 4;
  const std::int64_t mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && squarefree(static_cast<std::uint64_t>(std::llabs(m)));
}

int kronecker(std::int64_t discriminant, std::int64_t n) {
  if (n <= 0) throw DomainError("kronecker: n must be positive");
  if (!is_discriminant(discriminant)) {
    throw DomainError("kronecker: " + std::to_string(discriminant) + " is not 0 or 1 mod 4");
  }
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t r = ((discriminant % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  const std::int64_t a = ((discriminant % n) + n) % n;
  return result * jacobi(a, n);
}

DirichletCharacter kronecker_character(std::int64_t discriminant) {
  if (!is_fundamental_discriminant(discriminant)) {
    throw DomainError(std::to_string(discriminant) + " is not a fundamental discriminant");
  }
  const auto modulus = static_cast<std::uint64_t>(std::llabs(discriminant));
  for (const auto& chi : character_group(modulus)) {
    if (!chi.is_real()) continue;
    bool match = true;
    for (std::uint64_t n = 1; n <= modulus && match; ++n) {
      match = chi(static_cast<std::int64_t>(n)).to_int() == kronecker(discriminant, static_cast<std::int64_t>(n));
    }
    if (match) return chi;
  }
  throw std::logic_error("no character matches the Kronecker symbol");
}

}  // namespace lfdb::arith
