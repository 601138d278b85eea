#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfdb/arith/character.hpp"

namespace lfdb::lfunc {

/// Element of the group ring Z[C_m], sum of c_k zeta_m^k. Character values map to single
/// monomials, so products of character values stay canonical and compare exactly.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint64_t order = 1);
  static CyclotomicInteger from_char_value(const arith::CharValue& v, std::uint64_t order);
  static CyclotomicInteger constant(std::int64_t c, std::uint64_t order);

  std::uint64_t order() const { return coeffs_.size(); }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  std::complex<double> to_complex() const;
  /// "0", "1", "-1", "e(k/m)" for single roots of unity, otherwise a sum of such terms.
  std::string to_string() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a);
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace lfdb::lfunc
