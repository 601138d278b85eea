#include "lfdb/arith/integer.hpp"

#include <limits>
#include <string>

#include "lfdb/error.hpp"

namespace lfdb {

bool is_canonical_decimal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (text[0] == '-') {
    pos = 1;
    if (text.size() == 1) return false;
    if (text[1] == '0') return false;  // rejects "-0" and "-07"
  }
  if (text[pos] == '0' && text.size() > pos + 1) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_canonical_decimal(text)) {
    throw ParseError("not a canonical decimal integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

bool fits_int64(const Integer& n) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return n >= lo && n <= hi;
}

std::int64_t to_int64(const Integer& n) {
  if (!fits_int64(n)) throw DomainError("integer does not fit in 64 bits: " + n.get_str());
  return std::stoll(n.get_str());
}

std::uint64_t to_uint64(const Integer& n) {
  if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw DomainError("integer is not an unsigned 64-bit value: " + n.get_str());
  }
  return std::stoull(n.get_str());
}

Integer from_int64(std::int64_t v) { return Integer(std::to_string(v)); }

Integer from_uint64(std::uint64_t v) { return Integer(std::to_string(v)); }

}  // namespace lfdb
