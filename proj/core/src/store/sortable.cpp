#include "lfdb/store/sortable.hpp"

#include <cstdio>

#include "lfdb/arith/integer.hpp"
#include "lfdb/error.hpp"

namespace lfdb::store {

namespace {

std::string four_digits(std::size_t n) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04zu", n);
  return buf;
}

void nines_complement(std::string& digits) {
  for (char& c : digits) c = static_cast<char>('9' - (c - '0'));
}

}  // namespace

std::string encode_sortable_int(std::string_view decimal) {
  if (!is_canonical_decimal(decimal)) throw ParseError("not a decimal integer: '" + std::string(decimal) + "'");
  const bool negative = decimal.front() == '-';
  std::string digits(negative ? decimal.substr(1) : decimal);
  if (digits.size() > kMaxSortableDigits) {
    throw DomainError("integer with " + std::to_string(digits.size()) + " digits exceeds the sortable key limit");
  }
  if (!negative) return "p" + four_digits(digits.size()) + digits;
  nines_complement(digits);
  return "n" + four_digits(10000 - digits.size()) + digits;
}

std::string decode_sortable_int(std::string_view key) {
  auto bad = [&] { return ParseError("malformed sortable key '" + std::string(key) + "'"); };
  if (key.size() < 6 || (key[0] != 'p' && key[0] != 'n')) throw bad();
  for (char c : key.substr(1)) {
    if (c < '0' || c > '9') throw bad();
  }
  const std::size_t prefix = std::stoul(std::string(key.substr(1, 4)));
  std::string digits(key.substr(5));
  const std::size_t count = key[0] == 'p' ? prefix : 10000 - prefix;
  if (digits.size() != count) throw bad();
  if (key[0] == 'n') {
    nines_complement(digits);
    digits.insert(digits.begin(), '-');
  }
  if (!is_canonical_decimal(digits)) throw bad();
  return digits;
}

}  // namespace lfdb::store
