#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lfdb {

using Integer = mpz_class;

/// Parses a canonical decimal integer: optional '-', no leading zeros, no "-0".
bool is_canonical_decimal(std::string_view text);

Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& n) { return n.get_str(); }

bool fits_int64(const Integer& n);
std::int64_t to_int64(const Integer& n);
std::uint64_t to_uint64(const Integer& n);
Integer from_int64(std::int64_t v);
Integer from_uint64(std::uint64_t v);

}  // namespace lfdb
