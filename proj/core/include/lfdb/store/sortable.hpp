#pragma once

#include <string>
#include <string_view>

namespace lfdb::store {

/// Up to this many decimal digits fit the 4-digit length prefix.
inline constexpr std::size_t kMaxSortableDigits = 9999;

/// n >= 0: "p" + 4-digit digit count + digits.
/// n < 0:  "n" + 4-digit (10000 - digit count) + nines complement of the digits.
/// Byte order of keys equals numeric order. Input must be a canonical decimal.
std::string encode_sortable_int(std::string_view decimal);
std::string decode_sortable_int(std::string_view key);

}  // namespace lfdb::store
