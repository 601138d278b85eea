#pragma once

#include <string>
#include <string_view>

#include "lfdb/store/collection.hpp"

namespace lfdb::store {

/// One record per line, "|"-separated, lists comma-separated.
///   number_fields:     label|coeffs|disc_sign|disc_abs|class_number|class_group|galois_n,galois_t|signature|ramps
///   elliptic_curves_q: label|a1,a2,a3,a4,a6|conductor|rank|torsion_structure
///   characters:        label|modulus|exponent_vector|conductor|parity|order
///   zeros:             lfunction_label|ordinate_decimal|precision_exponent
/// Any other collection uses JSON lines: {"label": ..., <fields>}.
bool has_line_grammar(const std::string& collection);

Record parse_line(const std::string& collection, std::string_view line);
std::string format_line(const std::string& collection, const Record& record);

/// Grammar collections accept only records that survive format then parse unchanged.
void validate_record(const std::string& collection, const Record& record);

}  // namespace lfdb::store
