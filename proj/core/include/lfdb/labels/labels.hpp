#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lfdb/arith/character.hpp"
#include "lfdb/arith/integer.hpp"

namespace lfdb::labels {

/// d.r1.D.i
struct NumberFieldLabel {
  std::uint64_t degree = 0;
  std::uint64_t r1 = 0;
  Integer abs_disc;
  std::uint64_t index = 0;

  bool operator==(const NumberFieldLabel&) const = default;
};

NumberFieldLabel parse_nf_label(std::string_view text);
std::string format_nf_label(const NumberFieldLabel& label);

struct ECLabelQ {
  Integer conductor;
  std::string isogeny_class;  // bijective base 26, lowercase
  std::uint64_t curve_number = 0;

  bool operator==(const ECLabelQ&) const = default;
};

enum class ECLabelStyle { Compact, Url };

/// Accepts "5077a1" and "5077/a/1".
ECLabelQ parse_ec_label(std::string_view text);
std::string format_ec_label(const ECLabelQ& label, ECLabelStyle style = ECLabelStyle::Compact);

/// a = 1, ..., z = 26, aa = 27, ..., ba = 53.
std::uint64_t decode_isogeny_class(std::string_view letters);
std::string encode_isogeny_class(std::uint64_t index);

/// N.j with j the 1-based lexicographic position of the exponent vector.
struct CharacterLabel {
  std::uint64_t modulus = 0;
  std::uint64_t index = 0;

  bool operator==(const CharacterLabel&) const = default;
};

CharacterLabel parse_character_label(std::string_view text);
std::string format_character_label(const CharacterLabel& label);

CharacterLabel character_label(const arith::DirichletCharacter& chi);
/// NotFoundError when j is outside 1..phi(N).
arith::DirichletCharacter lookup_character(const CharacterLabel& label);

}  // namespace lfdb::labels
