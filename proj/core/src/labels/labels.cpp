#include "lfdb/labels/labels.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "lfdb/arith/factor.hpp"
#include "lfdb/error.hpp"

namespace lfdb::labels {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Positive decimal, no sign, no leading zeros.
std::uint64_t parse_positive(std::string_view s, std::string_view what, bool allow_zero = false) {
  if (!all_digits(s) || (s.size() > 1 && s[0] == '0')) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string(what) + " out of range: '" + std::string(s) + "'");
  }
  if (v == 0 && !allow_zero) throw ParseError(std::string(what) + " must be positive");
  return v;
}

Integer parse_positive_big(std::string_view s, std::string_view what) {
  if (!all_digits(s) || s[0] == '0') throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return parse_integer(s);
}

}  // namespace

NumberFieldLabel parse_nf_label(std::string_view text) {
  const auto parts = split(text, '.');
  if (parts.size() != 4) throw ParseError("number field label needs four components: '" + std::string(text) + "'");
  NumberFieldLabel label;
  label.degree = parse_positive(parts[0], "degree");
  label.r1 = parse_positive(parts[1], "r1", true);
  label.abs_disc = parse_positive_big(parts[2], "discriminant");
  label.index = parse_positive(parts[3], "index");
  if (label.r1 > label.degree) throw ParseError("r1 exceeds the degree in '" + std::string(text) + "'");
  if ((label.degree - label.r1) % 2 != 0) {
    throw ParseError("r1 and degree differ in parity in '" + std::string(text) + "'");
  }
  return label;
}

std::string format_nf_label(const NumberFieldLabel& label) {
  return std::to_string(label.degree) + "." + std::to_string(label.r1) + "." + label.abs_disc.get_str() + "." +
         std::to_string(label.index);
}

std::uint64_t decode_isogeny_class(std::string_view letters) {
  if (letters.empty()) throw ParseError("empty isogeny class");
  std::uint64_t v = 0;
  for (char c : letters) {
    if (c < 'a' || c > 'z') throw ParseError("isogeny class must be lowercase letters: '" + std::string(letters) + "'");
    if (v > (UINT64_MAX - 26) / 26) throw ParseError("isogeny class too long");
    v = v * 26 + static_cast<std::uint64_t>(c - 'a' + 1);
  }
  return v;
}

std::string encode_isogeny_class(std::uint64_t index) {
  if (index == 0) throw DomainError("isogeny class index starts at 1");
  std::string out;
  while (index > 0) {
    --index;
    out.insert(out.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  }
  return out;
}

ECLabelQ parse_ec_label(std::string_view text) {
  ECLabelQ label;
  if (text.find('/') != std::string_view::npos) {
    const auto parts = split(text, '/');
    if (parts.size() != 3) throw ParseError("elliptic curve URL label needs three segments: '" + std::string(text) + "'");
    label.conductor = parse_positive_big(parts[0], "conductor");
    decode_isogeny_class(parts[1]);
    label.isogeny_class = std::string(parts[1]);
    label.curve_number = parse_positive(parts[2], "curve number");
    return label;
  }
  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = i;
  while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
  if (i == 0 || j == i || j == text.size()) {
    throw ParseError("malformed elliptic curve label '" + std::string(text) + "'");
  }
  label.conductor = parse_positive_big(text.substr(0, i), "conductor");
  decode_isogeny_class(text.substr(i, j - i));
  label.isogeny_class = std::string(text.substr(i, j - i));
  label.curve_number = parse_positive(text.substr(j), "curve number");
  return label;
}

std::string format_ec_label(const ECLabelQ& label, ECLabelStyle style) {
  const std::string n = std::to_string(label.curve_number);
  if (style == ECLabelStyle::Url) return label.conductor.get_str() + "/" + label.isogeny_class + "/" + n;
  return label.conductor.get_str() + label.isogeny_class + n;
}

CharacterLabel parse_character_label(std::string_view text) {
  const auto parts = split(text, '.');
  if (parts.size() != 2) throw ParseError("character label must be N.j: '" + std::string(text) + "'");
  return {parse_positive(parts[0], "modulus"), parse_positive(parts[1], "character index")};
}

std::string format_character_label(const CharacterLabel& label) {
  return std::to_string(label.modulus) + "." + std::to_string(label.index);
}

CharacterLabel character_label(const arith::DirichletCharacter& chi) {
  return {chi.modulus(), arith::lexicographic_index(chi) + 1};
}

arith::DirichletCharacter lookup_character(const CharacterLabel& label) {
  if (label.modulus == 0 || label.index == 0 || label.index > arith::euler_phi(label.modulus)) {
    throw NotFoundError("no character " + format_character_label(label));
  }
  return arith::character_at(label.modulus, label.index - 1);
}

}  // namespace lfdb::labels
