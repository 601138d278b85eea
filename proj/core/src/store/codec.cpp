#include "lfdb/store/codec.hpp"

#include <cstdlib>
#include <vector>

#include "lfdb/arith/integer.hpp"
#include "lfdb/error.hpp"
#include "lfdb/labels/labels.hpp"

namespace lfdb::store {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string decimal(const std::string& s, const char* what) {
  if (!is_canonical_decimal(s)) throw ParseError(std::string(what) + " is not a decimal integer: '" + s + "'");
  return s;
}

std::int64_t small_int(const std::string& s, const char* what) {
  const Integer v = parse_integer(decimal(s, what));
  if (!fits_int64(v)) throw ParseError(std::string(what) + " out of range: '" + s + "'");
  return to_int64(v);
}

List text_list(const std::string& s, const char* what) {
  List out;
  if (s.empty()) return out;
  for (const auto& p : split(s, ',')) out.emplace_back(decimal(p, what));
  return out;
}

List int_list(const std::string& s, const char* what) {
  List out;
  if (s.empty()) return out;
  for (const auto& p : split(s, ',')) out.emplace_back(small_int(p, what));
  return out;
}

const Value& need(const Record& r, const char* name) {
  const Value* v = r.field(name);
  if (!v) throw ValidationError("record " + r.label + " lacks field '" + name + "'");
  return *v;
}

std::string list_text(const Value& v) {
  std::vector<std::string> parts;
  for (const auto& x : v.list()) parts.push_back(x.is_int() ? std::to_string(x.integer()) : x.text());
  return join(parts, ',');
}

std::vector<std::string> fields_of(std::string_view line, std::size_t expected, const char* collection) {
  auto parts = split(line, '|');
  if (parts.size() != expected) {
    throw ParseError(std::string(collection) + " line needs " + std::to_string(expected) + " fields, found " +
                     std::to_string(parts.size()));
  }
  return parts;
}

Record parse_number_field(std::string_view line) {
  const auto f = fields_of(line, 9, "number_fields");
  Record r;
  r.label = f[0];
  const auto label = labels::parse_nf_label(f[0]);
  const List coeffs = text_list(f[1], "coefficient");
  if (coeffs.size() < 2) throw ParseError("defining polynomial needs degree >= 1");
  if (coeffs.back().text() != "1") throw ParseError("defining polynomial must be monic");
  const auto degree = static_cast<std::int64_t>(coeffs.size() - 1);
  const std::int64_t sign = small_int(f[2], "disc_sign");
  if (sign != 1 && sign != -1) throw ParseError("disc_sign must be 1 or -1");
  const std::string disc_abs = decimal(f[3], "disc_abs");
  if (f[3][0] == '-' || f[3] == "0") throw ParseError("disc_abs must be positive");
  const std::int64_t h = small_int(f[4], "class_number");
  if (h < 1) throw ParseError("class_number must be positive");
  if (f[5].find_first_of("|\n") != std::string::npos) throw ParseError("bad class_group");
  const auto galois = split(f[6], ',');
  if (galois.size() != 2) throw ParseError("galois must be n,t");
  const std::int64_t gn = small_int(galois[0], "galois_n"), gt = small_int(galois[1], "galois_t");
  if (gn != degree || gt < 1) throw ParseError("galois pair inconsistent with the degree");
  const auto sig = split(f[7], ',');
  if (sig.size() != 2) throw ParseError("signature must be r1,r2");
  const std::int64_t r1 = small_int(sig[0], "r1"), r2 = small_int(sig[1], "r2");
  if (r1 < 0 || r2 < 0 || r1 + 2 * r2 != degree) throw ParseError("signature does not match the degree");
  if ((r2 % 2 == 0 ? 1 : -1) != sign) throw ParseError("disc_sign must equal (-1)^r2");
  const List ramps = text_list(f[8], "ramified prime");
  const Integer d = parse_integer(disc_abs);
  for (const auto& p : ramps) {
    const Integer q = parse_integer(p.text());
    if (q < 2 || d % q != 0) throw ParseError("ramified prime " + p.text() + " does not divide disc_abs");
  }
  if (static_cast<std::int64_t>(label.degree) != degree || static_cast<std::int64_t>(label.r1) != r1 ||
      label.abs_disc != d) {
    throw ParseError("label " + f[0] + " disagrees with the record");
  }
  r.fields = {{"coeffs", coeffs},     {"degree", degree},    {"disc_sign", sign},  {"disc_abs", disc_abs},
              {"class_number", h},    {"class_group", f[5]}, {"galois_n", gn},     {"galois_t", gt},
              {"signature", f[7]},    {"ramps", ramps}};
  return r;
}

std::string format_number_field(const Record& r) {
  return join({r.label, list_text(need(r, "coeffs")), std::to_string(need(r, "disc_sign").integer()),
               need(r, "disc_abs").text(), std::to_string(need(r, "class_number").integer()),
               need(r, "class_group").text(),
               std::to_string(need(r, "galois_n").integer()) + "," + std::to_string(need(r, "galois_t").integer()),
               need(r, "signature").text(), list_text(need(r, "ramps"))},
              '|');
}

Record parse_curve(std::string_view line) {
  const auto f = fields_of(line, 5, "elliptic_curves_q");
  Record r;
  r.label = f[0];
  const auto label = labels::parse_ec_label(f[0]);
  if (f[0].find('/') != std::string::npos) throw ParseError("curve labels are stored in compact form");
  const List ainvs = text_list(f[1], "a-invariant");
  if (ainvs.size() != 5) throw ParseError("need five Weierstrass coefficients");
  const std::string conductor = decimal(f[2], "conductor");
  if (parse_integer(conductor) != label.conductor) throw ParseError("label conductor disagrees with the record");
  const std::int64_t rank = small_int(f[3], "rank");
  if (rank < 0) throw ParseError("rank must be non-negative");
  const List torsion = int_list(f[4], "torsion invariant");
  std::int64_t order = 1;
  for (const auto& t : torsion) {
    if (t.integer() < 2) throw ParseError("torsion invariants must exceed 1");
    order *= t.integer();
  }
  r.fields = {{"ainvs", ainvs},       {"conductor", conductor},  {"rank", rank},
              {"torsion", torsion},   {"torsion_order", order}};
  return r;
}

std::string format_curve(const Record& r) {
  return join({r.label, list_text(need(r, "ainvs")), need(r, "conductor").text(),
               std::to_string(need(r, "rank").integer()), list_text(need(r, "torsion"))},
              '|');
}

Record parse_character(std::string_view line) {
  const auto f = fields_of(line, 6, "characters");
  Record r;
  r.label = f[0];
  const auto label = labels::parse_character_label(f[0]);
  const std::int64_t modulus = small_int(f[1], "modulus");
  if (modulus < 1 || static_cast<std::uint64_t>(modulus) != label.modulus) {
    throw ParseError("label modulus disagrees with the record");
  }
  const List exps = int_list(f[2], "exponent");
  const std::int64_t conductor = small_int(f[3], "conductor");
  if (conductor < 1 || modulus % conductor != 0) throw ParseError("conductor must divide the modulus");
  const std::int64_t parity = small_int(f[4], "parity");
  if (parity != 0 && parity != 1) throw ParseError("parity must be 0 or 1");
  const std::int64_t order = small_int(f[5], "order");
  if (order < 1) throw ParseError("order must be positive");
  r.fields = {{"modulus", modulus}, {"exponents", exps},  {"conductor", conductor},
              {"parity", parity},   {"order", order},     {"primitive", conductor == modulus}};
  return r;
}

std::string format_character(const Record& r) {
  return join({r.label, std::to_string(need(r, "modulus").integer()), list_text(need(r, "exponents")),
               std::to_string(need(r, "conductor").integer()), std::to_string(need(r, "parity").integer()),
               std::to_string(need(r, "order").integer())},
              '|');
}

bool is_ordinate(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != dot && (s[i] < '0' || s[i] > '9')) return false;
  }
  return !(s[0] == '0' && dot > 1);
}

Record parse_zero(std::string_view line) {
  const auto f = fields_of(line, 3, "zeros");
  if (f[0].empty() || f[0].find('@') != std::string::npos) throw ParseError("bad L-function label '" + f[0] + "'");
  if (!is_ordinate(f[1])) throw ParseError("ordinate must be a positive decimal: '" + f[1] + "'");
  const std::int64_t prec = small_int(f[2], "precision_exponent");
  Record r;
  r.label = f[0] + "@" + f[1];
  r.fields = {{"lfunction", f[0]}, {"ordinate", f[1]}, {"precision_exponent", prec},
              {"t", std::strtod(f[1].c_str(), nullptr)}};
  return r;
}

std::string format_zero(const Record& r) {
  return join({need(r, "lfunction").text(), need(r, "ordinate").text(),
               std::to_string(need(r, "precision_exponent").integer())},
              '|');
}

struct Grammar {
  const char* name;
  Record (*parse)(std::string_view);
  std::string (*format)(const Record&);
};

constexpr Grammar kGrammars[] = {
    {"number_fields", parse_number_field, format_number_field},
    {"elliptic_curves_q", parse_curve, format_curve},
    {"characters", parse_character, format_character},
    {"zeros", parse_zero, format_zero},
};

const Grammar* grammar(const std::string& collection) {
  for (const auto& g : kGrammars) {
    if (collection == g.name) return &g;
  }
  return nullptr;
}

}  // namespace

bool has_line_grammar(const std::string& collection) { return grammar(collection) != nullptr; }

Record parse_line(const std::string& collection, std::string_view line) {
  if (const auto* g = grammar(collection)) {
    try {
      Record r = g->parse(line);
      validate_label(r.label);
      return r;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("label") || !j["label"].is_string()) {
    throw ParseError("JSON line needs a string 'label'");
  }
  Record r;
  r.label = j["label"].get<std::string>();
  j.erase("label");
  try {
    r.fields = map_from_json(j);
    validate_label(r.label);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return r;
}

std::string format_line(const std::string& collection, const Record& record) {
  if (const auto* g = grammar(collection)) return g->format(record);
  auto j = to_json(record.fields);
  j["label"] = record.label;
  return j.dump();
}

void validate_record(const std::string& collection, const Record& record) {
  validate_label(record.label);
  if (record.fields.count("label")) throw ValidationError("'label' is reserved and cannot be a field name");
  const auto* g = grammar(collection);
  if (!g) return;
  Record round;
  try {
    round = g->parse(format_line(collection, record));
  } catch (const std::exception& e) {
    throw ValidationError("record " + record.label + " does not fit the " + collection + " grammar: " + e.what());
  }
  if (!(round == record)) {
    throw ValidationError("record " + record.label + " does not fit the " + collection +
                          " grammar (fields differ after a text round trip)");
  }
}

}  // namespace lfdb::store
