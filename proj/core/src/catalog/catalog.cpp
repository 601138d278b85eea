#include "lfdb/catalog/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "lfdb/arith/factor.hpp"
#include "lfdb/arith/kronecker.hpp"
#include "lfdb/error.hpp"
#include "lfdb/lfunc/zeros.hpp"

namespace lfdb::catalog {

using store::IndexOrdering;
using store::IndexSpec;
using store::List;
using store::Map;
using store::Record;
using store::Value;

void ensure_collections(store::Store& store) {
  const auto big = IndexOrdering::SortableBigInt;
  store.create_collection(names::kNumberFields, {{"degree"},
                                                 {"disc_abs", big},
                                                 {"class_number"},
                                                 {"galois_n"},
                                                 {"galois_t"},
                                                 {"signature"},
                                                 {"ramps", big}});
  store.create_collection(names::kCurves, {{"conductor", big}, {"rank"}, {"torsion_order"}, {"torsion"}});
  store.create_collection(names::kCharacters, {{"modulus"}, {"conductor"}, {"parity"}, {"order"}, {"primitive"}});
  store.create_collection(names::kZeros, {{"lfunction"}, {"t"}});
  store.create_collection(names::kLFunctions, {{"kind"}, {"degree"}, {"conductor", big}, {"origin"}});
  store.create_collection(names::kKnowls, {{"id"}});
  store.create_collection(names::kNotes, {{"subject_class"}});
}

std::string to_string(ObjectClass c) {
  switch (c) {
    case ObjectClass::EllipticCurve: return "EllipticCurve";
    case ObjectClass::NumberField: return "NumberField";
    case ObjectClass::Character: return "Character";
    case ObjectClass::LFunction: return "L";
  }
  return "";
}

ObjectClass class_from_string(const std::string& name) {
  if (name == "EllipticCurve") return ObjectClass::EllipticCurve;
  if (name == "NumberField") return ObjectClass::NumberField;
  if (name == "Character") return ObjectClass::Character;
  if (name == "L" || name == "LFunction") return ObjectClass::LFunction;
  throw ParseError("unknown object class '" + name + "'");
}

std::string collection_for(ObjectClass c) {
  switch (c) {
    case ObjectClass::EllipticCurve: return names::kCurves;
    case ObjectClass::NumberField: return names::kNumberFields;
    case ObjectClass::Character: return names::kCharacters;
    case ObjectClass::LFunction: return names::kLFunctions;
  }
  return "";
}

std::string object_path(ObjectClass c, const std::string& label) {
  switch (c) {
    case ObjectClass::EllipticCurve:
      return "EllipticCurve/Q/" + labels::format_ec_label(labels::parse_ec_label(label), labels::ECLabelStyle::Url);
    case ObjectClass::NumberField: return "NumberField/" + label;
    case ObjectClass::Character: {
      const auto l = labels::parse_character_label(label);
      return "Character/Dirichlet/" + std::to_string(l.modulus) + "/" + std::to_string(l.index);
    }
    case ObjectClass::LFunction: return "L/" + label;
  }
  return "";
}

std::string object_url(ObjectClass c, const std::string& label) { return "/" + object_path(c, label); }

std::string character_lfunction_label(std::uint64_t modulus, std::uint64_t index) {
  if (modulus == 1) return kRiemannLabel;
  return "Character/Dirichlet/" + std::to_string(modulus) + "/" + std::to_string(index);
}

std::string curve_lfunction_label(const labels::ECLabelQ& label) {
  return "EllipticCurve/Q/" + labels::format_ec_label(label, labels::ECLabelStyle::Url);
}

std::string field_lfunction_label(const std::string& nf_label) { return "NumberField/" + nf_label; }

namespace {

const Value& need(const Record& r, const char* name) {
  const Value* v = r.field(name);
  if (!v) throw ValidationError("record " + r.label + " lacks '" + name + "'");
  return *v;
}

std::string join_integers(const std::vector<Integer>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i].get_str();
  return out;
}

}  // namespace

NumberFieldRecord NumberFieldRecord::from_record(const Record& r) {
  NumberFieldRecord nf;
  nf.label = r.label;
  for (const auto& c : need(r, "coeffs").list()) nf.coeffs.push_back(parse_integer(c.text()));
  nf.degree = static_cast<int>(need(r, "degree").integer());
  nf.disc_sign = static_cast<int>(need(r, "disc_sign").integer());
  nf.abs_disc = parse_integer(need(r, "disc_abs").text());
  nf.class_number = need(r, "class_number").integer();
  nf.class_group = need(r, "class_group").text();
  nf.galois_n = static_cast<int>(need(r, "galois_n").integer());
  nf.galois_t = static_cast<int>(need(r, "galois_t").integer());
  const auto& sig = need(r, "signature").text();
  const auto comma = sig.find(',');
  nf.r1 = std::stoi(sig.substr(0, comma));
  nf.r2 = std::stoi(sig.substr(comma + 1));
  for (const auto& p : need(r, "ramps").list()) nf.ramified_primes.push_back(parse_integer(p.text()));
  return nf;
}

Record NumberFieldRecord::to_record() const {
  List c, ramps;
  for (const auto& x : coeffs) c.emplace_back(x.get_str());
  for (const auto& p : ramified_primes) ramps.emplace_back(p.get_str());
  return Record{label,
                {{"coeffs", c},
                 {"degree", degree},
                 {"disc_sign", disc_sign},
                 {"disc_abs", abs_disc.get_str()},
                 {"class_number", class_number},
                 {"class_group", class_group},
                 {"galois_n", galois_n},
                 {"galois_t", galois_t},
                 {"signature", std::to_string(r1) + "," + std::to_string(r2)},
                 {"ramps", ramps}}};
}

std::string polynomial_string(const std::vector<Integer>& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(Provenance p) { return p == Provenance::Ingested ? "ingested" : "computed"; }

EllipticCurveRecord load_curve(const store::Store& store, const std::string& compact_label) {
  const Record r = store.get(names::kCurves, compact_label);
  EllipticCurveRecord ec;
  ec.label = labels::parse_ec_label(compact_label);
  const auto& ainvs = need(r, "ainvs").list();
  for (std::size_t i = 0; i < 5; ++i) ec.ainvs[i] = parse_integer(ainvs.at(i).text());
  ec.conductor = parse_integer(need(r, "conductor").text());
  ec.rank = need(r, "rank").integer();
  for (const auto& t : need(r, "torsion").list()) ec.torsion.push_back(t.integer());
  ec.torsion_order = need(r, "torsion_order").integer();
  for (const char* f : {"ainvs", "conductor", "rank", "torsion", "torsion_order"}) ec.provenance[f] = Provenance::Ingested;

  if (auto L = store.find(names::kLFunctions, curve_lfunction_label(ec.label))) {
    for (const auto& a : need(*L, "coefficients").list()) ec.coefficients.push_back(a.integer());
    for (std::size_t n = 2; n <= ec.coefficients.size(); ++n) {
      if (arith::is_prime(n)) ec.ap[n] = ec.coefficients[n - 1];
    }
    ec.provenance["coefficients"] = Provenance::Computed;
    ec.provenance["ap"] = Provenance::Computed;
  }
  if (auto note = store.find(names::kNotes, object_path(ObjectClass::EllipticCurve, compact_label))) {
    ec.historical_note = need(*note, "text").text();
    ec.provenance["historical_note"] = Provenance::Ingested;
  }
  return ec;
}

Record lfunction_record(const lfunc::LFunction& L, const std::string& origin_url, std::size_t stored_coeffs) {
  Map f;
  f["kind"] = lfunc::to_string(L.kind());
  f["degree"] = L.degree();
  f["conductor"] = L.conductor().get_str();
  f["weight"] = L.weight();
  f["parity"] = L.parity();
  f["self_dual"] = L.self_dual();
  f["normalization"] = lfunc::to_string(L.normalization());
  f["critical_line"] = L.critical_line();
  if (L.root_number()) f["root_number"] = List{L.root_number()->real(), L.root_number()->imag()};
  f["origin"] = origin_url;
  const std::uint64_t n = std::min<std::uint64_t>(stored_coeffs, L.coefficient_bound());
  f["coefficient_bound"] = static_cast<std::int64_t>(n);
  List coeffs;
  if (L.has_integer_coefficients()) {
    for (std::uint64_t i = 1; i <= n; ++i) {
      const Integer& a = L.integer_coefficients()[i];
      if (fits_int64(a)) {
        coeffs.emplace_back(to_int64(a));
      } else {
        coeffs.emplace_back(a.get_str());
      }
    }
  } else if (L.character()) {
    const auto exact = lfunc::character_coefficients(*L.character(), n);
    for (std::uint64_t i = 1; i <= n; ++i) coeffs.emplace_back(exact[i].to_string());
  }
  f["coefficients"] = coeffs;
  if (L.character()) {
    const auto cl = labels::character_label(*L.character());
    f["character"] = labels::format_character_label(cl);
  }
  if (L.discriminant()) f["discriminant"] = *L.discriminant();
  Map prov;
  for (const char* k : {"coefficients", "root_number", "conductor", "degree", "weight"}) prov[k] = "computed";
  f["provenance"] = prov;
  return Record{L.label(), std::move(f)};
}

namespace {

std::string ordinate_text(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", t);
  return buf;
}

}  // namespace

std::vector<Record> zero_records(const lfunc::LFunction& L, double T, unsigned threads) {
  std::vector<Record> out;
  if (!(T > 0.0)) return out;
  const auto zeros = threads > 1 ? lfunc::find_zeros_parallel(L, 0.0, T, lfunc::kDefaultZeroStep, threads)
                                 : lfunc::find_zeros(L, 0.0, T);
  const int exponent = static_cast<int>(std::lround(std::log10(zeros.precision)));
  for (double t : zeros.ordinates) {
    const std::string ord = ordinate_text(t);
    out.push_back(Record{L.label() + "@" + ord,
                         {{"lfunction", L.label()},
                          {"ordinate", ord},
                          {"precision_exponent", exponent},
                          {"t", std::strtod(ord.c_str(), nullptr)}}});
  }
  return out;
}

namespace {

bool built_lfunction(const std::string& label) {
  return label == kRiemannLabel || label.rfind("Character/Dirichlet/", 0) == 0;
}

}  // namespace

BuildStats build_character_catalog(store::Store& store, const BuildOptions& opt) {
  if (opt.max_modulus < 1) throw DomainError("max_modulus must be at least 1");
  ensure_collections(store);
  std::vector<Record> chars, lfuns, zeros;
  for (std::uint64_t N = 1; N <= opt.max_modulus; ++N) {
    for (const auto& chi : arith::character_group(N)) {
      if (!chi.is_primitive()) continue;
      const auto cl = labels::character_label(chi);
      const std::string clabel = labels::format_character_label(cl);
      List exps;
      for (auto e : chi.exponents()) exps.emplace_back(static_cast<std::int64_t>(e));
      chars.push_back(Record{clabel,
                             {{"modulus", static_cast<std::int64_t>(N)},
                              {"exponents", exps},
                              {"conductor", static_cast<std::int64_t>(chi.conductor())},
                              {"parity", chi.parity()},
                              {"order", static_cast<std::int64_t>(chi.order())},
                              {"primitive", true}}});
      const auto L = N == 1 ? lfunc::riemann_zeta(opt.coefficient_bound)
                            : lfunc::dirichlet_lfunction(chi, opt.coefficient_bound)
                                  .with_label(character_lfunction_label(N, cl.index));
      lfuns.push_back(lfunction_record(L, object_url(ObjectClass::Character, clabel), opt.coefficient_bound));
      if (L.self_dual()) {
        for (auto& z : zero_records(L, opt.zeros_to, opt.threads)) zeros.push_back(std::move(z));
      }
    }
  }

  BuildStats stats{chars.size(), lfuns.size(), zeros.size()};
  store.update(names::kCharacters, [&](const store::Collection& c, store::WriteBatch& b) {
    std::set<std::string> keep;
    for (const auto& r : chars) keep.insert(r.label);
    for (const auto& [label, _] : c.records()) {
      if (!keep.count(label)) b.erase(label);
    }
    for (auto& r : chars) b.put(std::move(r));
  });
  store.update(names::kLFunctions, [&](const store::Collection& c, store::WriteBatch& b) {
    std::set<std::string> keep;
    for (const auto& r : lfuns) keep.insert(r.label);
    for (const auto& [label, _] : c.records()) {
      if (built_lfunction(label) && !keep.count(label)) b.erase(label);
    }
    for (auto& r : lfuns) b.put(std::move(r));
  });
  store.update(names::kZeros, [&](const store::Collection& c, store::WriteBatch& b) {
    std::set<std::string> keep;
    for (const auto& r : zeros) keep.insert(r.label);
    for (const auto& [label, r] : c.records()) {
      if (built_lfunction(r.fields.at("lfunction").text()) && !keep.count(label)) b.erase(label);
    }
    for (auto& r : zeros) b.put(std::move(r));
  });
  return stats;
}

EnrichStats enrich(store::Store& store, std::uint64_t bound) {
  ensure_collections(store);
  std::vector<Record> out;
  EnrichStats stats;
  for (const auto& r : store.query(names::kCurves, {}).rows) {
    const auto ec = load_curve(store, r.label);
    const auto model = ec.model();
    const auto L = lfunc::ec_lfunction(model, bound).with_label(curve_lfunction_label(ec.label));
    auto rec = lfunction_record(L, object_url(ObjectClass::EllipticCurve, r.label), bound);
    List local;
    for (const auto& pp : arith::factorize(ec.conductor).factors) {
      const auto d = arith::ec_ap(model, to_uint64(pp.prime));
      local.emplace_back(Map{{"prime", pp.prime.get_str()},
                             {"reduction", arith::to_string(d.kind)},
                             {"ap", d.ap},
                             {"conductor_exponent", static_cast<std::int64_t>(pp.exponent)}});
    }
    rec.fields["local_data"] = local;
    rec.fields["curve"] = r.label;
    out.push_back(std::move(rec));
    ++stats.curves;
  }
  for (const auto& r : store.query(names::kNumberFields, {{store::Filter::equals("degree", 2)}, {}, 0, {}}).rows) {
    const auto nf = NumberFieldRecord::from_record(r);
    const Integer D = nf.discriminant();
    if (!fits_int64(D) || !arith::is_fundamental_discriminant(to_int64(D))) continue;
    const auto L = lfunc::dedekind_quadratic(to_int64(D), bound).with_label(field_lfunction_label(r.label));
    auto rec = lfunction_record(L, object_url(ObjectClass::NumberField, r.label), bound);
    rec.fields["field"] = r.label;
    out.push_back(std::move(rec));
    ++stats.fields;
  }
  store.update(names::kLFunctions, [&](const store::Collection&, store::WriteBatch& b) {
    for (auto& r : out) b.put(std::move(r));
  });
  return stats;
}

bool object_exists(const store::Store& store, ObjectClass c, const std::string& label) {
  const auto name = collection_for(c);
  return store.has_collection(name) && store.find(name, label).has_value();
}

namespace {

Relation make_relation(const store::Store& store, std::string name, ObjectClass c, std::string label) {
  Relation r{std::move(name), c, label, object_url(c, label), false};
  r.resolved = object_exists(store, c, label);
  return r;
}

// Relations shared by a quadratic field and its Dedekind zeta function.
void quadratic_factors(const store::Store& store, std::int64_t D, std::vector<Relation>& out) {
  out.push_back(make_relation(store, "factor: Riemann zeta function", ObjectClass::LFunction, kRiemannLabel));
  const auto chi = arith::kronecker_character(D);
  const auto cl = labels::character_label(chi);
  out.push_back(make_relation(store, "factor: Dirichlet L-function", ObjectClass::LFunction,
                              character_lfunction_label(cl.modulus, cl.index)));
  out.push_back(make_relation(store, "Kronecker character", ObjectClass::Character,
                              labels::format_character_label(cl)));
}

std::optional<std::int64_t> quadratic_discriminant(const store::Store& store, const std::string& nf_label) {
  const auto r = store.find(names::kNumberFields, nf_label);
  if (!r) return std::nullopt;
  const auto nf = NumberFieldRecord::from_record(*r);
  if (nf.degree != 2 || !fits_int64(nf.discriminant())) return std::nullopt;
  const auto D = to_int64(nf.discriminant());
  if (!arith::is_fundamental_discriminant(D)) return std::nullopt;
  return D;
}

}  // namespace

RelatedObjects link_objects(const store::Store& store, const std::string& label, ObjectClass c) {
  if (!object_exists(store, c, label)) {
    throw NotFoundError("no " + to_string(c) + " object '" + label + "'");
  }
  RelatedObjects out{c, label, {}};
  auto& rel = out.relations;
  switch (c) {
    case ObjectClass::EllipticCurve:
      rel.push_back(make_relation(store, "L-function", ObjectClass::LFunction,
                                  curve_lfunction_label(labels::parse_ec_label(label))));
      break;
    case ObjectClass::NumberField:
      if (auto D = quadratic_discriminant(store, label)) {
        rel.push_back(make_relation(store, "Dedekind zeta function", ObjectClass::LFunction,
                                    field_lfunction_label(label)));
        quadratic_factors(store, *D, rel);
      }
      break;
    case ObjectClass::Character: {
      const auto cl = labels::parse_character_label(label);
      rel.push_back(make_relation(store, "L-function", ObjectClass::LFunction,
                                  character_lfunction_label(cl.modulus, cl.index)));
      const auto chi = labels::lookup_character(cl);
      if (chi.is_real() && !chi.is_principal() && chi.is_primitive()) {
        const std::int64_t N = static_cast<std::int64_t>(cl.modulus);
        const std::int64_t D = chi.parity() == 0 ? N : -N;
        const std::string nf = std::string("2.") + (D > 0 ? "2." : "0.") + std::to_string(N) + ".1";
        rel.push_back(make_relation(store, "quadratic field", ObjectClass::NumberField, nf));
      }
      break;
    }
    case ObjectClass::LFunction: {
      if (label == kRiemannLabel) {
        rel.push_back(make_relation(store, "Dirichlet character", ObjectClass::Character, "1.1"));
      } else if (label.rfind("Character/Dirichlet/", 0) == 0) {
        const auto rest = label.substr(std::string("Character/Dirichlet/").size());
        const auto slash = rest.find('/');
        rel.push_back(make_relation(store, "Dirichlet character", ObjectClass::Character,
                                    rest.substr(0, slash) + "." + rest.substr(slash + 1)));
      } else if (label.rfind("EllipticCurve/Q/", 0) == 0) {
        const auto ec = labels::parse_ec_label(label.substr(std::string("EllipticCurve/Q/").size()));
        rel.push_back(make_relation(store, "elliptic curve", ObjectClass::EllipticCurve, labels::format_ec_label(ec)));
      } else if (label.rfind("NumberField/", 0) == 0) {
        const auto nf = label.substr(std::string("NumberField/").size());
        rel.push_back(make_relation(store, "number field", ObjectClass::NumberField, nf));
        if (auto D = quadratic_discriminant(store, nf)) quadratic_factors(store, *D, rel);
      }
      break;
    }
  }
  return out;
}

std::string reconstruction_snippet(const store::Store& store, const std::string& label, ObjectClass c) {
  std::ostringstream os;
  switch (c) {
    case ObjectClass::NumberField: {
      const auto nf = NumberFieldRecord::from_record(store.get(names::kNumberFields, label));
      os << "// number field " << label << "\n";
      os << "// signature (" << nf.r1 << ", " << nf.r2 << "), discriminant " << nf.discriminant().get_str() << "\n";
      os << "K = NumberField(" << polynomial_string(nf.coeffs) << ");\n";
      break;
    }
    case ObjectClass::EllipticCurve: {
      const auto ec = load_curve(store, label);
      os << "// elliptic curve " << label << ": " << ec.model().equation() << "\n";
      os << "// conductor " << ec.conductor.get_str() << "\n";
      os << "E = EllipticCurve([" << join_integers({ec.ainvs.begin(), ec.ainvs.end()}, ", ") << "]);\n";
      break;
    }
    case ObjectClass::Character: {
      const Record r = store.get(names::kCharacters, label);
      const auto chi = labels::lookup_character(labels::parse_character_label(label));
      std::vector<Integer> gens, exps;
      for (const auto& g : chi.group().generators()) gens.emplace_back(static_cast<unsigned long>(g.value));
      for (auto e : chi.exponents()) exps.emplace_back(static_cast<unsigned long>(e));
      os << "// Dirichlet character " << label << ", conductor " << need(r, "conductor").integer() << ", order "
         << chi.order() << "\n";
      os << "// chi(g_i) = exp(2*pi*I*e_i/ord(g_i)) on the generators g = [" << join_integers(gens, ", ") << "]\n";
      os << "chi = DirichletCharacter(" << chi.modulus() << ", [" << join_integers(gens, ", ") << "], ["
         << join_integers(exps, ", ") << "]);\n";
      break;
    }
    case ObjectClass::LFunction: {
      const Record r = store.get(names::kLFunctions, label);
      os << "// L-function " << label << ", degree " << need(r, "degree").integer() << ", conductor "
         << need(r, "conductor").text() << "\n";
      os << "L_coefficients = [";
      const auto& a = need(r, "coefficients").list();
      for (std::size_t i = 0; i < a.size() && i < 100; ++i) os << (i ? ", " : "") << store::display(a[i]);
      os << "];\n";
      break;
    }
  }
  return os.str();
}

}  // namespace lfdb::catalog
