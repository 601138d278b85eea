#include "lfdb/webapi/api.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "lfdb/arith/kronecker.hpp"
#include "lfdb/arith/primes.hpp"
#include "lfdb/catalog/catalog.hpp"
#include "lfdb/error.hpp"
#include "lfdb/knowl/knowl.hpp"
#include "lfdb/labels/labels.hpp"
#include "lfdb/lfunc/zeros.hpp"

namespace lfdb::webapi {

using nlohmann::json;
using catalog::ObjectClass;
namespace names = catalog::names;

std::optional<std::string> Request::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

Response error_response(int status, const std::string& code, const std::string& message, const json& valid_fields) {
  json body{{"code", code}, {"message", message}};
  if (!valid_fields.is_null()) body["valid_fields"] = valid_fields;
  return {status, "application/json", body.dump()};
}

namespace {

/// Maps to a 400 with a valid_fields list.
struct BadField : std::runtime_error {
  json valid;
  BadField(const std::string& m, json v) : std::runtime_error(m), valid(std::move(v)) {}
};

Response ok(const json& body) { return {200, "application/json", body.dump()}; }

std::vector<std::string> segments(const std::string& path) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::size_t from, const char* sep = "/") {
  std::string out;
  for (std::size_t i = from; i < parts.size(); ++i) out += (i > from ? sep : "") + parts[i];
  return out;
}

double number_param(const Request& req, const std::string& name, double fallback, double lo, double hi) {
  auto v = req.param(name);
  if (!v) return fallback;
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(*v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v->size() || !std::isfinite(x)) throw ParseError("parameter " + name + " is not a number");
  if (x < lo || x > hi) {
    throw DomainError("parameter " + name + " must lie in [" + store::display(lo) + ", " + store::display(hi) + "]");
  }
  return x;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

std::string complex_text(double re, double im) {
  if (std::abs(im) < 1e-9) {
    if (std::abs(re - std::round(re)) < 1e-9) return std::to_string(static_cast<long>(std::round(re)));
    return fixed(re, 6);
  }
  return fixed(re, 6) + (im < 0 ? " - " : " + ") + fixed(std::abs(im), 6) + "*i";
}

/// 1 + c1*T + c2*T^2 ... from low-first integer coefficients.
std::string euler_text(const std::vector<long>& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const long mag = std::labs(c[k]);
    if (out.empty()) {
      out += c[k] < 0 ? "-" : "";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k > 0) out += std::string(mag != 1 ? "*" : "") + "T" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.empty() ? "0" : out;
}

json property(const std::string& name, const std::string& value, const std::string& knowl = "") {
  json p{{"name", name}, {"value", value}};
  if (!knowl.empty()) p["knowl"] = knowl;
  return p;
}

json relations_json(const catalog::RelatedObjects& rel) {
  auto arr = json::array();
  for (const auto& r : rel.relations) {
    arr.push_back({{"relation", r.relation},
                   {"class", catalog::to_string(r.target_class)},
                   {"label", r.target_label},
                   {"url", r.url},
                   {"resolved", r.resolved}});
  }
  return arr;
}

class Page {
 public:
  Page(const store::Store& store, ObjectClass c, std::string label) : store_(store), class_(c), label_(std::move(label)) {
    doc_["class"] = catalog::to_string(c);
    doc_["label"] = label_;
    doc_["url"] = catalog::object_url(c, label_);
    doc_["properties"] = json::array();
  }

  json& doc() { return doc_; }
  void title(const std::string& t) { doc_["title"] = t; }
  void prop(const std::string& name, const std::string& value, const std::string& knowl = "") {
    doc_["properties"].push_back(property(name, value, knowl));
    if (!knowl.empty()) knowls_.insert(knowl);
  }
  void use_knowl(const std::string& id) { knowls_.insert(id); }

  json finish() {
    doc_["related"] = relations_json(catalog::link_objects(store_, label_, class_));
    doc_["downloads"] = json::array({{{"format", "generic"},
                                      {"url", "/api/download/" + catalog::to_string(class_) + "/" + label_}}});
    auto k = json::array();
    for (const auto& id : knowls_) {
      bool resolved = true;
      try {
        knowl::latest_knowl(store_, id);
      } catch (const NotFoundError&) {
        resolved = false;
      }
      k.push_back({{"id", id}, {"resolved", resolved}});
    }
    doc_["knowls"] = k;
    if (auto note = store_.find(names::kNotes, catalog::object_path(class_, label_))) {
      doc_["note"] = note->fields.at("text").text();
    }
    return doc_;
  }

 private:
  const store::Store& store_;
  ObjectClass class_;
  std::string label_;
  json doc_;
  std::set<std::string> knowls_;
};

json record_data(const store::Record& r) {
  auto j = store::to_json(r.fields);
  j.erase("coefficients");
  return j;
}

std::vector<std::uint64_t> small_primes() { return arith::sieve_primes(30); }

// --- elliptic curves -------------------------------------------------------------------------

json curve_page(const store::Store& store, const std::string& compact) {
  if (!store.find(names::kCurves, compact)) throw NotFoundError("no elliptic curve " + compact);
  const auto ec = catalog::load_curve(store, compact);
  const auto model = ec.model();
  Page page(store, ObjectClass::EllipticCurve, compact);
  page.title("Elliptic curve " + compact + " over Q");
  page.prop("Label", compact, "ec.label");
  page.prop("Weierstrass equation", model.equation(), "ec.weierstrass");
  std::string ainvs;
  for (std::size_t i = 0; i < 5; ++i) ainvs += (i ? ", " : "") + ec.ainvs[i].get_str();
  page.prop("Coefficients", "[" + ainvs + "]");
  page.prop("Conductor", ec.conductor.get_str(), "ec.conductor");
  page.prop("Discriminant", model.discriminant().get_str(), "ec.discriminant");
  page.prop("Rank", std::to_string(ec.rank), "ec.rank");
  std::string tors;
  for (std::size_t i = 0; i < ec.torsion.size(); ++i) tors += (i ? " x " : "") + ("Z/" + std::to_string(ec.torsion[i]));
  page.prop("Torsion structure", tors.empty() ? "trivial" : tors, "ec.torsion");
  page.prop("Torsion order", std::to_string(ec.torsion_order));

  // recomputed on request from the stored model
  auto factors = json::array();
  for (auto p : small_primes()) {
    const auto d = arith::ec_ap(model, p);
    std::vector<long> c{1, -d.ap};
    if (d.kind == arith::ReductionKind::Good) c.push_back(static_cast<long>(p));
    if (d.kind == arith::ReductionKind::Additive) c = {1};
    factors.push_back({{"p", p}, {"ap", d.ap}, {"reduction", arith::to_string(d.kind)}, {"factor", euler_text(c)}});
  }
  page.doc()["euler_factors"] = factors;
  page.use_knowl("lfunction.eulerproduct");

  const auto r = store.get(names::kCurves, compact);
  page.doc()["data"] = record_data(r);
  auto prov = json::object();
  for (const auto& [k, v] : ec.provenance) prov[k] = catalog::to_string(v);
  page.doc()["provenance"] = prov;
  if (!ec.coefficients.empty()) {
    auto a = json::array();
    for (std::size_t i = 0; i < ec.coefficients.size() && i < 30; ++i) a.push_back(ec.coefficients[i]);
    page.doc()["coefficients"] = a;
  }
  return page.finish();
}

// --- number fields ---------------------------------------------------------------------------

json field_page(const store::Store& store, const std::string& label) {
  labels::parse_nf_label(label);
  const auto rec = store.find(names::kNumberFields, label);
  if (!rec) throw NotFoundError("no number field " + label);
  const auto nf = catalog::NumberFieldRecord::from_record(*rec);
  Page page(store, ObjectClass::NumberField, label);
  page.title("Number field " + label);
  page.prop("Label", label, "nf.label");
  page.prop("Defining polynomial", catalog::polynomial_string(nf.coeffs), "nf.definingpolynomial");
  page.prop("Degree", std::to_string(nf.degree), "nf.degree");
  page.prop("Signature", "[" + std::to_string(nf.r1) + ", " + std::to_string(nf.r2) + "]", "nf.signature");
  page.prop("Discriminant", nf.discriminant().get_str(), "nf.discriminant");
  std::string ramps;
  for (std::size_t i = 0; i < nf.ramified_primes.size(); ++i) ramps += (i ? ", " : "") + nf.ramified_primes[i].get_str();
  page.prop("Ramified primes", ramps, "nf.ramifiedprimes");
  page.prop("Class number", std::to_string(nf.class_number), "nf.classnumber");
  page.prop("Class group", nf.class_group.empty() ? "trivial" : "[" + nf.class_group + "]", "nf.classgroup");
  page.prop("Galois group", std::to_string(nf.galois_n) + "T" + std::to_string(nf.galois_t), "nf.galoisgroup");
  page.doc()["data"] = record_data(*rec);

  const Integer D = nf.discriminant();
  if (nf.degree == 2 && fits_int64(D) && arith::is_fundamental_discriminant(to_int64(D))) {
    auto split = json::array();
    for (auto p : small_primes()) {
      const int k = arith::kronecker(to_int64(D), static_cast<std::int64_t>(p));
      split.push_back({{"p", p}, {"splitting", k == 1 ? "split" : (k == -1 ? "inert" : "ramified")}});
    }
    page.doc()["prime_splitting"] = split;
  }
  return page.finish();
}

// --- characters ------------------------------------------------------------------------------

json character_page(const store::Store& store, const std::string& label) {
  const auto cl = labels::parse_character_label(label);
  const auto rec = store.find(names::kCharacters, label);
  if (!rec) throw NotFoundError("no character " + label);
  const auto chi = labels::lookup_character(cl);
  Page page(store, ObjectClass::Character, label);
  page.title("Dirichlet character " + label);
  page.prop("Label", label, "character.dirichlet.label");
  page.prop("Modulus", std::to_string(chi.modulus()), "character.dirichlet.modulus");
  page.prop("Conductor", std::to_string(chi.conductor()), "character.dirichlet.conductor");
  page.prop("Order", std::to_string(chi.order()), "character.dirichlet.order");
  page.prop("Parity", chi.parity() == 0 ? "even" : "odd", "character.dirichlet.parity");
  page.prop("Real", chi.is_real() ? "yes" : "no");
  page.prop("Primitive", chi.is_primitive() ? "yes" : "no", "character.dirichlet.primitive");
  if (chi.is_primitive()) {
    const auto eps = lfunc::dirichlet_root_number(chi);
    page.prop("Root number", complex_text(eps.real(), eps.imag()), "lfunction.rootnumber");
  }
  auto gens = json::array();
  for (std::size_t i = 0; i < chi.exponents().size(); ++i) {
    const auto& g = chi.group().generators()[i];
    gens.push_back({{"generator", g.value}, {"order", g.order}, {"exponent", chi.exponents()[i]}});
  }
  page.doc()["generators"] = gens;
  auto values = json::array();
  const std::uint64_t upto = std::min<std::uint64_t>(std::max<std::uint64_t>(chi.modulus(), 2), 30);
  for (std::uint64_t n = 1; n <= upto; ++n) {
    const auto v = chi(static_cast<std::int64_t>(n));
    values.push_back({{"n", n}, {"value", lfunc::CyclotomicInteger::from_char_value(v, chi.order()).to_string()}});
  }
  page.doc()["values"] = values;
  page.doc()["data"] = record_data(*rec);
  return page.finish();
}

// --- L-functions -----------------------------------------------------------------------------

void check_lfunction_label(const std::string& label) {
  auto parts = segments(label);
  if (label == catalog::kRiemannLabel) return;
  if (parts.size() == 4 && parts[0] == "Character" && parts[1] == "Dirichlet") {
    labels::parse_character_label(parts[2] + "." + parts[3]);
    return;
  }
  if (parts.size() == 5 && parts[0] == "EllipticCurve" && parts[1] == "Q") {
    labels::parse_ec_label(parts[2] + "/" + parts[3] + "/" + parts[4]);
    return;
  }
  if (parts.size() == 2 && parts[0] == "NumberField") {
    labels::parse_nf_label(parts[1]);
    return;
  }
  throw NotFoundError("no L-function " + label);
}

std::optional<lfunc::LFunction> degree_one(const std::string& label) {
  if (label == catalog::kRiemannLabel) return lfunc::riemann_zeta(10).with_label(label);
  const auto parts = segments(label);
  if (parts.size() == 4 && parts[0] == "Character") {
    const auto chi = labels::lookup_character(labels::parse_character_label(parts[2] + "." + parts[3]));
    if (!chi.is_primitive()) return std::nullopt;
    return lfunc::dirichlet_lfunction(chi, 10).with_label(label);
  }
  return std::nullopt;
}

json lfunction_page(const store::Store& store, const std::string& label, const Request& req,
                    const ApiOptions& options) {
  check_lfunction_label(label);
  const auto rec = store.find(names::kLFunctions, label);
  if (!rec) throw NotFoundError("no L-function " + label);
  const auto& f = rec->fields;
  Page page(store, ObjectClass::LFunction, label);
  const std::string kind = f.at("kind").text();
  const auto degree = f.at("degree").integer();
  const std::string conductor = f.at("conductor").text();
  const auto parity = f.at("parity").integer();
  if (label == catalog::kRiemannLabel) {
    page.title("Riemann zeta function");
  } else {
    page.title("L-function " + label);
  }
  page.prop("Degree", std::to_string(degree), "lfunction.degree");
  page.prop("Conductor", conductor, "lfunction.conductor");
  page.prop("Weight", std::to_string(f.at("weight").integer()), "lfunction.weight");
  page.prop("Normalization", f.at("normalization").text(), "lfunction.normalization");
  page.prop("Critical line", "Re(s) = " + store::display(f.at("critical_line")), "lfunction.criticalline");
  page.prop("Self-dual", f.at("self_dual").boolean() ? "yes" : "no", "lfunction.selfdual");
  if (auto it = f.find("root_number"); it != f.end()) {
    const auto& eps = it->second.list();
    page.prop("Root number", complex_text(eps[0].number(), eps[1].number()), "lfunction.rootnumber");
  } else {
    page.prop("Root number", "not computed", "lfunction.rootnumber");
  }
  page.doc()["degree"] = degree;
  page.doc()["conductor"] = conductor;
  page.doc()["data"] = record_data(*rec);

  json fe{{"N", conductor}};
  if (kind == "riemann-zeta") {
    fe["completed"] = "xi(s) = pi^(-s/2) * Gamma(s/2) * zeta(s)";
    fe["equation"] = "xi(s) = xi(1 - s)";
  } else if (kind == "dirichlet") {
    fe["completed"] = "Lambda(s) = (N/pi)^((s+a)/2) * Gamma((s+a)/2) * L(s)";
    fe["equation"] = "Lambda(s) = epsilon * conj(Lambda(1 - conj(s)))";
    fe["a"] = parity;
  } else if (kind == "dedekind-quadratic") {
    fe["completed"] = parity == 0 ? "Lambda(s) = N^(s/2) * Gamma_R(s)^2 * zeta_K(s)"
                                  : "Lambda(s) = N^(s/2) * Gamma_R(s) * Gamma_R(s+1) * zeta_K(s)";
    fe["equation"] = "Lambda(s) = Lambda(1 - s)";
    fe["gamma_R"] = "Gamma_R(s) = pi^(-s/2) * Gamma(s/2)";
  } else {
    fe["completed"] = "Lambda(s) = N^(s/2) * (2*pi)^(-s) * Gamma(s) * L(s)";
    fe["equation"] = "Lambda(s) = epsilon * Lambda(2 - s)";
  }
  page.doc()["functional_equation"] = fe;
  page.use_knowl("lfunction.functionalequation");

  auto coeffs = json::array();
  const auto& a = f.at("coefficients").list();
  for (std::size_t i = 0; i < a.size() && i < 30; ++i) coeffs.push_back(store::display(a[i]));
  page.doc()["coefficients"] = coeffs;

  // Euler factors at small primes, recomputed
  auto factors = json::array();
  if (auto L = degree_one(label)) {
    for (auto p : small_primes()) {
      std::string text = "1 - T";
      if (L->character()) {
        const auto v = (*L->character())(static_cast<std::int64_t>(p));
        const auto s = lfunc::CyclotomicInteger::from_char_value(v, L->character()->order()).to_string();
        text = v.is_zero() ? "1" : (s == "1" ? "1 - T" : (s == "-1" ? "1 + T" : "1 - " + s + "*T"));
      }
      factors.push_back({{"p", p}, {"factor", text}});
    }
  } else if (kind == "dedekind-quadratic") {
    const auto D = f.at("discriminant").integer();
    for (auto p : small_primes()) {
      const long k = arith::kronecker(D, static_cast<std::int64_t>(p));
      factors.push_back({{"p", p}, {"factor", euler_text({1, -1 - k, k})}});
    }
  } else if (auto it = f.find("curve"); it != f.end()) {
    const auto model = catalog::load_curve(store, it->second.text()).model();
    for (auto p : small_primes()) {
      const auto d = arith::ec_ap(model, p);
      std::vector<long> c{1, -d.ap};
      if (d.kind == arith::ReductionKind::Good) c.push_back(static_cast<long>(p));
      if (d.kind == arith::ReductionKind::Additive) c = {1};
      factors.push_back({{"p", p}, {"factor", euler_text(c)}});
    }
  }
  page.doc()["euler_factors"] = factors;
  page.use_knowl("lfunction.eulerproduct");

  const auto L = degree_one(label);
  const bool plot = L && L->self_dual();
  const double t_max = plot ? number_param(req, "t_max", options.plot_t_max, 0.0, 100.0) : 0.0;
  store::Query zq{{store::Filter::equals("lfunction", label)}, "t", 0, {}};
  if (plot) zq.filters.push_back(store::Filter::range("t", store::Value(0.0), store::Value(t_max)));
  const auto zeros = store.query(names::kZeros, zq);
  auto zl = json::array();
  for (const auto& z : zeros.rows) {
    zl.push_back({{"t", z.fields.at("t").number()},
                  {"ordinate", z.fields.at("ordinate").text()},
                  {"precision", std::pow(10.0, static_cast<double>(z.fields.at("precision_exponent").integer()))}});
    if (!plot && zl.size() >= 10) break;
  }
  page.doc()["zeros"] = zl;
  if (!zl.empty()) page.use_knowl("lfunction.zeros");
  if (plot) {
    const auto points =
        static_cast<unsigned>(number_param(req, "points", options.plot_points, 1.0, 2000.0));
    const auto samples = lfunc::critical_line_samples(*L, t_max, points);
    auto pts = json::array();
    for (const auto& s : samples) pts.push_back({s.t, s.z});
    page.doc()["plot"] = {{"function", "Z(t)"},
                          {"t_max", t_max},
                          {"points", samples.size()},
                          {"sign_changes", lfunc::sign_changes(samples)},
                          {"samples", pts}};
    page.use_knowl("lfunction.zfunction");
  }
  return page.finish();
}

// --- search ----------------------------------------------------------------------------------

enum class FieldType { Int, BigText, Text, Bool, Float, IntList, BigTextList };

struct SearchField {
  const char* name;
  FieldType type;
};

struct SearchCollection {
  const char* name;
  ObjectClass cls;
  std::vector<SearchField> fields;
  std::vector<const char*> summary;
};

const std::vector<SearchCollection>& searchable() {
  static const std::vector<SearchCollection> kAll = {
      {names::kCurves,
       ObjectClass::EllipticCurve,
       {{"conductor", FieldType::BigText}, {"rank", FieldType::Int}, {"torsion_order", FieldType::Int},
        {"torsion", FieldType::IntList}},
       {"ainvs", "conductor", "rank", "torsion"}},
      {names::kNumberFields,
       ObjectClass::NumberField,
       {{"degree", FieldType::Int}, {"disc_abs", FieldType::BigText}, {"disc_sign", FieldType::Int},
        {"class_number", FieldType::Int}, {"class_group", FieldType::Text}, {"galois_n", FieldType::Int},
        {"galois_t", FieldType::Int}, {"signature", FieldType::Text}, {"ramps", FieldType::BigTextList}},
       {"coeffs", "degree", "disc_sign", "disc_abs", "class_number", "signature"}},
      {names::kCharacters,
       ObjectClass::Character,
       {{"modulus", FieldType::Int}, {"conductor", FieldType::Int}, {"parity", FieldType::Int},
        {"order", FieldType::Int}, {"primitive", FieldType::Bool}},
       {"modulus", "conductor", "parity", "order"}},
      {names::kLFunctions,
       ObjectClass::LFunction,
       {{"kind", FieldType::Text}, {"degree", FieldType::Int}, {"conductor", FieldType::BigText},
        {"weight", FieldType::Int}, {"self_dual", FieldType::Bool}, {"origin", FieldType::Text}},
       {"kind", "degree", "conductor", "origin"}},
      {names::kZeros,
       ObjectClass::LFunction,
       {{"lfunction", FieldType::Text}, {"t", FieldType::Float}},
       {"lfunction", "ordinate"}},
  };
  return kAll;
}

json field_names(const SearchCollection& c) {
  auto arr = json::array();
  for (const auto& f : c.fields) arr.push_back(f.name);
  return arr;
}

store::Value typed(const json& v, FieldType type, const std::string& field) {
  auto bad = [&] { return ParseError("value " + v.dump() + " does not suit field '" + field + "'"); };
  switch (type) {
    case FieldType::Int:
    case FieldType::IntList:
      if (!v.is_number_integer()) throw bad();
      return store::Value(v.get<std::int64_t>());
    case FieldType::BigText:
    case FieldType::BigTextList:
      if (v.is_number_integer()) return store::Value(std::to_string(v.get<std::int64_t>()));
      if (v.is_string() && is_canonical_decimal(v.get<std::string>())) return store::Value(v.get<std::string>());
      throw bad();
    case FieldType::Text:
      if (!v.is_string()) throw bad();
      return store::Value(v.get<std::string>());
    case FieldType::Bool:
      if (!v.is_boolean()) throw bad();
      return store::Value(v.get<bool>());
    case FieldType::Float:
      if (!v.is_number()) throw bad();
      return store::Value(v.get<double>());
  }
  throw bad();
}

Response search(const store::Store& store, const std::string& collection, const std::string& body) {
  const SearchCollection* sc = nullptr;
  for (const auto& c : searchable()) {
    if (collection == c.name) sc = &c;
  }
  if (!sc || !store.has_collection(collection)) {
    auto valid = json::array();
    for (const auto& c : searchable()) valid.push_back(c.name);
    return error_response(404, "not_found", "no searchable collection '" + collection + "'", valid);
  }
  json req = body.empty() ? json::object() : json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object()) throw ParseError("search body must be a JSON object");
  for (auto it = req.begin(); it != req.end(); ++it) {
    static const std::set<std::string> kKeys{"filters", "sort", "page", "page_size"};
    if (!kKeys.count(it.key())) throw ParseError("unknown search key '" + it.key() + "'");
  }
  auto find_field = [&](const std::string& name) -> const SearchField& {
    for (const auto& f : sc->fields) {
      if (name == f.name) return f;
    }
    throw BadField("unknown field '" + name + "' for " + collection, field_names(*sc));
  };

  store::Query q;
  const json filters = req.value("filters", json::object());
  if (!filters.is_object()) throw ParseError("filters must be an object");
  for (auto it = filters.begin(); it != filters.end(); ++it) {
    const auto& field = find_field(it.key());
    const bool is_list = field.type == FieldType::IntList || field.type == FieldType::BigTextList;
    const json& spec = it.value();
    if (!spec.is_object()) {
      q.filters.push_back(is_list ? store::Filter::contains(field.name, typed(spec, field.type, field.name))
                                  : store::Filter::equals(field.name, typed(spec, field.type, field.name)));
      continue;
    }
    std::optional<store::Value> lo, hi;
    for (auto op = spec.begin(); op != spec.end(); ++op) {
      const auto v = typed(op.value(), field.type, field.name);
      if (op.key() == "eq" && !is_list) {
        q.filters.push_back(store::Filter::equals(field.name, v));
      } else if (op.key() == "contains" && is_list) {
        q.filters.push_back(store::Filter::contains(field.name, v));
      } else if (op.key() == "min" && !is_list) {
        lo = v;
      } else if (op.key() == "max" && !is_list) {
        hi = v;
      } else {
        throw ParseError("operator '" + op.key() + "' does not apply to field '" + it.key() + "'");
      }
    }
    if (lo || hi) q.filters.push_back(store::Filter::range(field.name, lo, hi));
  }
  if (req.contains("sort")) {
    if (!req["sort"].is_string()) throw ParseError("sort must be a field name");
    const std::string s = req["sort"].get<std::string>();
    if (s != "label") q.sort_field = find_field(s).name;
  }
  const auto page = req.value("page", json(1));
  const auto page_size = req.value("page_size", json(20));
  if (!page.is_number_integer() || page.get<std::int64_t>() < 1) throw ParseError("page must be a positive integer");
  if (!page_size.is_number_integer() || page_size.get<std::int64_t>() < 1 || page_size.get<std::int64_t>() > 1000) {
    throw ParseError("page_size must be an integer in 1..1000");
  }
  q.limit = static_cast<std::size_t>(page_size.get<std::int64_t>());
  q.offset = static_cast<std::size_t>(page.get<std::int64_t>() - 1) * *q.limit;

  const auto result = store.query(collection, q);
  auto rows = json::array();
  for (const auto& r : result.rows) {
    json summary = json::object();
    for (const char* k : sc->summary) {
      if (auto v = r.field(k)) summary[k] = store::to_json(*v);
    }
    const std::string url = collection == names::kZeros
                                ? catalog::object_url(ObjectClass::LFunction, r.fields.at("lfunction").text())
                                : catalog::object_url(sc->cls, r.label);
    rows.push_back({{"label", r.label}, {"url", url}, {"summary", summary}});
  }
  return ok({{"collection", collection},
             {"total", result.total},
             {"page", page},
             {"page_size", page_size},
             {"rows", rows}});
}

// --- zeros, downloads, knowls ----------------------------------------------------------------

Response zeta_zeros(const store::Store& store, const Request& req) {
  const double from = number_param(req, "from", 0.0, 0.0, 1e300);
  const double count = number_param(req, "count", 10.0, 1.0, 1000.0);
  if (count != std::floor(count)) throw DomainError("count must be an integer");
  store::Query q{{store::Filter::equals("lfunction", catalog::kRiemannLabel),
                  store::Filter::range("t", store::Value(from), std::nullopt)},
                 "t",
                 0,
                 static_cast<std::size_t>(count)};
  auto zl = json::array();
  if (store.has_collection(names::kZeros)) {
    for (const auto& z : store.query(names::kZeros, q).rows) {
      zl.push_back(
          {{"t", z.fields.at("t").number()},
           {"ordinate", z.fields.at("ordinate").text()},
           {"precision", std::pow(10.0, static_cast<double>(z.fields.at("precision_exponent").integer()))}});
    }
  }
  return ok({{"lfunction", catalog::kRiemannLabel}, {"from", from}, {"count", zl.size()}, {"zeros", zl}});
}

std::string store_label(ObjectClass c, const std::string& raw) {
  switch (c) {
    case ObjectClass::EllipticCurve: return labels::format_ec_label(labels::parse_ec_label(raw));
    case ObjectClass::NumberField: return labels::format_nf_label(labels::parse_nf_label(raw));
    case ObjectClass::Character: {
      std::string s = raw;
      if (auto slash = s.find('/'); slash != std::string::npos) s[slash] = '.';
      return labels::format_character_label(labels::parse_character_label(s));
    }
    case ObjectClass::LFunction: check_lfunction_label(raw); return raw;
  }
  return raw;
}

json knowl_node(const knowl::Node& n) {
  json j{{"kind", knowl::to_string(n.kind)}, {"text", n.text}};
  if (!n.id.empty()) j["id"] = n.id;
  if (!n.title.empty()) j["title"] = n.title;
  if (n.kind == knowl::Node::Kind::Stub) {
    auto kids = json::array();
    for (const auto& c : n.children) kids.push_back(knowl_node(c));
    j["children"] = kids;
  }
  return j;
}

Response knowl_response(const store::Store& store, const std::string& id, const Request& req, unsigned depth) {
  depth = static_cast<unsigned>(number_param(req, "depth", depth, 0, 8));
  if (!store.has_collection(names::kKnowls)) throw NotFoundError("no knowl '" + id + "'");
  const auto r = knowl::render_knowl(store, id, depth);
  auto nodes = json::array();
  for (const auto& n : r.nodes) nodes.push_back(knowl_node(n));
  return ok({{"id", r.knowl.id},
             {"title", r.knowl.title},
             {"version", r.knowl.version},
             {"author", r.knowl.author},
             {"timestamp", r.knowl.timestamp},
             {"content", r.knowl.content},
             {"url", "/knowledge/show/" + r.knowl.id},
             {"nodes", nodes}});
}

}  // namespace

Api::Api(std::shared_ptr<const store::Store> store, ApiOptions options)
    : store_(std::move(store)), options_(options) {}

json Api::homepage(const std::string& path, const Request& req) const {
  const auto p = segments(path);
  if (p.empty()) throw NotFoundError("empty object path");
  if (p[0] == "L" && p.size() >= 2) return lfunction_page(*store_, join(p, 1), req, options_);
  if (p[0] == "EllipticCurve" && p.size() == 5 && p[1] == "Q") {
    const auto l = labels::parse_ec_label(p[2] + "/" + p[3] + "/" + p[4]);
    return curve_page(*store_, labels::format_ec_label(l));
  }
  if (p[0] == "NumberField" && p.size() == 2) return field_page(*store_, p[1]);
  if (p[0] == "Character" && p.size() == 4 && p[1] == "Dirichlet") {
    return character_page(*store_, labels::format_character_label(labels::parse_character_label(p[2] + "." + p[3])));
  }
  throw NotFoundError("no route for /" + path);
}

Response Api::handle(const Request& req) const {
  try {
    const auto p = segments(req.path);
    const bool get = req.method == "GET" || req.method == "HEAD";
    if (p.size() == 1 && p[0] == "health" && get) return ok({{"status", "ok"}});
    if (p.size() == 2 && p[0] == "knowledge" && p[1] == "show" && get) {
      return knowl_response(*store_, "", req, options_.knowl_depth);
    }
    if (p.size() == 3 && p[0] == "knowledge" && p[1] == "show" && get) {
      return knowl_response(*store_, p[2], req, options_.knowl_depth);
    }
    if (p.empty() || p[0] != "api") return error_response(404, "not_found", "no route for " + req.path);
    if (p.size() == 1 && get) {
      json counts = json::object();
      for (const auto& name : store_->collection_names()) counts[name] = store_->size(name);
      return ok({{"name", "lfdb"}, {"collections", counts}});
    }
    const std::string& head = p[1];
    if (head == "search") {
      if (req.method != "POST") return error_response(405, "method_not_allowed", "search takes POST");
      if (p.size() != 3) return error_response(404, "not_found", "search needs a collection");
      return search(*store_, p[2], req.body);
    }
    if (!get) return error_response(405, "method_not_allowed", req.method + " not supported on " + req.path);
    if (head == "zeros") {
      if (p.size() == 3 && p[2] == "zeta") return zeta_zeros(*store_, req);
      return error_response(404, "not_found", "zero tables exist for zeta only");
    }
    if (head == "download" && p.size() >= 4) {
      const auto cls = catalog::class_from_string(p[2]);
      const auto label = store_label(cls, join(p, 3));
      if (!catalog::object_exists(*store_, cls, label)) throw NotFoundError("no object " + label);
      return {200, "text/plain; charset=utf-8", catalog::reconstruction_snippet(*store_, label, cls)};
    }
    if (head == "knowl" && p.size() == 3) return knowl_response(*store_, p[2], req, options_.knowl_depth);
    if (head == "L" || head == "EllipticCurve" || head == "NumberField" || head == "Character") {
      return ok(homepage(join(p, 1), req));
    }
    return error_response(404, "not_found", "no route for " + req.path);
  } catch (const BadField& e) {
    return error_response(400, "unknown_field", e.what(), e.valid);
  } catch (const NotFoundError& e) {
    return error_response(404, "not_found", e.what());
  } catch (const ParseError& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const DomainError& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const UnsupportedError& e) {
    return error_response(400, "unsupported", e.what());
  } catch (const ValidationError& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

}  // namespace lfdb::webapi
