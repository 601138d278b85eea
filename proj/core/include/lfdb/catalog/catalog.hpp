#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfdb/arith/elliptic.hpp"
#include "lfdb/arith/integer.hpp"
#include "lfdb/labels/labels.hpp"
#include "lfdb/lfunc/lfunction.hpp"
#include "lfdb/store/store.hpp"

namespace lfdb::catalog {

namespace names {
inline constexpr const char* kNumberFields = "number_fields";
inline constexpr const char* kCurves = "elliptic_curves_q";
inline constexpr const char* kCharacters = "characters";
inline constexpr const char* kZeros = "zeros";
inline constexpr const char* kLFunctions = "lfunctions";
inline constexpr const char* kKnowls = "knowls";
inline constexpr const char* kNotes = "notes";
}  // namespace names

/// Creates every standard collection with its indexes (idempotent).
void ensure_collections(store::Store& store);

enum class ObjectClass { EllipticCurve, NumberField, Character, LFunction };

std::string to_string(ObjectClass c);
/// "EllipticCurve", "NumberField", "Character", "L" (also accepts "LFunction").
ObjectClass class_from_string(const std::string& name);

/// Object path without the leading slash: "EllipticCurve/Q/5077/a/1", "NumberField/3.1.23.1",
/// "Character/Dirichlet/4/2", "L/Riemann". Store labels are converted as needed.
std::string object_path(ObjectClass c, const std::string& label);
std::string object_url(ObjectClass c, const std::string& label);
/// Store collection holding objects of this class.
std::string collection_for(ObjectClass c);

/// L-function labels are their URL path below /L/.
inline const char* kRiemannLabel = "Riemann";
std::string character_lfunction_label(std::uint64_t modulus, std::uint64_t index);
std::string curve_lfunction_label(const labels::ECLabelQ& label);
std::string field_lfunction_label(const std::string& nf_label);

struct NumberFieldRecord {
  std::string label;
  std::vector<Integer> coeffs;  // low degree first
  int degree = 0;
  int disc_sign = 1;
  Integer abs_disc;
  std::int64_t class_number = 1;
  std::string class_group;
  int galois_n = 0;
  int galois_t = 0;
  int r1 = 0;
  int r2 = 0;
  std::vector<Integer> ramified_primes;

  static NumberFieldRecord from_record(const store::Record& r);
  store::Record to_record() const;
  Integer discriminant() const { return disc_sign * abs_disc; }
};

/// "x^3 - x^2 + 1"
std::string polynomial_string(const std::vector<Integer>& coeffs_low_first, const std::string& var = "x");

enum class Provenance { Ingested, Computed };
std::string to_string(Provenance p);

struct EllipticCurveRecord {
  labels::ECLabelQ label;
  std::array<Integer, 5> ainvs;
  Integer conductor;
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;
  std::int64_t torsion_order = 1;
  /// a_1..a_X, empty until enriched.
  std::vector<std::int64_t> coefficients;
  std::map<std::uint64_t, std::int64_t> ap;
  std::optional<std::string> historical_note;
  std::map<std::string, Provenance> provenance;

  arith::EllipticCurveModel model() const { return arith::EllipticCurveModel(ainvs, conductor); }
};

EllipticCurveRecord load_curve(const store::Store& store, const std::string& compact_label);

struct BuildOptions {
  std::uint64_t max_modulus = 20;
  std::uint64_t coefficient_bound = 1000;
  double zeros_to = 30.0;
  unsigned threads = 1;
};

struct BuildStats {
  std::size_t characters = 0;
  std::size_t lfunctions = 0;
  std::size_t zeros = 0;
};

/// Replaces the character catalog: one record per primitive character of modulus <= M, one
/// L-function record each (1.1 maps to Riemann), and zeros up to zeros_to for the self-dual ones.
/// The result depends only on the options.
BuildStats build_character_catalog(store::Store& store, const BuildOptions& options);

/// Record for an L-function computed from first principles.
store::Record lfunction_record(const lfunc::LFunction& L, const std::string& origin_url, std::size_t stored_coeffs);

/// Zero records for L on (0, T].
std::vector<store::Record> zero_records(const lfunc::LFunction& L, double T, unsigned threads);

struct EnrichStats {
  std::size_t curves = 0;
  std::size_t fields = 0;
};

/// L-function records for every stored curve and every stored quadratic field.
EnrichStats enrich(store::Store& store, std::uint64_t coefficient_bound);

struct Relation {
  std::string relation;
  ObjectClass target_class;
  std::string target_label;
  std::string url;
  bool resolved = false;  // false: "not yet in database"
};

struct RelatedObjects {
  ObjectClass subject_class;
  std::string subject_label;
  std::vector<Relation> relations;
};

/// NotFoundError when the subject itself is absent.
RelatedObjects link_objects(const store::Store& store, const std::string& label, ObjectClass c);

bool object_exists(const store::Store& store, ObjectClass c, const std::string& label);

/// Text that rebuilds the object in a computer-algebra session; deterministic.
std::string reconstruction_snippet(const store::Store& store, const std::string& label, ObjectClass c);

}  // namespace lfdb::catalog
