#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace lfdb::store {

class Value;
using List = std::vector<Value>;
using Map = std::map<std::string, Value>;

/// Field value: text, 64-bit integer, float, boolean, list or nested map.
class Value {
 public:
  enum class Kind { Bool, Int, Float, Text, List, Map };

  Value() : data_(std::string()) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(const char* s) : data_(std::string(s)) {}
  Value(std::int64_t i) : data_(i) {}
  Value(int i) : data_(static_cast<std::int64_t>(i)) {}
  Value(unsigned i) : data_(static_cast<std::int64_t>(i)) {}
  Value(double d) : data_(d) {}
  Value(bool b) : data_(b) {}
  Value(List l) : data_(std::move(l)) {}
  Value(Map m) : data_(std::move(m)) {}

  Kind kind() const;
  bool is_text() const { return std::holds_alternative<std::string>(data_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_float() const { return std::holds_alternative<double>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_list() const { return std::holds_alternative<List>(data_); }
  bool is_map() const { return std::holds_alternative<Map>(data_); }
  bool is_number() const { return is_int() || is_float(); }
  bool is_scalar() const { return !is_list() && !is_map(); }

  const std::string& text() const;
  std::int64_t integer() const;
  double number() const;  // int or float
  bool boolean() const;
  const List& list() const;
  const Map& map() const;

  /// Exact structural equality (an integer never equals a float).
  bool operator==(const Value& other) const { return data_ == other.data_; }

 private:
  std::variant<std::string, std::int64_t, double, bool, List, Map> data_;
};

/// Total order: bool < numbers < text < list < map. Integers and floats compare by value.
int compare(const Value& a, const Value& b);

/// compare() == 0; unlike operator==, 3 and 3.0 match.
bool loosely_equal(const Value& a, const Value& b);

struct ValueLess {
  bool operator()(const Value& a, const Value& b) const { return compare(a, b) < 0; }
};

nlohmann::json to_json(const Value& v);
/// Rejects null. Integral JSON numbers become Int, others Float.
Value from_json(const nlohmann::json& j);

nlohmann::json to_json(const Map& fields);
Map map_from_json(const nlohmann::json& j);

/// Display form used by homepages: text verbatim, lists comma-joined.
std::string display(const Value& v);

}  // namespace lfdb::store
