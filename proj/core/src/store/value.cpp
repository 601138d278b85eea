#include "lfdb/store/value.hpp"

#include <cmath>
#include <sstream>

#include "lfdb/error.hpp"

namespace lfdb::store {

Value::Kind Value::kind() const {
  switch (data_.index()) {
    case 0: return Kind::Text;
    case 1: return Kind::Int;
    case 2: return Kind::Float;
    case 3: return Kind::Bool;
    case 4: return Kind::List;
    default: return Kind::Map;
  }
}

namespace {

[[noreturn]] void wrong_kind(const char* want) { throw ValidationError(std::string("value is not ") + want); }

int rank(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Bool: return 0;
    case Value::Kind::Int:
    case Value::Kind::Float: return 1;
    case Value::Kind::Text: return 2;
    case Value::Kind::List: return 3;
    case Value::Kind::Map: return 4;
  }
  return 5;
}

template <typename T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_numbers(const Value& a, const Value& b) {
  if (a.is_int() && b.is_int()) return three_way(a.integer(), b.integer());
  const long double x = a.is_int() ? static_cast<long double>(a.integer()) : a.number();
  const long double y = b.is_int() ? static_cast<long double>(b.integer()) : b.number();
  return three_way(x, y);
}

}  // namespace

const std::string& Value::text() const {
  if (auto p = std::get_if<std::string>(&data_)) return *p;
  wrong_kind("text");
}
std::int64_t Value::integer() const {
  if (auto p = std::get_if<std::int64_t>(&data_)) return *p;
  wrong_kind("an integer");
}
double Value::number() const {
  if (auto p = std::get_if<double>(&data_)) return *p;
  if (auto p = std::get_if<std::int64_t>(&data_)) return static_cast<double>(*p);
  wrong_kind("a number");
}
bool Value::boolean() const {
  if (auto p = std::get_if<bool>(&data_)) return *p;
  wrong_kind("a boolean");
}
const List& Value::list() const {
  if (auto p = std::get_if<List>(&data_)) return *p;
  wrong_kind("a list");
}
const Map& Value::map() const {
  if (auto p = std::get_if<Map>(&data_)) return *p;
  wrong_kind("a map");
}

int compare(const Value& a, const Value& b) {
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Value::Kind::Bool: return three_way(a.boolean(), b.boolean());
    case Value::Kind::Int:
    case Value::Kind::Float: return compare_numbers(a, b);
    case Value::Kind::Text: return three_way(a.text(), b.text());
    case Value::Kind::List: {
      const auto &x = a.list(), &y = b.list();
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (int c = compare(x[i], y[i])) return c;
      }
      return three_way(x.size(), y.size());
    }
    case Value::Kind::Map: {
      auto i = a.map().begin(), j = b.map().begin();
      for (; i != a.map().end() && j != b.map().end(); ++i, ++j) {
        if (int c = three_way(i->first, j->first)) return c;
        if (int c = compare(i->second, j->second)) return c;
      }
      return three_way(a.map().size(), b.map().size());
    }
  }
  return 0;
}

bool loosely_equal(const Value& a, const Value& b) { return compare(a, b) == 0; }

nlohmann::json to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Bool: return v.boolean();
    case Value::Kind::Int: return v.integer();
    case Value::Kind::Float: return v.number();
    case Value::Kind::Text: return v.text();
    case Value::Kind::List: {
      auto arr = nlohmann::json::array();
      for (const auto& x : v.list()) arr.push_back(to_json(x));
      return arr;
    }
    case Value::Kind::Map: return to_json(v.map());
  }
  return nullptr;
}

nlohmann::json to_json(const Map& fields) {
  auto obj = nlohmann::json::object();
  for (const auto& [k, x] : fields) obj[k] = to_json(x);
  return obj;
}

Value from_json(const nlohmann::json& j) {
  using T = nlohmann::json::value_t;
  switch (j.type()) {
    case T::boolean: return Value(j.get<bool>());
    case T::number_integer: return Value(j.get<std::int64_t>());
    case T::number_unsigned: {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) throw ValidationError("integer exceeds 64 bits; store it as text");
      return Value(static_cast<std::int64_t>(u));
    }
    case T::number_float: {
      const double d = j.get<double>();
      if (!std::isfinite(d)) throw ValidationError("non-finite number");
      return Value(d);
    }
    case T::string: return Value(j.get<std::string>());
    case T::array: {
      List out;
      for (const auto& x : j) out.push_back(from_json(x));
      return Value(std::move(out));
    }
    case T::object: return Value(map_from_json(j));
    default: throw ValidationError("unsupported JSON value: " + j.dump());
  }
}

Map map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  Map out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace(it.key(), from_json(it.value()));
  return out;
}

std::string display(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Bool: return v.boolean() ? "true" : "false";
    case Value::Kind::Int: return std::to_string(v.integer());
    case Value::Kind::Float: {
      std::ostringstream os;
      os.precision(12);
      os << v.number();
      return os.str();
    }
    case Value::Kind::Text: return v.text();
    case Value::Kind::List: {
      std::string out;
      for (std::size_t i = 0; i < v.list().size(); ++i) out += (i ? "," : "") + display(v.list()[i]);
      return out;
    }
    case Value::Kind::Map: return to_json(v).dump();
  }
  return {};
}

}  // namespace lfdb::store
