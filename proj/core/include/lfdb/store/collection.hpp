#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lfdb/store/value.hpp"

namespace lfdb::store {

struct Record {
  std::string label;
  Map fields;

  bool operator==(const Record&) const = default;
  const Value* field(const std::string& name) const;
};

enum class IndexOrdering { Plain, SortableBigInt };

struct IndexSpec {
  std::string field;
  IndexOrdering ordering = IndexOrdering::Plain;

  bool operator==(const IndexSpec&) const = default;
};

struct Filter {
  enum class Op { Equals, Range, Contains };
  Op op = Op::Equals;
  std::string field;
  Value value;                // Equals, Contains
  std::optional<Value> lo;    // Range, inclusive
  std::optional<Value> hi;

  static Filter equals(std::string field, Value v);
  static Filter range(std::string field, std::optional<Value> lo, std::optional<Value> hi);
  static Filter contains(std::string field, Value v);
};

struct Query {
  std::vector<Filter> filters;
  std::optional<std::string> sort_field;
  std::size_t offset = 0;
  std::optional<std::size_t> limit;
};

struct QueryResult {
  std::size_t total = 0;
  std::vector<Record> rows;
};

/// Labels: non-empty, no '|', no control characters, no surrounding spaces.
void validate_label(const std::string& label);

/// Records keyed by label with secondary indexes. Not synchronized; Store adds locking.
class Collection {
 public:
  explicit Collection(std::string name, std::vector<IndexSpec> indexes = {});

  const std::string& name() const { return name_; }
  const std::vector<IndexSpec>& indexes() const { return specs_; }
  std::size_t size() const { return records_.size(); }
  const std::map<std::string, Record>& records() const { return records_; }

  const Record* find(const std::string& label) const;
  void put(Record record);
  bool erase(const std::string& label);
  void clear();

  /// Filters conjoined; sorted by sort_field (records lacking it last) then label.
  QueryResult query(const Query& q) const;
  bool matches(const Record& r, const Filter& f) const;

  const IndexSpec* index_for(const std::string& field) const;

 private:
  struct Index {
    IndexSpec spec;
    std::map<Value, std::set<std::string>, ValueLess> entries;
  };

  std::vector<Value> index_keys(const Index& index, const Record& r) const;
  void index_insert(const Record& r);
  void index_remove(const Record& r);
  void check_filter(const Filter& f) const;
  std::optional<std::set<std::string>> candidates(const Filter& f) const;

  std::string name_;
  std::vector<IndexSpec> specs_;
  std::vector<Index> index_data_;
  std::map<std::string, Record> records_;
};

}  // namespace lfdb::store
