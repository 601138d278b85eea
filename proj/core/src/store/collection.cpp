#include "lfdb/store/collection.hpp"

#include <algorithm>

#include "lfdb/arith/integer.hpp"
#include "lfdb/error.hpp"
#include "lfdb/store/sortable.hpp"

namespace lfdb::store {

const Value* Record::field(const std::string& name) const {
  auto it = fields.find(name);
  return it == fields.end() ? nullptr : &it->second;
}

Filter Filter::equals(std::string field, Value v) {
  Filter f;
  f.op = Op::Equals;
  f.field = std::move(field);
  f.value = std::move(v);
  return f;
}

Filter Filter::range(std::string field, std::optional<Value> lo, std::optional<Value> hi) {
  Filter f;
  f.op = Op::Range;
  f.field = std::move(field);
  f.lo = std::move(lo);
  f.hi = std::move(hi);
  return f;
}

Filter Filter::contains(std::string field, Value v) {
  Filter f;
  f.op = Op::Contains;
  f.field = std::move(field);
  f.value = std::move(v);
  return f;
}

void validate_label(const std::string& label) {
  if (label.empty()) throw ValidationError("empty label");
  if (label.front() == ' ' || label.back() == ' ') throw ValidationError("label has surrounding spaces: '" + label + "'");
  for (unsigned char c : label) {
    if (c < 0x20 || c == 0x7f || c == '|') throw ValidationError("label contains a forbidden character: '" + label + "'");
  }
}

namespace {

// Big-integer index key for a value, if it has one.
std::optional<Value> bigint_key(const Value& v) {
  if (v.is_int()) return Value(encode_sortable_int(std::to_string(v.integer())));
  if (v.is_text() && is_canonical_decimal(v.text()) && v.text().size() <= kMaxSortableDigits + 1) {
    return Value(encode_sortable_int(v.text()));
  }
  return std::nullopt;
}

bool same_family(const Value& a, const Value& b) {
  return (a.is_number() && b.is_number()) || (a.is_text() && b.is_text()) || (a.is_bool() && b.is_bool());
}

bool in_plain_range(const Value& v, const Filter& f) {
  if (!v.is_scalar()) return false;
  if (f.lo && (!same_family(v, *f.lo) || compare(v, *f.lo) < 0)) return false;
  if (f.hi && (!same_family(v, *f.hi) || compare(v, *f.hi) > 0)) return false;
  return true;
}

bool looks_decimal(const Value& v) { return v.is_text() && is_canonical_decimal(v.text()); }

}  // namespace

Collection::Collection(std::string name, std::vector<IndexSpec> indexes)
    : name_(std::move(name)), specs_(std::move(indexes)) {
  for (const auto& s : specs_) {
    if (std::count_if(specs_.begin(), specs_.end(), [&](const IndexSpec& o) { return o.field == s.field; }) > 1) {
      throw ValidationError("duplicate index on field '" + s.field + "'");
    }
    index_data_.push_back({s, {}});
  }
}

const IndexSpec* Collection::index_for(const std::string& field) const {
  for (const auto& s : specs_) {
    if (s.field == field) return &s;
  }
  return nullptr;
}

const Record* Collection::find(const std::string& label) const {
  auto it = records_.find(label);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<Value> Collection::index_keys(const Index& index, const Record& r) const {
  std::vector<Value> keys;
  const Value* v = r.field(index.spec.field);
  if (!v) return keys;
  auto add = [&](const Value& x) {
    if (index.spec.ordering == IndexOrdering::Plain) {
      if (x.is_scalar()) keys.push_back(x);
    } else if (auto k = bigint_key(x)) {
      keys.push_back(*k);
    }
  };
  if (v->is_list()) {
    for (const auto& x : v->list()) add(x);
  } else {
    add(*v);
  }
  return keys;
}

void Collection::index_insert(const Record& r) {
  for (auto& idx : index_data_) {
    for (auto& k : index_keys(idx, r)) idx.entries[k].insert(r.label);
  }
}

void Collection::index_remove(const Record& r) {
  for (auto& idx : index_data_) {
    for (auto& k : index_keys(idx, r)) {
      auto it = idx.entries.find(k);
      if (it == idx.entries.end()) continue;
      it->second.erase(r.label);
      if (it->second.empty()) idx.entries.erase(it);
    }
  }
}

void Collection::put(Record record) {
  validate_label(record.label);
  if (record.fields.count("label")) throw ValidationError("'label' is reserved and cannot be a field name");
  erase(record.label);
  index_insert(record);
  const std::string label = record.label;
  records_.emplace(label, std::move(record));
}

bool Collection::erase(const std::string& label) {
  auto it = records_.find(label);
  if (it == records_.end()) return false;
  index_remove(it->second);
  records_.erase(it);
  return true;
}

void Collection::clear() {
  records_.clear();
  for (auto& idx : index_data_) idx.entries.clear();
}

void Collection::check_filter(const Filter& f) const {
  if (f.op != Filter::Op::Range) return;
  if (!f.lo && !f.hi) return;
  const IndexSpec* spec = index_for(f.field);
  const bool big = spec && spec->ordering == IndexOrdering::SortableBigInt;
  for (const auto* bound : {f.lo ? &*f.lo : nullptr, f.hi ? &*f.hi : nullptr}) {
    if (!bound) continue;
    if (!bound->is_scalar()) throw UnsupportedError("range bounds must be scalars");
    if (big && !bigint_key(*bound)) {
      throw UnsupportedError("range on big-integer field '" + f.field + "' needs integer bounds");
    }
    if (!big && looks_decimal(*bound)) {
      throw UnsupportedError("unsupported filter: range over decimal text on field '" + f.field +
                             "' without a sortable big-integer index");
    }
  }
}

bool Collection::matches(const Record& r, const Filter& f) const {
  const Value* v = r.field(f.field);
  if (!v) return false;
  const IndexSpec* spec = index_for(f.field);
  const bool big = spec && spec->ordering == IndexOrdering::SortableBigInt;
  // Big-integer fields compare numerically, so 23 and "23" match.
  auto same = [&](const Value& x) {
    if (big) {
      auto kx = bigint_key(x), kv = bigint_key(f.value);
      if (kx && kv) return *kx == *kv;
    }
    return loosely_equal(x, f.value);
  };
  switch (f.op) {
    case Filter::Op::Equals: return same(*v);
    case Filter::Op::Contains:
      if (!v->is_list()) return false;
      return std::any_of(v->list().begin(), v->list().end(), same);
    case Filter::Op::Range: {
      if (big) {
        auto key = bigint_key(*v);
        if (!key) return false;
        if (f.lo && compare(*key, *bigint_key(*f.lo)) < 0) return false;
        if (f.hi && compare(*key, *bigint_key(*f.hi)) > 0) return false;
        return true;
      }
      return in_plain_range(*v, f);
    }
  }
  return false;
}

std::optional<std::set<std::string>> Collection::candidates(const Filter& f) const {
  const Index* idx = nullptr;
  for (const auto& i : index_data_) {
    if (i.spec.field == f.field) idx = &i;
  }
  if (!idx) return std::nullopt;
  std::set<std::string> out;
  auto collect = [&](auto first, auto last) {
    for (auto it = first; it != last; ++it) out.insert(it->second.begin(), it->second.end());
  };
  const bool big = idx->spec.ordering == IndexOrdering::SortableBigInt;
  switch (f.op) {
    case Filter::Op::Equals:
    case Filter::Op::Contains: {
      if (!f.value.is_scalar()) return std::nullopt;
      Value key = f.value;
      if (big) {
        auto k = bigint_key(f.value);
        if (!k) return std::nullopt;
        key = *k;
      }
      auto [a, b] = idx->entries.equal_range(key);
      collect(a, b);
      return out;
    }
    case Filter::Op::Range: {
      std::optional<Value> klo, khi;
      if (f.lo) klo = big ? *bigint_key(*f.lo) : *f.lo;
      if (f.hi) khi = big ? *bigint_key(*f.hi) : *f.hi;
      if (klo && khi && compare(*klo, *khi) > 0) return out;
      collect(klo ? idx->entries.lower_bound(*klo) : idx->entries.begin(),
              khi ? idx->entries.upper_bound(*khi) : idx->entries.end());
      return out;
    }
  }
  return std::nullopt;
}

QueryResult Collection::query(const Query& q) const {
  for (const auto& f : q.filters) check_filter(f);

  // Pick the smallest index-backed candidate set; verify every filter on each candidate.
  std::optional<std::set<std::string>> best;
  for (const auto& f : q.filters) {
    auto c = candidates(f);
    if (c && (!best || c->size() < best->size())) best = std::move(c);
  }
  std::vector<const Record*> hits;
  auto consider = [&](const Record& r) {
    for (const auto& f : q.filters) {
      if (!matches(r, f)) return;
    }
    hits.push_back(&r);
  };
  if (best) {
    for (const auto& label : *best) consider(records_.at(label));
  } else {
    for (const auto& [_, r] : records_) consider(r);
  }

  if (q.sort_field) {
    const IndexSpec* spec = index_for(*q.sort_field);
    const bool big = spec && spec->ordering == IndexOrdering::SortableBigInt;
    auto key = [&](const Record* r) -> std::optional<Value> {
      const Value* v = r->field(*q.sort_field);
      if (!v) return std::nullopt;
      if (big) {
        if (auto k = bigint_key(*v)) return k;
      }
      return *v;
    };
    std::stable_sort(hits.begin(), hits.end(), [&](const Record* a, const Record* b) {
      const auto ka = key(a), kb = key(b);
      if (ka && kb) {
        if (int c = compare(*ka, *kb)) return c < 0;
      } else if (ka || kb) {
        return ka.has_value();
      }
      return a->label < b->label;
    });
  }

  QueryResult result;
  result.total = hits.size();
  const std::size_t begin = std::min(q.offset, hits.size());
  std::size_t end = hits.size();
  if (q.limit) end = std::min(end, begin + *q.limit);
  for (std::size_t i = begin; i < end; ++i) result.rows.push_back(*hits[i]);
  return result;
}

}  // namespace lfdb::store
