#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lfdb/store/collection.hpp"

namespace lfdb::store {

/// Puts and erases applied together under one collection's write lock.
class WriteBatch {
 public:
  struct Erase {
    std::string label;
  };
  using Op = std::variant<Record, Erase>;

  void put(Record r) { ops_.emplace_back(std::move(r)); }
  void erase(std::string label) { ops_.emplace_back(Erase{std::move(label)}); }
  bool empty() const { return ops_.empty(); }
  const std::vector<Op>& ops() const { return ops_; }

 private:
  std::vector<Op> ops_;
};

/// Named collections, optionally persisted to a directory:
///   collections.json      names and index specs
///   <name>.txt|.jsonl     compacted text dump
///   <name>.wal            batches appended since the last compaction, one JSON line each
///   generation            counter bumped on every committed write
/// Readers of one collection see a consistent snapshot; writes to one collection are serialized.
/// Writes to different collections are independent (no cross-collection transactions).
class Store {
 public:
  static std::unique_ptr<Store> in_memory();
  /// create = false requires an existing store (collections.json present).
  static std::unique_ptr<Store> open(const std::filesystem::path& dir, bool create);

  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;
  ~Store();

  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  /// Idempotent when the specs match; ValidationError when they differ.
  void create_collection(const std::string& name, std::vector<IndexSpec> indexes = {});
  bool has_collection(const std::string& name) const;
  std::vector<std::string> collection_names() const;
  std::vector<IndexSpec> indexes(const std::string& name) const;

  void put(const std::string& name, Record record);
  Record get(const std::string& name, const std::string& label) const;
  std::optional<Record> find(const std::string& name, const std::string& label) const;
  void erase(const std::string& name, const std::string& label);
  std::size_t size(const std::string& name) const;
  QueryResult query(const std::string& name, const Query& q) const;

  /// fn sees the current collection and fills a batch; the batch commits atomically.
  void update(const std::string& name, const std::function<void(const Collection&, WriteBatch&)>& fn);
  void apply(const std::string& name, const WriteBatch& batch);

  /// Whole text is parsed and checked before anything changes. Duplicate labels within the
  /// text reject it; labels already stored are replaced. Errors name the 1-based line.
  std::size_t ingest_text(const std::string& name, std::string_view text);
  /// Label-sorted, one record per line, trailing newline after each record.
  std::string dump_text(const std::string& name) const;

  /// Rewrites every dump file from memory and truncates the logs.
  void compact();

  std::uint64_t generation() const;
  static std::uint64_t read_generation(const std::filesystem::path& dir);

 private:
  struct Slot {
    mutable std::shared_mutex mutex;
    Collection collection;
    explicit Slot(Collection c) : collection(std::move(c)) {}
  };

  Store() = default;
  Slot& slot(const std::string& name) const;
  void load();
  void save_catalog() const;
  void commit(const std::string& name, Slot& s, const WriteBatch& batch);
  void bump_generation();

  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex catalog_mutex_;
  std::map<std::string, std::unique_ptr<Slot>> slots_;
  std::mutex generation_mutex_;
  std::uint64_t generation_ = 0;
};

/// Exclusive advisory lock on <dir>/.writer.lock (flock); one writer process per directory.
class DirectoryLock {
 public:
  /// Throws BusyError if another holder exists.
  explicit DirectoryLock(const std::filesystem::path& dir);
  ~DirectoryLock();
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

  static bool is_held(const std::filesystem::path& dir);

 private:
  int fd_ = -1;
};

}  // namespace lfdb::store
