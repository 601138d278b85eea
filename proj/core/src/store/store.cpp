#include "lfdb/store/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lfdb/error.hpp"
#include "lfdb/store/codec.hpp"

namespace fs = std::filesystem;

namespace lfdb::store {

namespace {

constexpr const char* kCatalogFile = "collections.json";
constexpr const char* kGenerationFile = "generation";
constexpr const char* kLockFile = ".writer.lock";

std::string ordering_name(IndexOrdering o) { return o == IndexOrdering::Plain ? "plain" : "sortable-big-int"; }

IndexOrdering ordering_from(const std::string& s) {
  if (s == "plain") return IndexOrdering::Plain;
  if (s == "sortable-big-int") return IndexOrdering::SortableBigInt;
  throw ParseError("unknown index ordering '" + s + "'");
}

void check_collection_name(const std::string& name) {
  if (name.empty() || name.size() > 64) throw ValidationError("bad collection name '" + name + "'");
  for (char c : name) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) {
      throw ValidationError("collection names use [a-z0-9_]: '" + name + "'");
    }
  }
}

std::string dump_file(const std::string& name) { return name + (has_line_grammar(name) ? ".txt" : ".jsonl"); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write then rename so readers never observe a half-written file.
void write_atomically(const fs::path& p, const std::string& content) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, p);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

nlohmann::json batch_json(const WriteBatch& batch) {
  auto ops = nlohmann::json::array();
  for (const auto& op : batch.ops()) {
    if (auto* r = std::get_if<Record>(&op)) {
      ops.push_back({{"put", {{"label", r->label}, {"fields", to_json(r->fields)}}}});
    } else {
      ops.push_back({{"erase", std::get<WriteBatch::Erase>(op).label}});
    }
  }
  return {{"ops", ops}};
}

WriteBatch batch_from_json(const nlohmann::json& j) {
  WriteBatch batch;
  for (const auto& op : j.at("ops")) {
    if (op.contains("put")) {
      const auto& p = op.at("put");
      batch.put(Record{p.at("label").get<std::string>(), map_from_json(p.at("fields"))});
    } else {
      batch.erase(op.at("erase").get<std::string>());
    }
  }
  return batch;
}

void apply_batch(Collection& c, const WriteBatch& batch) {
  for (const auto& op : batch.ops()) {
    if (auto* r = std::get_if<Record>(&op)) {
      c.put(*r);
    } else {
      c.erase(std::get<WriteBatch::Erase>(op).label);
    }
  }
}

}  // namespace

std::unique_ptr<Store> Store::in_memory() { return std::unique_ptr<Store>(new Store()); }

std::unique_ptr<Store> Store::open(const fs::path& dir, bool create) {
  std::unique_ptr<Store> s(new Store());
  s->dir_ = dir;
  if (!fs::exists(dir / kCatalogFile)) {
    if (!create) throw NotFoundError("no store in " + dir.string());
    fs::create_directories(dir);
    s->save_catalog();
  }
  s->load();
  return s;
}

Store::~Store() = default;

Store::Slot& Store::slot(const std::string& name) const {
  std::shared_lock lock(catalog_mutex_);
  auto it = slots_.find(name);
  if (it == slots_.end()) throw NotFoundError("no collection '" + name + "'");
  return *it->second;
}

void Store::save_catalog() const {
  if (!dir_) return;
  auto arr = nlohmann::json::array();
  for (const auto& [name, s] : slots_) {
    auto idx = nlohmann::json::array();
    for (const auto& spec : s->collection.indexes()) {
      idx.push_back({{"field", spec.field}, {"ordering", ordering_name(spec.ordering)}});
    }
    arr.push_back({{"name", name}, {"indexes", idx}});
  }
  write_atomically(*dir_ / kCatalogFile, nlohmann::json{{"collections", arr}}.dump(2) + "\n");
}

void Store::load() {
  const auto catalog = nlohmann::json::parse(read_file(*dir_ / kCatalogFile));
  for (const auto& c : catalog.at("collections")) {
    const std::string name = c.at("name").get<std::string>();
    std::vector<IndexSpec> specs;
    for (const auto& i : c.at("indexes")) {
      specs.push_back({i.at("field").get<std::string>(), ordering_from(i.at("ordering").get<std::string>())});
    }
    auto s = std::make_unique<Slot>(Collection(name, specs));
    const auto base = read_file(*dir_ / dump_file(name));
    std::size_t n = 0;
    for (auto line : lines_of(base)) {
      ++n;
      if (line.empty()) continue;
      try {
        s->collection.put(parse_line(name, line));
      } catch (const std::exception& e) {
        throw ParseError(dump_file(name) + " line " + std::to_string(n) + ": " + e.what());
      }
    }
    const auto wal = read_file(*dir_ / (name + ".wal"));
    const auto wal_lines = lines_of(wal);
    for (std::size_t i = 0; i < wal_lines.size(); ++i) {
      if (wal_lines[i].empty()) continue;
      WriteBatch batch;
      try {
        batch = batch_from_json(nlohmann::json::parse(wal_lines[i]));
      } catch (const std::exception& e) {
        // a torn final line is an interrupted append; anything earlier is corruption
        const bool last = i + 1 == wal_lines.size() && wal.back() != '\n';
        if (last) break;
        throw ParseError(name + ".wal line " + std::to_string(i + 1) + ": " + e.what());
      }
      apply_batch(s->collection, batch);
    }
    slots_.emplace(name, std::move(s));
  }
  generation_ = read_generation(*dir_);
}

void Store::create_collection(const std::string& name, std::vector<IndexSpec> indexes) {
  check_collection_name(name);
  std::unique_lock lock(catalog_mutex_);
  if (auto it = slots_.find(name); it != slots_.end()) {
    if (it->second->collection.indexes() != indexes) {
      throw ValidationError("collection '" + name + "' exists with different indexes");
    }
    return;
  }
  slots_.emplace(name, std::make_unique<Slot>(Collection(name, std::move(indexes))));
  save_catalog();
}

bool Store::has_collection(const std::string& name) const {
  std::shared_lock lock(catalog_mutex_);
  return slots_.count(name) > 0;
}

std::vector<std::string> Store::collection_names() const {
  std::shared_lock lock(catalog_mutex_);
  std::vector<std::string> out;
  for (const auto& [name, _] : slots_) out.push_back(name);
  return out;
}

std::vector<IndexSpec> Store::indexes(const std::string& name) const { return slot(name).collection.indexes(); }

void Store::bump_generation() {
  std::lock_guard lock(generation_mutex_);
  ++generation_;
  if (dir_) {
    // another process may have advanced it; never go backwards
    generation_ = std::max(generation_, read_generation(*dir_) + 1);
    write_atomically(*dir_ / kGenerationFile, std::to_string(generation_) + "\n");
  }
}

std::uint64_t Store::generation() const { return generation_; }

std::uint64_t Store::read_generation(const fs::path& dir) {
  const auto text = read_file(dir / kGenerationFile);
  if (text.empty()) return 0;
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    return 0;
  }
}

void Store::commit(const std::string& name, Slot& s, const WriteBatch& batch) {
  if (batch.empty()) return;
  for (const auto& op : batch.ops()) {
    if (auto* r = std::get_if<Record>(&op)) validate_record(name, *r);
  }
  if (dir_) {
    std::ofstream out(*dir_ / (name + ".wal"), std::ios::binary | std::ios::app);
    out << batch_json(batch).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot append to " + name + ".wal");
  }
  apply_batch(s.collection, batch);
  bump_generation();
}

void Store::put(const std::string& name, Record record) {
  WriteBatch b;
  b.put(std::move(record));
  apply(name, b);
}

void Store::apply(const std::string& name, const WriteBatch& batch) {
  auto& s = slot(name);
  std::unique_lock lock(s.mutex);
  commit(name, s, batch);
}

void Store::update(const std::string& name, const std::function<void(const Collection&, WriteBatch&)>& fn) {
  auto& s = slot(name);
  std::unique_lock lock(s.mutex);
  WriteBatch batch;
  fn(s.collection, batch);
  commit(name, s, batch);
}

Record Store::get(const std::string& name, const std::string& label) const {
  auto r = find(name, label);
  if (!r) throw NotFoundError("no record '" + label + "' in " + name);
  return *r;
}

std::optional<Record> Store::find(const std::string& name, const std::string& label) const {
  auto& s = slot(name);
  std::shared_lock lock(s.mutex);
  if (const Record* r = s.collection.find(label)) return *r;
  return std::nullopt;
}

void Store::erase(const std::string& name, const std::string& label) {
  auto& s = slot(name);
  std::unique_lock lock(s.mutex);
  if (!s.collection.find(label)) throw NotFoundError("no record '" + label + "' in " + name);
  WriteBatch b;
  b.erase(label);
  commit(name, s, b);
}

std::size_t Store::size(const std::string& name) const {
  auto& s = slot(name);
  std::shared_lock lock(s.mutex);
  return s.collection.size();
}

QueryResult Store::query(const std::string& name, const Query& q) const {
  auto& s = slot(name);
  std::shared_lock lock(s.mutex);
  return s.collection.query(q);
}

std::size_t Store::ingest_text(const std::string& name, std::string_view text) {
  auto& s = slot(name);
  WriteBatch batch;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t n = 0;
  for (auto line : lines_of(text)) {
    ++n;
    if (line.empty()) continue;
    Record r;
    try {
      r = parse_line(name, line);
      validate_record(name, r);
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(n) + ": " + e.what());
    }
    auto [it, fresh] = seen.emplace(r.label, n);
    if (!fresh) {
      throw ValidationError("line " + std::to_string(n) + ": duplicate label '" + r.label + "' (first on line " +
                            std::to_string(it->second) + ")");
    }
    batch.put(std::move(r));
  }
  std::unique_lock lock(s.mutex);
  commit(name, s, batch);
  return seen.size();
}

std::string Store::dump_text(const std::string& name) const {
  auto& s = slot(name);
  std::shared_lock lock(s.mutex);
  std::string out;
  for (const auto& [_, r] : s.collection.records()) {
    out += format_line(name, r);
    out += '\n';
  }
  return out;
}

void Store::compact() {
  if (!dir_) return;
  std::shared_lock catalog_lock(catalog_mutex_);
  for (auto& [name, s] : slots_) {
    std::unique_lock lock(s->mutex);
    std::string out;
    for (const auto& [_, r] : s->collection.records()) {
      out += format_line(name, r);
      out += '\n';
    }
    write_atomically(*dir_ / dump_file(name), out);
    write_atomically(*dir_ / (name + ".wal"), "");
  }
  catalog_lock.unlock();
  bump_generation();
}

DirectoryLock::DirectoryLock(const fs::path& dir) {
  fs::create_directories(dir);
  fd_ = ::open((dir / kLockFile).c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw std::runtime_error("cannot open lock file in " + dir.string());
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw BusyError("another writer holds " + (dir / kLockFile).string());
  }
}

DirectoryLock::~DirectoryLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

bool DirectoryLock::is_held(const fs::path& dir) {
  const int fd = ::open((dir / kLockFile).c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) return false;
  const bool held = ::flock(fd, LOCK_SH | LOCK_NB) != 0;
  if (!held) ::flock(fd, LOCK_UN);
  ::close(fd);
  return held;
}

}  // namespace lfdb::store
