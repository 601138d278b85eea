#include "lfdb/knowl/knowl.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <set>

#include "lfdb/catalog/catalog.hpp"
#include "lfdb/error.hpp"

namespace lfdb::knowl {

using store::List;
using store::Record;

bool is_valid_id(std::string_view id) {
  if (id.empty() || id.front() == '.' || id.back() == '.') return false;
  char prev = '.';
  for (char c : id) {
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (!alnum && c != '.') return false;
    if (c == '.' && prev == '.') return false;
    prev = c;
  }
  return true;
}

std::string version_label(const std::string& id, std::uint64_t version) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06llu", static_cast<unsigned long long>(version));
  return id + "/v" + buf;
}

Record Knowl::to_record() const {
  List refs;
  for (const auto& r : references) refs.emplace_back(r);
  return Record{version_label(id, version),
                {{"id", id},
                 {"title", title},
                 {"content", content},
                 {"version", static_cast<std::int64_t>(version)},
                 {"timestamp", timestamp},
                 {"author", author},
                 {"references", refs}}};
}

Knowl Knowl::from_record(const Record& r) {
  Knowl k;
  k.id = r.fields.at("id").text();
  k.title = r.fields.at("title").text();
  k.content = r.fields.at("content").text();
  k.version = static_cast<std::uint64_t>(r.fields.at("version").integer());
  k.timestamp = r.fields.at("timestamp").text();
  k.author = r.fields.at("author").text();
  for (const auto& x : r.fields.at("references").list()) k.references.push_back(x.text());
  return k;
}

std::vector<Segment> parse_content(std::string_view content) {
  static constexpr std::string_view kOpen = "{{knowl:";
  std::vector<Segment> out;
  std::string text;
  std::size_t i = 0;
  auto flush = [&] {
    if (!text.empty()) out.push_back({Segment::Kind::Text, std::move(text), {}});
    text.clear();
  };
  while (i < content.size()) {
    if (content.compare(i, 2, "}}") == 0) {
      throw ValidationError("stray '}}' at offset " + std::to_string(i));
    }
    if (content.compare(i, 2, "{{") != 0) {
      text += content[i++];
      continue;
    }
    if (content.compare(i, kOpen.size(), kOpen) != 0) {
      throw ValidationError("'{{' at offset " + std::to_string(i) + " does not start a knowl reference");
    }
    const std::size_t id_start = i + kOpen.size();
    const std::size_t bar = content.find('|', id_start);
    const std::size_t close = content.find("}}", id_start);
    if (close == std::string_view::npos || bar == std::string_view::npos || bar > close) {
      throw ValidationError("unterminated knowl reference at offset " + std::to_string(i));
    }
    const std::string id(content.substr(id_start, bar - id_start));
    const std::string display(content.substr(bar + 1, close - bar - 1));
    if (!is_valid_id(id)) throw ValidationError("invalid knowl id '" + id + "' in reference");
    if (display.empty() || display.find("{{") != std::string::npos) {
      throw ValidationError("bad display text in reference to '" + id + "'");
    }
    flush();
    out.push_back({Segment::Kind::Reference, display, id});
    i = close + 2;
  }
  flush();
  return out;
}

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::uint64_t> versions_in(const store::Collection& c, const std::string& id) {
  std::vector<std::uint64_t> out;
  const std::string prefix = id + "/v";
  for (auto it = c.records().lower_bound(prefix); it != c.records().end(); ++it) {
    if (it->first.compare(0, prefix.size(), prefix) != 0) break;
    out.push_back(static_cast<std::uint64_t>(it->second.fields.at("version").integer()));
  }
  return out;
}

}  // namespace

Knowl save_knowl(store::Store& store, const std::string& id, const std::string& title, const std::string& content,
                 const std::string& author, std::optional<std::string> timestamp) {
  if (!is_valid_id(id)) throw ValidationError("invalid knowl id '" + id + "'");
  const auto segments = parse_content(content);
  catalog::ensure_collections(store);
  Knowl k;
  k.id = id;
  k.title = title;
  k.content = content;
  k.author = author;
  k.timestamp = timestamp ? *timestamp : utc_now();
  std::set<std::string> seen;
  for (const auto& s : segments) {
    if (s.kind == Segment::Kind::Reference && seen.insert(s.id).second) k.references.push_back(s.id);
  }
  store.update(catalog::names::kKnowls, [&](const store::Collection& c, store::WriteBatch& b) {
    const auto versions = versions_in(c, id);
    k.version = versions.empty() ? 1 : versions.back() + 1;
    b.put(k.to_record());
  });
  return k;
}

std::vector<std::uint64_t> knowl_versions(const store::Store& store, const std::string& id) {
  std::vector<std::uint64_t> out;
  const auto res = store.query(catalog::names::kKnowls, {{store::Filter::equals("id", id)}, {}, 0, {}});
  for (const auto& r : res.rows) out.push_back(static_cast<std::uint64_t>(r.fields.at("version").integer()));
  return out;
}

Knowl latest_knowl(const store::Store& store, const std::string& id) {
  if (!is_valid_id(id) || !store.has_collection(catalog::names::kKnowls)) throw NotFoundError("no knowl '" + id + "'");
  const auto versions = knowl_versions(store, id);
  if (versions.empty()) throw NotFoundError("no knowl '" + id + "'");
  return knowl_version(store, id, versions.back());
}

Knowl knowl_version(const store::Store& store, const std::string& id, std::uint64_t version) {
  auto r = store.find(catalog::names::kKnowls, version_label(id, version));
  if (!r) throw NotFoundError("no version " + std::to_string(version) + " of knowl '" + id + "'");
  return Knowl::from_record(*r);
}

std::string to_string(Node::Kind k) {
  switch (k) {
    case Node::Kind::Text: return "text";
    case Node::Kind::Stub: return "stub";
    case Node::Kind::Link: return "link";
    case Node::Kind::Broken: return "broken";
  }
  return "";
}

namespace {

std::vector<Node> render_content(const store::Store& store, const Knowl& k, unsigned depth,
                                 std::vector<std::string>& path) {
  std::vector<Node> nodes;
  for (const auto& s : parse_content(k.content)) {
    if (s.kind == Segment::Kind::Text) {
      nodes.push_back({Node::Kind::Text, s.text, {}, {}, {}});
      continue;
    }
    std::optional<Knowl> target;
    try {
      target = latest_knowl(store, s.id);
    } catch (const NotFoundError&) {
      nodes.push_back({Node::Kind::Broken, s.text, s.id, {}, {}});
      continue;
    }
    const bool on_path = std::find(path.begin(), path.end(), s.id) != path.end();
    if (on_path || depth == 0) {
      nodes.push_back({Node::Kind::Link, s.text, s.id, target->title, {}});
      continue;
    }
    path.push_back(s.id);
    nodes.push_back({Node::Kind::Stub, s.text, s.id, target->title, render_content(store, *target, depth - 1, path)});
    path.pop_back();
  }
  if (nodes.empty()) nodes.push_back({Node::Kind::Text, "", {}, {}, {}});
  return nodes;
}

}  // namespace

Rendered render_knowl(const store::Store& store, const std::string& id, unsigned depth) {
  Rendered out;
  out.knowl = latest_knowl(store, id);
  std::vector<std::string> path{id};
  out.nodes = render_content(store, out.knowl, depth, path);
  return out;
}

}  // namespace lfdb::knowl
