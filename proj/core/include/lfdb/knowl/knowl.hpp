#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfdb/store/store.hpp"

namespace lfdb::knowl {

struct Knowl {
  std::string id;
  std::string title;
  std::string content;
  std::uint64_t version = 0;
  std::string timestamp;
  std::string author;
  std::vector<std::string> references;

  store::Record to_record() const;
  static Knowl from_record(const store::Record& r);
};

/// [a-z0-9]+(\.[a-z0-9]+)*
bool is_valid_id(std::string_view id);

/// Store label of one version: "<id>/v000003".
std::string version_label(const std::string& id, std::uint64_t version);

struct Segment {
  enum class Kind { Text, Reference };
  Kind kind = Kind::Text;
  std::string text;  // literal text, or the display text of a reference
  std::string id;    // reference target
};

/// Splits content on {{knowl:ID|display text}}. Any other "{{" or "}}" is a ValidationError.
std::vector<Segment> parse_content(std::string_view content);

/// Appends version previous + 1 (1 for a new id) through the store's serialized writer.
/// timestamp defaults to the current UTC time.
Knowl save_knowl(store::Store& store, const std::string& id, const std::string& title, const std::string& content,
                 const std::string& author, std::optional<std::string> timestamp = std::nullopt);

Knowl latest_knowl(const store::Store& store, const std::string& id);
Knowl knowl_version(const store::Store& store, const std::string& id, std::uint64_t version);
std::vector<std::uint64_t> knowl_versions(const store::Store& store, const std::string& id);

struct Node {
  /// Stub: expandable inclusion with children. Link: reference left unexpanded (depth or cycle).
  /// Broken: target does not exist.
  enum class Kind { Text, Stub, Link, Broken };
  Kind kind = Kind::Text;
  std::string text;
  std::string id;
  std::string title;
  std::vector<Node> children;
};

std::string to_string(Node::Kind k);

struct Rendered {
  Knowl knowl;
  std::vector<Node> nodes;
};

/// Expands references as stubs up to `depth` levels; a reference to a knowl already on the
/// expansion path becomes a link. NotFoundError for a missing root.
Rendered render_knowl(const store::Store& store, const std::string& id, unsigned depth);

}  // namespace lfdb::knowl
