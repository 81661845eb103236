#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontokg {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyIriError : Error {
  explicit EmptyIriError(const std::string& iri)
      : Error("invalid IRI (empty or contains whitespace): \"" + iri + "\"") {}
};

struct UnknownRelationError : Error {
  std::string relation;
  explicit UnknownRelationError(std::string rel)
      : Error("unknown relation: " + rel), relation(std::move(rel)) {}
};

struct IoError : Error {
  std::string path;
  IoError(std::string p, const std::string& what)
      : Error(p + ": " + what), path(std::move(p)) {}
};

struct RaggedRowError : Error {
  std::size_t line;
  RaggedRowError(const std::string& source, std::size_t line_no, std::size_t cells,
                 std::size_t needed)
      : Error(source + ": line " + std::to_string(line_no) + " has " + std::to_string(cells) +
              " cells, need more than " + std::to_string(needed)),
        line(line_no) {}
};

struct ManifestSyntaxError : Error {
  std::string position;
  ManifestSyntaxError(std::string pos, const std::string& what)
      : Error("manifest " + pos + ": " + what), position(std::move(pos)) {}
};

struct BadColumnSpecError : Error {
  explicit BadColumnSpecError(const std::string& what) : Error("bad column spec: " + what) {}
};

struct DuplicateKeyError : Error {
  std::string key;
  DuplicateKeyError(const std::string& table, std::string k)
      : Error("duplicate key in lookup table " + table + ": " + k), key(std::move(k)) {}
};

struct UnknownTableError : Error {
  std::string table;
  explicit UnknownTableError(std::string name)
      : Error("unknown lookup table: " + name), table(std::move(name)) {}
};

struct UnknownAnchorClassError : Error {
  std::string node_type;
  explicit UnknownAnchorClassError(std::string type)
      : Error("no anchor class configured for node type: " + type),
        node_type(std::move(type)) {}
};

struct EmptyGraphError : Error {
  EmptyGraphError() : Error("operation requires a non-empty graph") {}
};

struct EmptySampleError : Error {
  EmptySampleError() : Error("operation requires a non-empty sample") {}
};

struct DegenerateTailError : Error {
  DegenerateTailError() : Error("tail holds fewer than two distinct values") {}
};

struct IsolatedNodeError : Error {
  IsolatedNodeError() : Error("closeness undefined for a node with zero distance sum") {}
};

struct QuerySyntaxError : Error {
  std::size_t line, column;
  QuerySyntaxError(std::size_t l, std::size_t c, const std::string& expected)
      : Error("query syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": " +
              expected),
        line(l),
        column(c) {}
};

struct UnknownPrefixError : Error {
  std::string prefix;
  explicit UnknownPrefixError(std::string name)
      : Error("undeclared prefix: " + name), prefix(std::move(name)) {}
};

struct UnsupportedFeatureError : Error {
  std::string token;
  explicit UnsupportedFeatureError(std::string tok)
      : Error("unsupported query feature: " + tok), token(std::move(tok)) {}
};

struct MalformedLineError : Error {
  std::size_t line;
  MalformedLineError(const std::string& path, std::size_t line_no, const std::string& what)
      : Error(path + ": line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace ontokg
