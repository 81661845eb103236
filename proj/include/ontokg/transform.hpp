#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontokg {

// Raw source identifier -> canonical IRI. Keys are unique after
// normalization; matching is case-sensitive unless casefold is set.
struct LookupTable {
  std::string name;
  bool casefold = false;
  std::unordered_map<std::string, std::string> entries;
};

// Two-column TSV: raw_id<TAB>canonical_iri. Duplicate keys with conflicting
// values raise DuplicateKeyError; exact repeats collapse.
LookupTable load_lookup(const std::string& path, std::string name, bool casefold = false);

struct TransformStep {
  enum class Kind { Normalize, Lookup, Template, Suffix };
  Kind kind = Kind::Normalize;
  bool trim = true;       // normalize
  bool casefold = false;  // normalize
  std::string table;      // lookup
  std::string pattern;    // template, contains "{id}" exactly once
  std::string text;       // suffix
};

// Ordered identifier-mapping steps; at most one lookup step.
struct TransformSpec {
  std::vector<TransformStep> steps;
  void validate() const;  // throws ManifestSyntaxError
};

using LookupTables = std::map<std::string, LookupTable>;

// Applies the steps in order. A lookup miss yields nullopt (the tuple is to
// be dropped and logged, never guessed). Throws UnknownTableError when a
// lookup step names a table that was not loaded.
std::optional<std::string> map_identifier(std::string_view raw, const TransformSpec& spec,
                                          const LookupTables& tables);

}  // namespace ontokg
