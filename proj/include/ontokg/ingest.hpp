#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ontokg/interner.hpp"
#include "ontokg/node_type.hpp"
#include "ontokg/relations.hpp"
#include "ontokg/transform.hpp"

namespace ontokg {

// One row-level predicate. Numeric comparators apply only to cells that parse
// as a finite number; an unparsable cell fails the filter.
struct RowFilter {
  enum class Cmp { Lt, Le, Gt, Ge, Eq, Ne, InSet, NonEmpty };
  int column = 0;
  Cmp cmp = Cmp::NonEmpty;
  bool numeric = false;  // eq/ne compare numerically when the value was a number
  double number = 0.0;
  std::string text;
  std::set<std::string> values;

  std::string describe() const;
};

struct FilterOutcome {
  bool keep = true;
  std::string reason;  // first failing filter's description when dropped
};

// Conjunctive, evaluated in order; Drop carries the first failure.
FilterOutcome apply_filters(const std::vector<std::string>& row,
                            const std::vector<RowFilter>& filters);

// Declarative recipe turning one tabular source into typed edges.
struct SourceManifest {
  std::string name;
  std::string path;  // resolved against the manifest file's directory
  char delimiter = '\t';
  bool has_header = true;
  int subject_column = 0;
  int object_column = 1;
  NodeType subject_label = NodeType::OtherTerm;
  NodeType object_label = NodeType::OtherTerm;
  TermId relation = kNoTerm;
  std::string relation_iri;
  std::vector<RowFilter> filters;
  TransformSpec subject_transform;
  TransformSpec object_transform;

  int max_column() const;
};

// Parses the manifest document (a JSON array of source objects) and validates
// every manifest: distinct columns, known relation, well-formed transforms.
// Order is preserved.
std::vector<SourceManifest> load_manifests(const std::string& path, Interner& interner,
                                           const RelationRegistry& registry);

struct Row {
  std::size_t line = 0;  // 1-based line number in the source file
  std::vector<std::string> cells;
};

// Strict read: header skipped when has_header, cells trimmed, empty lines
// skipped, CRLF and LF treated alike. Throws RaggedRowError on the first data
// row with too few cells.
std::vector<Row> read_rows(const SourceManifest& manifest);

// Lenient read for pipeline use: ragged rows are reported, not thrown.
void read_rows(const SourceManifest& manifest, const std::function<void(Row&&)>& on_row,
               const std::function<void(std::size_t line, std::size_t cells)>& on_ragged);

}  // namespace ontokg
