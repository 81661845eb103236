#pragma once

#include <span>
#include <string>
#include <vector>

namespace ontokg {

struct OntologyTerm {
  std::string iri;
  std::string label;
  bool deprecated = false;

  bool operator==(const OntologyTerm&) const = default;
};

struct OntologyTermSet {
  std::string name;
  std::vector<OntologyTerm> terms;
  std::vector<std::pair<std::string, std::string>> subclass_edges;  // (child, parent)
};

// Reads the flat term/edge files: terms `iri<TAB>label<TAB>deprecated(0|1)`,
// subclass `child_iri<TAB>parent_iri`. Subclass endpoints must appear in the
// term file.
OntologyTermSet load_ontology(std::string name, const std::string& terms_path,
                              const std::string& subclass_path);

struct CleanReport {
  std::size_t deprecated_removed = 0;
  std::size_t duplicate_terms_removed = 0;
  std::size_t edges_removed = 0;
  std::size_t label_conflicts = 0;
};

// Removes deprecated terms together with their incident subclass edges and
// collapses duplicate term rows (same IRI keeps the first label; a differing
// label counts as a conflict).
std::pair<OntologyTermSet, CleanReport> clean_ontology(const OntologyTermSet& set);

struct MergeResult {
  OntologyTermSet merged;
  std::size_t label_conflicts = 0;
};

// Union of cleaned sets; same-IRI terms keep the first label seen in input
// order, duplicate subclass edges collapse.
MergeResult merge_ontologies(std::span<const OntologyTermSet> sets);

}  // namespace ontokg
