#include "ontokg/ontology.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

OntologyTermSet load_ontology(std::string name, const std::string& terms_path,
                              const std::string& subclass_path) {
  OntologyTermSet set;
  set.name = std::move(name);
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(terms_path)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() < 2)
      throw MalformedLineError(terms_path, line_no, "expected iri<TAB>label[<TAB>deprecated]");
    OntologyTerm term;
    term.iri = std::string(trim(cols[0]));
    term.label = std::string(trim(cols[1]));
    term.deprecated = cols.size() > 2 && trim(cols[2]) == "1";
    set.terms.push_back(std::move(term));
  }

  std::unordered_set<std::string> known;
  for (const OntologyTerm& term : set.terms) known.insert(term.iri);

  line_no = 0;
  for (const std::string& raw : read_lines(subclass_path)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw MalformedLineError(subclass_path, line_no, "expected child_iri<TAB>parent_iri");
    std::string child(trim(cols[0])), parent(trim(cols[1]));
    if (!known.count(child) || !known.count(parent))
      throw MalformedLineError(subclass_path, line_no, "subclass endpoint not in term file");
    set.subclass_edges.emplace_back(std::move(child), std::move(parent));
  }
  return set;
}

std::pair<OntologyTermSet, CleanReport> clean_ontology(const OntologyTermSet& set) {
  OntologyTermSet cleaned;
  cleaned.name = set.name;
  CleanReport report;

  std::unordered_set<std::string> deprecated;
  for (const OntologyTerm& term : set.terms)
    if (term.deprecated) deprecated.insert(term.iri);

  std::unordered_map<std::string, std::string> label_of;
  for (const OntologyTerm& term : set.terms) {
    if (term.deprecated) {
      ++report.deprecated_removed;
      continue;
    }
    auto [it, inserted] = label_of.emplace(term.iri, term.label);
    if (!inserted) {
      ++report.duplicate_terms_removed;
      if (it->second != term.label) ++report.label_conflicts;
      continue;
    }
    cleaned.terms.push_back({term.iri, term.label, false});
  }

  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto& edge : set.subclass_edges) {
    if (deprecated.count(edge.first) || deprecated.count(edge.second)) {
      ++report.edges_removed;
      continue;
    }
    if (seen_edges.insert(edge).second) cleaned.subclass_edges.push_back(edge);
  }
  return {std::move(cleaned), report};
}

MergeResult merge_ontologies(std::span<const OntologyTermSet> sets) {
  MergeResult result;
  result.merged.name = "merged";
  std::unordered_map<std::string, std::string> label_of;
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const OntologyTermSet& set : sets) {
    for (const OntologyTerm& term : set.terms) {
      auto [it, inserted] = label_of.emplace(term.iri, term.label);
      if (inserted) {
        result.merged.terms.push_back(term);
      } else if (it->second != term.label) {
        ++result.label_conflicts;
      }
    }
    for (const auto& edge : set.subclass_edges)
      if (seen_edges.insert(edge).second) result.merged.subclass_edges.push_back(edge);
  }
  return result;
}

}  // namespace ontokg
