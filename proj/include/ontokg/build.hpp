#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontokg/graph.hpp"
#include "ontokg/harmonize.hpp"
#include "ontokg/ontology.hpp"

namespace ontokg {

enum class KnowledgeModel : std::uint8_t { ClassBased, InstanceBased };

std::string_view to_string(KnowledgeModel model);

struct BuildOptions {
  KnowledgeModel model = KnowledgeModel::InstanceBased;
  bool inverse_relations = true;
};

// NodeType -> ontology class IRI used for typing edges of non-ontological
// nodes. An unmapped type that actually needs a typing edge is a hard error.
using AnchorMap = std::map<NodeType, std::string>;

// TSV: node_type<TAB>class_iri.
AnchorMap load_anchor_map(const std::string& path);

struct EmitStats {
  std::size_t asserted_added = 0;
  std::size_t typing_added = 0;
};

// Emits asserted edges plus one typing edge per new non-ontological node
// (rdfs:subClassOf under the class-based model, rdf:type under the
// instance-based model). Typing edges point at the node type's anchor class.
class TripleEmitter {
 public:
  TripleEmitter(KnowledgeGraph& kg, BuildOptions options, AnchorMap anchors);

  // Marks an IRI as an ontology term; such endpoints never get typing edges.
  void add_ontology_term(TermId id);

  EmitStats emit(const std::vector<std::pair<std::string, std::string>>& pairs,
                 const SourceManifest& manifest);

 private:
  TermId anchor_for(NodeType type);
  std::size_t ensure_typed(TermId node);

  KnowledgeGraph& kg_;
  BuildOptions options_;
  AnchorMap anchors_;
  std::set<TermId> ontology_terms_;
  std::set<TermId> typed_;
};

// Adds the missing inverse/symmetric counterpart of every asserted or derived
// edge. Derived edges carry origin inverse_derived and inherit the provenance
// of their source edge. Idempotent. Returns the number of edges added.
std::size_t inverse_closure(KnowledgeGraph& kg);

struct BuildReport {
  std::map<std::string, std::size_t> asserted_by_source;  // first-asserting attribution
  std::size_t asserted_edges = 0;
  std::size_t inverse_derived_edges = 0;
  std::size_t typing_edges = 0;
  std::size_t ontology_edges = 0;
  std::size_t node_count = 0;
  RejectionReport rejections;
  std::size_t metagraph_violations = 0;
  CleanReport ontology_clean;
  std::size_t merge_label_conflicts = 0;
  std::string model;
  bool inverse_relations = true;

  std::size_t total_edges() const {
    return asserted_edges + inverse_derived_edges + typing_edges + ontology_edges;
  }
  std::string to_json() const;  // keys sorted
};

struct BuildInputs {
  std::vector<SourceManifest> manifests;
  LookupTables tables;
  std::vector<OntologyTermSet> ontologies;  // raw; cleaned and merged here
  AnchorMap anchors;
};

struct BuildResult {
  KnowledgeGraph kg;
  BuildReport report;
  ViolationReport violations;
  std::vector<RejectedRow> rejected_rows;
};

// Full pipeline: ingest -> filter -> harmonize -> emit -> ontology subclass
// edges -> inverse closure -> meta-graph validation. Deterministic for fixed
// inputs: manifests processed in order, outputs emitted sorted.
BuildResult assemble(const BuildInputs& inputs, const MetaGraph& metagraph,
                     const BuildOptions& options, KnowledgeGraph kg);

}  // namespace ontokg
