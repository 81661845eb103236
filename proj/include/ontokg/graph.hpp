#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ontokg/interner.hpp"
#include "ontokg/node_type.hpp"
#include "ontokg/relations.hpp"

namespace ontokg {

enum class EdgeOrigin : std::uint8_t { Asserted, InverseDerived, Ontology, Typing };

std::string_view to_string(EdgeOrigin origin);

using SourceId = std::uint16_t;

struct EdgeRecord {
  TermId subject = kNoTerm;
  TermId relation = kNoTerm;
  TermId object = kNoTerm;
  EdgeOrigin origin = EdgeOrigin::Asserted;
  std::vector<SourceId> provenance;  // sorted, unique; non-empty for asserted edges
};

struct NodeInfo {
  NodeType type = NodeType::OtherTerm;
  std::string label;
};

// Interned, typed, directed multigraph with per-edge provenance. Exact
// (subject, relation, object) duplicates collapse into one record whose
// provenance sets merge. Single-writer during construction; immutable and
// freely shareable across readers afterwards.
class KnowledgeGraph {
 public:
  KnowledgeGraph();

  Interner& interner() { return interner_; }
  const Interner& interner() const { return interner_; }
  RelationRegistry& registry() { return registry_; }
  const RelationRegistry& registry() const { return registry_; }

  SourceId source_id(std::string_view name);
  const std::vector<std::string>& sources() const { return source_names_; }

  // Registers a node, inferring the type from the IRI when none is given.
  // The first registration wins; later calls only fill in a missing label.
  TermId ensure_node(std::string_view iri, std::optional<NodeType> type = std::nullopt,
                     std::string_view label = {});

  bool has_node(TermId id) const;
  const NodeInfo& node(TermId id) const;
  std::vector<TermId> node_ids() const;  // ascending

  // Inserts or merges an edge. Returns true when a new record was inserted,
  // false when an existing (s,r,o) absorbed the provenance. Endpoints are
  // auto-registered with inferred types. Throws UnknownRelationError for an
  // unregistered relation. `source` may be empty only for non-asserted edges.
  bool add_edge(TermId subject, TermId relation, TermId object, std::string_view source,
                EdgeOrigin origin);

  // Same, but with a prebuilt provenance set (sorted unique source ids);
  // used when derived edges inherit the provenance of their source edge.
  bool add_edge(TermId subject, TermId relation, TermId object,
                std::vector<SourceId> provenance, EdgeOrigin origin);

  const std::vector<EdgeRecord>& edges() const { return edges_; }
  std::span<const std::uint32_t> edges_by_subject(TermId id) const;
  std::span<const std::uint32_t> edges_by_object(TermId id) const;
  std::span<const std::uint32_t> edges_by_relation(TermId id) const;

  std::size_t node_count() const { return node_order_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  Interner interner_;
  RelationRegistry registry_;
  std::vector<std::string> source_names_;
  std::unordered_map<std::string, SourceId> source_ids_;

  std::unordered_map<TermId, NodeInfo> nodes_;
  std::vector<TermId> node_order_;  // ascending insertion does not hold; kept sorted on demand
  mutable bool node_order_sorted_ = true;

  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> edge_index_;  // hash -> candidates
  std::unordered_map<TermId, std::vector<std::uint32_t>> by_subject_;
  std::unordered_map<TermId, std::vector<std::uint32_t>> by_object_;
  std::unordered_map<TermId, std::vector<std::uint32_t>> by_relation_;
};

// Simple undirected projection in CSR form: an edge {u,v} exists iff any
// directed edge u->v or v->u exists with any relation; self-loops dropped.
struct UndirectedGraph {
  std::vector<TermId> node_of;  // compact index -> term
  std::unordered_map<TermId, std::uint32_t> index_of;
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> neighbors;

  std::size_t node_count() const { return node_of.size(); }
  std::size_t edge_count() const { return neighbors.size() / 2; }
  std::uint32_t degree(std::uint32_t v) const { return offsets[v + 1] - offsets[v]; }
  std::span<const std::uint32_t> adjacent(std::uint32_t v) const {
    return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
  }
};

UndirectedGraph to_undirected(const KnowledgeGraph& kg);

// Builds an UndirectedGraph directly from an edge list over n nodes
// (analytics entry point for synthetic graphs; same loop/dedup policy).
UndirectedGraph make_undirected(std::size_t n,
                                std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

// Connected components on the undirected projection; returns component id per
// compact node index plus the id of the largest component.
struct Components {
  std::vector<std::uint32_t> comp_of;
  std::vector<std::size_t> sizes;
  std::uint32_t largest = 0;
};
Components connected_components(const UndirectedGraph& g);

// Schema layer: the set of allowed (subject type, relation, object type)
// triples, closed under declared inverses and symmetry.
class MetaGraph {
 public:
  void allow(NodeType subject, TermId relation, NodeType object);
  void close(const RelationRegistry& registry);
  bool allows(NodeType subject, TermId relation, NodeType object) const;
  std::size_t size() const { return allowed_.size(); }

 private:
  std::set<std::tuple<NodeType, TermId, NodeType>> allowed_;
};

// Reads a meta-graph TSV: subject_type  relation_iri  object_type. The result
// is already closed under the registry's inverses and symmetry flags.
MetaGraph load_metagraph(const std::string& path, Interner& interner,
                         const RelationRegistry& registry);

struct ViolationReport {
  // (subject type, relation, object type) -> offending edge count
  std::map<std::tuple<NodeType, TermId, NodeType>, std::size_t> counts;
  std::vector<std::uint32_t> edge_indexes;
  std::size_t total() const { return edge_indexes.size(); }
};

// Checks every asserted and inverse-derived edge against the allowed set;
// typing and ontology edges are exempt.
ViolationReport validate_against_metagraph(const KnowledgeGraph& kg, const MetaGraph& meta);

}  // namespace ontokg
