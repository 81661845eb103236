#include "ontokg/build.hpp"

#include <cassert>

#include "json.hpp"
#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

std::string_view to_string(KnowledgeModel model) {
  return model == KnowledgeModel::ClassBased ? "class" : "instance";
}

AnchorMap load_anchor_map(const std::string& path) {
  AnchorMap anchors;
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw MalformedLineError(path, line_no, "expected node_type<TAB>class_iri");
    auto type = parse_node_type(trim(cols[0]));
    if (!type) throw MalformedLineError(path, line_no, "unknown node type token");
    anchors[*type] = std::string(trim(cols[1]));
  }
  return anchors;
}

TripleEmitter::TripleEmitter(KnowledgeGraph& kg, BuildOptions options, AnchorMap anchors)
    : kg_(kg), options_(options), anchors_(std::move(anchors)) {}

void TripleEmitter::add_ontology_term(TermId id) { ontology_terms_.insert(id); }

TermId TripleEmitter::anchor_for(NodeType type) {
  auto it = anchors_.find(type);
  if (it == anchors_.end()) throw UnknownAnchorClassError(std::string(to_string(type)));
  return kg_.ensure_node(it->second);
}

std::size_t TripleEmitter::ensure_typed(TermId node) {
  if (ontology_terms_.count(node) || typed_.count(node)) return 0;
  typed_.insert(node);
  const TermId anchor = anchor_for(kg_.node(node).type);
  const TermId predicate = options_.model == KnowledgeModel::ClassBased
                               ? kg_.registry().subclass_of()
                               : kg_.registry().rdf_type();
  return kg_.add_edge(node, predicate, anchor, std::string_view(), EdgeOrigin::Typing) ? 1 : 0;
}

EmitStats TripleEmitter::emit(const std::vector<std::pair<std::string, std::string>>& pairs,
                              const SourceManifest& manifest) {
  EmitStats stats;
  for (const auto& [subject_iri, object_iri] : pairs) {
    const TermId s = kg_.ensure_node(subject_iri, manifest.subject_label);
    const TermId o = kg_.ensure_node(object_iri, manifest.object_label);
    if (kg_.add_edge(s, manifest.relation, o, manifest.name, EdgeOrigin::Asserted))
      ++stats.asserted_added;
    stats.typing_added += ensure_typed(s);
    stats.typing_added += ensure_typed(o);
  }
  return stats;
}

std::size_t inverse_closure(KnowledgeGraph& kg) {
  std::size_t added = 0;
  // The edge list grows while we scan it; counterparts of freshly derived
  // edges are the originals, so the scan terminates.
  for (std::size_t i = 0; i < kg.edges().size(); ++i) {
    const EdgeRecord edge = kg.edges()[i];  // copy: add_edge may reallocate
    if (edge.origin != EdgeOrigin::Asserted && edge.origin != EdgeOrigin::InverseDerived)
      continue;
    const RelationDescriptor& desc = kg.registry().at(edge.relation);
    if (desc.symmetric) {
      if (kg.add_edge(edge.object, edge.relation, edge.subject, edge.provenance,
                      EdgeOrigin::InverseDerived))
        ++added;
    } else if (desc.inverse) {
      if (kg.add_edge(edge.object, *desc.inverse, edge.subject, edge.provenance,
                      EdgeOrigin::InverseDerived))
        ++added;
    }
  }
  return added;
}

std::string BuildReport::to_json() const {
  nlohmann::json j;
  j["asserted_by_source"] = asserted_by_source;
  j["asserted_edges"] = asserted_edges;
  j["inverse_derived_edges"] = inverse_derived_edges;
  j["typing_edges"] = typing_edges;
  j["ontology_edges"] = ontology_edges;
  j["total_edges"] = total_edges();
  j["node_count"] = node_count;
  nlohmann::json rej = nlohmann::json::object();
  for (const auto& [key, n] : rejections.counts) rej[key.first][key.second] = n;
  j["rejections"] = rej;
  j["rejection_total"] = rejections.total();
  j["metagraph_violations"] = metagraph_violations;
  j["ontology_clean"] = {{"deprecated_removed", ontology_clean.deprecated_removed},
                         {"duplicate_terms_removed", ontology_clean.duplicate_terms_removed},
                         {"edges_removed", ontology_clean.edges_removed},
                         {"label_conflicts", ontology_clean.label_conflicts}};
  j["merge_label_conflicts"] = merge_label_conflicts;
  j["model"] = model;
  j["inverse_relations"] = inverse_relations;
  return j.dump(2) + "\n";
}

BuildResult assemble(const BuildInputs& inputs, const MetaGraph& metagraph,
                     const BuildOptions& options, KnowledgeGraph kg) {
  BuildResult result{std::move(kg), {}, {}, {}};
  KnowledgeGraph& graph = result.kg;
  BuildReport& report = result.report;
  report.model = std::string(to_string(options.model));
  report.inverse_relations = options.inverse_relations;

  std::vector<OntologyTermSet> cleaned;
  cleaned.reserve(inputs.ontologies.size());
  for (const OntologyTermSet& raw : inputs.ontologies) {
    auto [set, clean_report] = clean_ontology(raw);
    report.ontology_clean.deprecated_removed += clean_report.deprecated_removed;
    report.ontology_clean.duplicate_terms_removed += clean_report.duplicate_terms_removed;
    report.ontology_clean.edges_removed += clean_report.edges_removed;
    report.ontology_clean.label_conflicts += clean_report.label_conflicts;
    cleaned.push_back(std::move(set));
  }
  MergeResult merged = merge_ontologies(cleaned);
  report.merge_label_conflicts = merged.label_conflicts;

  TripleEmitter emitter(graph, options, inputs.anchors);
  for (const OntologyTerm& term : merged.merged.terms)
    emitter.add_ontology_term(graph.ensure_node(term.iri, std::nullopt, term.label));
  const TermId subclass_of = graph.registry().subclass_of();
  for (const auto& [child, parent] : merged.merged.subclass_edges) {
    const TermId c = graph.ensure_node(child);
    const TermId p = graph.ensure_node(parent);
    if (graph.add_edge(c, subclass_of, p, std::string_view(), EdgeOrigin::Ontology))
      ++report.ontology_edges;
  }

  for (const SourceManifest& manifest : inputs.manifests) {
    std::vector<Row> rows;
    read_rows(
        manifest, [&](Row&& row) { rows.push_back(std::move(row)); },
        [&](std::size_t line, std::size_t cells) {
          report.rejections.add(manifest.name, RejectReason::RaggedRow);
          result.rejected_rows.push_back(
              {manifest.name, line, "ragged row (" + std::to_string(cells) + " cells)"});
        });
    HarmonizedPairs harmonized = harmonize_rows(manifest, rows, inputs.tables);
    report.rejections.merge(harmonized.report);
    result.rejected_rows.insert(result.rejected_rows.end(), harmonized.log.begin(),
                                harmonized.log.end());
    EmitStats stats = emitter.emit(harmonized.pairs, manifest);
    report.asserted_by_source[manifest.name] = stats.asserted_added;
    report.asserted_edges += stats.asserted_added;
    report.typing_edges += stats.typing_added;
  }

  if (options.inverse_relations) report.inverse_derived_edges = inverse_closure(graph);

  result.violations = validate_against_metagraph(graph, metagraph);
  report.metagraph_violations = result.violations.total();
  report.node_count = graph.node_count();
  assert(report.total_edges() == graph.edge_count());
  return result;
}

}  // namespace ontokg
