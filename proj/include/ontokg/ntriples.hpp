#pragma once

#include <string>

#include "ontokg/build.hpp"
#include "ontokg/graph.hpp"

namespace ontokg {

// Writes one `<subject> <predicate> <object> .` line per edge, sorted
// lexicographically; bit-exact across runs and platforms. Returns the line
// count.
std::size_t export_ntriples(const KnowledgeGraph& kg, const std::string& path);

// Edge TSV export: subject_iri  relation_iri  object_iri  origin  sources.
std::size_t export_edge_tsv(const KnowledgeGraph& kg, const std::string& path);

// Reads an N-Triples file into a fresh graph sharing no state with the
// exporter: node types re-inferred from IRIs, relations looked up in the
// given registry file. Blank lines and '#' comments are skipped; anything
// else that is not `<s> <p> <o> .` raises MalformedLineError.
KnowledgeGraph import_ntriples(const std::string& path, const std::string& registry_path);

// Same, into an existing graph whose registry is already loaded.
void import_ntriples_into(const std::string& path, KnowledgeGraph& kg);

// Graph directory layout: graph.nt + nodes.tsv (iri, node_type, label) +
// report.json + optional provenance.tsv (needed for source overlap after a
// reload) + rejected_rows.tsv + rejections.tsv.
void save_graph_dir(const KnowledgeGraph& kg, const BuildReport& report,
                    const std::vector<RejectedRow>& rejected_rows, const std::string& dir);

// Loads graph.nt, preferring nodes.tsv types/labels over inference and
// restoring provenance when the sidecar is present.
KnowledgeGraph load_graph_dir(const std::string& dir, const std::string& registry_path);

}  // namespace ontokg
