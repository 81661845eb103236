#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ontokg {

// One tag per primary node type. Every graph node carries exactly one.
enum class NodeType : std::uint8_t {
  Gene,
  Mrna,
  Mirna,
  Premirna,
  Lncrna,
  Snorna,
  Trna,
  Trf,
  Tsrna,
  Circrna,
  Pseudogene,
  Riboswitch,
  Ribozyme,
  Aptamer,
  Aso,
  Grna,
  ViralRna,
  Protein,
  Tf,
  Rbp,
  Chemical,
  Disease,
  Phenotype,
  Cell,
  Anatomy,
  Pathway,
  GoTerm,
  Variant,
  Vaccine,
  Species,
  SmallProtein,
  EpigeneticModification,
  HistoneModification,
  UnclassifiedRna,
  OtherTerm,
};

inline constexpr std::size_t kNodeTypeCount = 35;

// Stable single-token name used in all TSV/JSON surfaces (e.g. "viral_RNA").
std::string_view to_string(NodeType type);

// Accepts the token form; spaces are treated as underscores.
std::optional<NodeType> parse_node_type(std::string_view token);

// Deterministic classification by ordered rules: suffix rules first ("?snoRNA",
// "?circRNA", ...), then substring prefix rules ("obo/MONDO_",
// "ncbi.nlm.nih.gov/gene/", ...). Unmatched IRIs classify as other_term.
// Total: never fails, repeated calls agree.
NodeType infer_node_type(std::string_view iri);

}  // namespace ontokg
