#include "ontokg/node_type.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <utility>

namespace ontokg {

namespace {

constexpr std::array<std::string_view, kNodeTypeCount> kNames = {
    "gene",       "mRNA",      "miRNA",      "premiRNA",   "lncRNA",
    "snoRNA",     "tRNA",      "tRF",        "tsRNA",      "circRNA",
    "pseudogene", "riboswitch", "ribozyme",  "aptamer",    "ASO",
    "gRNA",       "viral_RNA", "protein",    "TF",         "RBP",
    "chemical",   "disease",   "phenotype",  "cell",       "anatomy",
    "pathway",    "GO_term",   "variant",    "vaccine",    "species",
    "small_protein", "epigenetic_modification", "histone_modification",
    "unclassified_RNA", "other_term",
};

// Suffix rules, keyed by the text after the last '?' in the IRI. Suffixes take
// precedence over prefix rules: a suffixed gene IRI (".../gene/6575?circRNA")
// would otherwise classify as gene.
const std::unordered_map<std::string_view, NodeType>& suffix_rules() {
  static const std::unordered_map<std::string_view, NodeType> rules = {
      {"snoRNA", NodeType::Snorna},
      {"circRNA", NodeType::Circrna},
      {"lncRNA", NodeType::Lncrna},
      {"lincRNA", NodeType::Lncrna},
      {"pseudo", NodeType::Pseudogene},
      {"mRNA", NodeType::Mrna},
      {"tRNA", NodeType::Trna},
      {"viral_mRNA", NodeType::ViralRna},
      // RNA suffixes without a tag of their own
      {"ncRNA", NodeType::UnclassifiedRna},
      {"misc_RNA", NodeType::UnclassifiedRna},
      {"unknown", NodeType::UnclassifiedRna},
      {"other", NodeType::UnclassifiedRna},
      {"TEC", NodeType::UnclassifiedRna},
      {"snRNA", NodeType::UnclassifiedRna},
      {"scRNA", NodeType::UnclassifiedRna},
      {"scaRNA", NodeType::UnclassifiedRna},
      {"mtRNA", NodeType::UnclassifiedRna},
      {"vRNA", NodeType::UnclassifiedRna},
      {"Y_RNA", NodeType::UnclassifiedRna},
      {"retained_intron", NodeType::UnclassifiedRna},
  };
  return rules;
}

// Substring prefix rules, checked in order after the suffix rules.
constexpr std::pair<std::string_view, NodeType> kPrefixRules[] = {
    {"obo/GO_", NodeType::GoTerm},
    {"obo/MONDO_", NodeType::Disease},
    {"obo/HP_", NodeType::Phenotype},
    {"obo/CHEBI_", NodeType::Chemical},
    {"obo/PR_", NodeType::Protein},
    {"obo/UBERON_", NodeType::Anatomy},
    {"obo/CLO_", NodeType::Cell},
    {"obo/PW_", NodeType::Pathway},
    {"obo/VO_", NodeType::Vaccine},
    {"obo/NCBITaxon", NodeType::Species},
    {"ncbi.nlm.nih.gov/gene/", NodeType::Gene},
    {"mirbase.org/cgi-bin/mature.pl", NodeType::Mirna},
    {"mirbase.org/cgi-bin/mirna_entry.pl", NodeType::Premirna},
    {"ncbi.nlm.nih.gov/snp/", NodeType::Variant},
    {"ncbi.nlm.nih.gov/Taxonomy/", NodeType::Species},
    {"ncbi.nlm.nih.gov/nuccore/", NodeType::ViralRna},
    {"rna.sysu.edu.cn/tsRFun", NodeType::Tsrna},
    {"genome.bioch.virginia.edu/trfdb", NodeType::Trf},
    {"cm.jefferson.edu/MINTbase", NodeType::Trf},
    {"gtrnadb.ucsc.edu", NodeType::Trna},
    {"tbdb.io", NodeType::Riboswitch},
    {"rfamlive.xfam.org", NodeType::Ribozyme},
    {"aptagen.com", NodeType::Aptamer},
    {"eskip-finder.org", NodeType::Aso},
    {"addgene.org", NodeType::Grna},
    {"encodeproject.org/targets/", NodeType::EpigeneticModification},
    {"crdd.osdd.net/raghava/dbem", NodeType::HistoneModification},
    {"bigdata.ibp.ac.cn/SmProt", NodeType::SmallProtein},
};

}  // namespace

std::string_view to_string(NodeType type) { return kNames[static_cast<std::size_t>(type)]; }

std::optional<NodeType> parse_node_type(std::string_view token) {
  std::string normalized(token);
  for (char& c : normalized)
    if (c == ' ') c = '_';
  for (std::size_t i = 0; i < kNodeTypeCount; ++i)
    if (kNames[i] == normalized) return static_cast<NodeType>(i);
  return std::nullopt;
}

NodeType infer_node_type(std::string_view iri) {
  const std::size_t qmark = iri.rfind('?');
  if (qmark != std::string_view::npos) {
    const auto& rules = suffix_rules();
    auto it = rules.find(iri.substr(qmark + 1));
    if (it != rules.end()) return it->second;
  }
  for (const auto& [needle, type] : kPrefixRules)
    if (iri.find(needle) != std::string_view::npos) return type;
  return NodeType::OtherTerm;
}

}  // namespace ontokg
