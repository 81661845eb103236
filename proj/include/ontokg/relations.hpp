#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontokg/interner.hpp"

namespace ontokg {

// An RO relation term. A symmetric relation never carries an inverse;
// inverse pairing is involutive across the registry.
struct RelationDescriptor {
  TermId relation = kNoTerm;
  std::string label;
  std::optional<TermId> inverse;
  bool symmetric = false;
};

inline constexpr std::string_view kSubClassOfIri =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfTypeIri =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

class RelationRegistry {
 public:
  // Registers a relation; fixes up the inverse back-pointer when the partner
  // is already present. Throws Error on duplicate IRIs, on a symmetric
  // relation declaring an inverse, and on contradictory inverse pairings.
  void add(TermId relation, std::string label, std::optional<TermId> inverse, bool symmetric);

  // The typing predicates rdfs:subClassOf and rdf:type are always available.
  void ensure_builtins(Interner& interner);

  bool contains(TermId relation) const;
  const RelationDescriptor& at(TermId relation) const;  // throws UnknownRelationError
  std::optional<TermId> inverse_of(TermId relation) const;
  bool is_symmetric(TermId relation) const;

  TermId subclass_of() const { return subclass_of_; }
  TermId rdf_type() const { return rdf_type_; }

  const std::vector<TermId>& relations() const { return order_; }
  std::size_t size() const { return order_.size(); }

 private:
  std::unordered_map<TermId, RelationDescriptor> by_id_;
  std::vector<TermId> order_;
  TermId subclass_of_ = kNoTerm;
  TermId rdf_type_ = kNoTerm;
};

// Reads a registry TSV: relation_iri  label  inverse_iri(optional)  symmetric(0|1).
// Rows may name their inverse before it has its own row.
void load_registry(const std::string& path, Interner& interner, RelationRegistry& registry);

}  // namespace ontokg
