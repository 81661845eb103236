#include "ontokg/relations.hpp"

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

void RelationRegistry::add(TermId relation, std::string label, std::optional<TermId> inverse,
                           bool symmetric) {
  if (symmetric && inverse)
    throw Error("relation " + std::to_string(relation) + " declared both symmetric and inverse");
  if (by_id_.count(relation)) throw Error("duplicate relation in registry: " + label);

  RelationDescriptor desc{relation, std::move(label), inverse, symmetric};
  by_id_.emplace(relation, std::move(desc));
  order_.push_back(relation);

  if (inverse) {
    auto partner = by_id_.find(*inverse);
    if (partner != by_id_.end()) {
      if (partner->second.symmetric)
        throw Error("inverse declared for symmetric relation " + partner->second.label);
      if (partner->second.inverse && *partner->second.inverse != relation)
        throw Error("contradictory inverse pairing for " + partner->second.label);
      partner->second.inverse = relation;
    }
  }
}

void RelationRegistry::ensure_builtins(Interner& interner) {
  subclass_of_ = interner.intern(kSubClassOfIri);
  rdf_type_ = interner.intern(kRdfTypeIri);
  if (!by_id_.count(subclass_of_)) add(subclass_of_, "subClassOf", std::nullopt, false);
  if (!by_id_.count(rdf_type_)) add(rdf_type_, "type", std::nullopt, false);
}

bool RelationRegistry::contains(TermId relation) const { return by_id_.count(relation) > 0; }

const RelationDescriptor& RelationRegistry::at(TermId relation) const {
  auto it = by_id_.find(relation);
  if (it == by_id_.end()) throw UnknownRelationError(std::to_string(relation));
  return it->second;
}

std::optional<TermId> RelationRegistry::inverse_of(TermId relation) const {
  return at(relation).inverse;
}

bool RelationRegistry::is_symmetric(TermId relation) const { return at(relation).symmetric; }

void load_registry(const std::string& path, Interner& interner, RelationRegistry& registry) {
  registry.ensure_builtins(interner);
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() < 2)
      throw MalformedLineError(path, line_no, "expected relation_iri<TAB>label");
    const TermId rel = interner.intern(trim(cols[0]));
    std::optional<TermId> inverse;
    if (cols.size() > 2 && !trim(cols[2]).empty()) inverse = interner.intern(trim(cols[2]));
    bool symmetric = cols.size() > 3 && trim(cols[3]) == "1";
    registry.add(rel, std::string(trim(cols[1])), inverse, symmetric);
  }
  // Involution check: every declared inverse points back.
  for (TermId rel : registry.relations()) {
    const auto& desc = registry.at(rel);
    if (!desc.inverse) continue;
    if (!registry.contains(*desc.inverse))
      throw Error("registry names inverse with no row of its own: " + desc.label);
    const auto& partner = registry.at(*desc.inverse);
    if (!partner.inverse || *partner.inverse != rel)
      throw Error("inverse pairing is not involutive for " + desc.label);
  }
}

}  // namespace ontokg
