#include "ontokg/interner.hpp"

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

TermId Interner::intern(std::string_view iri) {
  if (iri.empty() || contains_whitespace(iri)) throw EmptyIriError(std::string(iri));
  auto it = ids_.find(iri);
  if (it != ids_.end()) return it->second;
  iris_.emplace_back(iri);
  const TermId id = static_cast<TermId>(iris_.size() - 1);
  ids_.emplace(std::string_view(iris_.back()), id);
  return id;
}

TermId Interner::find(std::string_view iri) const {
  auto it = ids_.find(iri);
  return it == ids_.end() ? kNoTerm : it->second;
}

const std::string& Interner::iri(TermId id) const { return iris_.at(id); }

}  // namespace ontokg
