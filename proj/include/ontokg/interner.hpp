#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>

namespace ontokg {

// Dense handle for an interned IRI. All graph structures, indexes, and
// analytics operate on handles; IRI strings appear only at I/O boundaries.
using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = 0xffffffffu;

class Interner {
 public:
  // Idempotent: repeated calls with the same IRI return the same handle.
  // Throws EmptyIriError for empty strings or strings with whitespace.
  TermId intern(std::string_view iri);

  // kNoTerm when the IRI has never been interned.
  TermId find(std::string_view iri) const;

  const std::string& iri(TermId id) const;

  std::size_t size() const { return iris_.size(); }

 private:
  std::deque<std::string> iris_;  // stable storage; ids_ keys view into it
  std::unordered_map<std::string_view, TermId> ids_;
};

}  // namespace ontokg
