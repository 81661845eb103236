#include "ontokg/transform.hpp"

#include <algorithm>
#include <cctype>

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

namespace {

std::string fold_case(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

LookupTable load_lookup(const std::string& path, std::string name, bool casefold) {
  LookupTable table;
  table.name = std::move(name);
  table.casefold = casefold;
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    std::vector<std::string> cols = split(raw, '\t');
    if (cols.size() != 2)
      throw MalformedLineError(path, line_no, "expected raw_id<TAB>canonical_iri");
    std::string key(trim(cols[0]));
    if (casefold) key = fold_case(std::move(key));
    std::string value(trim(cols[1]));
    auto [it, inserted] = table.entries.emplace(std::move(key), value);
    if (!inserted && it->second != value) throw DuplicateKeyError(table.name, it->first);
  }
  return table;
}

void TransformSpec::validate() const {
  std::size_t lookups = 0;
  for (const TransformStep& step : steps) {
    switch (step.kind) {
      case TransformStep::Kind::Lookup:
        if (++lookups > 1)
          throw ManifestSyntaxError("transform", "at most one lookup step allowed");
        if (step.table.empty()) throw ManifestSyntaxError("transform", "lookup step needs a table");
        break;
      case TransformStep::Kind::Template: {
        const std::size_t first = step.pattern.find("{id}");
        if (first == std::string::npos || step.pattern.find("{id}", first + 1) != std::string::npos)
          throw ManifestSyntaxError("transform",
                                    "template pattern must contain \"{id}\" exactly once");
        break;
      }
      default:
        break;
    }
  }
}

std::optional<std::string> map_identifier(std::string_view raw, const TransformSpec& spec,
                                          const LookupTables& tables) {
  std::string value(raw);
  for (const TransformStep& step : spec.steps) {
    switch (step.kind) {
      case TransformStep::Kind::Normalize:
        if (step.trim) value = std::string(trim(value));
        if (step.casefold) value = fold_case(std::move(value));
        break;
      case TransformStep::Kind::Lookup: {
        auto table_it = tables.find(step.table);
        if (table_it == tables.end()) throw UnknownTableError(step.table);
        const LookupTable& table = table_it->second;
        std::string key = table.casefold ? fold_case(value) : value;
        auto hit = table.entries.find(key);
        if (hit == table.entries.end()) return std::nullopt;
        value = hit->second;
        break;
      }
      case TransformStep::Kind::Template: {
        std::string out = step.pattern;
        out.replace(out.find("{id}"), 4, value);
        value = std::move(out);
        break;
      }
      case TransformStep::Kind::Suffix:
        value += step.text;
        break;
    }
  }
  return value;
}

}  // namespace ontokg
