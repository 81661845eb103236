#include "ontokg/harmonize.hpp"

#include <sstream>

namespace ontokg {

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::FilteredRow: return "FilteredRow";
    case RejectReason::UnmappedIdentifier: return "UnmappedIdentifier";
    case RejectReason::RaggedRow: return "RaggedRow";
  }
  return "FilteredRow";
}

void RejectionReport::add(const std::string& source, RejectReason reason, std::size_t n) {
  if (n == 0) return;
  counts[{source, std::string(to_string(reason))}] += n;
}

void RejectionReport::merge(const RejectionReport& other) {
  for (const auto& [key, n] : other.counts) counts[key] += n;
}

std::size_t RejectionReport::total() const {
  std::size_t sum = 0;
  for (const auto& [key, n] : counts) sum += n;
  return sum;
}

std::size_t RejectionReport::total(const std::string& source) const {
  std::size_t sum = 0;
  for (const auto& [key, n] : counts)
    if (key.first == source) sum += n;
  return sum;
}

std::size_t RejectionReport::count(const std::string& source, RejectReason reason) const {
  auto it = counts.find({source, std::string(to_string(reason))});
  return it == counts.end() ? 0 : it->second;
}

std::string RejectionReport::to_tsv() const {
  std::ostringstream out;
  for (const auto& [key, n] : counts)
    out << key.first << '\t' << key.second << '\t' << n << '\n';
  return out.str();
}

HarmonizedPairs harmonize_rows(const SourceManifest& manifest, std::span<const Row> rows,
                               const LookupTables& tables) {
  HarmonizedPairs result;
  for (const Row& row : rows) {
    FilterOutcome outcome = apply_filters(row.cells, manifest.filters);
    if (!outcome.keep) {
      result.report.add(manifest.name, RejectReason::FilteredRow);
      result.log.push_back({manifest.name, row.line, outcome.reason});
      continue;
    }
    auto subject =
        map_identifier(row.cells[manifest.subject_column], manifest.subject_transform, tables);
    if (!subject) {
      result.report.add(manifest.name, RejectReason::UnmappedIdentifier);
      result.log.push_back({manifest.name, row.line,
                            "unmapped subject \"" + row.cells[manifest.subject_column] + "\""});
      continue;
    }
    auto object =
        map_identifier(row.cells[manifest.object_column], manifest.object_transform, tables);
    if (!object) {
      result.report.add(manifest.name, RejectReason::UnmappedIdentifier);
      result.log.push_back({manifest.name, row.line,
                            "unmapped object \"" + row.cells[manifest.object_column] + "\""});
      continue;
    }
    result.pairs.emplace_back(std::move(*subject), std::move(*object));
  }
  return result;
}

}  // namespace ontokg
