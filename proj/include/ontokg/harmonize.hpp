#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ontokg/ingest.hpp"
#include "ontokg/transform.hpp"

namespace ontokg {

enum class RejectReason : std::uint8_t { FilteredRow, UnmappedIdentifier, RaggedRow };

std::string_view to_string(RejectReason reason);

// Per (source, reason) rejection counts. For every source,
// kept rows + rejected rows = total data rows.
struct RejectionReport {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;  // (source, reason)

  void add(const std::string& source, RejectReason reason, std::size_t n = 1);
  void merge(const RejectionReport& other);
  std::size_t total() const;
  std::size_t total(const std::string& source) const;
  std::size_t count(const std::string& source, RejectReason reason) const;

  // TSV rows `source<TAB>reason<TAB>count`, sorted lexicographically.
  std::string to_tsv() const;
};

struct RejectedRow {
  std::string source;
  std::size_t line = 0;
  std::string reason;
};

struct HarmonizedPairs {
  std::vector<std::pair<std::string, std::string>> pairs;  // (subject IRI, object IRI)
  RejectionReport report;
  std::vector<RejectedRow> log;
};

// Filters and maps rows into canonical IRI pairs. Rows failing a filter or
// either endpoint mapping are rejected with the matching reason; only
// configuration problems (unknown table) escape as exceptions.
HarmonizedPairs harmonize_rows(const SourceManifest& manifest, std::span<const Row> rows,
                               const LookupTables& tables);

}  // namespace ontokg
