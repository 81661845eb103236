#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontokg/graph.hpp"

namespace ontokg {

// A position in a triple pattern: a variable (name without '?') or an IRI
// already resolved against the query's prefixes.
struct PatternTerm {
  bool is_var = false;
  std::string text;
};

struct TriplePattern {
  PatternTerm subject, predicate, object;
};

// FILTER(STRSTARTS(STR(?var), STR(prefix:))) reduced to its meaning.
struct PrefixFilter {
  std::string var;
  std::string iri_prefix;
};

struct ProjectionItem {
  bool is_aggregate = false;
  std::string var;    // plain variable, or COUNT(DISTINCT ?var) target
  std::string alias;  // aggregate alias
};

struct HavingClause {
  std::string var;  // COUNT(DISTINCT ?var)
  std::string cmp;  // one of >= > = <= < !=
  long long value = 0;
};

struct QueryAst {
  std::map<std::string, std::string> prefixes;
  std::vector<ProjectionItem> projection;
  std::vector<TriplePattern> patterns;
  std::vector<PrefixFilter> filters;
  std::vector<std::string> group_by;
  std::optional<HavingClause> having;
};

// Parses the supported grammar: PREFIX declarations, SELECT with variables
// and COUNT(DISTINCT ?v) AS ?alias, a WHERE block of triple patterns with
// ';' predicate lists, STRSTARTS prefix filters, GROUP BY, and HAVING on a
// distinct count. Anything outside the subset raises UnsupportedFeatureError;
// malformed input raises QuerySyntaxError with line/column.
QueryAst parse_query(std::string_view text);

struct SolutionValue {
  bool is_count = false;
  TermId term = kNoTerm;
  long long count = 0;

  bool operator==(const SolutionValue&) const = default;
};

struct SolutionTable {
  std::vector<std::string> columns;
  std::vector<std::vector<SolutionValue>> rows;  // sorted column-major by term order
};

struct EvalOptions {
  // When set, rdfs:subClassOf patterns match the reflexive-transitive closure
  // of the stored hierarchy instead of stored edges only.
  bool transitive_subclass = false;
};

// Bag-semantics evaluation of the basic graph pattern, most selective pattern
// first; grouping and aggregation after the join. Unknown IRIs bind nothing;
// an empty table is a valid answer.
SolutionTable evaluate(const KnowledgeGraph& kg, const QueryAst& ast,
                       const EvalOptions& options = {});

}  // namespace ontokg
