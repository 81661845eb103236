#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ontokg/graph.hpp"
#include "ontokg/powerlaw.hpp"

namespace ontokg {

struct DegreeSummary {
  std::size_t n = 0;
  std::size_t m_directed = 0;
  std::size_t m_undirected = 0;
  std::uint32_t max_out = 0;
  std::uint32_t max_in = 0;
  std::uint32_t max_undirected = 0;
  double mean_undirected = 0.0;  // 2m/n
  double paper_mean = 0.0;       // m/n, reported alongside
  std::vector<std::pair<std::uint32_t, std::size_t>> histogram;  // degree -> count, ascending
  std::vector<std::pair<std::uint32_t, double>> ccdf;            // (x, P(D >= x))
};

DegreeSummary degree_summary(const KnowledgeGraph& kg);  // EmptyGraphError

// Empirical complementary cumulative distribution: for each distinct x
// ascending, P = |{d >= x}| / n.
std::vector<std::pair<std::uint32_t, double>> ccdf(std::span<const std::uint32_t> degrees);

std::vector<std::uint32_t> undirected_degrees(const UndirectedGraph& g);

struct DiameterResult {
  std::uint32_t value = 0;
  bool exact = true;  // false: double-sweep lower bound only
  bool restricted_to_largest_component = false;
  std::size_t component_size = 0;
  std::size_t bfs_runs = 0;
};

// Exact eccentricity maximum via a double-sweep lower bound plus pruned BFS
// sweeps (iFUB); heuristic mode stops at the double-sweep bound. Disconnected
// inputs are restricted to the largest component.
DiameterResult diameter(const UndirectedGraph& g, bool exact = true);  // EmptyGraphError

struct ClosenessResult {
  std::vector<std::pair<TermId, double>> estimates;  // component members, by compact index order
  double mean = 0.0;
  std::size_t pivots = 0;
  std::uint64_t seed = 0;
  bool normalized = false;  // (n-1)-scaled instead of raw 1/sum
  bool restricted_to_largest_component = false;
  std::size_t component_size = 0;
  std::vector<std::pair<double, std::size_t>> histogram;  // bin lower edge -> count
};

// c(v) = 1 / sum_u d(v,u) estimated from k uniformly sampled pivots:
// the per-pivot mean distance (pivot v itself excluded) scaled by (n-1).
// With k = n the estimate is exact. Deterministic for a fixed seed.
ClosenessResult closeness_approx(const UndirectedGraph& g, std::size_t pivots, std::uint64_t seed,
                                 bool normalized = false, std::size_t bins = 50);

struct TreewidthResult {
  std::uint32_t width = 0;
  std::vector<std::uint32_t> order;  // elimination order, compact node indexes
};

// Greedy min-degree elimination: repeatedly remove a minimum-degree vertex
// (ties by smallest index), turning its neighborhood into a clique. The width
// is the largest neighborhood met at elimination time; the returned order
// certifies the bound.
TreewidthResult treewidth_upper_bound(const UndirectedGraph& g);

// Replays an elimination order and returns the width it certifies.
std::uint32_t treewidth_replay(const UndirectedGraph& g, std::span<const std::uint32_t> order);

struct IsomorphicGroup {
  NodeType type = NodeType::OtherTerm;
  std::vector<TermId> members;      // >= 2, ascending
  std::size_t group_degree = 0;     // incident edge records per member
};

struct IsomorphicGroupsResult {
  std::vector<IsomorphicGroup> groups;
  std::size_t node_count = 0;      // nodes involved in any group
  std::size_t edge_count = 0;      // distinct edges incident to grouped nodes
  std::size_t largest_group = 0;
};

// Nodes bucketed by (node type, sorted (direction, relation, neighbor)
// signature); buckets verified by exact comparison, singletons discarded.
IsomorphicGroupsResult isomorphic_groups(const KnowledgeGraph& kg);

struct TypeCensus {
  std::map<std::string, std::size_t> by_node_type;
  std::map<std::string, std::size_t> by_relation;  // relation IRI -> edge count
};

TypeCensus type_census(const KnowledgeGraph& kg);

struct SourceOverlap {
  std::vector<std::string> sources;                 // sorted
  std::vector<std::vector<double>> containment;     // |A n B| / |A|; self-pairs 1
  std::vector<std::vector<double>> jaccard;
};

// Pairwise overlap of per-source asserted edge sets.
SourceOverlap source_overlap(const KnowledgeGraph& kg);

}  // namespace ontokg
