#include "ontokg/analytics.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

namespace {

constexpr std::uint32_t kUnreached = 0xffffffffu;

// BFS over a component mask; distances in hops, kUnreached outside.
void bfs(const UndirectedGraph& g, std::uint32_t start, std::vector<std::uint32_t>& dist) {
  dist.assign(g.node_count(), kUnreached);
  dist[start] = 0;
  std::queue<std::uint32_t> queue;
  queue.push(start);
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop();
    for (std::uint32_t w : g.adjacent(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
}

std::uint32_t farthest(const std::vector<std::uint32_t>& dist, std::uint32_t fallback) {
  std::uint32_t best = fallback, best_d = 0;
  for (std::uint32_t v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreached && dist[v] > best_d) {
      best_d = dist[v];
      best = v;
    }
  }
  return best;
}

std::uint32_t eccentricity(const std::vector<std::uint32_t>& dist) {
  std::uint32_t e = 0;
  for (std::uint32_t d : dist)
    if (d != kUnreached && d > e) e = d;
  return e;
}

}  // namespace

std::vector<std::uint32_t> undirected_degrees(const UndirectedGraph& g) {
  std::vector<std::uint32_t> degrees(g.node_count());
  for (std::uint32_t v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

std::vector<std::pair<std::uint32_t, double>> ccdf(std::span<const std::uint32_t> degrees) {
  if (degrees.empty()) throw EmptySampleError();
  std::vector<std::uint32_t> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<std::pair<std::uint32_t, double>> points;
  for (std::size_t i = 0; i < sorted.size();) {
    const std::uint32_t x = sorted[i];
    points.emplace_back(x, static_cast<double>(sorted.size() - i) / n);
    while (i < sorted.size() && sorted[i] == x) ++i;
  }
  return points;
}

DegreeSummary degree_summary(const KnowledgeGraph& kg) {
  if (kg.node_count() == 0) throw EmptyGraphError();
  DegreeSummary s;
  s.n = kg.node_count();
  s.m_directed = kg.edge_count();

  std::unordered_map<TermId, std::uint32_t> out_deg, in_deg;
  for (const EdgeRecord& e : kg.edges()) {
    ++out_deg[e.subject];
    ++in_deg[e.object];
  }
  for (const auto& [node, d] : out_deg) s.max_out = std::max(s.max_out, d);
  for (const auto& [node, d] : in_deg) s.max_in = std::max(s.max_in, d);

  const UndirectedGraph g = to_undirected(kg);
  s.m_undirected = g.edge_count();
  std::vector<std::uint32_t> degrees = undirected_degrees(g);
  for (std::uint32_t d : degrees) s.max_undirected = std::max(s.max_undirected, d);
  s.mean_undirected = 2.0 * static_cast<double>(s.m_undirected) / static_cast<double>(s.n);
  s.paper_mean = static_cast<double>(s.m_undirected) / static_cast<double>(s.n);

  std::map<std::uint32_t, std::size_t> hist;
  for (std::uint32_t d : degrees) ++hist[d];
  s.histogram.assign(hist.begin(), hist.end());
  s.ccdf = ccdf(degrees);
  return s;
}

DiameterResult diameter(const UndirectedGraph& g, bool exact) {
  if (g.node_count() == 0) throw EmptyGraphError();
  DiameterResult result;
  result.exact = exact;

  const Components comps = connected_components(g);
  result.component_size = comps.sizes[comps.largest];
  result.restricted_to_largest_component = comps.sizes.size() > 1;
  std::uint32_t start = 0;
  while (comps.comp_of[start] != comps.largest) ++start;
  if (result.component_size == 1) return result;

  // Double sweep: BFS to the farthest node, then BFS from there.
  std::vector<std::uint32_t> dist, root_dist;
  bfs(g, start, dist);
  ++result.bfs_runs;
  const std::uint32_t a = farthest(dist, start);
  bfs(g, a, dist);
  ++result.bfs_runs;
  const std::uint32_t b = farthest(dist, a);
  std::uint32_t lower = dist[b];
  result.value = lower;
  if (!exact) return result;

  // Root at a midpoint of the a-b path (a node at half distance from a that
  // lies on a shortest path towards b), then apply iFUB level pruning.
  std::vector<std::uint32_t> dist_b;
  bfs(g, b, dist_b);
  ++result.bfs_runs;
  std::uint32_t root = a;
  const std::uint32_t half = dist[b] / 2;
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    if (dist[v] == half && dist_b[v] != kUnreached && dist[v] + dist_b[v] == dist[b]) {
      root = v;
      break;
    }
  }

  bfs(g, root, root_dist);
  ++result.bfs_runs;
  const std::uint32_t ecc_root = eccentricity(root_dist);
  std::vector<std::vector<std::uint32_t>> levels(ecc_root + 1);
  for (std::uint32_t v = 0; v < g.node_count(); ++v)
    if (root_dist[v] != kUnreached) levels[root_dist[v]].push_back(v);

  std::uint32_t lb = std::max(lower, ecc_root);
  std::uint32_t i = ecc_root;
  std::uint32_t ub = 2 * ecc_root;
  while (ub > lb && i > 0) {
    for (std::uint32_t v : levels[i]) {
      bfs(g, v, dist);
      ++result.bfs_runs;
      lb = std::max(lb, eccentricity(dist));
    }
    if (lb > 2 * (i - 1)) break;
    ub = 2 * (i - 1);
    --i;
  }
  result.value = lb;
  return result;
}

ClosenessResult closeness_approx(const UndirectedGraph& g, std::size_t pivots, std::uint64_t seed,
                                 bool normalized, std::size_t bins) {
  if (g.node_count() == 0) throw EmptyGraphError();
  if (pivots < 1) throw Error("closeness needs at least one pivot");

  ClosenessResult result;
  result.seed = seed;
  result.normalized = normalized;

  const Components comps = connected_components(g);
  result.restricted_to_largest_component = comps.sizes.size() > 1;
  result.component_size = comps.sizes[comps.largest];
  if (result.component_size == 1) throw IsolatedNodeError();

  std::vector<std::uint32_t> members;
  members.reserve(result.component_size);
  for (std::uint32_t v = 0; v < g.node_count(); ++v)
    if (comps.comp_of[v] == comps.largest) members.push_back(v);

  const std::size_t n = members.size();
  const std::size_t k = std::min(pivots, n);
  result.pivots = k;

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> pivot_members = sample_without_replacement(n, k, rng);

  // Distance sums are integers; accumulation order cannot change them.
  std::vector<std::uint64_t> sum(g.node_count(), 0);
  std::vector<std::uint32_t> hit(g.node_count(), 0);  // pivots other than v
  std::vector<std::uint32_t> dist;
  for (std::uint32_t pi : pivot_members) {
    const std::uint32_t p = members[pi];
    bfs(g, p, dist);
    for (std::uint32_t v : members) {
      if (v == p) continue;
      sum[v] += dist[v];
      ++hit[v];
    }
  }

  result.estimates.reserve(n);
  double total = 0.0;
  for (std::uint32_t v : members) {
    double estimate;
    if (hit[v] == 0) {
      // Only possible when the single pivot is v itself; fall back to exact.
      bfs(g, v, dist);
      std::uint64_t s = 0;
      for (std::uint32_t u : members) s += dist[u];
      estimate = 1.0 / static_cast<double>(s);
    } else {
      const double scaled =
          static_cast<double>(n - 1) * static_cast<double>(sum[v]) / static_cast<double>(hit[v]);
      estimate = 1.0 / scaled;
    }
    if (normalized) estimate *= static_cast<double>(n - 1);
    result.estimates.emplace_back(g.node_of[v], estimate);
    total += estimate;
  }
  result.mean = total / static_cast<double>(n);

  double lo = result.estimates.front().second, hi = lo;
  for (const auto& [node, c] : result.estimates) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (bins > 0) {
    const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
    std::vector<std::size_t> counts(bins, 0);
    for (const auto& [node, c] : result.estimates) {
      std::size_t b = static_cast<std::size_t>((c - lo) / width);
      if (b >= bins) b = bins - 1;
      ++counts[b];
    }
    for (std::size_t b = 0; b < bins; ++b)
      result.histogram.emplace_back(lo + width * static_cast<double>(b), counts[b]);
  }
  return result;
}

namespace {

struct EliminationState {
  std::vector<std::set<std::uint32_t>> adj;
  explicit EliminationState(const UndirectedGraph& g) : adj(g.node_count()) {
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
      for (std::uint32_t w : g.adjacent(v)) adj[v].insert(w);
  }
  std::uint32_t eliminate(std::uint32_t v) {
    const std::uint32_t width = static_cast<std::uint32_t>(adj[v].size());
    std::vector<std::uint32_t> nbrs(adj[v].begin(), adj[v].end());
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[nbrs[i]].insert(nbrs[j]);
        adj[nbrs[j]].insert(nbrs[i]);
      }
    for (std::uint32_t w : nbrs) adj[w].erase(v);
    adj[v].clear();
    return width;
  }
};

}  // namespace

TreewidthResult treewidth_upper_bound(const UndirectedGraph& g) {
  TreewidthResult result;
  const std::size_t n = g.node_count();
  EliminationState state(g);

  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (degree, node): min-heap, ties by id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::uint32_t v = 0; v < n; ++v)
    heap.emplace(static_cast<std::uint32_t>(state.adj[v].size()), v);

  std::vector<bool> eliminated(n, false);
  result.order.reserve(n);
  while (!heap.empty()) {
    auto [deg, v] = heap.top();
    heap.pop();
    if (eliminated[v] || deg != state.adj[v].size()) continue;  // stale entry
    eliminated[v] = true;
    std::vector<std::uint32_t> nbrs(state.adj[v].begin(), state.adj[v].end());
    result.width = std::max(result.width, state.eliminate(v));
    result.order.push_back(v);
    for (std::uint32_t w : nbrs)
      if (!eliminated[w]) heap.emplace(static_cast<std::uint32_t>(state.adj[w].size()), w);
  }
  return result;
}

std::uint32_t treewidth_replay(const UndirectedGraph& g, std::span<const std::uint32_t> order) {
  EliminationState state(g);
  std::uint32_t width = 0;
  for (std::uint32_t v : order) width = std::max(width, state.eliminate(v));
  return width;
}

IsomorphicGroupsResult isomorphic_groups(const KnowledgeGraph& kg) {
  // Signature entry: (direction, relation, neighbor). 0 = outgoing.
  using Entry = std::tuple<std::uint8_t, TermId, TermId>;
  std::unordered_map<TermId, std::vector<Entry>> signature;
  for (const EdgeRecord& e : kg.edges()) {
    signature[e.subject].emplace_back(0, e.relation, e.object);
    signature[e.object].emplace_back(1, e.relation, e.subject);
  }

  std::map<std::pair<NodeType, std::vector<Entry>>, std::vector<TermId>> buckets;
  for (TermId v : kg.node_ids()) {
    auto& sig = signature[v];
    std::sort(sig.begin(), sig.end());
    buckets[{kg.node(v).type, sig}].push_back(v);
  }

  IsomorphicGroupsResult result;
  std::set<TermId> grouped;
  for (auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    IsomorphicGroup group;
    group.type = key.first;
    group.group_degree = key.second.size();
    group.members = members;
    result.largest_group = std::max(result.largest_group, members.size());
    result.node_count += members.size();
    for (TermId m : members) grouped.insert(m);
    result.groups.push_back(std::move(group));
  }
  const auto& edges = kg.edges();
  for (const EdgeRecord& e : edges)
    if (grouped.count(e.subject) || grouped.count(e.object)) ++result.edge_count;
  return result;
}

TypeCensus type_census(const KnowledgeGraph& kg) {
  TypeCensus census;
  for (TermId v : kg.node_ids()) ++census.by_node_type[std::string(to_string(kg.node(v).type))];
  for (const EdgeRecord& e : kg.edges()) ++census.by_relation[kg.interner().iri(e.relation)];
  return census;
}

SourceOverlap source_overlap(const KnowledgeGraph& kg) {
  SourceOverlap overlap;
  std::map<std::string, std::set<std::uint32_t>> edge_sets;
  const auto& edges = kg.edges();
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (edges[i].origin != EdgeOrigin::Asserted) continue;
    for (SourceId sid : edges[i].provenance) edge_sets[kg.sources()[sid]].insert(i);
  }
  for (const auto& [name, set] : edge_sets) overlap.sources.push_back(name);

  const std::size_t k = overlap.sources.size();
  overlap.containment.assign(k, std::vector<double>(k, 0.0));
  overlap.jaccard.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = edge_sets[overlap.sources[i]];
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) {
        overlap.containment[i][j] = 1.0;
        overlap.jaccard[i][j] = 1.0;
        continue;
      }
      const auto& b = edge_sets[overlap.sources[j]];
      std::size_t common = 0;
      for (std::uint32_t e : a) common += b.count(e);
      const std::size_t unions = a.size() + b.size() - common;
      overlap.containment[i][j] = a.empty() ? 0.0 : static_cast<double>(common) / a.size();
      overlap.jaccard[i][j] = unions == 0 ? 0.0 : static_cast<double>(common) / unions;
    }
  }
  return overlap;
}

}  // namespace ontokg
