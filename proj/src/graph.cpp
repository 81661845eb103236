#include "ontokg/graph.hpp"

#include <algorithm>
#include <queue>

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

namespace {

std::uint64_t triple_hash(TermId s, TermId r, TermId o) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t part : {std::uint64_t(s), std::uint64_t(r), std::uint64_t(o)}) {
    h ^= part + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::span<const std::uint32_t> lookup_span(
    const std::unordered_map<TermId, std::vector<std::uint32_t>>& index, TermId id) {
  auto it = index.find(id);
  if (it == index.end()) return {};
  return {it->second.data(), it->second.size()};
}

}  // namespace

std::string_view to_string(EdgeOrigin origin) {
  switch (origin) {
    case EdgeOrigin::Asserted: return "asserted";
    case EdgeOrigin::InverseDerived: return "inverse_derived";
    case EdgeOrigin::Ontology: return "ontology";
    case EdgeOrigin::Typing: return "typing";
  }
  return "asserted";
}

KnowledgeGraph::KnowledgeGraph() { registry_.ensure_builtins(interner_); }

SourceId KnowledgeGraph::source_id(std::string_view name) {
  auto it = source_ids_.find(std::string(name));
  if (it != source_ids_.end()) return it->second;
  const SourceId id = static_cast<SourceId>(source_names_.size());
  source_names_.emplace_back(name);
  source_ids_.emplace(std::string(name), id);
  return id;
}

TermId KnowledgeGraph::ensure_node(std::string_view iri, std::optional<NodeType> type,
                                   std::string_view label) {
  const TermId id = interner_.intern(iri);
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    nodes_.emplace(id, NodeInfo{type.value_or(infer_node_type(iri)), std::string(label)});
    node_order_.push_back(id);
    node_order_sorted_ = false;
  } else if (it->second.label.empty() && !label.empty()) {
    it->second.label = std::string(label);
  }
  return id;
}

bool KnowledgeGraph::has_node(TermId id) const { return nodes_.count(id) > 0; }

const NodeInfo& KnowledgeGraph::node(TermId id) const { return nodes_.at(id); }

std::vector<TermId> KnowledgeGraph::node_ids() const {
  if (!node_order_sorted_) {
    auto& order = const_cast<std::vector<TermId>&>(node_order_);
    std::sort(order.begin(), order.end());
    node_order_sorted_ = true;
  }
  return node_order_;
}

bool KnowledgeGraph::add_edge(TermId subject, TermId relation, TermId object,
                              std::string_view source, EdgeOrigin origin) {
  if (origin == EdgeOrigin::Asserted && source.empty())
    throw Error("asserted edges require a provenance source");
  std::vector<SourceId> provenance;
  if (!source.empty()) provenance.push_back(source_id(source));
  return add_edge(subject, relation, object, std::move(provenance), origin);
}

bool KnowledgeGraph::add_edge(TermId subject, TermId relation, TermId object,
                              std::vector<SourceId> provenance, EdgeOrigin origin) {
  if (!registry_.contains(relation)) throw UnknownRelationError(interner_.iri(relation));
  if (!has_node(subject)) ensure_node(interner_.iri(subject));
  if (!has_node(object)) ensure_node(interner_.iri(object));

  const std::uint64_t key = triple_hash(subject, relation, object);
  auto& bucket = edge_index_[key];
  for (std::uint32_t idx : bucket) {
    EdgeRecord& e = edges_[idx];
    if (e.subject == subject && e.relation == relation && e.object == object) {
      for (SourceId sid : provenance) {
        auto pos = std::lower_bound(e.provenance.begin(), e.provenance.end(), sid);
        if (pos == e.provenance.end() || *pos != sid) e.provenance.insert(pos, sid);
      }
      return false;
    }
  }

  EdgeRecord record{subject, relation, object, origin, std::move(provenance)};
  const std::uint32_t idx = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(std::move(record));
  bucket.push_back(idx);
  by_subject_[subject].push_back(idx);
  by_object_[object].push_back(idx);
  by_relation_[relation].push_back(idx);
  return true;
}

std::span<const std::uint32_t> KnowledgeGraph::edges_by_subject(TermId id) const {
  return lookup_span(by_subject_, id);
}
std::span<const std::uint32_t> KnowledgeGraph::edges_by_object(TermId id) const {
  return lookup_span(by_object_, id);
}
std::span<const std::uint32_t> KnowledgeGraph::edges_by_relation(TermId id) const {
  return lookup_span(by_relation_, id);
}

UndirectedGraph to_undirected(const KnowledgeGraph& kg) {
  UndirectedGraph g;
  g.node_of = kg.node_ids();
  g.index_of.reserve(g.node_of.size());
  for (std::uint32_t i = 0; i < g.node_of.size(); ++i) g.index_of.emplace(g.node_of[i], i);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(kg.edge_count());
  for (const EdgeRecord& e : kg.edges()) {
    if (e.subject == e.object) continue;
    std::uint32_t u = g.index_of.at(e.subject);
    std::uint32_t v = g.index_of.at(e.object);
    if (u > v) std::swap(u, v);
    pairs.emplace_back(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  const std::size_t n = g.node_of.size();
  std::vector<std::uint32_t> degree(n, 0);
  for (auto [u, v] : pairs) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] = g.offsets[i] + degree[i];
  g.neighbors.resize(pairs.size() * 2);
  std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [u, v] : pairs) {
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  return g;
}

UndirectedGraph make_undirected(std::size_t n,
                                std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  UndirectedGraph g;
  g.node_of.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.node_of[i] = i;
    g.index_of.emplace(i, i);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) continue;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<std::uint32_t> degree(n, 0);
  for (auto [u, v] : pairs) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] = g.offsets[i] + degree[i];
  g.neighbors.resize(pairs.size() * 2);
  std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [u, v] : pairs) {
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  return g;
}

Components connected_components(const UndirectedGraph& g) {
  Components c;
  const std::size_t n = g.node_count();
  c.comp_of.assign(n, 0xffffffffu);
  std::queue<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (c.comp_of[start] != 0xffffffffu) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(c.sizes.size());
    c.sizes.push_back(0);
    c.comp_of[start] = id;
    queue.push(start);
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop();
      ++c.sizes[id];
      for (std::uint32_t w : g.adjacent(v)) {
        if (c.comp_of[w] == 0xffffffffu) {
          c.comp_of[w] = id;
          queue.push(w);
        }
      }
    }
  }
  for (std::uint32_t id = 0; id < c.sizes.size(); ++id)
    if (c.sizes[id] > c.sizes[c.largest]) c.largest = id;
  return c;
}

void MetaGraph::allow(NodeType subject, TermId relation, NodeType object) {
  allowed_.emplace(subject, relation, object);
}

void MetaGraph::close(const RelationRegistry& registry) {
  std::set<std::tuple<NodeType, TermId, NodeType>> closed = allowed_;
  for (const auto& [s, r, o] : allowed_) {
    if (registry.is_symmetric(r)) closed.emplace(o, r, s);
    if (auto inv = registry.inverse_of(r)) closed.emplace(o, *inv, s);
  }
  allowed_ = std::move(closed);
}

bool MetaGraph::allows(NodeType subject, TermId relation, NodeType object) const {
  return allowed_.count({subject, relation, object}) > 0;
}

MetaGraph load_metagraph(const std::string& path, Interner& interner,
                         const RelationRegistry& registry) {
  MetaGraph meta;
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3)
      throw MalformedLineError(path, line_no, "expected subject_type<TAB>relation_iri<TAB>object_type");
    auto subject = parse_node_type(trim(cols[0]));
    auto object = parse_node_type(trim(cols[2]));
    if (!subject || !object)
      throw MalformedLineError(path, line_no, "unknown node type token");
    const TermId rel = interner.intern(trim(cols[1]));
    if (!registry.contains(rel)) throw UnknownRelationError(std::string(trim(cols[1])));
    meta.allow(*subject, rel, *object);
  }
  meta.close(registry);
  return meta;
}

ViolationReport validate_against_metagraph(const KnowledgeGraph& kg, const MetaGraph& meta) {
  ViolationReport report;
  const auto& edges = kg.edges();
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const EdgeRecord& e = edges[i];
    if (e.origin == EdgeOrigin::Ontology || e.origin == EdgeOrigin::Typing) continue;
    const NodeType st = kg.node(e.subject).type;
    const NodeType ot = kg.node(e.object).type;
    if (meta.allows(st, e.relation, ot)) continue;
    report.edge_indexes.push_back(i);
    ++report.counts[{st, e.relation, ot}];
  }
  return report;
}

}  // namespace ontokg
