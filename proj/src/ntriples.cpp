#include "ontokg/ntriples.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <optional>
#include <sstream>

#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

namespace {

std::optional<EdgeOrigin> parse_origin(std::string_view s) {
  if (s == "asserted") return EdgeOrigin::Asserted;
  if (s == "inverse_derived") return EdgeOrigin::InverseDerived;
  if (s == "ontology") return EdgeOrigin::Ontology;
  if (s == "typing") return EdgeOrigin::Typing;
  return std::nullopt;
}

// Strict `<s> <p> <o> .` with single spaces, as written by the exporter.
std::array<std::string, 3> parse_triple_line(const std::string& path, std::size_t line_no,
                                             std::string_view line) {
  std::array<std::string, 3> out;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (pos >= line.size() || line[pos] != '<')
      throw MalformedLineError(path, line_no, "expected '<'");
    const std::size_t end = line.find('>', pos + 1);
    if (end == std::string_view::npos)
      throw MalformedLineError(path, line_no, "unterminated IRI");
    out[i] = std::string(line.substr(pos + 1, end - pos - 1));
    if (out[i].empty()) throw MalformedLineError(path, line_no, "empty IRI");
    pos = end + 1;
    if (pos >= line.size() || line[pos] != ' ')
      throw MalformedLineError(path, line_no, "expected single space");
    ++pos;
  }
  if (line.substr(pos) != ".")
    throw MalformedLineError(path, line_no, "expected terminal ' .'");
  return out;
}

EdgeOrigin infer_origin(const KnowledgeGraph& kg, TermId relation) {
  if (relation == kg.registry().subclass_of()) return EdgeOrigin::Ontology;
  if (relation == kg.registry().rdf_type()) return EdgeOrigin::Typing;
  return EdgeOrigin::Asserted;
}

}  // namespace

std::size_t export_ntriples(const KnowledgeGraph& kg, const std::string& path) {
  std::vector<std::string> lines;
  lines.reserve(kg.edge_count());
  const Interner& interner = kg.interner();
  for (const EdgeRecord& e : kg.edges()) {
    lines.push_back("<" + interner.iri(e.subject) + "> <" + interner.iri(e.relation) + "> <" +
                    interner.iri(e.object) + "> .");
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const std::string& line : lines) out << line << '\n';
  write_file(path, out.str());
  return lines.size();
}

std::size_t export_edge_tsv(const KnowledgeGraph& kg, const std::string& path) {
  std::vector<std::string> lines;
  lines.reserve(kg.edge_count());
  const Interner& interner = kg.interner();
  for (const EdgeRecord& e : kg.edges()) {
    std::string sources;
    for (SourceId sid : e.provenance) {
      if (!sources.empty()) sources += ',';
      sources += kg.sources()[sid];
    }
    lines.push_back(interner.iri(e.subject) + "\t" + interner.iri(e.relation) + "\t" +
                    interner.iri(e.object) + "\t" + std::string(to_string(e.origin)) + "\t" +
                    sources);
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  out << "subject\trelation\tobject\torigin\tsources\n";
  for (const std::string& line : lines) out << line << '\n';
  write_file(path, out.str());
  return lines.size();
}

void import_ntriples_into(const std::string& path, KnowledgeGraph& kg) {
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto [s, p, o] = parse_triple_line(path, line_no, line);
    const TermId subject = kg.ensure_node(s);
    const TermId object = kg.ensure_node(o);
    const TermId relation = kg.interner().intern(p);
    if (!kg.registry().contains(relation)) throw UnknownRelationError(p);
    kg.add_edge(subject, relation, object, std::vector<SourceId>{}, infer_origin(kg, relation));
  }
}

KnowledgeGraph import_ntriples(const std::string& path, const std::string& registry_path) {
  KnowledgeGraph kg;
  load_registry(registry_path, kg.interner(), kg.registry());
  import_ntriples_into(path, kg);
  return kg;
}

void save_graph_dir(const KnowledgeGraph& kg, const BuildReport& report,
                    const std::vector<RejectedRow>& rejected_rows, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  export_ntriples(kg, (base / "graph.nt").string());

  std::vector<std::string> node_lines;
  for (TermId id : kg.node_ids()) {
    const NodeInfo& info = kg.node(id);
    node_lines.push_back(kg.interner().iri(id) + "\t" + std::string(to_string(info.type)) + "\t" +
                         info.label);
  }
  std::sort(node_lines.begin(), node_lines.end());
  std::ostringstream nodes;
  for (const std::string& line : node_lines) nodes << line << '\n';
  write_file((base / "nodes.tsv").string(), nodes.str());

  std::vector<std::string> prov_lines;
  for (const EdgeRecord& e : kg.edges()) {
    std::string sources;
    for (SourceId sid : e.provenance) {
      if (!sources.empty()) sources += ',';
      sources += kg.sources()[sid];
    }
    prov_lines.push_back(kg.interner().iri(e.subject) + "\t" + kg.interner().iri(e.relation) +
                         "\t" + kg.interner().iri(e.object) + "\t" +
                         std::string(to_string(e.origin)) + "\t" + sources);
  }
  std::sort(prov_lines.begin(), prov_lines.end());
  std::ostringstream prov;
  for (const std::string& line : prov_lines) prov << line << '\n';
  write_file((base / "provenance.tsv").string(), prov.str());

  write_file((base / "report.json").string(), report.to_json());
  write_file((base / "rejections.tsv").string(), report.rejections.to_tsv());

  std::vector<RejectedRow> log = rejected_rows;
  std::stable_sort(log.begin(), log.end(), [](const RejectedRow& a, const RejectedRow& b) {
    return std::tie(a.source, a.line) < std::tie(b.source, b.line);
  });
  std::ostringstream rows;
  for (const RejectedRow& row : log)
    rows << row.source << '\t' << row.line << '\t' << row.reason << '\n';
  write_file((base / "rejected_rows.tsv").string(), rows.str());
}

KnowledgeGraph load_graph_dir(const std::string& dir, const std::string& registry_path) {
  const std::filesystem::path base(dir);
  KnowledgeGraph kg;
  load_registry(registry_path, kg.interner(), kg.registry());

  const std::string nodes_path = (base / "nodes.tsv").string();
  if (std::filesystem::exists(nodes_path)) {
    std::size_t line_no = 0;
    for (const std::string& raw : read_lines(nodes_path)) {
      ++line_no;
      if (trim(raw).empty()) continue;
      std::vector<std::string> cols = split(raw, '\t');
      if (cols.size() < 2) throw MalformedLineError(nodes_path, line_no, "expected iri<TAB>type");
      auto type = parse_node_type(cols[1]);
      if (!type) throw MalformedLineError(nodes_path, line_no, "unknown node type");
      kg.ensure_node(cols[0], *type, cols.size() > 2 ? cols[2] : std::string());
    }
  }

  const std::string prov_path = (base / "provenance.tsv").string();
  if (std::filesystem::exists(prov_path)) {
    std::size_t line_no = 0;
    for (const std::string& raw : read_lines(prov_path)) {
      ++line_no;
      if (trim(raw).empty()) continue;
      std::vector<std::string> cols = split(raw, '\t');
      if (cols.size() < 4)
        throw MalformedLineError(prov_path, line_no, "expected s<TAB>r<TAB>o<TAB>origin[<TAB>sources]");
      auto origin = parse_origin(cols[3]);
      if (!origin) throw MalformedLineError(prov_path, line_no, "unknown edge origin");
      const TermId s = kg.ensure_node(cols[0]);
      const TermId o = kg.ensure_node(cols[2]);
      const TermId r = kg.interner().intern(cols[1]);
      if (!kg.registry().contains(r)) throw UnknownRelationError(cols[1]);
      std::vector<SourceId> provenance;
      if (cols.size() > 4 && !cols[4].empty())
        for (const std::string& name : split(cols[4], ','))
          provenance.push_back(kg.source_id(name));
      std::sort(provenance.begin(), provenance.end());
      provenance.erase(std::unique(provenance.begin(), provenance.end()), provenance.end());
      kg.add_edge(s, r, o, std::move(provenance), *origin);
    }
  }

  // graph.nt stays canonical: pick up any edge the sidecar does not cover.
  import_ntriples_into((base / "graph.nt").string(), kg);
  return kg;
}

}  // namespace ontokg
