// ontokg: build, validate, analyze, export, and query ontology-aligned
// knowledge graphs assembled from declarative source manifests.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontokg/analytics.hpp"
#include "ontokg/build.hpp"
#include "ontokg/errors.hpp"
#include "ontokg/ntriples.hpp"
#include "ontokg/query.hpp"
#include "ontokg/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string manifests, registry, metagraph, anchors, tables_dir;
  std::vector<std::string> ontologies;
  std::string model = "instance";
  std::string inverse = "on";
  std::string graph_dir;
  std::string out_dir = ".";
  std::string query_file;
  std::string query_out;
  std::string format = "ntriples";
  std::string diameter_mode = "exact";
  std::uint64_t seed = 42;
  std::size_t pivots = 256;
  std::uint32_t xmin = 0;
  bool strict = false;
  bool transitive_subclass = false;
  bool closeness_normalized = false;
  bool sel_degree = false, sel_powerlaw = false, sel_diameter = false, sel_closeness = false;
  bool sel_treewidth = false, sel_isomorphic = false, sel_census = false, sel_overlap = false;
};

ontokg::LookupTables load_tables(const std::string& dir) {
  ontokg::LookupTables tables;
  if (dir.empty()) return tables;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tsv")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    std::string name = file.stem().string();
    tables.emplace(name, ontokg::load_lookup(file.string(), name));
  }
  return tables;
}

std::string violations_tsv(const ontokg::KnowledgeGraph& kg,
                           const ontokg::ViolationReport& report) {
  std::ostringstream out;
  out << "subject_type\trelation\tobject_type\tcount\n";
  for (const auto& [key, count] : report.counts) {
    const auto& [st, rel, ot] = key;
    out << ontokg::to_string(st) << '\t' << kg.interner().iri(rel) << '\t'
        << ontokg::to_string(ot) << '\t' << count << '\n';
  }
  return out.str();
}

int run_build(const Options& opt) {
  ontokg::KnowledgeGraph kg;
  ontokg::load_registry(opt.registry, kg.interner(), kg.registry());
  const ontokg::MetaGraph meta = ontokg::load_metagraph(opt.metagraph, kg.interner(), kg.registry());

  ontokg::BuildInputs inputs;
  inputs.manifests = ontokg::load_manifests(opt.manifests, kg.interner(), kg.registry());
  inputs.tables = load_tables(opt.tables_dir);
  for (const std::string& base : opt.ontologies)
    inputs.ontologies.push_back(ontokg::load_ontology(fs::path(base).filename().string(),
                                                      base + ".terms.tsv", base + ".subclass.tsv"));
  inputs.anchors = ontokg::load_anchor_map(opt.anchors);

  ontokg::BuildOptions options;
  options.model = opt.model == "class" ? ontokg::KnowledgeModel::ClassBased
                                       : ontokg::KnowledgeModel::InstanceBased;
  options.inverse_relations = opt.inverse == "on";

  ontokg::BuildResult result = ontokg::assemble(inputs, meta, options, std::move(kg));
  ontokg::save_graph_dir(result.kg, result.report, result.rejected_rows, opt.out_dir);
  ontokg::write_file((fs::path(opt.out_dir) / "violations.tsv").string(),
                     violations_tsv(result.kg, result.violations));

  std::cout << "nodes: " << result.report.node_count << "\nedges: " << result.report.total_edges()
            << "\nrejections: " << result.report.rejections.total()
            << "\nmetagraph violations: " << result.report.metagraph_violations << "\n";
  return opt.strict && result.report.metagraph_violations > 0 ? 1 : 0;
}

int run_validate(const Options& opt) {
  ontokg::KnowledgeGraph kg = ontokg::load_graph_dir(opt.graph_dir, opt.registry);
  const ontokg::MetaGraph meta = ontokg::load_metagraph(opt.metagraph, kg.interner(), kg.registry());
  const ontokg::ViolationReport report = ontokg::validate_against_metagraph(kg, meta);
  const std::string tsv = violations_tsv(kg, report);
  if (!opt.out_dir.empty()) {
    fs::create_directories(opt.out_dir);
    ontokg::write_file((fs::path(opt.out_dir) / "violations.tsv").string(), tsv);
  }
  std::cout << tsv;
  std::cout << "total violations: " << report.total() << "\n";
  return opt.strict && report.total() > 0 ? 1 : 0;
}

json degree_json(const ontokg::DegreeSummary& summary) {
  json j;
  j["nodes"] = summary.n;
  j["edges_directed"] = summary.m_directed;
  j["edges_undirected"] = summary.m_undirected;
  j["max_out_degree"] = summary.max_out;
  j["max_in_degree"] = summary.max_in;
  j["max_degree_undirected"] = summary.max_undirected;
  j["mean_degree_undirected"] = summary.mean_undirected;
  j["mean_degree_edges_over_nodes"] = summary.paper_mean;
  return j;
}

int run_analyze(const Options& opt) {
  Options sel = opt;
  if (!(sel.sel_degree || sel.sel_powerlaw || sel.sel_diameter || sel.sel_closeness ||
        sel.sel_treewidth || sel.sel_isomorphic || sel.sel_census || sel.sel_overlap)) {
    sel.sel_degree = sel.sel_powerlaw = sel.sel_diameter = sel.sel_closeness = true;
    sel.sel_treewidth = sel.sel_isomorphic = sel.sel_census = sel.sel_overlap = true;
  }

  ontokg::KnowledgeGraph kg = ontokg::load_graph_dir(opt.graph_dir, opt.registry);
  const ontokg::UndirectedGraph g = ontokg::to_undirected(kg);
  fs::create_directories(opt.out_dir);
  const fs::path out(opt.out_dir);

  json metrics;
  metrics["seed"] = opt.seed;

  if (sel.sel_degree || sel.sel_powerlaw) {
    const ontokg::DegreeSummary summary = ontokg::degree_summary(kg);
    if (sel.sel_degree) {
      metrics["degree"] = degree_json(summary);
      std::ostringstream hist, cc;
      for (const auto& [d, c] : summary.histogram) hist << d << '\t' << c << '\n';
      for (const auto& [x, p] : summary.ccdf) cc << x << '\t' << p << '\n';
      ontokg::write_file((out / "degree_histogram.tsv").string(), hist.str());
      ontokg::write_file((out / "ccdf.tsv").string(), cc.str());
    }
    if (sel.sel_powerlaw) {
      std::vector<std::uint32_t> degrees = ontokg::undirected_degrees(g);
      try {
        ontokg::PowerLawFit fit = ontokg::fit_power_law(
            degrees, opt.xmin > 0 ? std::optional<std::uint32_t>(opt.xmin) : std::nullopt);
        ontokg::compare_distributions(degrees, fit);
        json pl;
        pl["alpha"] = fit.alpha;
        pl["x_min"] = fit.x_min;
        pl["ks"] = fit.ks;
        pl["n_tail"] = fit.n_tail;
        for (const auto& [name, cmp] : fit.comparisons)
          pl["comparisons"][name] = {{"R", cmp.r}, {"p", cmp.p}};
        metrics["powerlaw"] = pl;
      } catch (const ontokg::DegenerateTailError& e) {
        metrics["powerlaw"] = {{"error", e.what()}};
      }
    }
  }

  if (sel.sel_diameter) {
    const ontokg::DiameterResult d = ontokg::diameter(g, opt.diameter_mode == "exact");
    metrics["diameter"] = {{"value", d.value},
                           {"exact", d.exact},
                           {"restricted_to_largest_component", d.restricted_to_largest_component},
                           {"component_size", d.component_size},
                           {"bfs_runs", d.bfs_runs}};
  }

  if (sel.sel_closeness) {
    try {
      const ontokg::ClosenessResult c =
          ontokg::closeness_approx(g, opt.pivots, opt.seed, opt.closeness_normalized);
      metrics["closeness"] = {
          {"mean", c.mean},
          {"pivots", c.pivots},
          {"seed", c.seed},
          {"normalized", c.normalized},
          {"restricted_to_largest_component", c.restricted_to_largest_component},
          {"component_size", c.component_size}};
      std::ostringstream hist;
      for (const auto& [edge, count] : c.histogram) hist << edge << '\t' << count << '\n';
      ontokg::write_file((out / "closeness_hist.tsv").string(), hist.str());
    } catch (const ontokg::IsolatedNodeError& e) {
      metrics["closeness"] = {{"error", e.what()}};
    }
  }

  if (sel.sel_treewidth) {
    const ontokg::TreewidthResult tw = ontokg::treewidth_upper_bound(g);
    metrics["treewidth"] = {{"upper_bound", tw.width}};
    std::ostringstream order;
    for (std::uint32_t v : tw.order) order << kg.interner().iri(g.node_of[v]) << '\n';
    ontokg::write_file((out / "elimination_order.tsv").string(), order.str());
  }

  if (sel.sel_isomorphic) {
    const ontokg::IsomorphicGroupsResult iso = ontokg::isomorphic_groups(kg);
    metrics["isomorphic_groups"] = {{"groups", iso.groups.size()},
                                    {"nodes_involved", iso.node_count},
                                    {"edges_involved", iso.edge_count},
                                    {"largest_group", iso.largest_group}};
  }

  if (sel.sel_census) {
    const ontokg::TypeCensus census = ontokg::type_census(kg);
    std::ostringstream nodes, rels;
    for (const auto& [type, count] : census.by_node_type) nodes << type << '\t' << count << '\n';
    for (const auto& [rel, count] : census.by_relation) rels << rel << '\t' << count << '\n';
    ontokg::write_file((out / "node_census.tsv").string(), nodes.str());
    ontokg::write_file((out / "relation_census.tsv").string(), rels.str());
    metrics["census"] = {{"node_types", census.by_node_type.size()},
                         {"relations", census.by_relation.size()}};
  }

  if (sel.sel_overlap) {
    const ontokg::SourceOverlap overlap = ontokg::source_overlap(kg);
    std::ostringstream tsv;
    tsv << "source_a\tsource_b\tcontainment\tjaccard\n";
    for (std::size_t i = 0; i < overlap.sources.size(); ++i)
      for (std::size_t j = 0; j < overlap.sources.size(); ++j)
        tsv << overlap.sources[i] << '\t' << overlap.sources[j] << '\t'
            << overlap.containment[i][j] << '\t' << overlap.jaccard[i][j] << '\n';
    ontokg::write_file((out / "source_overlap.tsv").string(), tsv.str());
    metrics["overlap"] = {{"sources", overlap.sources.size()}};
  }

  ontokg::write_file((out / "metrics.json").string(), metrics.dump(2) + "\n");
  std::cout << metrics.dump(2) << "\n";
  return 0;
}

int run_export(const Options& opt) {
  ontokg::KnowledgeGraph kg = ontokg::load_graph_dir(opt.graph_dir, opt.registry);
  fs::create_directories(opt.out_dir);
  const fs::path out(opt.out_dir);
  if (opt.format == "ntriples" || opt.format == "both") {
    const std::size_t lines = ontokg::export_ntriples(kg, (out / "graph.nt").string());
    std::cout << "ntriples: " << lines << " lines\n";
  }
  if (opt.format == "tsv" || opt.format == "both") {
    const std::size_t lines = ontokg::export_edge_tsv(kg, (out / "edges.tsv").string());
    std::cout << "edge tsv: " << lines << " rows\n";
  }
  return 0;
}

std::string render_tsv(const ontokg::KnowledgeGraph& kg, const ontokg::SolutionTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "\t" : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << '\t';
      if (row[i].is_count)
        out << row[i].count;
      else
        out << kg.interner().iri(row[i].term);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_bindings(const ontokg::KnowledgeGraph& kg, const ontokg::SolutionTable& table) {
  std::ostringstream out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const ontokg::SolutionValue& v = table.rows[r][i];
      out << "_:r" << r << " <urn:ontokg:col:" << table.columns[i] << "> ";
      if (v.is_count)
        out << '"' << v.count << '"';
      else
        out << '<' << kg.interner().iri(v.term) << '>';
      out << " .\n";
    }
  }
  return out.str();
}

int run_query(const Options& opt) {
  ontokg::KnowledgeGraph kg = ontokg::load_graph_dir(opt.graph_dir, opt.registry);
  const ontokg::QueryAst ast = ontokg::parse_query(ontokg::read_file(opt.query_file));
  ontokg::EvalOptions eval;
  eval.transitive_subclass = opt.transitive_subclass;
  const ontokg::SolutionTable table = ontokg::evaluate(kg, ast, eval);
  const std::string rendered = opt.format == "ntriples-bindings" ? render_bindings(kg, table)
                                                                 : render_tsv(kg, table);
  if (!opt.query_out.empty()) {
    ontokg::write_file(opt.query_out, rendered);
  } else {
    std::cout << rendered;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontology-aligned knowledge graph toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* build = app.add_subcommand("build", "assemble a graph from source manifests");
  build->add_option("--manifests,-m", opt.manifests, "manifest JSON file")->required();
  build->add_option("--registry,-r", opt.registry, "relation registry TSV")->required();
  build->add_option("--metagraph,-g", opt.metagraph, "meta-graph TSV")->required();
  build->add_option("--anchors,-a", opt.anchors, "anchor class map TSV")->required();
  build->add_option("--ontology", opt.ontologies,
                    "ontology base path (expects <base>.terms.tsv and <base>.subclass.tsv)");
  build->add_option("--tables,-t", opt.tables_dir, "directory of lookup tables (*.tsv)");
  build->add_option("--model", opt.model, "knowledge model")->check(CLI::IsMember({"class", "instance"}));
  build->add_option("--inverse", opt.inverse, "inverse relation closure")->check(CLI::IsMember({"on", "off"}));
  build->add_option("--out,-o", opt.out_dir, "output graph directory")->required();
  build->add_flag("--strict", opt.strict, "exit 1 on meta-graph violations");

  auto* validate = app.add_subcommand("validate", "check a graph against the meta-graph");
  validate->add_option("--in,-i", opt.graph_dir, "graph directory")->required();
  validate->add_option("--registry,-r", opt.registry, "relation registry TSV")->required();
  validate->add_option("--metagraph,-g", opt.metagraph, "meta-graph TSV")->required();
  validate->add_option("--out,-o", opt.out_dir, "output directory");
  validate->add_flag("--strict", opt.strict, "exit 1 on violations");

  auto* analyze = app.add_subcommand("analyze", "topological validation metrics");
  analyze->add_option("--in,-i", opt.graph_dir, "graph directory")->required();
  analyze->add_option("--registry,-r", opt.registry, "relation registry TSV")->required();
  analyze->add_option("--out,-o", opt.out_dir, "output directory")->required();
  analyze->add_flag("--degree", opt.sel_degree, "degree summary + histogram + CCDF");
  analyze->add_flag("--powerlaw", opt.sel_powerlaw, "power-law fit and model comparison");
  analyze->add_flag("--diameter", opt.sel_diameter, "diameter");
  analyze->add_flag("--closeness", opt.sel_closeness, "approximate closeness centrality");
  analyze->add_flag("--treewidth", opt.sel_treewidth, "treewidth upper bound");
  analyze->add_flag("--isomorphic", opt.sel_isomorphic, "isomorphic node groups");
  analyze->add_flag("--census", opt.sel_census, "node/relation census");
  analyze->add_flag("--overlap", opt.sel_overlap, "source overlap matrix");
  analyze->add_option("--seed", opt.seed, "random seed (default 42)");
  analyze->add_option("--pivots", opt.pivots, "closeness pivot count (default 256)");
  analyze->add_option("--xmin", opt.xmin, "fixed power-law cutoff (default: KS search)");
  analyze->add_option("--diameter-mode", opt.diameter_mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  analyze->add_flag("--closeness-normalized", opt.closeness_normalized,
                    "report (n-1)-scaled closeness");

  auto* exp = app.add_subcommand("export", "write N-Triples and/or edge TSV");
  exp->add_option("--in,-i", opt.graph_dir, "graph directory")->required();
  exp->add_option("--registry,-r", opt.registry, "relation registry TSV")->required();
  exp->add_option("--out,-o", opt.out_dir, "output directory")->required();
  exp->add_option("--format", opt.format, "ntriples, tsv, or both")
      ->check(CLI::IsMember({"ntriples", "tsv", "both"}));

  auto* query = app.add_subcommand("query", "evaluate a query file against a graph");
  query->add_option("--in,-i", opt.graph_dir, "graph directory")->required();
  query->add_option("--registry,-r", opt.registry, "relation registry TSV")->required();
  query->add_option("--query,-q", opt.query_file, "query file")->required();
  query->add_option("--out,-o", opt.query_out, "output file (default stdout)");
  query->add_flag("--transitive-subclass", opt.transitive_subclass,
                  "match subClassOf patterns through the hierarchy");
  query->add_option("--format", opt.format, "tsv or ntriples-bindings")
      ->check(CLI::IsMember({"tsv", "ntriples-bindings"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return run_build(opt);
    if (validate->parsed()) return run_validate(opt);
    if (analyze->parsed()) return run_analyze(opt);
    if (exp->parsed()) return run_export(opt);
    if (query->parsed()) return run_query(opt);
  } catch (const ontokg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
