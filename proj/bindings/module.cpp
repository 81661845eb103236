// Python bindings for the ontokg core: graph building, loading, analytics,
// and query evaluation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <optional>

#include "ontokg/analytics.hpp"
#include "ontokg/build.hpp"
#include "ontokg/errors.hpp"
#include "ontokg/ntriples.hpp"
#include "ontokg/powerlaw.hpp"
#include "ontokg/query.hpp"

namespace py = pybind11;
namespace fs = std::filesystem;

namespace {

struct Graph {
  ontokg::KnowledgeGraph kg;
  ontokg::BuildReport report;
};

ontokg::LookupTables load_tables_dir(const std::string& dir) {
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

Graph build_graph(const std::string& manifests, const std::string& registry,
                  const std::string& metagraph, const std::string& anchors,
                  const std::vector<std::string>& ontologies, const std::string& tables_dir,
                  const std::string& model, bool inverse) {
  ontokg::KnowledgeGraph kg;
  ontokg::load_registry(registry, kg.interner(), kg.registry());
  const ontokg::MetaGraph meta = ontokg::load_metagraph(metagraph, kg.interner(), kg.registry());

  ontokg::BuildInputs inputs;
  inputs.manifests = ontokg::load_manifests(manifests, kg.interner(), kg.registry());
  inputs.tables = load_tables_dir(tables_dir);
  for (const std::string& base : ontologies)
    inputs.ontologies.push_back(ontokg::load_ontology(fs::path(base).filename().string(),
                                                      base + ".terms.tsv", base + ".subclass.tsv"));
  inputs.anchors = ontokg::load_anchor_map(anchors);

  ontokg::BuildOptions options;
  options.model = model == "class" ? ontokg::KnowledgeModel::ClassBased
                                   : ontokg::KnowledgeModel::InstanceBased;
  options.inverse_relations = inverse;

  ontokg::BuildResult result = ontokg::assemble(inputs, meta, options, std::move(kg));
  return Graph{std::move(result.kg), std::move(result.report)};
}

Graph load_graph(const std::string& dir, const std::string& registry) {
  return Graph{ontokg::load_graph_dir(dir, registry), {}};
}

py::dict degree_dict(const ontokg::DegreeSummary& s) {
  py::dict d;
  d["nodes"] = s.n;
  d["edges_directed"] = s.m_directed;
  d["edges_undirected"] = s.m_undirected;
  d["max_out_degree"] = s.max_out;
  d["max_in_degree"] = s.max_in;
  d["max_degree_undirected"] = s.max_undirected;
  d["mean_degree_undirected"] = s.mean_undirected;
  d["mean_degree_edges_over_nodes"] = s.paper_mean;
  d["histogram"] = s.histogram;
  d["ccdf"] = s.ccdf;
  return d;
}

py::dict fit_dict(const ontokg::PowerLawFit& fit) {
  py::dict d;
  d["alpha"] = fit.alpha;
  d["x_min"] = fit.x_min;
  d["ks"] = fit.ks;
  d["n_tail"] = fit.n_tail;
  py::dict cmps;
  for (const auto& [name, cmp] : fit.comparisons) {
    py::dict c;
    c["R"] = cmp.r;
    c["p"] = cmp.p;
    cmps[name.c_str()] = c;
  }
  d["comparisons"] = cmps;
  return d;
}

}  // namespace

PYBIND11_MODULE(ontokg, m) {
  m.doc() = "ontology-aligned knowledge graph toolkit";

  py::register_exception<ontokg::Error>(m, "OntokgError");

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("node_count", [](const Graph& g) { return g.kg.node_count(); })
      .def_property_readonly("edge_count", [](const Graph& g) { return g.kg.edge_count(); })
      .def("report_json", [](const Graph& g) { return g.report.to_json(); })
      .def("save", [](const Graph& g, const std::string& dir) {
        ontokg::save_graph_dir(g.kg, g.report, {}, dir);
      })
      .def("export_ntriples", [](const Graph& g, const std::string& path) {
        return ontokg::export_ntriples(g.kg, path);
      })
      .def("node_type",
           [](const Graph& g, const std::string& iri) {
             const ontokg::TermId id = g.kg.interner().find(iri);
             if (id == ontokg::kNoTerm || !g.kg.has_node(id))
               throw ontokg::Error("unknown node: " + iri);
             return std::string(ontokg::to_string(g.kg.node(id).type));
           })
      .def("degree_summary", [](const Graph& g) { return degree_dict(ontokg::degree_summary(g.kg)); })
      .def(
          "diameter",
          [](const Graph& g, bool exact) {
            const auto r = ontokg::diameter(ontokg::to_undirected(g.kg), exact);
            return py::make_tuple(r.value, r.exact, r.component_size);
          },
          py::arg("exact") = true)
      .def(
          "closeness",
          [](const Graph& g, std::size_t pivots, std::uint64_t seed, bool normalized) {
            const auto r =
                ontokg::closeness_approx(ontokg::to_undirected(g.kg), pivots, seed, normalized);
            py::dict d;
            d["mean"] = r.mean;
            d["pivots"] = r.pivots;
            py::dict estimates;
            for (const auto& [node, c] : r.estimates)
              estimates[g.kg.interner().iri(node).c_str()] = c;
            d["estimates"] = estimates;
            return d;
          },
          py::arg("pivots") = 256, py::arg("seed") = 42, py::arg("normalized") = false)
      .def("treewidth_upper_bound",
           [](const Graph& g) {
             const auto r = ontokg::treewidth_upper_bound(ontokg::to_undirected(g.kg));
             return r.width;
           })
      .def("isomorphic_groups",
           [](const Graph& g) {
             const auto r = ontokg::isomorphic_groups(g.kg);
             py::dict d;
             d["groups"] = r.groups.size();
             d["nodes_involved"] = r.node_count;
             d["edges_involved"] = r.edge_count;
             d["largest_group"] = r.largest_group;
             return d;
           })
      .def("census",
           [](const Graph& g) {
             const auto c = ontokg::type_census(g.kg);
             return py::make_tuple(c.by_node_type, c.by_relation);
           })
      .def("fit_degree_power_law",
           [](const Graph& g, std::optional<std::uint32_t> x_min) {
             auto degrees = ontokg::undirected_degrees(ontokg::to_undirected(g.kg));
             auto fit = ontokg::fit_power_law(degrees, x_min);
             ontokg::compare_distributions(degrees, fit);
             return fit_dict(fit);
           },
           py::arg("x_min") = std::nullopt)
      .def(
          "query",
          [](const Graph& g, const std::string& text, bool transitive_subclass) {
            const ontokg::QueryAst ast = ontokg::parse_query(text);
            ontokg::EvalOptions options;
            options.transitive_subclass = transitive_subclass;
            const ontokg::SolutionTable table = ontokg::evaluate(g.kg, ast, options);
            py::list rows;
            for (const auto& row : table.rows) {
              py::list out;
              for (const auto& v : row) {
                if (v.is_count)
                  out.append(v.count);
                else
                  out.append(g.kg.interner().iri(v.term));
              }
              rows.append(out);
            }
            return py::make_tuple(table.columns, rows);
          },
          py::arg("text"), py::arg("transitive_subclass") = false);

  m.def("build", &build_graph, py::arg("manifests"), py::arg("registry"), py::arg("metagraph"),
        py::arg("anchors"), py::arg("ontologies"), py::arg("tables") = std::string(),
        py::arg("model") = "instance", py::arg("inverse") = true);
  m.def("load", &load_graph, py::arg("dir"), py::arg("registry"));
  m.def("infer_node_type", [](const std::string& iri) {
    return std::string(ontokg::to_string(ontokg::infer_node_type(iri)));
  });
  m.def(
      "fit_power_law",
      [](const std::vector<std::uint32_t>& sample, std::optional<std::uint32_t> x_min,
         bool compare) {
        auto fit = ontokg::fit_power_law(sample, x_min);
        if (compare) ontokg::compare_distributions(sample, fit);
        return fit_dict(fit);
      },
      py::arg("sample"), py::arg("x_min") = std::nullopt, py::arg("compare") = false);
  m.def("hurwitz_zeta", &ontokg::hurwitz_zeta, py::arg("s"), py::arg("q"));

  m.attr("__version__") = "0.1.0";
}
