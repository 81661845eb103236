#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ontokg/build.hpp"
#include "ontokg/errors.hpp"
#include "ontokg/ntriples.hpp"
#include "ontokg/util.hpp"

using namespace ontokg;

TEST_CASE("ontology cleaning removes deprecated terms with their edges") {
  OntologyTermSet set;
  set.name = "toy";
  set.terms = {{"urn:t:a", "a", false}, {"urn:t:b", "b", true}, {"urn:t:c", "c", false}};
  set.subclass_edges = {{"urn:t:b", "urn:t:a"}, {"urn:t:c", "urn:t:b"}, {"urn:t:c", "urn:t:a"}};

  const auto [cleaned, report] = clean_ontology(set);
  CHECK(cleaned.terms.size() == 2);
  CHECK(cleaned.subclass_edges.size() == 1);
  CHECK(report.deprecated_removed == 1);
  CHECK(report.edges_removed == 2);

  SUBCASE("cleaning a clean set is the identity") {
    const auto [again, second] = clean_ontology(cleaned);
    CHECK(again.terms == cleaned.terms);
    CHECK(again.subclass_edges == cleaned.subclass_edges);
    CHECK(second.deprecated_removed == 0);
    CHECK(second.duplicate_terms_removed == 0);
  }
}

TEST_CASE("duplicate term rows collapse") {
  OntologyTermSet set;
  set.terms = {{"urn:t:a", "a", false}, {"urn:t:a", "a", false}};
  const auto [cleaned, report] = clean_ontology(set);
  CHECK(cleaned.terms.size() == 1);
  CHECK(report.duplicate_terms_removed == 1);
  CHECK(report.label_conflicts == 0);
}

TEST_CASE("merging unions terms and logs label conflicts") {
  OntologyTermSet a, b;
  a.terms = {{"urn:t:x", "x", false}, {"urn:t:y", "y", false}};
  a.subclass_edges = {{"urn:t:x", "urn:t:y"}};
  b.terms = {{"urn:t:z", "z", false}};

  SUBCASE("disjoint sets add up") {
    const MergeResult merged = merge_ontologies(std::vector<OntologyTermSet>{a, b});
    CHECK(merged.merged.terms.size() == 3);
    CHECK(merged.merged.subclass_edges.size() == 1);
    CHECK(merged.label_conflicts == 0);
  }
  SUBCASE("same IRI same label collapses silently") {
    b.terms.push_back({"urn:t:x", "x", false});
    const MergeResult merged = merge_ontologies(std::vector<OntologyTermSet>{a, b});
    CHECK(merged.merged.terms.size() == 3);
    CHECK(merged.label_conflicts == 0);
  }
  SUBCASE("same IRI different label keeps the first and logs") {
    b.terms.push_back({"urn:t:x", "something else", false});
    const MergeResult merged = merge_ontologies(std::vector<OntologyTermSet>{a, b});
    CHECK(merged.merged.terms.size() == 3);
    CHECK(merged.label_conflicts == 1);
    for (const OntologyTerm& term : merged.merged.terms)
      if (term.iri == "urn:t:x") CHECK(term.label == "x");
  }
}

TEST_CASE("ontology loader enforces the term/edge contract") {
  const auto dir = testing::temp_dir("onto");
  testing::write_text(dir / "t.terms.tsv", "urn:t:a\ta\t0\nurn:t:b\tb\t1\n");
  testing::write_text(dir / "t.subclass.tsv", "urn:t:b\turn:t:a\n");
  const OntologyTermSet set =
      load_ontology("t", (dir / "t.terms.tsv").string(), (dir / "t.subclass.tsv").string());
  CHECK(set.terms.size() == 2);
  CHECK(set.terms[1].deprecated);

  testing::write_text(dir / "bad.subclass.tsv", "urn:t:b\turn:t:missing\n");
  CHECK_THROWS_AS(
      load_ontology("t", (dir / "t.terms.tsv").string(), (dir / "bad.subclass.tsv").string()),
      MalformedLineError);
}

namespace {

struct EmitFixture {
  KnowledgeGraph kg;
  TermId regulates;
  AnchorMap anchors;
  std::set<std::string> ontology_iris = {"http://purl.obolibrary.org/obo/SO_0000276",
                                         "http://purl.obolibrary.org/obo/SO_0000234",
                                         "http://purl.obolibrary.org/obo/MONDO_0005059"};
  EmitFixture() {
    regulates = kg.interner().intern("urn:rel:regulates");
    kg.registry().add(regulates, "regulates activity of", std::nullopt, false);
    anchors[NodeType::Mirna] = "http://purl.obolibrary.org/obo/SO_0000276";
    anchors[NodeType::Mrna] = "http://purl.obolibrary.org/obo/SO_0000234";
  }
  SourceManifest manifest() const {
    SourceManifest m;
    m.name = "src";
    m.subject_label = NodeType::Mirna;
    m.object_label = NodeType::Mrna;
    m.relation = regulates;
    return m;
  }
};

}  // namespace

TEST_CASE("emit_triples types new non-ontological nodes exactly once") {
  EmitFixture fx;
  BuildOptions class_model{KnowledgeModel::ClassBased, true};
  TripleEmitter emitter(fx.kg, class_model, fx.anchors);
  for (const std::string& iri : fx.ontology_iris)
    emitter.add_ontology_term(fx.kg.ensure_node(iri));

  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"urn:mir:1", "urn:mrna:1"},
      {"urn:mir:1", "urn:mrna:2"},
      {"urn:mir:2", "urn:mrna:1"}};
  const EmitStats stats = emitter.emit(pairs, fx.manifest());
  CHECK(stats.asserted_added == 3);
  CHECK(stats.typing_added == 4);  // 2 miRNA + 2 mRNA nodes

  // typing edge for a miRNA node points at the configured anchor class
  const TermId mir = fx.kg.interner().find("urn:mir:1");
  const TermId subclass_of = fx.kg.registry().subclass_of();
  bool found = false;
  for (std::uint32_t i : fx.kg.edges_by_subject(mir)) {
    const EdgeRecord& e = fx.kg.edges()[i];
    if (e.relation == subclass_of) {
      found = true;
      CHECK(fx.kg.interner().iri(e.object) == "http://purl.obolibrary.org/obo/SO_0000276");
      CHECK(e.origin == EdgeOrigin::Typing);
    }
  }
  CHECK(found);

  // ontological endpoints never get typing edges
  EmitStats again = emitter.emit({{"urn:mir:1", "http://purl.obolibrary.org/obo/MONDO_0005059"}},
                                 fx.manifest());
  CHECK(again.asserted_added == 1);
  CHECK(again.typing_added == 0);
}

TEST_CASE("instance model types with rdf:type") {
  EmitFixture fx;
  BuildOptions instance_model{KnowledgeModel::InstanceBased, true};
  TripleEmitter emitter(fx.kg, instance_model, fx.anchors);
  emitter.emit({{"urn:mir:1", "urn:mrna:1"}}, fx.manifest());
  const TermId rdf_type = fx.kg.registry().rdf_type();
  CHECK(fx.kg.edges_by_relation(rdf_type).size() == 2);
  CHECK(fx.kg.edges_by_relation(fx.kg.registry().subclass_of()).empty());
}

TEST_CASE("missing anchor class is a hard error") {
  EmitFixture fx;
  fx.anchors.erase(NodeType::Mrna);
  TripleEmitter emitter(fx.kg, BuildOptions{}, fx.anchors);
  CHECK_THROWS_AS(emitter.emit({{"urn:mir:1", "urn:mrna:1"}}, fx.manifest()),
                  UnknownAnchorClassError);
}

TEST_CASE("inverse closure derives the documented counterparts") {
  KnowledgeGraph kg;
  Interner& interner = kg.interner();
  const TermId located_in = interner.intern("http://purl.obolibrary.org/obo/RO_0001025");
  const TermId location_of = interner.intern("http://purl.obolibrary.org/obo/RO_0001015");
  const TermId interacts = interner.intern("http://purl.obolibrary.org/obo/RO_0002434");
  const TermId over_expressed = interner.intern("http://purl.obolibrary.org/obo/RO_0002245");
  kg.registry().add(location_of, "location of", located_in, false);
  kg.registry().add(located_in, "located in", location_of, false);
  kg.registry().add(interacts, "interacts with", std::nullopt, true);
  kg.registry().add(over_expressed, "over-expressed in", std::nullopt, false);

  const TermId mir = kg.ensure_node("urn:n:mir_x", NodeType::Mirna);
  const TermId nucleus = kg.ensure_node("http://purl.obolibrary.org/obo/GO_0005634");
  const TermId a = kg.ensure_node("urn:n:a");
  const TermId b = kg.ensure_node("urn:n:b");
  kg.add_edge(mir, located_in, nucleus, "s1", EdgeOrigin::Asserted);
  kg.add_edge(a, interacts, b, "s2", EdgeOrigin::Asserted);
  kg.add_edge(a, over_expressed, b, "s3", EdgeOrigin::Asserted);

  const std::size_t derived = inverse_closure(kg);
  CHECK(derived == 2);  // located-in counterpart + symmetric flip; over-expressed derives nothing
  CHECK(kg.edge_count() == 5);

  bool found_location_of = false;
  for (std::uint32_t i : kg.edges_by_subject(nucleus)) {
    const EdgeRecord& e = kg.edges()[i];
    if (e.relation == location_of && e.object == mir) {
      found_location_of = true;
      CHECK(e.origin == EdgeOrigin::InverseDerived);
      REQUIRE(e.provenance.size() == 1);
      CHECK(kg.sources()[e.provenance[0]] == "s1");  // provenance inherited
    }
  }
  CHECK(found_location_of);

  CHECK(inverse_closure(kg) == 0);  // idempotent
  CHECK(kg.edge_count() == 5);
}

TEST_CASE("inverse closure is idempotent and sound on random registries") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    KnowledgeGraph kg;
    Interner& interner = kg.interner();
    std::vector<TermId> relations;
    // 6 relations: two inverse pairs, one symmetric, one plain
    for (int r = 0; r < 6; ++r)
      relations.push_back(interner.intern("urn:rel:" + std::to_string(trial) + ":" +
                                          std::to_string(r)));
    kg.registry().add(relations[0], "r0", relations[1], false);
    kg.registry().add(relations[1], "r1", relations[0], false);
    kg.registry().add(relations[2], "r2", relations[3], false);
    kg.registry().add(relations[3], "r3", relations[2], false);
    kg.registry().add(relations[4], "r4", std::nullopt, true);
    kg.registry().add(relations[5], "r5", std::nullopt, false);

    const int n = 30;
    for (int e = 0; e < 120; ++e) {
      const TermId s = kg.ensure_node("urn:n:" + std::to_string(rng() % n));
      const TermId o = kg.ensure_node("urn:n:" + std::to_string(rng() % n));
      kg.add_edge(s, relations[rng() % relations.size()], o, "src", EdgeOrigin::Asserted);
    }

    inverse_closure(kg);
    const std::size_t after_first = kg.edge_count();
    CHECK(inverse_closure(kg) == 0);
    CHECK(kg.edge_count() == after_first);

    // soundness by exhaustive scan
    std::set<std::tuple<TermId, TermId, TermId>> triples;
    for (const EdgeRecord& e : kg.edges()) triples.emplace(e.subject, e.relation, e.object);
    for (const EdgeRecord& e : kg.edges()) {
      const RelationDescriptor& desc = kg.registry().at(e.relation);
      if (desc.symmetric) CHECK(triples.count({e.object, e.relation, e.subject}) == 1);
      if (desc.inverse) CHECK(triples.count({e.object, *desc.inverse, e.subject}) == 1);
    }
  }
}

namespace {

BuildResult assemble_bundled(KnowledgeModel model) {
  KnowledgeGraph kg;
  load_registry(testing::data_path("registry.tsv"), kg.interner(), kg.registry());
  const MetaGraph meta =
      load_metagraph(testing::data_path("metagraph.tsv"), kg.interner(), kg.registry());
  BuildInputs inputs;
  inputs.manifests = load_manifests(testing::data_path("manifests.json"), kg.interner(), kg.registry());
  for (const char* name : {"gene_symbols", "protein_ids", "disease_names"})
    inputs.tables.emplace(name, load_lookup(testing::data_path(std::string("tables/") + name + ".tsv"), name));
  for (const char* base : {"so_mini", "bio_mini"})
    inputs.ontologies.push_back(load_ontology(base,
                                              testing::data_path(std::string("ontology/") + base + ".terms.tsv"),
                                              testing::data_path(std::string("ontology/") + base + ".subclass.tsv")));
  inputs.anchors = load_anchor_map(testing::data_path("anchors.tsv"));
  return assemble(inputs, meta, BuildOptions{model, true}, std::move(kg));
}

}  // namespace

TEST_CASE("bundled corpus assembles to the expected counts") {
  const BuildResult result = assemble_bundled(KnowledgeModel::ClassBased);
  const BuildReport& report = result.report;
  CHECK(report.node_count == 32);
  CHECK(report.asserted_edges == 17);
  CHECK(report.inverse_derived_edges == 7);
  CHECK(report.typing_edges == 12);
  CHECK(report.ontology_edges == 16);
  CHECK(report.total_edges() == 52);
  CHECK(result.kg.edge_count() == 52);
  CHECK(report.metagraph_violations == 0);
  CHECK(report.rejections.total() == 10);
  CHECK(report.rejections.count("tsrfun_mini", RejectReason::RaggedRow) == 1);
  CHECK(report.asserted_by_source.at("mirdb_mini") == 4);
  CHECK(report.asserted_by_source.at("hmdd_mini") == 3);  // one duplicate row collapsed
  CHECK(report.ontology_clean.deprecated_removed == 1);
  CHECK(report.ontology_clean.duplicate_terms_removed == 1);
  CHECK(report.ontology_clean.edges_removed == 1);
}

TEST_CASE("empty manifest set leaves only the ontology") {
  KnowledgeGraph kg;
  load_registry(testing::data_path("registry.tsv"), kg.interner(), kg.registry());
  const MetaGraph meta =
      load_metagraph(testing::data_path("metagraph.tsv"), kg.interner(), kg.registry());
  BuildInputs inputs;
  inputs.ontologies.push_back(load_ontology("so_mini", testing::data_path("ontology/so_mini.terms.tsv"),
                                            testing::data_path("ontology/so_mini.subclass.tsv")));
  inputs.anchors = load_anchor_map(testing::data_path("anchors.tsv"));
  const BuildResult result = assemble(inputs, meta, BuildOptions{}, std::move(kg));
  CHECK(result.report.asserted_edges == 0);
  CHECK(result.report.typing_edges == 0);
  CHECK(result.report.node_count == 6);   // cleaned so_mini terms
  CHECK(result.report.ontology_edges == 5);
}

TEST_CASE("symmetric-only corpus derives one flip per non-reciprocal edge") {
  KnowledgeGraph kg;
  const TermId interacts = kg.interner().intern("urn:rel:sym");
  kg.registry().add(interacts, "interacts", std::nullopt, true);
  const TermId a = kg.ensure_node("urn:n:a");
  const TermId b = kg.ensure_node("urn:n:b");
  const TermId c = kg.ensure_node("urn:n:c");
  kg.add_edge(a, interacts, b, "s", EdgeOrigin::Asserted);
  kg.add_edge(b, interacts, a, "s", EdgeOrigin::Asserted);  // already reciprocal
  kg.add_edge(a, interacts, c, "s", EdgeOrigin::Asserted);
  const std::size_t asserted = kg.edge_count();
  const std::size_t derived = inverse_closure(kg);
  CHECK(asserted == 3);
  CHECK(derived == 1);  // only (c, interacts, a) is new
}

TEST_CASE("export and import round-trip the edge and node sets") {
  const BuildResult result = assemble_bundled(KnowledgeModel::ClassBased);
  const auto dir = testing::temp_dir("roundtrip");
  const std::string nt = (dir / "graph.nt").string();
  export_ntriples(result.kg, nt);

  const KnowledgeGraph imported = import_ntriples(nt, testing::data_path("registry.tsv"));
  CHECK(imported.edge_count() == result.kg.edge_count());
  CHECK(imported.node_count() == result.kg.node_count());

  auto edge_set = [](const KnowledgeGraph& kg) {
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (const EdgeRecord& e : kg.edges())
      out.emplace(kg.interner().iri(e.subject), kg.interner().iri(e.relation),
                  kg.interner().iri(e.object));
    return out;
  };
  CHECK(edge_set(imported) == edge_set(result.kg));

  // export of the re-import is byte-identical
  const std::string nt2 = (dir / "graph2.nt").string();
  export_ntriples(imported, nt2);
  CHECK(read_file(nt) == read_file(nt2));
}

TEST_CASE("import rejects malformed lines and skips comments") {
  const auto dir = testing::temp_dir("ntparse");
  testing::write_text(dir / "ok.nt", "# comment\n\n<urn:n:a> <urn:rel:r> <urn:n:b> .\n");
  testing::write_text(dir / "reg.tsv", "urn:rel:r\tr\t\t0\n");
  const KnowledgeGraph kg = import_ntriples((dir / "ok.nt").string(), (dir / "reg.tsv").string());
  CHECK(kg.edge_count() == 1);
  CHECK(kg.node_count() == 2);

  testing::write_text(dir / "bad.nt", "<urn:n:a> <urn:rel:r> <urn:n:b>\n");
  CHECK_THROWS_AS(import_ntriples((dir / "bad.nt").string(), (dir / "reg.tsv").string()),
                  MalformedLineError);
}

TEST_CASE("builds are deterministic") {
  const BuildResult a = assemble_bundled(KnowledgeModel::ClassBased);
  const BuildResult b = assemble_bundled(KnowledgeModel::ClassBased);
  const auto dir = testing::temp_dir("determinism");
  save_graph_dir(a.kg, a.report, a.rejected_rows, (dir / "a").string());
  save_graph_dir(b.kg, b.report, b.rejected_rows, (dir / "b").string());
  for (const char* file : {"graph.nt", "nodes.tsv", "report.json", "rejections.tsv",
                           "rejected_rows.tsv", "provenance.tsv"})
    CHECK(read_file((dir / "a" / file).string()) == read_file((dir / "b" / file).string()));
}

TEST_CASE("graph dir reload preserves provenance for overlap analysis") {
  const BuildResult result = assemble_bundled(KnowledgeModel::ClassBased);
  const auto dir = testing::temp_dir("graphdir");
  save_graph_dir(result.kg, result.report, result.rejected_rows, dir.string());
  const KnowledgeGraph loaded = load_graph_dir(dir.string(), testing::data_path("registry.tsv"));
  CHECK(loaded.edge_count() == result.kg.edge_count());
  CHECK(loaded.node_count() == result.kg.node_count());
  std::size_t with_provenance = 0;
  for (const EdgeRecord& e : loaded.edges()) with_provenance += !e.provenance.empty();
  CHECK(with_provenance == result.report.asserted_edges + result.report.inverse_derived_edges);
}
