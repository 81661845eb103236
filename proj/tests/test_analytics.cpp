#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ontokg/analytics.hpp"
#include "ontokg/errors.hpp"
#include "oracles.hpp"

using namespace ontokg;

namespace {

KnowledgeGraph graph_with_relation(const char* rel_iri = "urn:rel:r") {
  KnowledgeGraph kg;
  const TermId rel = kg.interner().intern(rel_iri);
  kg.registry().add(rel, "r", std::nullopt, false);
  return kg;
}

UndirectedGraph path_graph(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_undirected(n, edges);
}

UndirectedGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return make_undirected(n, edges);
}

UndirectedGraph clique_graph(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_undirected(n, edges);
}

}  // namespace

TEST_CASE("ccdf follows the at-or-above convention") {
  using Points = std::vector<std::pair<std::uint32_t, double>>;
  CHECK(ccdf(std::vector<std::uint32_t>{1, 1, 2, 4}) ==
        Points{{1, 1.0}, {2, 0.5}, {4, 0.25}});
  CHECK(ccdf(std::vector<std::uint32_t>{3, 3, 3}) == Points{{3, 1.0}});
  CHECK(ccdf(std::vector<std::uint32_t>{7}) == Points{{7, 1.0}});
  CHECK_THROWS_AS(ccdf(std::vector<std::uint32_t>{}), EmptySampleError);
}

TEST_CASE("ccdf is non-increasing and 1 at the minimum on random samples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint32_t> sample;
    for (int i = 0; i < 200; ++i) sample.push_back(rng() % 50);
    const auto points = ccdf(sample);
    CHECK(points.front().second == 1.0);
    for (std::size_t i = 1; i < points.size(); ++i)
      CHECK(points[i].second <= points[i - 1].second);
  }
}

TEST_CASE("degree summary on the documented shapes") {
  SUBCASE("triangle") {
    KnowledgeGraph kg = graph_with_relation();
    const TermId rel = kg.interner().find("urn:rel:r");
    const TermId a = kg.ensure_node("urn:n:a"), b = kg.ensure_node("urn:n:b"),
                 c = kg.ensure_node("urn:n:c");
    kg.add_edge(a, rel, b, "s", EdgeOrigin::Asserted);
    kg.add_edge(b, rel, c, "s", EdgeOrigin::Asserted);
    kg.add_edge(c, rel, a, "s", EdgeOrigin::Asserted);
    const DegreeSummary s = degree_summary(kg);
    CHECK(s.max_undirected == 2);
    CHECK(s.mean_undirected == doctest::Approx(2.0));
    CHECK(s.ccdf == std::vector<std::pair<std::uint32_t, double>>{{2, 1.0}});
  }
  SUBCASE("star with five leaves") {
    KnowledgeGraph kg = graph_with_relation();
    const TermId rel = kg.interner().find("urn:rel:r");
    const TermId hub = kg.ensure_node("urn:n:hub");
    for (int i = 0; i < 5; ++i)
      kg.add_edge(hub, rel, kg.ensure_node("urn:n:leaf" + std::to_string(i)), "s",
                  EdgeOrigin::Asserted);
    const DegreeSummary s = degree_summary(kg);
    CHECK(s.max_undirected == 5);
    CHECK(s.histogram ==
          std::vector<std::pair<std::uint32_t, std::size_t>>{{1, 5}, {5, 1}});
  }
  SUBCASE("directed maxima") {
    KnowledgeGraph kg = graph_with_relation();
    const TermId rel = kg.interner().find("urn:rel:r");
    const TermId a = kg.ensure_node("urn:n:a");
    kg.add_edge(a, rel, kg.ensure_node("urn:n:b"), "s", EdgeOrigin::Asserted);
    kg.add_edge(a, rel, kg.ensure_node("urn:n:c"), "s", EdgeOrigin::Asserted);
    const DegreeSummary s = degree_summary(kg);
    CHECK(s.max_out == 2);
    CHECK(s.max_in == 1);
  }
  SUBCASE("empty graph") {
    KnowledgeGraph kg = graph_with_relation();
    CHECK_THROWS_AS(degree_summary(kg), EmptyGraphError);
  }
}

TEST_CASE("hurwitz zeta matches reference values") {
  CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(1.6449340668482264).epsilon(1e-12));
  CHECK(hurwitz_zeta(1.832, 5.0) == doctest::Approx(0.34281536684125007).epsilon(1e-12));
  CHECK(hurwitz_zeta(2.5, 3.0) == doctest::Approx(0.1647105619542803).epsilon(1e-12));
  CHECK(hurwitz_zeta(1.2, 1.0) == doctest::Approx(5.591582441177752).epsilon(1e-12));
  CHECK(hurwitz_zeta(3.5, 12.0) == doctest::Approx(0.0008894529418800161).epsilon(1e-12));
  CHECK(hurwitz_zeta(1.832, 1.0) == doctest::Approx(1.8362141386452713).epsilon(1e-12));
}

TEST_CASE("discrete MLE matches the closed-form example") {
  const std::vector<std::uint32_t> sample = {1, 1, 1, 2, 4};
  const PowerLawFit fit = fit_power_law(sample, 1u);
  CHECK(fit.alpha == doctest::Approx(1.9016844005556022).epsilon(1e-12));
  CHECK(fit.n_tail == 5);
  CHECK(fit.x_min == 1);
  CHECK(fit.ks >= 0.0);
  CHECK(fit.ks <= 1.0);
}

TEST_CASE("degenerate tails are rejected") {
  CHECK_THROWS_AS(fit_power_law(std::vector<std::uint32_t>{5, 5, 5}, 5u), DegenerateTailError);
  CHECK_THROWS_AS(fit_power_law(std::vector<std::uint32_t>{}), EmptySampleError);
}

TEST_CASE("continuous-form estimator is exactly scale invariant") {
  std::mt19937_64 rng(17);
  std::vector<std::uint32_t> sample;
  oracles::PowerLawSampler sampler(2.2, 3);
  for (int i = 0; i < 2000; ++i) sample.push_back(sampler.draw(rng));

  const PowerLawFit base = fit_power_law(sample, 3u, false);
  for (std::uint32_t factor : {2u, 5u}) {
    std::vector<std::uint32_t> scaled;
    for (std::uint32_t v : sample) scaled.push_back(v * factor);
    const PowerLawFit fit = fit_power_law(scaled, 3u * factor, false);
    CHECK(fit.alpha == doctest::Approx(base.alpha).epsilon(1e-12));
  }
  // with the continuity correction the perturbation is small but nonzero
  const PowerLawFit corrected = fit_power_law(sample, 3u, true);
  std::vector<std::uint32_t> doubled;
  for (std::uint32_t v : sample) doubled.push_back(v * 2);
  const PowerLawFit corrected2 = fit_power_law(doubled, 6u, true);
  CHECK(corrected.alpha != corrected2.alpha);
  CHECK(std::abs(corrected.alpha - corrected2.alpha) < 0.2);
}

TEST_CASE("x_min search recovers the generating cutoff region") {
  std::mt19937_64 rng(99);
  oracles::PowerLawSampler sampler(2.5, 4);
  std::vector<std::uint32_t> sample;
  for (int i = 0; i < 20000; ++i) sample.push_back(sampler.draw(rng));
  const PowerLawFit fit = fit_power_law(sample);
  CHECK(fit.x_min >= 4);   // never below the generating cutoff
  CHECK(fit.x_min <= 15);  // finite-sample KS noise can push it a little up
  CHECK(fit.alpha == doctest::Approx(2.5).epsilon(0.08));
}

TEST_CASE("vuong verdicts separate the generating families") {
  std::mt19937_64 rng(7);
  SUBCASE("power-law data favor the power law over the exponential") {
    oracles::PowerLawSampler sampler(2.5, 2);
    std::vector<std::uint32_t> sample;
    for (int i = 0; i < 20000; ++i) sample.push_back(sampler.draw(rng));
    PowerLawFit fit = fit_power_law(sample, 2u);
    compare_distributions(sample, fit);
    CHECK(fit.comparisons.at("exponential").r > 0);
    CHECK(fit.comparisons.at("exponential").p < 0.01);
  }
  SUBCASE("geometric data favor the exponential") {
    std::vector<std::uint32_t> sample;
    for (int i = 0; i < 20000; ++i) sample.push_back(oracles::draw_geometric(rng, 0.8, 2));
    PowerLawFit fit = fit_power_law(sample, 2u);
    compare_distributions(sample, fit);
    CHECK(fit.comparisons.at("exponential").r < 0);
  }
  SUBCASE("identical likelihood vectors give R = 0") {
    const std::vector<double> ll = {-1.0, -2.0, -1.5, -3.0};
    const ModelComparison cmp = vuong_test(ll, ll);
    CHECK(cmp.r == 0.0);
    CHECK(cmp.p == 1.0);
  }
}

TEST_CASE("diameter on closed forms and against the oracle") {
  CHECK(diameter(path_graph(4)).value == 3);
  CHECK(diameter(cycle_graph(6)).value == 3);
  CHECK(diameter(path_graph(17)).value == 16);
  CHECK(diameter(cycle_graph(9)).value == 4);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 50 + rng() % 450;
    const auto edges = oracles::random_connected_edges(n, n / 2, rng);
    const UndirectedGraph g = make_undirected(n, edges);
    const DiameterResult exact = diameter(g, true);
    CHECK(exact.value == oracles::diameter_brute_force(n, edges));
    // sandwich: heuristic lower bound <= exact <= 2 * any eccentricity
    const DiameterResult heuristic = diameter(g, false);
    CHECK(heuristic.value <= exact.value);
    const auto dist = oracles::bfs_distances(n, edges, 0);
    const std::uint32_t ecc0 = *std::max_element(dist.begin(), dist.end());
    CHECK(exact.value <= 2 * ecc0);
  }
}

TEST_CASE("diameter restricts to the largest component") {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = {{0, 1}, {1, 2}, {2, 3}, {4, 5}};
  const DiameterResult result = diameter(make_undirected(6, edges));
  CHECK(result.value == 3);
  CHECK(result.restricted_to_largest_component);
  CHECK(result.component_size == 4);
}

TEST_CASE("closeness on a path and with exhaustive pivots") {
  const UndirectedGraph g = path_graph(3);
  const ClosenessResult exact = closeness_approx(g, 3, 1);
  REQUIRE(exact.estimates.size() == 3);
  CHECK(exact.estimates[1].second == doctest::Approx(0.5));  // middle node: 1/(1+1)

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 30 + rng() % 150;
    const auto edges = oracles::random_connected_edges(n, n, rng);
    const UndirectedGraph graph = make_undirected(n, edges);
    const std::vector<double> truth = oracles::closeness_brute_force(n, edges);
    const ClosenessResult full = closeness_approx(graph, n, trial);
    for (const auto& [node, estimate] : full.estimates)
      CHECK(estimate == truth[node]);  // k = n reproduces the exact values
  }
}

TEST_CASE("closeness estimator is unbiased over all pivot subsets") {
  // Exhaustive enumeration over k-subsets on small graphs: the average of
  // 1/estimate equals the exact distance sum.
  std::mt19937_64 rng(41);
  for (std::size_t n : {5, 6, 8}) {
    const auto edges = oracles::random_connected_edges(n, 2, rng);
    std::vector<std::vector<std::uint32_t>> dist;
    for (std::uint32_t v = 0; v < n; ++v) dist.push_back(oracles::bfs_distances(n, edges, v));
    const std::size_t k = 3;
    std::vector<std::uint32_t> subset(k);
    std::function<void(std::size_t, std::size_t, std::vector<double>&, std::size_t&)> rec =
        [&](std::size_t start, std::size_t depth, std::vector<double>& sums, std::size_t& count) {
          if (depth == k) {
            ++count;
            for (std::uint32_t v = 0; v < n; ++v) {
              std::uint64_t s = 0;
              std::size_t others = 0;
              for (std::uint32_t p : subset)
                if (p != v) {
                  s += dist[v][p];
                  ++others;
                }
              sums[v] += static_cast<double>(n - 1) * static_cast<double>(s) /
                         static_cast<double>(others);
            }
            return;
          }
          for (std::size_t i = start; i < n; ++i) {
            subset[depth] = static_cast<std::uint32_t>(i);
            rec(i + 1, depth + 1, sums, count);
          }
        };
    std::vector<double> sums(n, 0.0);
    std::size_t count = 0;
    rec(0, 0, sums, count);
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint64_t exact = 0;
      for (std::uint32_t u = 0; u < n; ++u) exact += dist[v][u];
      CHECK(sums[v] / static_cast<double>(count) ==
            doctest::Approx(static_cast<double>(exact)).epsilon(1e-9));
    }
  }
}

TEST_CASE("closeness rejects a singleton component") {
  const UndirectedGraph g = make_undirected(1, {});
  CHECK_THROWS_AS(closeness_approx(g, 1, 0), IsolatedNodeError);
}

TEST_CASE("treewidth equals the known family values") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const TreewidthResult tree = treewidth_upper_bound(path_graph(n));
    CHECK(tree.width == 1);
    const TreewidthResult cycle = treewidth_upper_bound(cycle_graph(n));
    CHECK(cycle.width == 2);
    const TreewidthResult clique = treewidth_upper_bound(clique_graph(n));
    CHECK(clique.width == n - 1);
    // the returned order certifies each bound
    CHECK(treewidth_replay(path_graph(n), tree.order) == tree.width);
    CHECK(treewidth_replay(cycle_graph(n), cycle.order) == cycle.width);
    CHECK(treewidth_replay(clique_graph(n), clique.order) == clique.width);
  }

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    // random tree: still width 1
    const auto edges = oracles::random_connected_edges(20, 0, rng);
    CHECK(treewidth_upper_bound(make_undirected(20, edges)).width == 1);
  }
}

TEST_CASE("treewidth replay never exceeds the reported width on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 20 + rng() % 60;
    const auto edges = oracles::random_connected_edges(n, n, rng);
    const UndirectedGraph g = make_undirected(n, edges);
    const TreewidthResult result = treewidth_upper_bound(g);
    CHECK(treewidth_replay(g, result.order) == result.width);
    CHECK(result.order.size() == n);
  }
}

TEST_CASE("isomorphic groups on the documented fixtures") {
  SUBCASE("two leaves under one hub form a group") {
    KnowledgeGraph kg = graph_with_relation();
    const TermId rel = kg.interner().find("urn:rel:r");
    const TermId hub = kg.ensure_node("urn:n:hub", NodeType::Mirna);
    const TermId u = kg.ensure_node("urn:n:u", NodeType::Mrna);
    const TermId v = kg.ensure_node("urn:n:v", NodeType::Mrna);
    kg.add_edge(hub, rel, u, "s", EdgeOrigin::Asserted);
    kg.add_edge(hub, rel, v, "s", EdgeOrigin::Asserted);
    const IsomorphicGroupsResult result = isomorphic_groups(kg);
    REQUIRE(result.groups.size() == 1);
    CHECK(result.groups[0].members == std::vector<TermId>{std::min(u, v), std::max(u, v)});
    CHECK(result.node_count == 2);
    CHECK(result.edge_count == 2);
  }
  SUBCASE("star with eight identically typed leaves") {
    KnowledgeGraph kg = graph_with_relation();
    const TermId rel = kg.interner().find("urn:rel:r");
    const TermId hub = kg.ensure_node("urn:n:hub", NodeType::Trna);
    for (int i = 0; i < 8; ++i)
      kg.add_edge(hub, rel, kg.ensure_node("urn:n:leaf" + std::to_string(i), NodeType::Trf), "s",
                  EdgeOrigin::Asserted);
    const IsomorphicGroupsResult result = isomorphic_groups(kg);
    REQUIRE(result.groups.size() == 1);
    CHECK(result.groups[0].members.size() == 8);
    CHECK(result.groups[0].group_degree == 1);
    CHECK(result.largest_group == 8);
  }
  SUBCASE("type mismatch blocks grouping") {
    KnowledgeGraph kg = graph_with_relation();
    const TermId rel = kg.interner().find("urn:rel:r");
    const TermId hub = kg.ensure_node("urn:n:hub", NodeType::Mirna);
    kg.add_edge(hub, rel, kg.ensure_node("urn:n:u", NodeType::Mrna), "s", EdgeOrigin::Asserted);
    kg.add_edge(hub, rel, kg.ensure_node("urn:n:v", NodeType::Lncrna), "s", EdgeOrigin::Asserted);
    CHECK(isomorphic_groups(kg).groups.empty());
  }
}

namespace {

KnowledgeGraph random_typed_kg(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  KnowledgeGraph kg;
  std::vector<TermId> relations;
  for (int r = 0; r < 3; ++r) {
    const TermId rel = kg.interner().intern("urn:rel:" + std::to_string(r));
    kg.registry().add(rel, "r" + std::to_string(r), std::nullopt, false);
    relations.push_back(rel);
  }
  const NodeType types[] = {NodeType::Mirna, NodeType::Mrna, NodeType::Trf, NodeType::Disease};
  std::vector<TermId> nodes;
  for (std::size_t i = 0; i < n; ++i)
    nodes.push_back(kg.ensure_node("urn:n:" + std::to_string(i), types[rng() % 4]));
  for (std::size_t e = 0; e < m; ++e)
    kg.add_edge(nodes[rng() % n], relations[rng() % relations.size()], nodes[rng() % n], "s",
                EdgeOrigin::Asserted);
  return kg;
}

}  // namespace

TEST_CASE("isomorphic groups equal the pairwise brute force on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    // low-degree graphs produce many coincidental groups
    const KnowledgeGraph kg = random_typed_kg(rng, 40 + rng() % 100, 30 + rng() % 100);
    const IsomorphicGroupsResult fast = isomorphic_groups(kg);
    std::vector<std::vector<TermId>> got;
    for (const IsomorphicGroup& group : fast.groups) got.push_back(group.members);
    std::sort(got.begin(), got.end());
    CHECK(got == oracles::isomorphic_groups_brute_force(kg));
  }
}

TEST_CASE("swapping two group members leaves the edge set unchanged") {
  std::mt19937_64 rng(123);
  const KnowledgeGraph kg = random_typed_kg(rng, 60, 50);
  const IsomorphicGroupsResult result = isomorphic_groups(kg);
  auto canonical = [&](TermId a, TermId b) {
    auto swap_term = [&](TermId t) { return t == a ? b : t == b ? a : t; };
    std::set<std::tuple<TermId, TermId, TermId>> triples;
    for (const EdgeRecord& e : kg.edges())
      triples.emplace(swap_term(e.subject), e.relation, swap_term(e.object));
    return triples;
  };
  for (const IsomorphicGroup& group : result.groups) {
    const TermId a = group.members[0], b = group.members[1];
    CHECK(canonical(a, b) == canonical(a, a));  // swap equals identity
  }
}

TEST_CASE("type census counts nodes and relations") {
  KnowledgeGraph kg = graph_with_relation();
  const TermId rel = kg.interner().find("urn:rel:r");
  for (int i = 0; i < 3; ++i)
    kg.ensure_node("urn:mir:" + std::to_string(i), NodeType::Mirna);
  for (int i = 0; i < 2; ++i)
    kg.ensure_node("urn:dis:" + std::to_string(i), NodeType::Disease);
  kg.add_edge(kg.interner().find("urn:mir:0"), rel, kg.interner().find("urn:dis:0"), "s",
              EdgeOrigin::Asserted);
  const TypeCensus census = type_census(kg);
  CHECK(census.by_node_type.at("miRNA") == 3);
  CHECK(census.by_node_type.at("disease") == 2);
  CHECK(census.by_relation.at("urn:rel:r") == 1);
  std::size_t total = 0;
  for (const auto& [type, count] : census.by_node_type) total += count;
  CHECK(total == kg.node_count());
}

TEST_CASE("source overlap reports containment and jaccard") {
  KnowledgeGraph kg = graph_with_relation();
  const TermId rel = kg.interner().find("urn:rel:r");
  const TermId a = kg.ensure_node("urn:n:a"), b = kg.ensure_node("urn:n:b"),
               c = kg.ensure_node("urn:n:c"), d = kg.ensure_node("urn:n:d");
  // e1 = a->b (A only), e2 = b->c (A and B), e3 = c->d (B only)
  kg.add_edge(a, rel, b, "A", EdgeOrigin::Asserted);
  kg.add_edge(b, rel, c, "A", EdgeOrigin::Asserted);
  kg.add_edge(b, rel, c, "B", EdgeOrigin::Asserted);
  kg.add_edge(c, rel, d, "B", EdgeOrigin::Asserted);

  const SourceOverlap overlap = source_overlap(kg);
  REQUIRE(overlap.sources == std::vector<std::string>{"A", "B"});
  CHECK(overlap.containment[0][0] == 1.0);
  CHECK(overlap.containment[0][1] == doctest::Approx(0.5));
  CHECK(overlap.containment[1][0] == doctest::Approx(0.5));
  CHECK(overlap.jaccard[0][1] == doctest::Approx(1.0 / 3.0));

  SUBCASE("full containment and disjoint sources") {
    KnowledgeGraph kg2 = graph_with_relation();
    const TermId rel2 = kg2.interner().find("urn:rel:r");
    const TermId x = kg2.ensure_node("urn:n:x"), y = kg2.ensure_node("urn:n:y"),
                 z = kg2.ensure_node("urn:n:z");
    kg2.add_edge(x, rel2, y, "small", EdgeOrigin::Asserted);
    kg2.add_edge(x, rel2, y, "big", EdgeOrigin::Asserted);
    kg2.add_edge(y, rel2, z, "big", EdgeOrigin::Asserted);
    kg2.add_edge(z, rel2, x, "lonely", EdgeOrigin::Asserted);
    const SourceOverlap o = source_overlap(kg2);
    const auto index = [&](const std::string& name) {
      return std::find(o.sources.begin(), o.sources.end(), name) - o.sources.begin();
    };
    CHECK(o.containment[index("small")][index("big")] == 1.0);  // small is a subset of big
    CHECK(o.containment[index("lonely")][index("big")] == 0.0);
    CHECK(o.jaccard[index("lonely")][index("small")] == 0.0);
  }
}
