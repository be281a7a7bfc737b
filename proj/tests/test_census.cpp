#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "rainbow/census.hpp"
#include "rainbow/random_models.hpp"
#include "rainbow/rng.hpp"

using namespace rainbow;

namespace {

Graph disjoint_triangles(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const int base = 3 * i;
        edges.push_back({base, base + 1});
        edges.push_back({base, base + 2});
        edges.push_back({base + 1, base + 2});
    }
    return Graph(3 * k, edges);
}

}  // namespace

TEST_CASE("isolated copies of triangles") {
    const Graph k3 = make_clique(3);
    CHECK(isolated_copies(disjoint_triangles(3), k3).size() == 3);
    CHECK(isolated_copies(make_book(2), k3).empty());
    CHECK(isolated_copies(make_clique(4), k3).empty());
}

TEST_CASE("isolated-copy subgraph") {
    const Graph k3 = make_clique(3);

    // Triangle plus a far-away edge: the spanning subgraph keeps only the
    // triangle's edges.
    const Graph mixed(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    const auto gs = isolated_subgraph(mixed, k3);
    CHECK(gs.graph.vertex_count() == 5);
    CHECK(gs.graph.edge_count() == 3);
    CHECK(gs.copies.size() == 1);

    CHECK(isolated_subgraph(make_book(2), k3).graph.edge_count() == 0);

    std::vector<Edge> pair_of_c5;
    for (int i = 0; i < 5; ++i) {
        pair_of_c5.push_back(normalize_edge(i, (i + 1) % 5));
        pair_of_c5.push_back(normalize_edge(5 + i, 5 + (i + 1) % 5));
    }
    const Graph two_c5(10, pair_of_c5);
    CHECK(isolated_subgraph(two_c5, make_cycle(5)).graph == two_c5);

    // The edge -> copy index covers every kept edge exactly once.
    const auto each = isolated_subgraph(disjoint_triangles(2), k3);
    CHECK(each.copy_index.size() == 6);
    std::set<int> owners(each.copy_index.begin(), each.copy_index.end());
    CHECK(owners == std::set<int>{0, 1});
}

TEST_CASE("transversal counts on fixed layouts") {
    const Graph k3 = make_clique(3);
    const auto single =
        transversal_counts(k3, k3, {{0}, {1}, {2}});
    CHECK(single.z == 1);
    CHECK(single.y == 1);

    const auto c4 = transversal_counts(make_cycle(4), make_cycle(4),
                                       {{0}, {1}, {2}, {3}});
    CHECK(c4.z == 1);

    const auto b2 = transversal_counts(make_book(2), k3, {{0}, {1}, {2, 3}});
    CHECK(b2.z == 2);
    CHECK(b2.y == 0);

    CHECK_THROWS_AS(transversal_counts(k3, k3, {{0}, {1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("labeled transversality pins parts to pattern vertices") {
    const Graph p3 = make_path(3);
    // Unlabeled: image {0,1,2} meets each singleton part once regardless of
    // order. Labeled: part i must receive path vertex i up to automorphism,
    // which fails when the middle vertex sits in part 0.
    const auto relaxed = transversal_counts(p3, p3, {{1}, {0}, {2}}, false);
    CHECK(relaxed.z == 1);
    const auto pinned = transversal_counts(p3, p3, {{1}, {0}, {2}}, true);
    CHECK(pinned.z == 0);
    const auto aligned = transversal_counts(p3, p3, {{0}, {1}, {2}}, true);
    CHECK(aligned.z == 1);
    // The path's end-swap automorphism also matches reversed parts.
    const auto swapped = transversal_counts(p3, p3, {{2}, {1}, {0}}, true);
    CHECK(swapped.z == 1);
}

TEST_CASE("census invariants on random instances") {
    const Graph k3 = make_clique(3);
    for (uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 6 + static_cast<int>(seed % 3);
        const Graph g = sample_gnp(n, 0.45, derive_seed(321, seed)).graph;
        const PartitionLayout layout = make_equitable_layout(n, 3, 2);
        const std::vector<std::vector<int>> parts(layout.parts.begin(),
                                                  layout.parts.begin() + 3);

        const auto counts = transversal_counts(g, k3, parts);
        const auto ref = oracle::census(g, k3, parts);
        CHECK(counts.z == ref.z);
        CHECK(counts.y == ref.y);
        CHECK(counts.y <= counts.z);
        CHECK(counts.z <=
              static_cast<long long>(enumerate_copies(g, k3).size()));

        const auto gs = isolated_subgraph(g, k3);
        std::set<Edge> edges(gs.graph.edges().begin(), gs.graph.edges().end());
        CHECK(edges == ref.isolated_edges);

        // Pairwise edge-disjointness of isolated copies.
        std::set<int> used;
        for (const auto& emb : gs.copies)
            for (int e : emb.host_edges) CHECK(used.insert(e).second);
    }
}

TEST_CASE("edge families inside the isolated subgraph") {
    const Graph k3 = make_clique(3);
    const Graph two = disjoint_triangles(2);
    const auto gs = isolated_subgraph(two, k3);

    CHECK_FALSE(edge_family_embeds(gs, {{0, 1}, {0, 2}}));       // same copy
    CHECK(edge_family_embeds(gs, {{0, 1}, {3, 4}}));             // distinct copies
    CHECK_FALSE(edge_family_embeds(gs, {{0, 3}}));               // outside G^S
    CHECK(edge_family_embeds(two, k3, {{1, 2}, {4, 5}}));
    CHECK_THROWS_AS(edge_family_embeds(gs, {}), std::invalid_argument);
}

TEST_CASE("matching deletions perturb the isolated census boundedly") {
    // Dropping a matching kills at most one isolated copy per removed edge;
    // a copy's edges meet at most e(S) classes of any proper coloring.
    const Graph k3 = make_clique(3);
    for (uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = sample_gnp(9, 0.35, derive_seed(654, seed)).graph;
        if (g.edge_count() < 2) continue;
        ColoringOptions opts;
        opts.seed = seed;
        const ProperColoring c = proper_color(g, opts);
        const PartitionLayout layout = make_equitable_layout(9, 3, 2);
        const std::vector<std::vector<int>> parts(layout.parts.begin(),
                                                  layout.parts.begin() + 3);
        const long long y_before = transversal_counts(g, k3, parts).y;

        // Remove the largest color class (a matching).
        std::vector<int> class_size(c.color_count(), 0);
        for (int col : c.colors) ++class_size[col];
        const int drop = static_cast<int>(
            std::max_element(class_size.begin(), class_size.end()) -
            class_size.begin());
        std::vector<bool> keep(g.edge_count(), true);
        int removed = 0;
        for (int e = 0; e < g.edge_count(); ++e)
            if (c.colors[e] == drop) {
                keep[e] = false;
                ++removed;
            }
        const Graph reduced = spanning_subgraph(g, keep);
        const long long y_after = transversal_counts(reduced, k3, parts).y;

        // Removal destroys at most `removed` isolated copies; it can also
        // free copies, but never below zero or beyond the vertex bound.
        CHECK(y_before - y_after <= removed);
        CHECK(std::abs(y_after - y_before) <= g.vertex_count());

        // Each copy meets at most e(S) color classes.
        for (const auto& emb : enumerate_copies(g, k3)) {
            std::set<int> classes;
            for (int e : emb.host_edges) classes.insert(c.colors[e]);
            CHECK(static_cast<int>(classes.size()) <= k3.edge_count());
        }
    }
}

TEST_CASE("embed probability endpoints and bound") {
    const Graph k3 = make_clique(3);
    const auto zero = estimate_embed_probability(12, 0.0, k3, {{0, 1}}, 200, 1);
    CHECK(zero.frequency == 0.0);

    // In a complete graph every triangle shares edges, so nothing embeds.
    const auto full = estimate_embed_probability(6, 1.0, k3, {{0, 1}}, 50, 1);
    CHECK(full.frequency == 0.0);

    const auto mid = estimate_embed_probability(14, 0.2, k3, {{0, 1}}, 4000, 9);
    CHECK(mid.trials == 4000);
    CHECK(mid.bound == doctest::Approx(14.0 * std::pow(0.2, 3)));
    CHECK(mid.frequency <= mid.bound + 4.0 * mid.std_error);
    CHECK_THROWS_AS(estimate_embed_probability(10, 0.1, k3, {}, 10, 1),
                    std::invalid_argument);
}
