#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/random_models.hpp"
#include "rainbow/rng.hpp"

using namespace rainbow;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_index(3, 0) == 0);
    CHECK(g.edge_index(0, 1) == -1);
}

TEST_CASE("book graphs") {
    const Graph b1 = make_book(1);
    CHECK(b1.vertex_count() == 3);
    CHECK(b1.edge_count() == 3);
    CHECK(are_isomorphic(b1, make_clique(3)));

    const Graph b4 = make_book(4);
    CHECK(b4.vertex_count() == 6);
    CHECK(b4.edge_count() == 9);

    const Graph b2 = make_book(2);
    CHECK(b2.degree(0) == 3);
    CHECK(b2.degree(1) == 3);
    CHECK(b2.degree(2) == 2);
    CHECK(b2.degree(3) == 2);

    for (int t = 1; t <= 10; ++t) {
        const Graph b = make_book(t);
        CHECK(b.vertex_count() == t + 2);
        CHECK(b.edge_count() == 2 * t + 1);
        CHECK(b.max_degree() == t + 1);
    }
    CHECK_THROWS_AS(make_book(0), std::invalid_argument);
}

TEST_CASE("standard families") {
    const Graph c5 = make_cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(make_clique(4).edge_count() == 6);
    CHECK(make_path(3).edge_count() == 2);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_clique(2), std::invalid_argument);
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
}

TEST_CASE("labeled graphs require a root edge") {
    CHECK_THROWS_AS(LabeledTwoGraph(make_path(3), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(LabeledTwoGraph(make_path(3), 1, 1), std::invalid_argument);
    const LabeledTwoGraph ok(make_path(3), 1, 0);
    CHECK(ok.root_a == 1);
}

TEST_CASE("amalgamation counts and shape") {
    const LabeledTwoGraph k3(make_clique(3), 0, 1);
    const LabeledTwoGraph c4(make_cycle(4), 0, 1);
    const Graph glued = amalgamate(k3, c4);
    CHECK(glued.vertex_count() == 5);
    CHECK(glued.edge_count() == 6);

    const Graph two_triangles = amalgamate(k3, LabeledTwoGraph(make_clique(3), 0, 1));
    CHECK(are_isomorphic(two_triangles, make_book(2)));

    const Graph b1c5 = amalgamate(LabeledTwoGraph(make_book(1), 0, 1),
                                  LabeledTwoGraph(make_cycle(5), 0, 1));
    CHECK(b1c5.vertex_count() == 6);
    CHECK(b1c5.edge_count() == 7);
}

TEST_CASE("amalgamation is count-exact on random inputs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const Graph f = sample_gnp(5, 0.6, derive_seed(9000, seed)).graph;
        const Graph h = sample_gnp(6, 0.5, derive_seed(9001, seed)).graph;
        if (f.edge_count() == 0 || h.edge_count() == 0) continue;
        const Edge fe = f.edges().front();
        const Edge he = h.edges().back();
        const Graph glued = amalgamate(LabeledTwoGraph(f, fe.first, fe.second),
                                       LabeledTwoGraph(h, he.second, he.first));
        CHECK(glued.vertex_count() == f.vertex_count() + h.vertex_count() - 2);
        CHECK(glued.edge_count() == f.edge_count() + h.edge_count() - 1);
    }
}

TEST_CASE("copy enumeration matches the naive oracle") {
    CHECK(enumerate_copies(make_clique(4), make_clique(3)).size() == 4);
    CHECK(enumerate_copies(make_book(2), make_book(2)).size() == 1);
    CHECK(enumerate_copies(make_cycle(5), make_clique(3)).empty());

    const Graph k2(2, {{0, 1}});
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const Graph host = sample_gnp(n, 0.5, derive_seed(41, seed)).graph;
        CHECK(static_cast<int>(enumerate_copies(host, k2).size()) ==
              host.edge_count());
        for (const Graph& pattern :
             {make_clique(3), make_path(3), make_cycle(4), make_path(4)}) {
            const auto copies = enumerate_copies(host, pattern);
            const long long homs = oracle::injective_homomorphisms(host, pattern);
            const long long aut = static_cast<long long>(automorphisms(pattern).size());
            CHECK(static_cast<long long>(copies.size()) * aut == homs);
            CHECK(static_cast<long long>(copies.size()) ==
                  oracle::copy_count(host, pattern));
            for (const auto& emb : copies)
                CHECK(is_valid_embedding(host, pattern, emb.map));
        }
    }
}

TEST_CASE("copies of patterns with isolated vertices") {
    // One edge plus a free vertex: image = edge + any third vertex.
    const Graph pattern(3, {{0, 1}});
    const Graph host = make_clique(3);
    CHECK(enumerate_copies(host, pattern).size() == 3);
    CHECK(oracle::copy_count(host, pattern) == 3);
}

TEST_CASE("isomorphism checks") {
    CHECK(are_isomorphic(make_book(2),
                         amalgamate(LabeledTwoGraph(make_clique(3), 0, 1),
                                    LabeledTwoGraph(make_clique(3), 1, 2))));
    CHECK_FALSE(are_isomorphic(make_cycle(4), make_path(4)));
    CHECK_FALSE(are_isomorphic(make_book(4), make_clique(4)));

    // Invariance under relabeling.
    Rng rng(7);
    for (int round = 0; round < 10; ++round) {
        const Graph g = sample_gnp(7, 0.4, derive_seed(55, round)).graph;
        std::vector<int> perm(7);
        for (int i = 0; i < 7; ++i) perm[i] = i;
        rng.shuffle(perm);
        std::vector<Edge> edges;
        for (const auto& [u, v] : g.edges())
            edges.push_back(normalize_edge(perm[u], perm[v]));
        CHECK(are_isomorphic(g, Graph(7, edges)));
    }
}

TEST_CASE("automorphism groups of known graphs") {
    CHECK(automorphisms(make_clique(4)).size() == 24);
    CHECK(automorphisms(make_cycle(5)).size() == 10);
    CHECK(automorphisms(make_book(2)).size() == 4);
    CHECK(automorphisms(make_path(4)).size() == 2);
}

TEST_CASE("induced and spanning subgraphs") {
    const Graph b2 = make_book(2);
    const Graph tri = induced_subgraph(b2, {0, 1, 2});
    CHECK(are_isomorphic(tri, make_clique(3)));
    CHECK_THROWS_AS(induced_subgraph(b2, {0, 0}), std::invalid_argument);

    std::vector<bool> keep(b2.edge_count(), false);
    keep[0] = true;
    const Graph sub = spanning_subgraph(b2, keep);
    CHECK(sub.vertex_count() == b2.vertex_count());
    CHECK(sub.edge_count() == 1);
}
