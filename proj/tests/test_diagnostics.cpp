#include "doctest.h"

#include <bit>
#include <cmath>

#include "oracles.hpp"
#include "rainbow/diagnostics.hpp"
#include "rainbow/random_models.hpp"
#include "rainbow/rng.hpp"

using namespace rainbow;

namespace {

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(normalize_edge(i, (i + 1) % 5));
        edges.push_back(normalize_edge(5 + i, 5 + (i + 2) % 5));
        edges.push_back({i, i + 5});
    }
    return Graph(10, edges);
}

std::vector<int> range_set(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("pair density") {
    const Graph kb = complete_bipartite(4, 5);
    CHECK(pair_density(kb, range_set(0, 4), range_set(4, 9)).density == 1.0);
    CHECK(pair_density(empty_graph(6), {0, 1}, {2, 3}).density == 0.0);
    CHECK(pair_density(make_clique(4), {0, 1}, {2, 3}).density == 1.0);
    CHECK_THROWS_AS(pair_density(kb, {0, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(pair_density(kb, {}, {1}), std::invalid_argument);
}

TEST_CASE("regularity of extreme pairs") {
    const Graph kb = complete_bipartite(5, 5);
    const auto reg = check_regular_pair(kb, range_set(0, 5), range_set(5, 10), 0.4,
                                        1.0, CheckMethod::exact);
    CHECK(reg.holds);

    // A perfect matching between two 10-sets is wildly irregular at eps 0.1.
    std::vector<Edge> match;
    for (int i = 0; i < 10; ++i) match.push_back({i, 10 + i});
    const Graph pm(20, match);
    const auto bad = check_regular_pair(pm, range_set(0, 10), range_set(10, 20),
                                        0.1, 1.0, CheckMethod::exact);
    CHECK_FALSE(bad.holds);
    CHECK(bad.violation.has_value());

    // Sampled mode finds the same violation quickly.
    const auto sampled = check_regular_pair(pm, range_set(0, 10), range_set(10, 20),
                                            0.1, 1.0, CheckMethod::sampled, 500, 3);
    CHECK_FALSE(sampled.holds);

    CHECK_THROWS_AS(check_regular_pair(pm, range_set(0, 10), range_set(3, 9), 0.1,
                                       1.0, CheckMethod::exact),
                    std::invalid_argument);  // overlap
}

TEST_CASE("slicing keeps large sub-pairs regular") {
    // If (U,V) is (eps,p)-regular and W covers a mu-fraction of U with
    // eps < mu < 1/2, then (W,V) is (eps/mu,p)-regular and d(W,V) stays
    // within eps*p of d(U,V).
    const double eps = 0.3, mu = 0.45, p = 1.0;
    int tested = 0;
    for (uint64_t seed = 0; seed < 60 && tested < 8; ++seed) {
        const Graph g = sample_gnp(10, 0.8, derive_seed(3100, seed)).graph;
        const auto U = range_set(0, 5), V = range_set(5, 10);
        const auto base = check_regular_pair(g, U, V, eps, p, CheckMethod::exact);
        if (!base.holds) continue;
        ++tested;
        const double base_density = pair_density(g, U, V).density;
        const int k = static_cast<int>(std::ceil(mu * 5));
        for (uint32_t mask = 0; mask < 32; ++mask) {
            if (std::popcount(mask) < k) continue;
            std::vector<int> W;
            for (int i = 0; i < 5; ++i)
                if (mask >> i & 1) W.push_back(U[i]);
            const auto sliced =
                check_regular_pair(g, W, V, eps / mu, p, CheckMethod::exact);
            CHECK(sliced.holds);
            CHECK(pair_density(g, W, V).density >= base_density - eps * p - 1e-12);
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("upper uniformity") {
    CHECK(check_upper_uniform(empty_graph(8), 0.3, 0.2, CheckMethod::exact).holds);
    CHECK(check_upper_uniform(make_clique(8), 0.3, 1.0, CheckMethod::exact).holds);
    const auto bad =
        check_upper_uniform(make_clique(8), 0.25, 0.5, CheckMethod::exact);
    CHECK_FALSE(bad.holds);
    const auto sampled =
        check_upper_uniform(make_clique(8), 0.25, 0.5, CheckMethod::sampled, 200, 1);
    CHECK_FALSE(sampled.holds);
    CHECK_THROWS_AS(check_upper_uniform(make_clique(20), 0.3, 0.5, CheckMethod::exact),
                    std::invalid_argument);
}

TEST_CASE("discrepancy on hand-checkable graphs") {
    // Single edge: nine nontrivial subset pairs, max deviation 1/2, vol 2.
    const Graph k2(2, {{0, 1}});
    const auto dk2 = disc_discrepancy(k2, CheckMethod::exact);
    CHECK(dk2.epsilon == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(dk2.epsilon == doctest::Approx(oracle::disc(k2)).epsilon(1e-12));

    // Two disjoint cliques: U = V = one clique already gives 1/4.
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            edges.push_back({i, j});
            edges.push_back({4 + i, 4 + j});
        }
    const Graph two_k4(8, edges);
    const auto split = disc_discrepancy(two_k4, CheckMethod::exact);
    CHECK(split.epsilon >= 0.25 - 1e-12);
    CHECK(split.epsilon == doctest::Approx(oracle::disc(two_k4)).epsilon(1e-12));

    CHECK_THROWS_AS(disc_discrepancy(empty_graph(4), CheckMethod::exact),
                    std::invalid_argument);
}

TEST_CASE("discrepancy matches the double-loop oracle") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const Graph g = sample_gnp(n, 0.5, derive_seed(808, seed)).graph;
        if (g.edge_count() == 0) continue;
        const auto exact = disc_discrepancy(g, CheckMethod::exact);
        CHECK(exact.epsilon == doctest::Approx(oracle::disc(g)).epsilon(1e-10));

        // Isomorphism invariance under an index rotation.
        std::vector<Edge> rot;
        for (const auto& [u, v] : g.edges())
            rot.push_back(normalize_edge((u + 1) % n, (v + 1) % n));
        const auto rotated = disc_discrepancy(Graph(n, rot), CheckMethod::exact);
        CHECK(rotated.epsilon == doctest::Approx(exact.epsilon).epsilon(1e-10));

        // A sampled lower bound never exceeds the exact maximum.
        const auto sampled = disc_discrepancy(g, CheckMethod::sampled, 200, seed);
        CHECK(sampled.epsilon <= exact.epsilon + 1e-12);
    }
}

TEST_CASE("circuit weights") {
    CHECK(circuit_weight_sum(make_clique(3), 4).value ==
          doctest::Approx(1.125).epsilon(1e-12));
    CHECK(std::abs(circuit_weight_sum(make_cycle(4), 5).value) <= 1e-9);

    for (uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        const Graph g = sample_gnp(n, 0.6, derive_seed(7070, seed)).graph;
        if (g.edge_count() == 0) continue;
        for (int ell = 2; ell <= 5; ++ell)
            CHECK(circuit_weight_sum(g, ell).value ==
                  doctest::Approx(oracle::circuit_weight(g, ell)).epsilon(1e-9));
    }

    // Regular connected non-bipartite graphs: even-length sums approach 1.
    const Graph pg = petersen();
    double prev = std::abs(circuit_weight_sum(pg, 2).value - 1.0);
    for (int ell = 4; ell <= 8; ell += 2) {
        const double gap = std::abs(circuit_weight_sum(pg, ell).value - 1.0);
        CHECK(gap < prev);
        prev = gap;
    }

    // Isolated vertices are excluded and flagged.
    const Graph lonely(4, {{0, 1}, {1, 2}, {0, 2}});
    const auto cw = circuit_weight_sum(lonely, 4);
    CHECK(cw.excluded_isolated);
    CHECK(cw.value == doctest::Approx(1.125).epsilon(1e-12));
    CHECK_FALSE(circuit_weight_sum(make_clique(3), 4).excluded_isolated);
    CHECK_THROWS_AS(circuit_weight_sum(make_clique(3), 1), std::invalid_argument);
}

TEST_CASE("circuit property thresholds") {
    CHECK(check_circuit_property(make_clique(3), 4, 0.2));
    CHECK_FALSE(check_circuit_property(make_clique(3), 4, 0.1));
    CHECK(check_circuit_property(make_clique(20), 4, 0.05));
}

TEST_CASE("circuit counts are walk counts") {
    CHECK(count_circuits(make_clique(4), 3) == 24);
    CHECK(count_circuits(make_cycle(5), 4) == 30);
    CHECK(count_circuits(make_path(5), 4) > 0);
    CHECK(count_cycles(make_path(5), 4) == 0);

    for (uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        const Graph g = sample_gnp(n, 0.55, derive_seed(500, seed)).graph;
        for (int ell = 2; ell <= 5; ++ell)
            CHECK(count_circuits(g, ell) == oracle::circuit_count(g, ell));
    }
    CHECK_THROWS_AS(count_circuits(make_clique(12), 20), std::overflow_error);
}

TEST_CASE("cycle counts and the sequence factor") {
    CHECK(count_cycles(make_clique(4), 3) == 4);
    CHECK(count_cycles(make_cycle(5), 4) == 0);
    CHECK(count_cycles(make_cycle(5), 5) == 1);

    // Odd cycles admit only full traversals, so circuits = 2*ell*cycles;
    // even lengths pick up back-and-forth walks on top.
    CHECK(count_circuits(make_cycle(5), 5) == 2 * 5 * count_cycles(make_cycle(5), 5));
    CHECK(count_circuits(make_cycle(6), 6) > 2 * 6 * count_cycles(make_cycle(6), 6));

    for (uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const Graph g = sample_gnp(n, 0.5, derive_seed(501, seed)).graph;
        for (int ell = 3; ell <= 6; ++ell) {
            CHECK(count_cycles(g, ell) == oracle::cycle_count(g, ell));
            CHECK(count_circuits(g, ell) >= 2LL * ell * count_cycles(g, ell));
        }
    }
}

TEST_CASE("path counts between endpoints") {
    CHECK(count_paths_between(make_clique(4), 0, 1, 3) == 2);
    // On a 5-cycle a spanning path exists only between adjacent endpoints.
    CHECK(count_paths_between(make_cycle(5), 0, 1, 5) == 1);
    CHECK(count_paths_between(make_cycle(5), 0, 2, 5) == 0);
    CHECK_THROWS_AS(count_paths_between(make_cycle(5), 2, 2, 3),
                    std::invalid_argument);

    // Mean 3-vertex path count over pairs tracks p^2 n on random graphs.
    const Graph g = sample_gnp(60, 0.3, 2222).graph;
    double total = 0;
    int pairs = 0;
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) {
            total += static_cast<double>(count_paths_between(g, u, v, 3));
            ++pairs;
        }
    const double mean = total / pairs;
    const double predicted = 0.3 * 0.3 * 60;
    CHECK(mean >= predicted / 2);
    CHECK(mean <= predicted * 2);
}

TEST_CASE("color-tied paths") {
    const Graph p4 = make_path(4);
    const ProperColoring tied = make_proper_coloring(p4, {0, 1, 0});
    CHECK(count_color_tied_paths(p4, tied, 4) == 1);
    CHECK(count_color_tied_paths(p4, tied, 3) == 0);

    const Graph g = sample_gnp(14, 0.4, 31).graph;
    ColoringOptions distinct;
    distinct.strategy = ColoringStrategy::distinct;
    const ProperColoring d = proper_color(g, distinct);
    for (int k = 3; k <= 5; ++k) CHECK(count_color_tied_paths(g, d, k) == 0);

    CHECK_THROWS_AS(count_color_tied_paths(p4, ProperColoring{{0, 0, 0}}, 4),
                    std::invalid_argument);
}

TEST_CASE("non-rainbow cycles partition the cycle census") {
    const Graph c4 = make_cycle(4);
    const ProperColoring alt = make_proper_coloring(c4, {0, 1, 0, 1});
    CHECK(count_non_rainbow_cycles(c4, alt, 4) == 1);
    CHECK(count_non_rainbow_cycles(c4, alt, 3) == 0);

    for (uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = sample_gnp(12, 0.45, derive_seed(900, seed)).graph;
        ColoringOptions opts;
        opts.seed = seed;
        const ProperColoring c = proper_color(g, opts);

        ColoringOptions dopts;
        dopts.strategy = ColoringStrategy::distinct;
        const ProperColoring d = proper_color(g, dopts);

        for (int ell = 4; ell <= 6; ++ell) {
            CHECK(count_non_rainbow_cycles(g, d, ell) == 0);
            long long rainbow = 0;
            for_each_cycle(g, ell, [&](const std::vector<int>& cyc) {
                std::vector<int> cols;
                for (size_t i = 0; i < cyc.size(); ++i)
                    cols.push_back(
                        c.colors[g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()])]);
                std::sort(cols.begin(), cols.end());
                if (std::adjacent_find(cols.begin(), cols.end()) == cols.end())
                    ++rainbow;
            });
            CHECK(rainbow + count_non_rainbow_cycles(g, c, ell) ==
                  count_cycles(g, ell));
        }
    }
}

TEST_CASE("degree concentration report") {
    const auto regular = degree_concentration_report(make_cycle(6), 2.0, 0.01);
    CHECK(regular.fraction_within == 1.0);
    CHECK(regular.min_degree == 2);
    CHECK(regular.max_degree == 2);

    const auto empty = degree_concentration_report(empty_graph(5), 3.0, 0.5);
    CHECK(empty.fraction_within == 0.0);

    CHECK_THROWS_AS(degree_concentration_report(make_cycle(6), 0.0, 0.1),
                    std::invalid_argument);
}

TEST_CASE("circuit property transfers to discrepancy on small graphs") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 5 + static_cast<int>(seed % 4);
        const Graph g = sample_gnp(n, 0.7, derive_seed(444, seed)).graph;
        if (g.edge_count() == 0) continue;
        for (int half : {2, 3})
            for (double eps : {0.1, 0.3, 0.6}) {
                if (!check_circuit_property(g, 2 * half, eps)) continue;
                const double target = std::pow(eps, 1.0 / (2 * half));
                CHECK(disc_discrepancy(g, CheckMethod::exact).epsilon <=
                      target + 1e-12);
            }
    }
}
