#include "rainbow/density.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rainbow {

namespace {

constexpr int kMaxExactVertices = 24;

std::vector<Edge> induced_edges_original_labels(const Graph& g, uint32_t mask) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if ((mask >> u & 1) && (mask >> v & 1)) edges.push_back({u, v});
    return edges;
}

}  // namespace

DensityReport m2_density(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 3) throw std::invalid_argument("m2_density requires at least 3 vertices");
    if (h.edge_count() < 1) throw std::invalid_argument("m2_density requires an edge");
    if (n > kMaxExactVertices)
        throw std::invalid_argument("m2_density: exhaustive search capped at 24 vertices");

    // Gray-code walk over vertex subsets with incremental induced-edge counts.
    std::vector<char> in_set(n, 0);
    long long size = 0, edges = 0;
    bool have_best = false;
    long long best_num = 0, best_den = 1;  // (e-1)/(v-2), den > 0
    uint32_t best_mask = 0;
    long long best_size = 0, best_edges = 0;
    std::vector<Edge> best_edge_list;
    uint32_t mask = 0;

    auto consider = [&](uint32_t current) {
        if (size < 3) return;
        const long long num = edges - 1, den = size - 2;
        int cmp;
        if (!have_best) {
            cmp = 1;
        } else {
            const long long lhs = num * best_den, rhs = best_num * den;
            cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
        }
        if (cmp == 0) {
            // Equal ratio: fewest vertices, then fewest edges, then smallest
            // edge set in original labels.
            if (size > best_size) return;
            if (size == best_size) {
                if (edges > best_edges) return;
                if (edges == best_edges) {
                    auto cand = induced_edges_original_labels(h, current);
                    if (!(cand < best_edge_list)) return;
                    best_edge_list = std::move(cand);
                    best_mask = current;
                    return;
                }
            }
            cmp = 1;
        }
        if (cmp > 0) {
            have_best = true;
            best_num = num;
            best_den = den;
            best_mask = current;
            best_size = size;
            best_edges = edges;
            best_edge_list = induced_edges_original_labels(h, current);
        }
    };

    const uint64_t total = 1ULL << n;
    for (uint64_t k = 1; k < total; ++k) {
        const int x = std::countr_zero(k);
        long long inside = 0;
        for (int w : h.neighbors(x))
            if (in_set[w]) ++inside;
        if (in_set[x]) {
            in_set[x] = 0;
            --size;
            edges -= inside;
            mask &= ~(1u << x);
        } else {
            in_set[x] = 1;
            ++size;
            edges += inside;
            mask |= 1u << x;
        }
        consider(mask);
    }

    DensityReport report;
    report.value = Rational(best_num, best_den);
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) vertices.push_back(v);
    report.witness_vertices = vertices;
    report.witness = induced_subgraph(h, vertices);
    report.two_balanced =
        Rational(h.edge_count() - 1, n - 2) == report.value;
    return report;
}

bool is_two_balanced(const Graph& s) { return m2_density(s).two_balanced; }

Rational beta(const Graph& h, const Graph& s) {
    if (s.vertex_count() < 3 || s.edge_count() < 1)
        throw std::invalid_argument("beta: degenerate pattern graph");
    const Rational m2_h = m2_density(h).value;
    return Rational(1, s.edge_count()) *
           (Rational(s.vertex_count() - 2) + m2_h.reciprocal());
}

TheoremHypothesesReport check_theorem_hypotheses(const LabeledTwoGraph& f,
                                                 const LabeledTwoGraph& h,
                                                 const Graph& s,
                                                 const ArrowsOptions& opts) {
    TheoremHypothesesReport report;
    try {
        report.m2_h = m2_density(h.graph).value;
        report.m2_f = m2_density(f.graph).value;
        report.h_above_one = Rational(1) < report.m2_h;
        report.h_below_f = report.m2_h < report.m2_f;
    } catch (const std::invalid_argument&) {
        // Degenerate operand (fewer than 3 vertices): hypotheses fail.
    }
    try {
        report.s_two_balanced = is_two_balanced(s);
    } catch (const std::invalid_argument&) {
    }
    ArrowsResult arrows = arrows_rainbow(s, f.graph, opts);
    report.s_arrows_f = arrows.verdict;
    report.arrows_colorings_examined = arrows.colorings_examined;
    return report;
}

CorollaryGapReport check_corollary_gap(const Graph& h, int t) {
    if (t < 1) throw std::invalid_argument("corollary gap requires t >= 1");
    const Rational m2_h = m2_density(h).value;
    if (!(Rational(1) < m2_h && m2_h < Rational(2)))
        throw std::invalid_argument("corollary gap requires 1 < m2(H) < 2");

    CorollaryGapReport report;
    report.t = t;
    report.half = Rational(1, 2);
    report.beta_value = beta(h, make_book(3 * t - 2));

    const Graph book = make_book(t);
    const Edge root = h.edges().front();
    const Graph amalgam = amalgamate(LabeledTwoGraph(book, 0, 1),
                                     LabeledTwoGraph(h, root.first, root.second));
    report.m2_amalgam_reciprocal = m2_density(amalgam).value.reciprocal();
    report.beta_above_half = report.beta_value > report.half;
    report.reciprocal_at_most_half = report.m2_amalgam_reciprocal <= report.half;
    report.strict_gap = report.beta_value > report.m2_amalgam_reciprocal;
    return report;
}

}  // namespace rainbow
