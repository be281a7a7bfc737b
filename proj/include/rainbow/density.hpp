#ifndef RAINBOW_DENSITY_HPP
#define RAINBOW_DENSITY_HPP

#include <vector>

#include "rainbow/arrows.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

// Result of maximizing (e(J)-1)/(v(J)-2) over subgraphs J with v(J) >= 3.
// The maximum over subgraphs with a fixed vertex set is attained by the
// induced subgraph (extra edges only raise the ratio), so the search ranges
// over vertex subsets; the naive edge-subgraph oracle in the tests checks
// this reduction.
struct DensityReport {
    Rational value;
    Graph witness;                     // induced subgraph, relabeled 0..v-1
    std::vector<int> witness_vertices; // original labels, ascending
    bool two_balanced = false;
};

// Exact. Requires v >= 3 and at least one edge; v <= 24 (exhaustive subsets).
// Witness ties break by fewest vertices, then fewest edges, then smallest
// edge set in original labels.
DensityReport m2_density(const Graph& h);

bool is_two_balanced(const Graph& s);

// (1/e(S)) * (v(S) - 2 + 1/m2(H)), exact.
Rational beta(const Graph& h, const Graph& s);

struct TheoremHypothesesReport {
    Rational m2_h;
    Rational m2_f;
    bool h_above_one = false;       // 1 < m2(H)
    bool h_below_f = false;         // m2(H) < m2(F)
    bool s_two_balanced = false;
    ArrowsVerdict s_arrows_f = ArrowsVerdict::unknown;
    long long arrows_colorings_examined = 0;

    bool density_hypotheses_hold() const {
        return h_above_one && h_below_f && s_two_balanced;
    }
};

TheoremHypothesesReport check_theorem_hypotheses(const LabeledTwoGraph& f,
                                                 const LabeledTwoGraph& h,
                                                 const Graph& s,
                                                 const ArrowsOptions& opts = {});

struct CorollaryGapReport {
    int t = 0;
    Rational beta_value;               // beta(H, B_{3t-2})
    Rational half;                     // 1/2
    Rational m2_amalgam_reciprocal;    // 1/m2(B_t + H glued on roots)
    bool beta_above_half = false;
    bool reciprocal_at_most_half = false;
    bool strict_gap = false;           // beta > 1/m2(B_t + H)
};

// Glues B_t (rooted at its spine 0-1) onto h's smallest edge. Requires
// 1 < m2(h) < 2.
CorollaryGapReport check_corollary_gap(const Graph& h, int t);

}  // namespace rainbow

#endif
