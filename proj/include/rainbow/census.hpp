#ifndef RAINBOW_CENSUS_HPP
#define RAINBOW_CENSUS_HPP

#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Copies of s in g sharing no edge with any other copy of s. Distinct
// isolated copies are pairwise edge-disjoint by construction.
std::vector<Embedding> isolated_copies(const Graph& g, const Graph& s);

// Spanning subgraph on the edges of the isolated copies, with the index of
// the unique isolated copy through each of its edges.
struct IsolatedSubgraph {
    Graph graph;                      // same vertex set as g
    std::vector<Embedding> copies;    // the isolated copies
    std::vector<int> copy_index;      // per edge of `graph`, index into copies
};

IsolatedSubgraph isolated_subgraph(const Graph& g, const Graph& s);

struct TransversalCounts {
    long long z = 0;  // transversal copies
    long long y = 0;  // transversal isolated copies
    std::vector<Embedding> copies;  // transversal copies, when requested
};

// Copies with exactly one vertex in each part (|parts| = v(s), parts
// disjoint). By default any part-to-pattern-vertex bijection counts; with
// `labeled`, part i must host pattern vertex i under some automorphism of the
// copy. Isolation is judged within g.
TransversalCounts transversal_counts(const Graph& g, const Graph& s,
                                     const std::vector<std::vector<int>>& parts,
                                     bool labeled = false,
                                     bool keep_copies = false);

// True iff every edge lies in the isolated-copy subgraph and no two share an
// isolated copy.
bool edge_family_embeds(const IsolatedSubgraph& gs, const std::vector<Edge>& edges);
bool edge_family_embeds(const Graph& g, const Graph& s,
                        const std::vector<Edge>& edges);

struct EmbedProbability {
    double frequency = 0.0;
    long long successes = 0;
    long long trials = 0;
    double ci_low = 0.0;   // normal-approximation 95% interval
    double ci_high = 0.0;
    double bound = 0.0;    // q^{|E|} with q = n^{v(s)-2} p^{e(s)}
    double std_error = 0.0;
};

// Monte Carlo frequency of edge_family_embeds over fresh binomial samples,
// reported next to the product bound.
EmbedProbability estimate_embed_probability(int n, double p, const Graph& s,
                                            const std::vector<Edge>& edges,
                                            long long trials, uint64_t seed);

}  // namespace rainbow

#endif
