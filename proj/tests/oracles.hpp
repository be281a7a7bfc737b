#ifndef RAINBOW_TESTS_ORACLES_HPP
#define RAINBOW_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the test suites. These
// deliberately share no code with the library paths they check.

#include <set>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow::oracle {

// All injective maps pattern -> host, counted by walking every assignment.
long long injective_homomorphisms(const Graph& host, const Graph& pattern);

// Distinct copies: unique (vertex image, edge image) pairs.
long long copy_count(const Graph& host, const Graph& pattern);

// Max of (e'-1)/(v'-2) over edge subsets with vertices padded to >= 3.
Rational m2(const Graph& g);

// Proper colorings with at most e(g) colors, quotiented by color renaming.
long long coloring_classes(const Graph& g);

// Closed ell-sequence census by direct enumeration.
long long circuit_count(const Graph& g, int ell);
double circuit_weight(const Graph& g, int ell);
long long cycle_count(const Graph& g, int ell);  // simple circuits / (2*ell)

// Max normalized discrepancy over all subset pairs by double loop (v <= 8).
double disc(const Graph& g);

struct CensusResult {
    long long z = 0;
    long long y = 0;
    std::set<Edge> isolated_edges;  // edge set of the isolated-copy subgraph
};

// Naive census: every copy via injective maps, pairwise edge-sharing test,
// one-vertex-per-part transversality.
CensusResult census(const Graph& g, const Graph& s,
                    const std::vector<std::vector<int>>& parts);

}  // namespace rainbow::oracle

#endif
