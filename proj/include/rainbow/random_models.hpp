#ifndef RAINBOW_RANDOM_MODELS_HPP
#define RAINBOW_RANDOM_MODELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct GnpSample {
    Graph graph;
    int n = 0;
    double p = 0.0;
    uint64_t seed = 0;
};

// Binomial random graph; each pair independently with probability p.
// Sparse sampling via geometric skipping over the pair order (0,1),(0,2),...
GnpSample sample_gnp(int n, double p, uint64_t seed);

// Same distribution, but drawing one uniform per pair in order, so samples at
// different p from the same seed are nested (coupled). O(n^2); used by the
// threshold-curve harness for per-seed monotonicity.
Graph gnp_from_uniform_stream(int n, double p, uint64_t seed);

// Disjoint vertex sets covering 0..n-1, sizes equal up to one, with role tags
// "V1".."Vs" then "U3".."Uh".
struct PartitionLayout {
    std::vector<std::vector<int>> parts;
    std::vector<std::string> roles;

    int vertex_count() const;
    // Union of the V-role parts, ascending.
    std::vector<int> v_block() const;
};

PartitionLayout make_equitable_layout(int n, int s, int h);
void validate_layout(const PartitionLayout& layout, int n);

// Two-layer model: pairs inside the union of the V-parts appear with
// probability p, and every pair additionally appears with probability
// q_prime, independently; the two layers are unioned into a simple graph
// (an inside pair is present with probability 1-(1-p)(1-q_prime)).
// Requires q_prime <= p.
GnpSample sample_two_layer(int n, double p, double q_prime,
                           const PartitionLayout& layout, uint64_t seed);

enum class ColoringStrategy { greedy, distinct, adversarial };

ColoringStrategy parse_strategy(const std::string& name);
const char* to_string(ColoringStrategy s);

struct ColoringOptions {
    ColoringStrategy strategy = ColoringStrategy::greedy;
    uint64_t seed = 0;
    // Target for the adversarial hunter; falls back to greedy when the hunt
    // fails (the strategy is heuristic and labeled as such in outputs).
    const Graph* adversary_target = nullptr;
    int adversary_trials = 32;
};

// Always returns a verified proper coloring. greedy: random edge order,
// smallest feasible color (at most 2*maxdeg-1 colors); distinct: one color
// per edge.
ProperColoring proper_color(const Graph& g, const ColoringOptions& opts);

// Uniform i.i.d. assignment of the used colors into class_count classes.
struct ColorAssignment {
    std::vector<int> sigma;  // color id -> class id
    int class_count = 0;
};

ColorAssignment assign_colors(const ProperColoring& c, int class_count,
                              uint64_t seed);

// Spanning subgraph with the edges whose color lands in class t.
Graph color_class_subgraph(const Graph& g, const ProperColoring& c,
                           const ColorAssignment& a, int t);

}  // namespace rainbow

#endif
