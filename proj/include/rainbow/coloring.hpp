#ifndef RAINBOW_COLORING_HPP
#define RAINBOW_COLORING_HPP

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Proper edge coloring of a graph: colors[i] is the color of edge i in the
// graph's edge order. Color ids are contiguous 0..k-1, renamed canonically by
// first occurrence along the edge order.
struct ProperColoring {
    std::vector<int> colors;

    int color_count() const;
};

bool is_proper(const Graph& g, const std::vector<int>& colors);

// Renames colors by first occurrence and validates properness.
ProperColoring make_proper_coloring(const Graph& g, std::vector<int> raw);

// Coloring induced on a subgraph whose edges all appear in g (same vertex
// set); the restriction of a proper coloring is proper.
ProperColoring restrict_coloring(const Graph& g, const ProperColoring& c,
                                 const Graph& sub);

}  // namespace rainbow

#endif
