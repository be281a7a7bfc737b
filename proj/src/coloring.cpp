#include "rainbow/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

int ProperColoring::color_count() const {
    int k = 0;
    for (int c : colors) k = std::max(k, c + 1);
    return k;
}

bool is_proper(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.edge_count()) return false;
    for (int c : colors)
        if (c < 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b)
                if (colors[inc[a]] == colors[inc[b]]) return false;
    }
    return true;
}

ProperColoring make_proper_coloring(const Graph& g, std::vector<int> raw) {
    if (!is_proper(g, raw)) throw std::invalid_argument("coloring is not proper");
    std::vector<int> rename;
    std::vector<int> canon(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        auto it = std::find(rename.begin(), rename.end(), raw[i]);
        if (it == rename.end()) {
            rename.push_back(raw[i]);
            canon[i] = static_cast<int>(rename.size()) - 1;
        } else {
            canon[i] = static_cast<int>(it - rename.begin());
        }
    }
    return ProperColoring{std::move(canon)};
}

ProperColoring restrict_coloring(const Graph& g, const ProperColoring& c,
                                 const Graph& sub) {
    if (sub.vertex_count() != g.vertex_count())
        throw std::invalid_argument("subgraph must share the vertex set");
    std::vector<int> raw;
    raw.reserve(sub.edge_count());
    for (const auto& [u, v] : sub.edges()) {
        const int idx = g.edge_index(u, v);
        if (idx < 0) throw std::invalid_argument("subgraph edge missing from host");
        raw.push_back(c.colors[idx]);
    }
    return make_proper_coloring(sub, std::move(raw));
}

}  // namespace rainbow
