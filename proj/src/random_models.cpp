#include "rainbow/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rainbow/arrows.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

// Walks a pair enumeration of `total` slots, emitting each slot independently
// with probability p via geometric skips.
template <typename Emit>
void skip_sample(long long total, double p, Rng& rng, Emit emit) {
    if (p <= 0.0) return;
    if (p >= 1.0) {
        for (long long t = 0; t < total; ++t) emit(t);
        return;
    }
    const double log1mp = std::log1p(-p);
    long long pos = 0;
    while (pos < total) {
        const double u = 1.0 - rng.uniform01();  // (0, 1]
        const double skip = std::floor(std::log(u) / log1mp);
        if (skip >= static_cast<double>(total)) break;
        pos += static_cast<long long>(skip);
        if (pos >= total) break;
        emit(pos);
        ++pos;
    }
}

// Inverse of the lex pair order (0,1),(0,2),..,(0,n-1),(1,2),...
struct PairDecoder {
    int n;
    int row = 0;
    long long row_start = 0;

    Edge decode(long long pos) {
        while (pos >= row_start + (n - 1 - row)) {
            row_start += n - 1 - row;
            ++row;
        }
        return {row, row + 1 + static_cast<int>(pos - row_start)};
    }
};

}  // namespace

GnpSample sample_gnp(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_probability(p, "p");
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    Rng rng(seed);
    std::vector<Edge> edges;
    PairDecoder decoder{n};
    skip_sample(total, p, rng, [&](long long pos) { edges.push_back(decoder.decode(pos)); });
    return GnpSample{Graph(n, std::move(edges)), n, p, seed};
}

Graph gnp_from_uniform_stream(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_probability(p, "p");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

int PartitionLayout::vertex_count() const {
    int n = 0;
    for (const auto& part : parts) n += static_cast<int>(part.size());
    return n;
}

std::vector<int> PartitionLayout::v_block() const {
    std::vector<int> block;
    for (size_t i = 0; i < parts.size(); ++i)
        if (!roles[i].empty() && roles[i][0] == 'V')
            block.insert(block.end(), parts[i].begin(), parts[i].end());
    std::sort(block.begin(), block.end());
    return block;
}

PartitionLayout make_equitable_layout(int n, int s, int h) {
    if (s < 1 || h < 2) throw std::invalid_argument("layout requires s >= 1, h >= 2");
    const int k = s + h - 2;
    if (k > n) throw std::invalid_argument("more parts than vertices");
    PartitionLayout layout;
    int next = 0;
    for (int i = 0; i < k; ++i) {
        const int size = n / k + (i < n % k ? 1 : 0);
        std::vector<int> part(size);
        std::iota(part.begin(), part.end(), next);
        next += size;
        layout.parts.push_back(std::move(part));
        layout.roles.push_back(i < s ? "V" + std::to_string(i + 1)
                                     : "U" + std::to_string(i - s + 3));
    }
    return layout;
}

void validate_layout(const PartitionLayout& layout, int n) {
    if (layout.parts.size() != layout.roles.size())
        throw std::invalid_argument("layout: parts/roles mismatch");
    std::vector<char> seen(n, 0);
    size_t min_size = static_cast<size_t>(n) + 1, max_size = 0;
    for (const auto& part : layout.parts) {
        if (part.empty()) throw std::invalid_argument("layout: empty part");
        min_size = std::min(min_size, part.size());
        max_size = std::max(max_size, part.size());
        for (int v : part) {
            if (v < 0 || v >= n) throw std::invalid_argument("layout: vertex out of range");
            if (seen[v]) throw std::invalid_argument("layout: overlapping parts");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("layout: parts do not cover all vertices");
    if (max_size > min_size + 1)
        throw std::invalid_argument("layout: parts are not equitable");
}

GnpSample sample_two_layer(int n, double p, double q_prime,
                           const PartitionLayout& layout, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_probability(p, "p");
    check_probability(q_prime, "q'");
    if (q_prime > p) throw std::invalid_argument("two-layer model requires q' <= p");
    validate_layout(layout, n);

    const std::vector<int> block = layout.v_block();
    const long long inside_total =
        static_cast<long long>(block.size()) * (static_cast<long long>(block.size()) - 1) / 2;
    std::set<Edge> edges;

    Rng inside_rng(derive_seed(seed, 0));
    PairDecoder inside_decoder{static_cast<int>(block.size())};
    skip_sample(inside_total, p, inside_rng, [&](long long pos) {
        const auto [a, b] = inside_decoder.decode(pos);
        edges.insert(normalize_edge(block[a], block[b]));
    });

    Rng overlay_rng(derive_seed(seed, 1));
    const long long all_total = static_cast<long long>(n) * (n - 1) / 2;
    PairDecoder all_decoder{n};
    skip_sample(all_total, q_prime, overlay_rng,
                [&](long long pos) { edges.insert(all_decoder.decode(pos)); });

    return GnpSample{
        Graph(n, std::vector<Edge>(edges.begin(), edges.end())), n, p, seed};
}

ColoringStrategy parse_strategy(const std::string& name) {
    if (name == "greedy") return ColoringStrategy::greedy;
    if (name == "distinct") return ColoringStrategy::distinct;
    if (name == "adversarial") return ColoringStrategy::adversarial;
    throw std::invalid_argument("unknown coloring strategy: " + name);
}

const char* to_string(ColoringStrategy s) {
    switch (s) {
        case ColoringStrategy::greedy: return "greedy";
        case ColoringStrategy::distinct: return "distinct";
        default: return "adversarial";
    }
}

namespace {

ProperColoring greedy_coloring(const Graph& g, uint64_t seed) {
    const int m = g.edge_count();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    std::vector<int> colors(m, -1);
    std::vector<int> stamp;  // color -> last edge that blocked it
    for (int e : order) {
        const auto& [u, v] = g.edges()[e];
        for (int x : {u, v})
            for (int j : g.incident_edges(x)) {
                const int c = colors[j];
                if (c < 0) continue;
                if (c >= static_cast<int>(stamp.size())) stamp.resize(c + 1, -1);
                stamp[c] = e;
            }
        int c = 0;
        while (c < static_cast<int>(stamp.size()) && stamp[c] == e) ++c;
        colors[e] = c;
    }
    return make_proper_coloring(g, std::move(colors));
}

}  // namespace

ProperColoring proper_color(const Graph& g, const ColoringOptions& opts) {
    switch (opts.strategy) {
        case ColoringStrategy::distinct: {
            std::vector<int> colors(g.edge_count());
            std::iota(colors.begin(), colors.end(), 0);
            return make_proper_coloring(g, std::move(colors));
        }
        case ColoringStrategy::adversarial: {
            if (opts.adversary_target == nullptr)
                throw std::invalid_argument("adversarial strategy needs a target graph");
            auto hunted = hunt_counterexample(g, *opts.adversary_target,
                                              opts.adversary_trials, opts.seed);
            if (hunted) return *hunted;
            return greedy_coloring(g, opts.seed);
        }
        case ColoringStrategy::greedy:
        default:
            return greedy_coloring(g, opts.seed);
    }
}

ColorAssignment assign_colors(const ProperColoring& c, int class_count,
                              uint64_t seed) {
    if (class_count < 1) throw std::invalid_argument("need at least one class");
    Rng rng(seed);
    ColorAssignment a;
    a.class_count = class_count;
    a.sigma.resize(c.color_count());
    for (int& cls : a.sigma) cls = rng.uniform_int(0, class_count - 1);
    return a;
}

Graph color_class_subgraph(const Graph& g, const ProperColoring& c,
                           const ColorAssignment& a, int t) {
    if (t < 0 || t >= a.class_count) throw std::invalid_argument("invalid class id");
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring does not match graph");
    std::vector<bool> keep(g.edge_count(), false);
    for (int e = 0; e < g.edge_count(); ++e) {
        const int color = c.colors[e];
        if (color >= static_cast<int>(a.sigma.size()))
            throw std::invalid_argument("assignment does not cover all colors");
        keep[e] = a.sigma[color] == t;
    }
    return spanning_subgraph(g, keep);
}

}  // namespace rainbow
