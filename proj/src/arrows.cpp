#include "rainbow/arrows.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rainbow/rng.hpp"

namespace rainbow {

const char* to_string(ArrowsVerdict v) {
    switch (v) {
        case ArrowsVerdict::holds: return "holds";
        case ArrowsVerdict::fails: return "fails";
        default: return "unknown";
    }
}

std::optional<std::pair<Embedding, std::vector<int>>> has_rainbow_copy(
    const Graph& g, const ProperColoring& c, const Graph& h) {
    if (!is_proper(g, c.colors))
        throw std::invalid_argument("has_rainbow_copy: coloring is not proper");
    for (const Embedding& emb : enumerate_copies(g, h)) {
        std::vector<int> cols;
        cols.reserve(emb.host_edges.size());
        for (int e : emb.host_edges) cols.push_back(c.colors[e]);
        std::vector<int> sorted = cols;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
            return std::make_pair(emb, cols);
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<int>> earlier_adjacent_edges(const Graph& g) {
    const int m = g.edge_count();
    std::vector<std::vector<int>> earlier(m);
    for (int i = 0; i < m; ++i) {
        const auto& [u, v] = g.edges()[i];
        for (int x : {u, v})
            for (int j : g.incident_edges(x))
                if (j < i) earlier[i].push_back(j);
        std::sort(earlier[i].begin(), earlier[i].end());
        earlier[i].erase(std::unique(earlier[i].begin(), earlier[i].end()),
                         earlier[i].end());
    }
    return earlier;
}

// Restricted-growth enumeration of edge partitions into matchings: edge i may
// take an existing color or open color max+1, skipping colors used on an
// adjacent earlier edge. Each renaming class appears exactly once, as its
// lexicographically minimal string.
struct ClassEnumerator {
    const Graph& g;
    const std::function<bool(const ProperColoring&)>& visit;
    std::vector<std::vector<int>> earlier;
    std::vector<int> colors;
    bool stopped = false;

    void run() {
        earlier = earlier_adjacent_edges(g);
        colors.assign(g.edge_count(), -1);
        if (g.edge_count() == 0) {
            visit(ProperColoring{{}});
            return;
        }
        descend(0, 0);
    }

    void descend(int i, int next_color) {
        if (stopped) return;
        if (i == g.edge_count()) {
            if (!visit(ProperColoring{colors})) stopped = true;
            return;
        }
        for (int k = 0; k <= next_color && !stopped; ++k) {
            bool feasible = true;
            for (int j : earlier[i])
                if (colors[j] == k) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            colors[i] = k;
            descend(i + 1, k == next_color ? next_color + 1 : next_color);
            colors[i] = -1;
        }
    }
};

}  // namespace

void enumerate_proper_colorings(
    const Graph& g, const std::function<bool(const ProperColoring&)>& visit) {
    ClassEnumerator en{g, visit, {}, {}, false};
    en.run();
}

long long count_proper_coloring_classes(const Graph& g) {
    long long count = 0;
    enumerate_proper_colorings(g, [&](const ProperColoring&) {
        ++count;
        return true;
    });
    return count;
}

namespace {

// Edge permutations induced by the vertex automorphisms of g.
std::vector<std::vector<int>> edge_automorphisms(const Graph& g) {
    std::vector<std::vector<int>> perms;
    for (const auto& pi : automorphisms(g)) {
        std::vector<int> perm(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [u, v] = g.edges()[e];
            perm[e] = g.edge_index(pi[u], pi[v]);
        }
        perms.push_back(std::move(perm));
    }
    return perms;
}

struct ArrowsSearch {
    const Graph& g;
    const ArrowsOptions& opts;
    std::vector<std::vector<int>> earlier;
    std::vector<std::vector<int>> copy_edges;    // sorted host edge ids per copy
    std::vector<std::vector<int>> copies_at;     // copies whose last edge is i
    std::vector<std::vector<int>> edge_perms;    // automorphism pruning
    std::vector<std::vector<int>> edge_perm_inv;
    std::vector<int> colors;
    std::vector<int> color_stamp;
    int stamp_tick = 0;
    long long decisions = 0;  // leaves reached plus subtrees pruned
    bool exhausted = false;
    std::optional<std::vector<int>> found;

    ArrowsSearch(const Graph& g_, const Graph& h, const ArrowsOptions& o)
        : g(g_), opts(o) {
        earlier = earlier_adjacent_edges(g);
        for (const Embedding& emb : enumerate_copies(g, h)) {
            if (std::find(copy_edges.begin(), copy_edges.end(), emb.host_edges) ==
                copy_edges.end())
                copy_edges.push_back(emb.host_edges);
        }
        copies_at.assign(g.edge_count(), {});
        for (size_t c = 0; c < copy_edges.size(); ++c)
            copies_at[copy_edges[c].back()].push_back(static_cast<int>(c));
        if (opts.automorphism_pruning) {
            edge_perms = edge_automorphisms(g);
            for (const auto& p : edge_perms) {
                std::vector<int> inv(p.size());
                for (size_t e = 0; e < p.size(); ++e) inv[p[e]] = static_cast<int>(e);
                edge_perm_inv.push_back(std::move(inv));
            }
        }
        colors.assign(g.edge_count(), -1);
        color_stamp.assign(g.edge_count() + 1, -1);
    }

    bool copy_is_rainbow(int c) {
        ++stamp_tick;
        for (int e : copy_edges[c]) {
            const int col = colors[e];
            if (color_stamp[col] == stamp_tick) return false;
            color_stamp[col] = stamp_tick;
        }
        return true;
    }

    bool budget_left() {
        return opts.max_colorings < 0 || decisions < opts.max_colorings;
    }

    // True if some prefix-stabilizing edge automorphism maps the current
    // prefix to a lexicographically smaller canonical string; that smaller
    // prefix's subtree covers this one up to recoloring.
    bool dominated_prefix(int depth) {
        std::vector<int> image(depth + 1), rename(depth + 1, -1);
        for (size_t pi = 0; pi < edge_perms.size(); ++pi) {
            const auto& perm = edge_perms[pi];
            const auto& inv = edge_perm_inv[pi];
            bool stabilizes = true;
            for (int j = 0; j <= depth && stabilizes; ++j)
                if (perm[j] > depth) stabilizes = false;
            if (!stabilizes) continue;
            for (int j = 0; j <= depth; ++j) image[j] = colors[inv[j]];
            std::fill(rename.begin(), rename.end(), -1);
            int next = 0;
            bool smaller = false, larger = false;
            for (int j = 0; j <= depth && !smaller && !larger; ++j) {
                if (rename[image[j]] < 0) rename[image[j]] = next++;
                const int canon = rename[image[j]];
                if (canon < colors[j]) smaller = true;
                if (canon > colors[j]) larger = true;
            }
            if (smaller) return true;
        }
        return false;
    }

    void descend(int i, int next_color) {
        if (found || exhausted) return;
        if (i == g.edge_count()) {
            ++decisions;
            if (!opts.prune_rainbow_prefix) {
                for (size_t c = 0; c < copy_edges.size(); ++c)
                    if (copy_is_rainbow(static_cast<int>(c))) return;
            }
            found = colors;
            return;
        }
        for (int k = 0; k <= next_color; ++k) {
            if (found || exhausted) return;
            if (!budget_left()) {
                exhausted = true;
                return;
            }
            bool feasible = true;
            for (int j : earlier[i])
                if (colors[j] == k) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            colors[i] = k;
            bool pruned = false;
            if (opts.prune_rainbow_prefix) {
                for (int c : copies_at[i])
                    if (copy_is_rainbow(c)) {
                        pruned = true;
                        break;
                    }
            }
            if (!pruned && opts.automorphism_pruning && dominated_prefix(i))
                pruned = true;
            if (pruned)
                ++decisions;
            else
                descend(i + 1, k == next_color ? next_color + 1 : next_color);
            colors[i] = -1;
        }
    }
};

ProperColoring all_distinct_coloring(const Graph& g) {
    std::vector<int> colors(g.edge_count());
    std::iota(colors.begin(), colors.end(), 0);
    return ProperColoring{std::move(colors)};
}

ProperColoring verified_counterexample(const Graph& g, const Graph& h,
                                       std::vector<int> colors) {
    ProperColoring c = make_proper_coloring(g, std::move(colors));
    if (has_rainbow_copy(g, c, h))
        throw std::logic_error("arrows search produced an invalid counterexample");
    return c;
}

}  // namespace

ArrowsResult arrows_rainbow(const Graph& g, const Graph& h,
                            const ArrowsOptions& opts) {
    ArrowsResult result;
    const auto copies = enumerate_copies(g, h);
    if (copies.empty()) {
        // No copy of h at all; any proper coloring is a counterexample.
        result.verdict = ArrowsVerdict::fails;
        result.counterexample = verified_counterexample(
            g, h, all_distinct_coloring(g).colors);
        result.colorings_examined = 1;
        return result;
    }
    bool edgeless_copy = false;
    for (const auto& emb : copies)
        if (emb.host_edges.empty()) edgeless_copy = true;
    if (edgeless_copy) {
        // A copy with no edges is rainbow under every coloring.
        result.verdict = ArrowsVerdict::holds;
        result.witness = has_rainbow_copy(g, all_distinct_coloring(g), h);
        result.colorings_examined = 0;
        return result;
    }

    ArrowsSearch search(g, h, opts);
    search.descend(0, 0);
    result.colorings_examined = search.decisions;
    if (search.found) {
        result.verdict = ArrowsVerdict::fails;
        result.counterexample = verified_counterexample(g, h, *search.found);
    } else if (search.exhausted) {
        result.verdict = ArrowsVerdict::unknown;
    } else {
        result.verdict = ArrowsVerdict::holds;
        result.witness = has_rainbow_copy(g, all_distinct_coloring(g), h);
    }
    return result;
}

ArrowsResult verify_book_lemma(int t, const ArrowsOptions& opts) {
    if (t < 1) throw std::invalid_argument("book lemma requires t >= 1");
    return arrows_rainbow(make_book(3 * t - 2), make_book(t), opts);
}

std::optional<ProperColoring> hunt_counterexample(const Graph& g, const Graph& h,
                                                  int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    const int m = g.edge_count();
    std::vector<std::vector<int>> copy_edges;
    for (const Embedding& emb : enumerate_copies(g, h))
        if (std::find(copy_edges.begin(), copy_edges.end(), emb.host_edges) ==
            copy_edges.end())
            copy_edges.push_back(emb.host_edges);
    for (const auto& ce : copy_edges)
        if (ce.empty()) return std::nullopt;  // edgeless copies are always rainbow
    std::vector<std::vector<int>> copies_of_edge(m);
    for (size_t c = 0; c < copy_edges.size(); ++c)
        for (int e : copy_edges[c]) copies_of_edge[e].push_back(static_cast<int>(c));
    std::vector<std::vector<int>> adj_all(m);
    for (int i = 0; i < m; ++i) {
        const auto& [u, v] = g.edges()[i];
        for (int x : {u, v})
            for (int j : g.incident_edges(x))
                if (j != i) adj_all[i].push_back(j);
        std::sort(adj_all[i].begin(), adj_all[i].end());
        adj_all[i].erase(std::unique(adj_all[i].begin(), adj_all[i].end()),
                         adj_all[i].end());
    }

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(trial)));
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        std::vector<int> colors(m, -1);
        int used_colors = 0;
        for (int e : order) {
            std::vector<bool> blocked(used_colors + 1, false);
            for (int j : adj_all[e])
                if (colors[j] >= 0) blocked[colors[j]] = true;
            // Prefer the feasible color already used most often inside copies
            // containing e; ties break uniformly at random.
            int best_score = -1;
            std::vector<int> best;
            for (int k = 0; k <= used_colors; ++k) {
                if (k < used_colors && blocked[k]) continue;
                int score = 0;
                for (int c : copies_of_edge[e])
                    for (int f : copy_edges[c])
                        if (colors[f] == k) ++score;
                if (k == used_colors) score -= 1;  // bias toward reuse
                if (score > best_score) {
                    best_score = score;
                    best = {k};
                } else if (score == best_score) {
                    best.push_back(k);
                }
            }
            const int choice = best[best.size() == 1
                                        ? 0
                                        : rng.uniform_int(0, static_cast<int>(best.size()) - 1)];
            colors[e] = choice;
            if (choice == used_colors) ++used_colors;
        }
        ProperColoring c = make_proper_coloring(g, colors);
        if (!has_rainbow_copy(g, c, h)) return c;
    }
    return std::nullopt;
}

}  // namespace rainbow
