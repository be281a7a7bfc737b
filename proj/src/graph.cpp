#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rainbow {

Edge normalize_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        edges_.push_back(normalize_edge(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(n_, {});
    adj_edge_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const auto& [u, v] = edges_[i];
        adj_[u].push_back(v);
        adj_edge_[u].push_back(i);
        adj_[v].push_back(u);
        adj_edge_[v].push_back(i);
    }
    // Neighbor lists come out sorted because edges_ is sorted and each edge is
    // normalized, except that v's list interleaves smaller-first entries.
    for (int v = 0; v < n_; ++v) {
        std::vector<int> order(adj_[v].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<int> nb(order.size()), ne(order.size());
        for (size_t k = 0; k < order.size(); ++k) {
            nb[k] = adj_[v][order[k]];
            ne[k] = adj_edge_[v][order[k]];
        }
        adj_[v] = std::move(nb);
        adj_edge_[v] = std::move(ne);
    }
}

const std::vector<int>& Graph::neighbors(int v) const { return adj_.at(v); }

const std::vector<int>& Graph::incident_edges(int v) const { return adj_edge_.at(v); }

int Graph::degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return adj_edge_[u][it - nb.begin()];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

LabeledTwoGraph::LabeledTwoGraph(Graph g, int a, int b)
    : graph(std::move(g)), root_a(a), root_b(b) {
    if (a == b) throw std::invalid_argument("root vertices must differ");
    if (!graph.has_edge(a, b)) throw std::invalid_argument("root pair is not an edge");
}

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pattern.vertex_count()) return false;
    std::vector<int> seen;
    for (int x : map) {
        if (x < 0 || x >= host.vertex_count()) return false;
        seen.push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (const auto& [u, v] : pattern.edges())
        if (!host.has_edge(map[u], map[v])) return false;
    return true;
}

Graph make_book(int t) {
    if (t < 1) throw std::invalid_argument("book requires t >= 1");
    std::vector<Edge> edges{{0, 1}};
    for (int k = 0; k < t; ++k) {
        edges.push_back({0, 2 + k});
        edges.push_back({1, 2 + k});
    }
    return Graph(t + 2, std::move(edges));
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle requires k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back(normalize_edge(i, (i + 1) % k));
    return Graph(k, std::move(edges));
}

Graph make_clique(int k) {
    if (k < 3) throw std::invalid_argument("clique requires k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
    return Graph(k, std::move(edges));
}

Graph make_path(int k) {
    if (k < 1) throw std::invalid_argument("path requires k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return Graph(k, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph amalgamate(const LabeledTwoGraph& f, const LabeledTwoGraph& h) {
    const int nf = f.graph.vertex_count();
    const int nh = h.graph.vertex_count();
    std::vector<int> relabel(nh, -1);
    relabel[h.root_a] = f.root_a;
    relabel[h.root_b] = f.root_b;
    int next = nf;
    for (int v = 0; v < nh; ++v)
        if (relabel[v] < 0) relabel[v] = next++;
    std::vector<Edge> edges = f.graph.edges();
    for (const auto& [u, v] : h.graph.edges()) {
        if ((u == h.root_a && v == h.root_b) || (u == h.root_b && v == h.root_a))
            continue;  // identified with f's root edge
        edges.push_back(normalize_edge(relabel[u], relabel[v]));
    }
    return Graph(nf + nh - 2, std::move(edges));
}

namespace {

// Pattern vertex order for backtracking: start at a max-degree vertex, then
// repeatedly pick the vertex most constrained by already-placed ones.
std::vector<int> matching_order(const Graph& pattern) {
    const int k = pattern.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int w : pattern.neighbors(v))
                if (placed[w]) ++back;
            if (back > best_back ||
                (back == best_back && pattern.degree(v) > best_deg) ||
                (back == best_back && pattern.degree(v) == best_deg && (best < 0 || v < best))) {
                best = v;
                best_back = back;
                best_deg = pattern.degree(v);
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

struct CopySearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<int> map;           // pattern vertex -> host vertex or -1
    std::vector<bool> used;         // host vertex used
    long long hom_count = 0;
    bool collect;
    std::vector<Embedding>* out = nullptr;

    void run() {
        map.assign(pattern.vertex_count(), -1);
        used.assign(host.vertex_count(), false);
        extend(0);
    }

    void extend(size_t depth) {
        if (depth == order.size()) {
            ++hom_count;
            if (collect) {
                Embedding e;
                e.map = map;
                e.host_edges.reserve(pattern.edge_count());
                for (const auto& [u, v] : pattern.edges())
                    e.host_edges.push_back(host.edge_index(map[u], map[v]));
                std::sort(e.host_edges.begin(), e.host_edges.end());
                out->push_back(std::move(e));
            }
            return;
        }
        const int pv = order[depth];
        // Candidates: intersect host neighborhoods of already-mapped pattern
        // neighbors; unconstrained vertices range over everything unused.
        int anchor = -1;
        for (int w : pattern.neighbors(pv))
            if (map[w] >= 0 && (anchor < 0 ||
                                host.degree(map[w]) < host.degree(map[anchor])))
                anchor = w;
        if (anchor < 0) {
            for (int hv = 0; hv < host.vertex_count(); ++hv)
                try_place(depth, pv, hv);
        } else {
            for (int hv : host.neighbors(map[anchor]))
                try_place(depth, pv, hv);
        }
    }

    void try_place(size_t depth, int pv, int hv) {
        if (used[hv]) return;
        for (int w : pattern.neighbors(pv))
            if (map[w] >= 0 && !host.has_edge(hv, map[w])) return;
        map[pv] = hv;
        used[hv] = true;
        extend(depth + 1);
        map[pv] = -1;
        used[hv] = false;
    }
};

}  // namespace

std::vector<Embedding> enumerate_copies(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return {};
    std::vector<Embedding> raw;
    CopySearch search{host, pattern, matching_order(pattern), {}, {}, 0, true, &raw};
    search.run();
    // Collapse automorphic duplicates: same vertex image + same edge image.
    struct Keyed {
        std::vector<int> vimage;
        Embedding emb;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(raw.size());
    for (auto& e : raw) {
        std::vector<int> vs = e.map;
        std::sort(vs.begin(), vs.end());
        keyed.push_back({std::move(vs), std::move(e)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.emb.host_edges != b.emb.host_edges)
            return a.emb.host_edges < b.emb.host_edges;
        if (a.vimage != b.vimage) return a.vimage < b.vimage;
        return a.emb.map < b.emb.map;
    });
    std::vector<Embedding> result;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].emb.host_edges == keyed[i - 1].emb.host_edges &&
            keyed[i].vimage == keyed[i - 1].vimage)
            continue;
        result.push_back(std::move(keyed[i].emb));
    }
    return result;
}

long long count_injective_homomorphisms(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return 0;
    CopySearch search{host, pattern, matching_order(pattern), {}, {}, 0, false, nullptr};
    search.run();
    return search.hom_count;
}

namespace {

bool iso_extend(const Graph& g1, const Graph& g2, std::vector<int>& map,
                std::vector<bool>& used, int v) {
    const int n = g1.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || g1.degree(v) != g2.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g1.has_edge(u, v) != g2.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (iso_extend(g1, g2, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    std::vector<int> d1, d2;
    for (int v = 0; v < g1.vertex_count(); ++v) d1.push_back(g1.degree(v));
    for (int v = 0; v < g2.vertex_count(); ++v) d2.push_back(g2.degree(v));
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return false;
    std::vector<int> map(g1.vertex_count(), -1);
    std::vector<bool> used(g1.vertex_count(), false);
    return iso_extend(g1, g2, map, used, 0);
}

namespace {

void aut_extend(const Graph& g, std::vector<int>& map, std::vector<bool>& used,
                int v, std::vector<std::vector<int>>& out) {
    const int n = g.vertex_count();
    if (v == n) {
        out.push_back(map);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || g.degree(v) != g.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != g.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        aut_extend(g, map, used, v + 1, out);
        used[w] = false;
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    aut_extend(g, map, used, 0, out);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> relabel(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex out of range");
        if (relabel[v] >= 0) throw std::invalid_argument("repeated vertex");
        relabel[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0)
            edges.push_back(normalize_edge(relabel[u], relabel[v]));
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph spanning_subgraph(const Graph& g, const std::vector<bool>& keep_edge) {
    if (static_cast<int>(keep_edge.size()) != g.edge_count())
        throw std::invalid_argument("keep_edge size mismatch");
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (keep_edge[i]) edges.push_back(g.edges()[i]);
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace rainbow
