#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rainbow::oracle {

namespace {

// Visit every injective map pattern -> host in plain vertex order.
void walk_maps(const Graph& host, const Graph& pattern, std::vector<int>& map,
               std::vector<bool>& used, int v,
               const std::function<void(const std::vector<int>&)>& fn) {
    if (v == pattern.vertex_count()) {
        fn(map);
        return;
    }
    for (int h = 0; h < host.vertex_count(); ++h) {
        if (used[h]) continue;
        bool ok = true;
        for (int w = 0; w < v && ok; ++w)
            if (pattern.has_edge(v, w) && !host.has_edge(h, map[w])) ok = false;
        if (!ok) continue;
        map[v] = h;
        used[h] = true;
        walk_maps(host, pattern, map, used, v + 1, fn);
        used[h] = false;
    }
    map[v] = -1;
}

void for_each_injection(const Graph& host, const Graph& pattern,
                        const std::function<void(const std::vector<int>&)>& fn) {
    if (pattern.vertex_count() > host.vertex_count()) return;
    std::vector<int> map(pattern.vertex_count(), -1);
    std::vector<bool> used(host.vertex_count(), false);
    walk_maps(host, pattern, map, used, 0, fn);
}

}  // namespace

long long injective_homomorphisms(const Graph& host, const Graph& pattern) {
    long long count = 0;
    for_each_injection(host, pattern, [&](const std::vector<int>&) { ++count; });
    return count;
}

long long copy_count(const Graph& host, const Graph& pattern) {
    std::set<std::pair<std::vector<int>, std::set<Edge>>> images;
    for_each_injection(host, pattern, [&](const std::vector<int>& map) {
        std::vector<int> verts = map;
        std::sort(verts.begin(), verts.end());
        std::set<Edge> edges;
        for (const auto& [u, v] : pattern.edges())
            edges.insert(normalize_edge(map[u], map[v]));
        images.insert({verts, edges});
    });
    return static_cast<long long>(images.size());
}

Rational m2(const Graph& g) {
    const int m = g.edge_count();
    Rational best(0);
    bool have = false;
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        std::set<int> verts;
        int e = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                verts.insert(g.edges()[i].first);
                verts.insert(g.edges()[i].second);
                ++e;
            }
        // Pad with isolated vertices only up to the v >= 3 floor; more padding
        // can only lower the ratio.
        const int v = std::max<int>(3, static_cast<int>(verts.size()));
        if (v > g.vertex_count()) continue;
        const Rational ratio(e - 1, v - 2);
        if (!have || ratio > best) {
            best = ratio;
            have = true;
        }
    }
    return best;
}

long long coloring_classes(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) return 1;
    std::set<std::vector<int>> classes;
    std::vector<int> colors(m, 0);
    for (;;) {
        if (is_proper(g, colors)) {
            std::vector<int> canon(m), rename(m, -1);
            int next = 0;
            for (int i = 0; i < m; ++i) {
                if (rename[colors[i]] < 0) rename[colors[i]] = next++;
                canon[i] = rename[colors[i]];
            }
            classes.insert(canon);
        }
        int i = m - 1;
        while (i >= 0 && colors[i] == m - 1) colors[i--] = 0;
        if (i < 0) break;
        ++colors[i];
    }
    return static_cast<long long>(classes.size());
}

namespace {

void walk_sequences(const Graph& g, int ell, std::vector<int>& seq, int depth,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (depth == ell) {
        if (g.has_edge(seq.back(), seq.front())) fn(seq);
        return;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (depth > 0 && !g.has_edge(seq[depth - 1], v)) continue;
        seq.push_back(v);
        walk_sequences(g, ell, seq, depth + 1, fn);
        seq.pop_back();
    }
}

void for_each_circuit(const Graph& g, int ell,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> seq;
    walk_sequences(g, ell, seq, 0, fn);
}

}  // namespace

long long circuit_count(const Graph& g, int ell) {
    long long count = 0;
    for_each_circuit(g, ell, [&](const std::vector<int>&) { ++count; });
    return count;
}

double circuit_weight(const Graph& g, int ell) {
    double sum = 0.0;
    for_each_circuit(g, ell, [&](const std::vector<int>& seq) {
        double w = 1.0;
        for (int v : seq) w /= g.degree(v);
        sum += w;
    });
    return sum;
}

long long cycle_count(const Graph& g, int ell) {
    long long simple = 0;
    for_each_circuit(g, ell, [&](const std::vector<int>& seq) {
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
            ++simple;
    });
    return simple / (2LL * ell);
}

double disc(const Graph& g) {
    const int n = g.vertex_count();
    const double vol_g = 2.0 * g.edge_count();
    double best = 0.0;
    for (uint32_t umask = 0; umask < (1u << n); ++umask) {
        for (uint32_t vmask = 0; vmask < (1u << n); ++vmask) {
            long long e = 0;
            double vol_u = 0.0, vol_v = 0.0;
            for (int u = 0; u < n; ++u) {
                if (!(umask >> u & 1)) continue;
                vol_u += g.degree(u);
                for (int w : g.neighbors(u))
                    if (vmask >> w & 1) ++e;
            }
            for (int v = 0; v < n; ++v)
                if (vmask >> v & 1) vol_v += g.degree(v);
            best = std::max(best, std::abs(e - vol_u * vol_v / vol_g));
        }
    }
    return best / vol_g;
}

CensusResult census(const Graph& g, const Graph& s,
                    const std::vector<std::vector<int>>& parts) {
    // Collect distinct copies the slow way.
    std::vector<std::pair<std::vector<int>, std::set<Edge>>> copies;
    {
        std::set<std::pair<std::vector<int>, std::set<Edge>>> seen;
        for_each_injection(g, s, [&](const std::vector<int>& map) {
            std::vector<int> verts = map;
            std::sort(verts.begin(), verts.end());
            std::set<Edge> edges;
            for (const auto& [u, v] : s.edges())
                edges.insert(normalize_edge(map[u], map[v]));
            if (seen.insert({verts, edges}).second)
                copies.push_back({verts, edges});
        });
    }
    std::vector<bool> isolated(copies.size(), true);
    for (size_t a = 0; a < copies.size(); ++a)
        for (size_t b = 0; b < copies.size(); ++b) {
            if (a == b) continue;
            for (const Edge& e : copies[a].second)
                if (copies[b].second.count(e)) {
                    isolated[a] = false;
                    break;
                }
        }
    std::vector<int> part_of(g.vertex_count(), -1);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) part_of[v] = static_cast<int>(i);

    CensusResult out;
    for (size_t a = 0; a < copies.size(); ++a) {
        const bool has_edges = !copies[a].second.empty();
        std::vector<char> hit(parts.size(), 0);
        bool trans = true;
        for (int v : copies[a].first) {
            const int p = part_of[v];
            if (p < 0 || hit[p]) {
                trans = false;
                break;
            }
            hit[p] = 1;
        }
        if (trans) {
            ++out.z;
            if (isolated[a] && has_edges) ++out.y;
        }
        if (isolated[a] && has_edges)
            out.isolated_edges.insert(copies[a].second.begin(),
                                      copies[a].second.end());
    }
    return out;
}

}  // namespace rainbow::oracle
