#include "rainbow/census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rainbow/random_models.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

std::vector<Embedding> isolated_copies(const Graph& g, const Graph& s) {
    const auto copies = enumerate_copies(g, s);
    std::vector<int> edge_load(g.edge_count(), 0);
    for (const auto& emb : copies)
        for (int e : emb.host_edges) ++edge_load[e];
    std::vector<Embedding> isolated;
    for (const auto& emb : copies) {
        bool alone = true;
        for (int e : emb.host_edges)
            if (edge_load[e] > 1) {
                alone = false;
                break;
            }
        if (alone && !emb.host_edges.empty()) isolated.push_back(emb);
    }
    return isolated;
}

IsolatedSubgraph isolated_subgraph(const Graph& g, const Graph& s) {
    IsolatedSubgraph out;
    out.copies = isolated_copies(g, s);
    std::vector<int> owner(g.edge_count(), -1);
    std::vector<bool> keep(g.edge_count(), false);
    for (size_t c = 0; c < out.copies.size(); ++c)
        for (int e : out.copies[c].host_edges) {
            if (owner[e] >= 0)
                throw std::logic_error("isolated copies must be edge-disjoint");
            owner[e] = static_cast<int>(c);
            keep[e] = true;
        }
    out.graph = spanning_subgraph(g, keep);
    out.copy_index.reserve(out.graph.edge_count());
    for (const auto& [u, v] : out.graph.edges())
        out.copy_index.push_back(owner[g.edge_index(u, v)]);
    return out;
}

namespace {

// Part of each vertex, or -1.
std::vector<int> part_lookup(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<int> where(n, -1);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
            if (where[v] >= 0) throw std::invalid_argument("parts overlap");
            where[v] = static_cast<int>(i);
        }
    return where;
}

bool transversal_unlabeled(const Embedding& emb, const std::vector<int>& where,
                           int part_count) {
    std::vector<char> hit(part_count, 0);
    for (int v : emb.map) {
        const int p = where[v];
        if (p < 0 || hit[p]) return false;
        hit[p] = 1;
    }
    return true;
}

bool transversal_labeled(const Embedding& emb, const std::vector<int>& where,
                         const std::vector<std::vector<int>>& auts) {
    for (const auto& alpha : auts) {
        bool ok = true;
        for (size_t i = 0; i < alpha.size() && ok; ++i)
            if (where[emb.map[alpha[i]]] != static_cast<int>(i)) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TransversalCounts transversal_counts(const Graph& g, const Graph& s,
                                     const std::vector<std::vector<int>>& parts,
                                     bool labeled, bool keep_copies) {
    if (static_cast<int>(parts.size()) != s.vertex_count())
        throw std::invalid_argument("need one part per pattern vertex");
    const auto where = part_lookup(g.vertex_count(), parts);
    const auto copies = enumerate_copies(g, s);
    std::vector<int> edge_load(g.edge_count(), 0);
    for (const auto& emb : copies)
        for (int e : emb.host_edges) ++edge_load[e];
    const auto auts = labeled ? automorphisms(s) : std::vector<std::vector<int>>{};

    TransversalCounts out;
    for (const auto& emb : copies) {
        const bool trans = labeled
                               ? transversal_labeled(emb, where, auts)
                               : transversal_unlabeled(emb, where,
                                                       static_cast<int>(parts.size()));
        if (!trans) continue;
        ++out.z;
        bool alone = !emb.host_edges.empty();
        for (int e : emb.host_edges)
            if (edge_load[e] > 1) {
                alone = false;
                break;
            }
        if (alone) ++out.y;
        if (keep_copies) out.copies.push_back(emb);
    }
    return out;
}

bool edge_family_embeds(const IsolatedSubgraph& gs, const std::vector<Edge>& edges) {
    if (edges.empty()) throw std::invalid_argument("edge family must be nonempty");
    std::vector<int> owners;
    for (const auto& [u, v] : edges) {
        const int idx = gs.graph.edge_index(u, v);
        if (idx < 0) return false;
        owners.push_back(gs.copy_index[idx]);
    }
    std::sort(owners.begin(), owners.end());
    return std::adjacent_find(owners.begin(), owners.end()) == owners.end();
}

bool edge_family_embeds(const Graph& g, const Graph& s,
                        const std::vector<Edge>& edges) {
    return edge_family_embeds(isolated_subgraph(g, s), edges);
}

EmbedProbability estimate_embed_probability(int n, double p, const Graph& s,
                                            const std::vector<Edge>& edges,
                                            long long trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (edges.empty()) throw std::invalid_argument("edge family must be nonempty");
    EmbedProbability out;
    out.trials = trials;
    for (long long t = 0; t < trials; ++t) {
        const GnpSample sample = sample_gnp(n, p, derive_seed(seed, t));
        if (edge_family_embeds(sample.graph, s, edges)) ++out.successes;
    }
    out.frequency = static_cast<double>(out.successes) / trials;
    out.std_error = std::sqrt(out.frequency * (1.0 - out.frequency) / trials);
    out.ci_low = std::max(0.0, out.frequency - 1.96 * out.std_error);
    out.ci_high = std::min(1.0, out.frequency + 1.96 * out.std_error);
    out.bound = std::pow(std::pow(static_cast<double>(n), s.vertex_count() - 2) *
                             std::pow(p, s.edge_count()),
                         static_cast<double>(edges.size()));
    return out;
}

}  // namespace rainbow
