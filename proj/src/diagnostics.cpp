#include "rainbow/diagnostics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rainbow/rng.hpp"

namespace rainbow {

const char* to_string(CheckMethod m) {
    return m == CheckMethod::exact ? "exact" : "sampled";
}

namespace {

void check_disjoint_nonempty(const Graph& g, const std::vector<int>& U,
                             const std::vector<int>& V) {
    if (U.empty() || V.empty()) throw std::invalid_argument("empty vertex set");
    std::vector<char> mark(g.vertex_count(), 0);
    for (int u : U) {
        if (u < 0 || u >= g.vertex_count())
            throw std::invalid_argument("vertex out of range");
        if (mark[u]) throw std::invalid_argument("repeated vertex in U");
        mark[u] = 1;
    }
    for (int v : V) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex out of range");
        if (mark[v] == 1) throw std::invalid_argument("U and V overlap");
        if (mark[v] == 2) throw std::invalid_argument("repeated vertex in V");
        mark[v] = 2;
    }
}

long long edges_across(const Graph& g, const std::vector<int>& U,
                       const std::vector<int>& V) {
    std::vector<char> in_v(g.vertex_count(), 0);
    for (int v : V) in_v[v] = 1;
    long long count = 0;
    for (int u : U)
        for (int w : g.neighbors(u))
            if (in_v[w]) ++count;
    return count;
}

int threshold_size(double fraction, size_t whole) {
    const double x = fraction * static_cast<double>(whole);
    int k = static_cast<int>(std::ceil(x));
    if (k < 1) k = 1;
    if (k > static_cast<int>(whole)) k = static_cast<int>(whole);
    return k;
}

std::vector<int> pick_subset(const std::vector<int>& base, uint32_t mask) {
    std::vector<int> out;
    for (size_t i = 0; i < base.size(); ++i)
        if (mask >> i & 1) out.push_back(base[i]);
    return out;
}

// Next bitmask with the same popcount (Gosper).
uint32_t next_combination(uint32_t x) {
    const uint32_t c = x & -x;
    const uint32_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

PairDensity pair_density(const Graph& g, const std::vector<int>& U,
                         const std::vector<int>& V) {
    check_disjoint_nonempty(g, U, V);
    PairDensity pd;
    pd.u_set = U;
    pd.v_set = V;
    pd.edges_across = edges_across(g, U, V);
    pd.density = static_cast<double>(pd.edges_across) /
                 (static_cast<double>(U.size()) * static_cast<double>(V.size()));
    return pd;
}

SubsetCheckReport check_regular_pair(const Graph& g, const std::vector<int>& U,
                                     const std::vector<int>& V, double eps, double p,
                                     CheckMethod mode, long long probes,
                                     uint64_t seed) {
    check_disjoint_nonempty(g, U, V);
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    const double base_density = pair_density(g, U, V).density;
    const int ku = threshold_size(eps, U.size());
    const int kv = threshold_size(eps, V.size());

    // Cross-adjacency rows: bit b of row[a] marks the edge U[a]-V[b].
    std::vector<uint32_t> row(U.size(), 0);
    for (size_t a = 0; a < U.size(); ++a)
        for (size_t b = 0; b < V.size(); ++b)
            if (g.has_edge(U[a], V[b])) row[a] |= 1u << b;

    SubsetCheckReport report;
    report.method = mode;
    const double tolerance = eps * p;

    auto deviation = [&](uint32_t umask, uint32_t vmask) {
        long long e = 0;
        uint32_t rest = umask;
        while (rest) {
            const int a = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(row[a] & vmask);
        }
        const double d = static_cast<double>(e) /
                         (static_cast<double>(ku) * static_cast<double>(kv));
        return std::abs(d - base_density);
    };

    if (mode == CheckMethod::exact) {
        if (U.size() + V.size() > 26)
            throw std::invalid_argument(
                "check_regular_pair: exact mode capped at |U|+|V| <= 26");
        const uint32_t ulimit = 1u << U.size(), vlimit = 1u << V.size();
        for (uint32_t umask = (1u << ku) - 1; umask < ulimit;
             umask = next_combination(umask)) {
            for (uint32_t vmask = (1u << kv) - 1; vmask < vlimit;
                 vmask = next_combination(vmask)) {
                ++report.probes;
                const double dev = deviation(umask, vmask);
                report.worst = std::max(report.worst, dev);
                if (dev > tolerance) {
                    report.holds = false;
                    report.violation = {pick_subset(U, umask), pick_subset(V, vmask)};
                    return report;
                }
            }
        }
        report.holds = true;
        return report;
    }

    Rng rng(seed);
    auto random_mask = [&](size_t size, int k) {
        std::vector<int> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = static_cast<int>(i);
        rng.shuffle(idx);
        uint32_t mask = 0;
        for (int i = 0; i < k; ++i) mask |= 1u << idx[i];
        return mask;
    };
    for (long long t = 0; t < probes; ++t) {
        const uint32_t umask = random_mask(U.size(), ku);
        const uint32_t vmask = random_mask(V.size(), kv);
        ++report.probes;
        const double dev = deviation(umask, vmask);
        report.worst = std::max(report.worst, dev);
        if (dev > tolerance) {
            report.holds = false;
            report.violation = {pick_subset(U, umask), pick_subset(V, vmask)};
            return report;
        }
    }
    report.holds = true;  // no violation found among the probes
    return report;
}

SubsetCheckReport check_upper_uniform(const Graph& g, double mu, double p,
                                      CheckMethod mode, long long probes,
                                      uint64_t seed) {
    if (mu <= 0) throw std::invalid_argument("mu must be positive");
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("graph too small");
    const int k = threshold_size(mu, static_cast<size_t>(n));
    SubsetCheckReport report;
    report.method = mode;
    const double bound = (1.0 + mu) * p;

    auto density_of = [&](const std::vector<int>& U, const std::vector<int>& V) {
        return static_cast<double>(edges_across(g, U, V)) /
               (static_cast<double>(U.size()) * static_cast<double>(V.size()));
    };

    if (mode == CheckMethod::exact) {
        if (n > 16)
            throw std::invalid_argument(
                "check_upper_uniform: exact mode capped at 16 vertices");
        if (2 * k > n) {  // no admissible disjoint pair
            report.holds = true;
            return report;
        }
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        const uint32_t limit = 1u << n;
        for (uint32_t umask = (1u << k) - 1; umask < limit;
             umask = next_combination(umask)) {
            const std::vector<int> U = pick_subset(all, umask);
            // V ranges over k-subsets of the complement.
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!(umask >> v & 1)) rest.push_back(v);
            const uint32_t rlimit = 1u << rest.size();
            for (uint32_t vmask = (1u << k) - 1; vmask < rlimit;
                 vmask = next_combination(vmask)) {
                const std::vector<int> V = pick_subset(rest, vmask);
                ++report.probes;
                const double d = density_of(U, V);
                report.worst = std::max(report.worst, d);
                if (d > bound) {
                    report.holds = false;
                    report.violation = {U, V};
                    return report;
                }
            }
        }
        report.holds = true;
        return report;
    }

    Rng rng(seed);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (long long t = 0; t < probes; ++t) {
        rng.shuffle(idx);
        const std::vector<int> U(idx.begin(), idx.begin() + k);
        const std::vector<int> V(idx.begin() + k, idx.begin() + 2 * k);
        ++report.probes;
        const double d = density_of(U, V);
        report.worst = std::max(report.worst, d);
        if (d > bound) {
            report.holds = false;
            report.violation = {U, V};
            return report;
        }
    }
    report.holds = true;
    return report;
}

namespace {

struct DiscState {
    const Graph& g;
    double vol_g;
    std::vector<int> deg_u;  // |N(v) ∩ U| per vertex
    double vol_u = 0.0;

    explicit DiscState(const Graph& g_) : g(g_), deg_u(g_.vertex_count(), 0) {
        vol_g = 2.0 * g.edge_count();
    }

    void toggle(int x, std::vector<char>& in_u) {
        const int sign = in_u[x] ? -1 : 1;
        in_u[x] = !in_u[x];
        for (int w : g.neighbors(x)) deg_u[w] += sign;
        vol_u += sign * g.degree(x);
    }

    // Best deviation for the current U, optimizing V per sign in closed form.
    double best_deviation(std::vector<int>* v_out) const {
        double pos = 0.0, neg = 0.0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const double a = deg_u[v] - vol_u * g.degree(v) / vol_g;
            if (a > 0) pos += a;
            else neg -= a;
        }
        if (v_out) {
            v_out->clear();
            const bool positive = pos >= neg;
            for (int v = 0; v < g.vertex_count(); ++v) {
                const double a = deg_u[v] - vol_u * g.degree(v) / vol_g;
                if ((positive && a > 0) || (!positive && a < 0)) v_out->push_back(v);
            }
        }
        return std::max(pos, neg);
    }
};

}  // namespace

DiscrepancyReport disc_discrepancy(const Graph& g, CheckMethod mode,
                                   long long probes, uint64_t seed) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("disc_discrepancy: zero-volume graph");
    const int n = g.vertex_count();
    DiscrepancyReport report;
    report.method = mode;
    DiscState state(g);
    std::vector<char> in_u(n, 0);
    double best = 0.0;
    std::vector<char> best_u;
    std::vector<int> best_v;

    if (mode == CheckMethod::exact) {
        if (n > 18)
            throw std::invalid_argument("disc_discrepancy: exact mode capped at 18 vertices");
        const uint64_t total = 1ULL << n;
        std::vector<int> v_buf;
        for (uint64_t k = 1; k < total; ++k) {
            state.toggle(std::countr_zero(k), in_u);
            ++report.probes;
            const double dev = state.best_deviation(nullptr);
            if (dev > best) {
                best = dev;
                best_u = in_u;
                state.best_deviation(&best_v);
            }
        }
    } else {
        Rng rng(seed);
        for (long long t = 0; t < probes; ++t) {
            // Fresh uniform subset per probe.
            for (int v = 0; v < n; ++v) {
                const bool want = rng.next_u64() & 1;
                if (want != static_cast<bool>(in_u[v])) state.toggle(v, in_u);
            }
            ++report.probes;
            const double dev = state.best_deviation(nullptr);
            if (dev > best) {
                best = dev;
                best_u = in_u;
                state.best_deviation(&best_v);
            }
        }
    }

    report.epsilon = best / state.vol_g;
    for (int v = 0; v < n; ++v)
        if (!best_u.empty() && best_u[v]) report.witness_u.push_back(v);
    report.witness_v = best_v;
    return report;
}

CircuitWeight circuit_weight_sum(const Graph& g, int ell) {
    if (ell < 2) throw std::invalid_argument("circuit length must be >= 2");
    std::vector<int> live;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) live.push_back(v);
    CircuitWeight out;
    out.excluded_isolated = static_cast<int>(live.size()) != g.vertex_count();
    if (live.empty()) return out;

    const int d = static_cast<int>(live.size());
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < d; ++i) pos[live[i]] = i;
    Eigen::MatrixXd norm = Eigen::MatrixXd::Zero(d, d);
    for (const auto& [u, v] : g.edges()) {
        if (pos[u] < 0 || pos[v] < 0) continue;
        const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) *
                                         static_cast<double>(g.degree(v)));
        norm(pos[u], pos[v]) = w;
        norm(pos[v], pos[u]) = w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(norm,
                                                          Eigen::EigenvaluesOnly);
    // trace(W^ell) for the walk operator W = D^{-1} A equals the power sum of
    // the normalized spectrum; Kahan summation keeps the small terms.
    double sum = 0.0, carry = 0.0;
    for (int i = 0; i < d; ++i) {
        double term = 1.0;
        const double lambda = solver.eigenvalues()[i];
        for (int k = 0; k < ell; ++k) term *= lambda;
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    out.value = sum;
    return out;
}

bool check_circuit_property(const Graph& g, int ell, double eps) {
    return std::abs(circuit_weight_sum(g, ell).value - 1.0) <= eps;
}

long long count_circuits(const Graph& g, int ell) {
    if (ell < 2) throw std::invalid_argument("circuit length must be >= 2");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<long long> adj(static_cast<size_t>(n) * n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
    }
    std::vector<long long> power = adj, scratch(adj.size());
    auto multiply = [&](const std::vector<long long>& a,
                        const std::vector<long long>& b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                __int128 acc = 0;
                for (int k = 0; k < n; ++k)
                    acc += static_cast<__int128>(a[static_cast<size_t>(i) * n + k]) *
                           b[static_cast<size_t>(k) * n + j];
                if (acc > std::numeric_limits<long long>::max())
                    throw std::overflow_error("count_circuits: entry overflow");
                scratch[static_cast<size_t>(i) * n + j] = static_cast<long long>(acc);
            }
    };
    for (int step = 1; step < ell; ++step) {
        multiply(power, adj);
        power.swap(scratch);
    }
    __int128 trace = 0;
    for (int i = 0; i < n; ++i) trace += power[static_cast<size_t>(i) * n + i];
    if (trace > std::numeric_limits<long long>::max())
        throw std::overflow_error("count_circuits: trace overflow");
    return static_cast<long long>(trace);
}

namespace {

// Every 4-cycle u-a-w-b-u exactly once: u is the smallest vertex, a < b are
// its cycle neighbors, w the antipode. Callback gets vertices and edge ids.
template <typename Fn>
void for_each_4cycle_indexed(const Graph& g, Fn fn) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& nb = g.neighbors(u);
        const auto& inc = g.incident_edges(u);
        for (size_t ia = 0; ia < nb.size(); ++ia) {
            const int a = nb[ia];
            if (a <= u) continue;
            for (size_t ib = ia + 1; ib < nb.size(); ++ib) {
                const int b = nb[ib];
                // Intersect N(a) and N(b), keeping edge ids from both sides.
                const auto& na = g.neighbors(a);
                const auto& ea = g.incident_edges(a);
                const auto& nbb = g.neighbors(b);
                const auto& eb = g.incident_edges(b);
                size_t x = 0, y = 0;
                while (x < na.size() && y < nbb.size()) {
                    if (na[x] < nbb[y]) {
                        ++x;
                    } else if (na[x] > nbb[y]) {
                        ++y;
                    } else {
                        const int w = na[x];
                        if (w > u)
                            fn(u, a, w, b, inc[ia], ea[x], eb[y], inc[ib]);
                        ++x;
                        ++y;
                    }
                }
            }
        }
    }
}

struct CycleDfs {
    const Graph& g;
    int ell;
    const std::function<void(const std::vector<int>&)>& fn;
    std::vector<int> path;
    std::vector<char> on_path;

    void run() {
        on_path.assign(g.vertex_count(), 0);
        for (int s = 0; s < g.vertex_count(); ++s) {
            path = {s};
            on_path[s] = 1;
            extend(s);
            on_path[s] = 0;
        }
    }

    void extend(int s) {
        if (static_cast<int>(path.size()) == ell) {
            if (g.has_edge(path.back(), s) && path[1] < path.back()) fn(path);
            return;
        }
        for (int w : g.neighbors(path.back())) {
            if (w <= s || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(s);
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

void for_each_cycle(const Graph& g, int ell,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (ell < 3) throw std::invalid_argument("cycle length must be >= 3");
    if (ell == 4) {
        for_each_4cycle_indexed(g, [&](int u, int a, int w, int b, int, int, int, int) {
            fn({u, a, w, b});
        });
        return;
    }
    CycleDfs dfs{g, ell, fn, {}, {}};
    dfs.run();
}

long long count_cycles(const Graph& g, int ell) {
    long long count = 0;
    for_each_cycle(g, ell, [&](const std::vector<int>&) { ++count; });
    return count;
}

long long count_paths_between(const Graph& g, int u, int v, int ell_vertices) {
    if (u == v) throw std::invalid_argument("endpoints must differ");
    if (ell_vertices < 2) throw std::invalid_argument("path needs >= 2 vertices");
    std::vector<char> visited(g.vertex_count(), 0);
    long long count = 0;
    std::function<void(int, int)> dfs = [&](int x, int depth) {
        if (depth == ell_vertices) {
            if (x == v) ++count;
            return;
        }
        for (int w : g.neighbors(x)) {
            if (visited[w]) continue;
            if (w == v && depth + 1 != ell_vertices) continue;  // v only last
            visited[w] = 1;
            dfs(w, depth + 1);
            visited[w] = 0;
        }
    };
    visited[u] = 1;
    dfs(u, 1);
    return count;
}

long long count_color_tied_paths(const Graph& g, const ProperColoring& c,
                                 int k_vertices) {
    if (!is_proper(g, c.colors))
        throw std::invalid_argument("count_color_tied_paths: coloring is not proper");
    if (k_vertices < 3) throw std::invalid_argument("need >= 3 vertices");
    long long count = 0;
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<int> path;
    int first_color = -1;
    std::function<void()> dfs = [&]() {
        const int x = path.back();
        if (static_cast<int>(path.size()) == k_vertices - 1) {
            const auto& nb = g.neighbors(x);
            const auto& inc = g.incident_edges(x);
            for (size_t i = 0; i < nb.size(); ++i) {
                const int w = nb[i];
                // Endpoint order canonicalizes each path once.
                if (visited[w] || w <= path.front()) continue;
                if (c.colors[inc[i]] == first_color) ++count;
            }
            return;
        }
        for (int w : g.neighbors(x)) {
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            dfs();
            path.pop_back();
            visited[w] = 0;
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        const auto& nb = g.neighbors(s);
        const auto& inc = g.incident_edges(s);
        visited[s] = 1;
        for (size_t i = 0; i < nb.size(); ++i) {
            const int w = nb[i];
            first_color = c.colors[inc[i]];
            visited[w] = 1;
            path = {s, w};
            dfs();
            visited[w] = 0;
        }
        visited[s] = 0;
    }
    return count;
}

long long count_non_rainbow_cycles(const Graph& g, const ProperColoring& c,
                                   int ell) {
    if (!is_proper(g, c.colors))
        throw std::invalid_argument("count_non_rainbow_cycles: coloring is not proper");
    if (ell < 3) throw std::invalid_argument("cycle length must be >= 3");
    if (ell == 3) return 0;  // adjacent edges always differ
    long long count = 0;
    if (ell == 4) {
        // Only opposite edges of a 4-cycle can repeat a color.
        for_each_4cycle_indexed(
            g, [&](int, int, int, int, int e0, int e1, int e2, int e3) {
                if (c.colors[e0] == c.colors[e2] || c.colors[e1] == c.colors[e3])
                    ++count;
            });
        return count;
    }
    for_each_cycle(g, ell, [&](const std::vector<int>& cyc) {
        std::vector<int> cols(cyc.size());
        for (size_t i = 0; i < cyc.size(); ++i)
            cols[i] = c.colors[g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()])];
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) ++count;
    });
    return count;
}

DegreeConcentration degree_concentration_report(const Graph& g_t, double reference,
                                                double delta) {
    if (!(reference > 0)) throw std::invalid_argument("reference must be positive");
    DegreeConcentration out;
    out.vertices = g_t.vertex_count();
    if (out.vertices == 0) return out;
    out.min_degree = std::numeric_limits<int>::max();
    int within = 0;
    for (int v = 0; v < g_t.vertex_count(); ++v) {
        const int d = g_t.degree(v);
        out.min_degree = std::min(out.min_degree, d);
        out.max_degree = std::max(out.max_degree, d);
        if (std::abs(d - reference) <= delta * reference) ++within;
    }
    out.fraction_within = static_cast<double>(within) / out.vertices;
    return out;
}

nlohmann::ordered_json DiagnosticsReport::to_json() const {
    nlohmann::ordered_json out;
    out["schema_version"] = 1;
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json item;
        item["name"] = e.name;
        item["parameters"] = e.parameters;
        item["result"] = e.result;
        item["method"] = e.method;
        if (e.method == "sampled") item["sample_count"] = e.sample_count;
        out["checks"].push_back(std::move(item));
    }
    return out;
}

}  // namespace rainbow
