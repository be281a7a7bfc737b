#ifndef RAINBOW_DIAGNOSTICS_HPP
#define RAINBOW_DIAGNOSTICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class CheckMethod { exact, sampled };

const char* to_string(CheckMethod m);

struct PairDensity {
    std::vector<int> u_set;
    std::vector<int> v_set;
    long long edges_across = 0;
    double density = 0.0;
};

// Exact edge count and density across two disjoint nonempty vertex sets.
PairDensity pair_density(const Graph& g, const std::vector<int>& U,
                         const std::vector<int>& V);

struct SubsetCheckReport {
    bool holds = false;  // exact: definitive; sampled: no violation found
    CheckMethod method = CheckMethod::exact;
    long long probes = 0;  // sub-pairs examined
    double worst = 0.0;    // largest deviation (regularity) / density (uniformity)
    std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;
};

// (eps,p)-regularity of the bipartite pair (U, V): every sub-pair with
// |U'| >= eps|U|, |V'| >= eps|V| has density within eps*p of d(U,V).
// The extreme deviation over sub-pairs of size >= k is attained at size
// exactly k (sub-pair densities average to the superset density), so both
// modes probe the threshold sizes only. Exact mode requires |U|+|V| <= 26.
SubsetCheckReport check_regular_pair(const Graph& g, const std::vector<int>& U,
                                     const std::vector<int>& V, double eps, double p,
                                     CheckMethod mode, long long probes = 2000,
                                     uint64_t seed = 0);

// (mu,p)-upper-uniformity: d(U,V) <= (1+mu)p over disjoint pairs with
// |U|,|V| >= mu*v(G). Exact mode requires v(G) <= 16.
SubsetCheckReport check_upper_uniform(const Graph& g, double mu, double p,
                                      CheckMethod mode, long long probes = 2000,
                                      uint64_t seed = 0);

struct DiscrepancyReport {
    double epsilon = 0.0;  // exact maximum, or a sampled lower bound
    CheckMethod method = CheckMethod::exact;
    long long probes = 0;
    std::vector<int> witness_u;
    std::vector<int> witness_v;
};

// Smallest eps such that |e(U,V) - vol(U)vol(V)/vol(G)| <= eps*vol(G) over
// all subset pairs, U and V not necessarily disjoint; e(U,V) counts ordered
// incidences (an edge inside the overlap contributes twice). Exact mode
// enumerates all U (v(G) <= 18) and optimizes V in closed form per U.
// Rejects graphs with no edges.
DiscrepancyReport disc_discrepancy(const Graph& g, CheckMethod mode,
                                   long long probes = 4096, uint64_t seed = 0);

struct CircuitWeight {
    double value = 0.0;
    bool excluded_isolated = false;  // isolated vertices dropped from the trace
};

// Sum over closed ell-vertex sequences of the product of 1/deg over visited
// vertices; equals the trace of the ell-th power of the degree-normalized
// walk operator, computed from its spectrum with compensated summation.
CircuitWeight circuit_weight_sum(const Graph& g, int ell);

// |circuit_weight_sum - 1| <= eps.
bool check_circuit_property(const Graph& g, int ell, double eps);

// Number of closed ell-vertex sequences = trace(A^ell), exact integer
// arithmetic; throws on int64 overflow.
long long count_circuits(const Graph& g, int ell);

// Simple cycles on exactly ell vertices, each counted once as a subgraph.
// One ell-cycle corresponds to 2*ell circuit sequences.
long long count_cycles(const Graph& g, int ell);

// Visits every ell-cycle once; the sequence starts at the cycle's smallest
// vertex and the second vertex is smaller than the last.
void for_each_cycle(const Graph& g, int ell,
                    const std::function<void(const std::vector<int>&)>& fn);

// Simple u-v paths on exactly ell_vertices vertices.
long long count_paths_between(const Graph& g, int u, int v, int ell_vertices);

// Simple paths on k >= 3 vertices whose first and last edges share a color.
long long count_color_tied_paths(const Graph& g, const ProperColoring& c,
                                 int k_vertices);

// Simple ell-cycles carrying a repeated color; 0 for ell = 3 under any proper
// coloring.
long long count_non_rainbow_cycles(const Graph& g, const ProperColoring& c,
                                   int ell);

struct DegreeConcentration {
    double fraction_within = 0.0;
    int min_degree = 0;
    int max_degree = 0;
    int vertices = 0;
};

// Fraction of vertices with degree in (1 +- delta) * reference.
DegreeConcentration degree_concentration_report(const Graph& g_t, double reference,
                                                double delta);

struct DiagnosticsEntry {
    std::string name;
    nlohmann::ordered_json parameters;
    nlohmann::ordered_json result;
    std::string method;
    long long sample_count = 0;
};

struct DiagnosticsReport {
    std::vector<DiagnosticsEntry> entries;
    nlohmann::ordered_json to_json() const;
};

}  // namespace rainbow

#endif
