#ifndef RAINBOW_GRAPH_HPP
#define RAINBOW_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

Edge normalize_edge(int u, int v);

// Immutable simple undirected graph on vertices 0..n-1.
// Edges are stored sorted; adjacency lists are precomputed, so values can be
// shared freely across threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    // Edge indices into edges(), parallel to neighbors(v).
    const std::vector<int>& incident_edges(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    // Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;
    int max_degree() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_edge_;
};

// A graph with a distinguished ordered root edge (a, b).
struct LabeledTwoGraph {
    Graph graph;
    int root_a = 0;
    int root_b = 1;

    LabeledTwoGraph(Graph g, int a, int b);
};

// Injective map from pattern vertices into a host graph. host_edges holds the
// host indices of the mapped pattern edges, sorted ascending.
struct Embedding {
    std::vector<int> map;
    std::vector<int> host_edges;
};

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const std::vector<int>& map);

// Book with t pages: vertices {0,1} form the spine, pages are 2..t+1.
// v = t+2, e = 2t+1.
Graph make_book(int t);
// Cycle 0-1-...-(k-1)-0, k >= 3.
Graph make_cycle(int k);
// Complete graph on k >= 3 vertices.
Graph make_clique(int k);
// Path 0-1-...-(k-1), k >= 1.
Graph make_path(int k);
Graph empty_graph(int n);

// Glues f and h along their root edges: f's vertices keep their labels,
// h's roots map onto f's roots (a->a, b->b), h's remaining vertices are
// appended after f's in ascending order of their original labels.
// v = v(f)+v(h)-2, e = e(f)+e(h)-1.
Graph amalgamate(const LabeledTwoGraph& f, const LabeledTwoGraph& h);

// All copies of pattern in host, one per subgraph copy (embeddings that share
// vertex image and edge image are automorphism-related and collapse to the
// lexicographically least map). Deterministic order.
std::vector<Embedding> enumerate_copies(const Graph& host, const Graph& pattern);

// Count of injective homomorphisms pattern -> host (no quotient).
long long count_injective_homomorphisms(const Graph& host, const Graph& pattern);

// All adjacency-preserving vertex permutations of g.
std::vector<std::vector<int>> automorphisms(const Graph& g);

bool are_isomorphic(const Graph& g1, const Graph& g2);

// Subgraph induced on the given vertices, relabeled 0..|vertices|-1 in the
// order given (callers usually pass a sorted set).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Spanning subgraph keeping the edges whose indices are flagged.
Graph spanning_subgraph(const Graph& g, const std::vector<bool>& keep_edge);

}  // namespace rainbow

#endif
