#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace lvl1 {

using Vertex = int;

// Simple undirected graph on dense vertex ids 0..n-1 with sorted adjacency.
struct Graph {
    int n = 0;
    std::vector<std::vector<Vertex>> adj;

    static Graph empty(int n);
    // Throws std::invalid_argument on out-of-range ids, self-loops or duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    bool has_edge(Vertex u, Vertex v) const;
    long long edge_count() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, lexicographic
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;   // local id -> original id (ascending)
    std::vector<int> from_original;    // original id -> local id, -1 if absent
};

// Vertex set per connected component of the disconnected graph in {G-v, complement(G-v)},
// plus the pairs of components whose union with v induces a P4.
struct GammaGraph {
    std::vector<std::vector<Vertex>> component_list;
    std::vector<std::pair<int, int>> edges;  // component indices, i < j
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& w);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// Components of the complement without materializing it.
std::vector<std::vector<Vertex>> co_components(const Graph& g);
// nullopt means infinite (disconnected).
std::optional<int> diameter(const Graph& g);
// Ordered (a,b,c,d) with exactly the edges {a,b},{b,c},{c,d}; absent iff g is a cograph.
std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g);
bool is_module(const Graph& g, const std::vector<Vertex>& m);
GammaGraph gamma_graph(const Graph& g, Vertex v);

// Text format: "n m" header, then m lines "u v"; '#' starts a comment line.
Graph read_graph(std::istream& is);
void write_graph(std::ostream& os, const Graph& g);

namespace detail {
// Middle-edge scan, no modular decomposition involved. O(n*m) worst case.
std::optional<std::array<Vertex, 4>> find_p4_scan(const Graph& g);
}  // namespace detail

}  // namespace lvl1
