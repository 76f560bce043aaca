#ifndef EDGEBETTI_GRAPH_HPP
#define EDGEBETTI_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgebetti {

// Simple undirected graph on at most 64 vertices, adjacency as one
// 64-bit mask per vertex.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices, 0) {
        if (vertices < 0 || vertices > 64)
            throw std::invalid_argument("Graph: vertex count must be in [0, 64]");
    }

    static Graph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
        Graph g(vertices);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("Graph: edge endpoint out of range");
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    int max_degree() const;
    int min_degree() const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    std::uint64_t full_mask() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    bool operator==(const Graph&) const = default;
};

struct Graph6ParseError : std::runtime_error {
    std::size_t offset;
    Graph6ParseError(const std::string& what, std::size_t at)
        : std::runtime_error(what + " (byte offset " + std::to_string(at) + ")"), offset(at) {}
};

// McKay graph6: optional >>graph6<< header, N(n), then ceil(n(n-1)/2 / 6)
// bytes of 63 + 6 upper-triangle bits in column-major order.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

Graph complement(const Graph& g);

// Vertices of w are compacted to 0..popcount(w)-1 in ascending original order.
Graph induced_subgraph(const Graph& g, std::uint64_t w);

// Components as vertex masks, sorted by least element.  Singleton
// components for isolated vertices.
std::vector<std::uint64_t> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Number of i-edge sets that are pairwise disjoint and induced (no other
// edge of g among their 2i vertices).
long induced_matching_count(const Graph& g, int i);

}  // namespace edgebetti

#endif
