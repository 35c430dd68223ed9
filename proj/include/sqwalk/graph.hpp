#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sqwalk {

// Undirected graph with a positive weight per vertex. Vertices are 0-indexed.
struct VertexWeightedGraph {
    int n = 0;
    std::vector<std::uint8_t> adj; // row-major n*n, symmetric, zero diagonal
    std::vector<double> weights;   // size n, all > 0

    VertexWeightedGraph() = default;
    VertexWeightedGraph(int n_, std::vector<std::pair<int, int>> edges,
                        std::vector<double> w = {});

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v] != 0; }
    void add_edge(int u, int v);

    // Throws precondition_error on asymmetric adjacency, nonzero diagonal,
    // or non-positive weights.
    void validate() const;

    std::vector<std::pair<int, int>> edge_list() const;

    static VertexWeightedGraph complete(int n, double weight = 1.0);
    static VertexWeightedGraph cycle(int n, double weight = 1.0);
};

} // namespace sqwalk
