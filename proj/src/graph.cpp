#include "sqwalk/graph.hpp"

#include "sqwalk/errors.hpp"

namespace sqwalk {

VertexWeightedGraph::VertexWeightedGraph(int n_, std::vector<std::pair<int, int>> edges,
                                         std::vector<double> w)
    : n(n_), adj(static_cast<std::size_t>(n_) * n_, 0),
      weights(w.empty() ? std::vector<double>(n_, 1.0) : std::move(w)) {
    if (n_ < 0) throw precondition_error("vertex count must be nonnegative");
    for (const auto& [u, v] : edges) add_edge(u, v);
    validate();
}

void VertexWeightedGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw precondition_error("edge endpoint out of range");
    if (u == v) throw precondition_error("self-loops are not allowed");
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
}

void VertexWeightedGraph::validate() const {
    if (static_cast<int>(weights.size()) != n)
        throw precondition_error("weight vector size must equal vertex count");
    for (double w : weights)
        if (!(w > 0.0)) throw precondition_error("vertex weights must be positive");
    if (adj.size() != static_cast<std::size_t>(n) * n)
        throw precondition_error("adjacency size mismatch");
    for (int u = 0; u < n; ++u) {
        if (adj[static_cast<std::size_t>(u) * n + u] != 0)
            throw precondition_error("adjacency diagonal must be empty");
        for (int v = u + 1; v < n; ++v)
            if (adjacent(u, v) != adjacent(v, u))
                throw precondition_error("adjacency must be symmetric");
    }
}

std::vector<std::pair<int, int>> VertexWeightedGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent(u, v)) edges.emplace_back(u, v);
    return edges;
}

VertexWeightedGraph VertexWeightedGraph::complete(int n, double weight) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return VertexWeightedGraph(n, std::move(edges), std::vector<double>(n, weight));
}

VertexWeightedGraph VertexWeightedGraph::cycle(int n, double weight) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return VertexWeightedGraph(n, std::move(edges), std::vector<double>(n, weight));
}

} // namespace sqwalk
