#pragma once

#include "eqlines/matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace eqlines {

/// Undirected simple graph: symmetric 0/1 adjacency, no self-loops,
/// degrees kept consistent with the adjacency structure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void flip_edge(int u, int v);

    int degree(int v) const { return degree_[v]; }
    int max_degree() const;
    double average_degree() const;
    long long edge_count() const;

    /// Edges as (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    RealMatrix adjacency_matrix() const;

    /// True when every degree equals k; k reported through the pointer.
    bool is_regular(int* k = nullptr) const;
    bool is_bipartite() const;
    bool is_connected() const;

    /// Induced subgraph on `vertices` (kept in the given order).
    Graph induced(const std::vector<int>& vertices) const;

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }
    void check_vertex(int v, const char* who) const;

    int n_ = 0;
    std::vector<uint8_t> adj_;
    std::vector<int> degree_;
};

} // namespace eqlines
