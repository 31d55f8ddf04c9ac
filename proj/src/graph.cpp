#include "eqlines/graph.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace eqlines {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0), degree_(n, 0) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop at " + std::to_string(u));
    if (adj_[idx(u, v)]) return;
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
    ++degree_[u];
    ++degree_[v];
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u, "remove_edge");
    check_vertex(v, "remove_edge");
    if (!adj_[idx(u, v)]) return;
    adj_[idx(u, v)] = adj_[idx(v, u)] = 0;
    --degree_[u];
    --degree_[v];
}

void Graph::flip_edge(int u, int v) {
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

int Graph::max_degree() const {
    int best = 0;
    for (int d : degree_) best = std::max(best, d);
    return best;
}

double Graph::average_degree() const {
    if (n_ == 0) return 0.0;
    long long sum = 0;
    for (int d : degree_) sum += d;
    return static_cast<double>(sum) / n_;
}

long long Graph::edge_count() const {
    long long sum = 0;
    for (int d : degree_) sum += d;
    return sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[idx(i, j)]) out.emplace_back(i, j);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    std::vector<int> out;
    out.reserve(degree_[v]);
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

RealMatrix Graph::adjacency_matrix() const {
    RealMatrix a(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a(i, j) = adj_[idx(i, j)] ? 1.0 : 0.0;
    return a;
}

bool Graph::is_regular(int* k) const {
    if (n_ == 0) return true;
    for (int d : degree_)
        if (d != degree_[0]) return false;
    if (k) *k = degree_[0];
    return true;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(n_, -1);
    for (int start = 0; start < n_; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n_; ++v) {
                if (!adj_[idx(u, v)]) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n_; ++v)
            if (adj_[idx(u, v)] && !seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n_;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (int v : vertices) check_vertex(v, "induced");
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b]))
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

} // namespace eqlines
