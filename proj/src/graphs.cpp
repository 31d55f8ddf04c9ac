#include "eqlines/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

namespace eqlines {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EigenDecomposition<double> spectrum(const Graph& g) {
    return eig_sym(g.adjacency_matrix());
}

double adjacency_lambda1(const Graph& g) {
    const int n = g.size();
    if (n == 0) throw std::invalid_argument("adjacency_lambda1: empty graph");
    int k = 0;
    if (g.is_regular(&k)) return static_cast<double>(k);
    if (n <= 80) return spectrum(g).eigenvalues.front();

    // Shifted power iteration; the shift keeps the iteration matrix
    // entrywise nonnegative so the all-ones start overlaps the Perron
    // vector of every component that matters.
    const double shift = g.max_degree() + 1.0;
    RealMatrix a = g.adjacency_matrix();
    for (int i = 0; i < n; ++i) a(i, i) += shift;
    RealVector x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double rayleigh = 0.0;
    for (int iter = 0; iter < 500000; ++iter) {
        RealVector y = matvec(a, x);
        double ny = norm(y);
        if (ny == 0.0) return -shift;
        for (auto& v : y) v /= ny;
        double r = dot(y, matvec(a, y));
        if (iter > 3 && std::abs(r - rayleigh) <= 5e-14 * std::max(1.0, std::abs(r))) {
            rayleigh = r;
            break;
        }
        rayleigh = r;
        x = std::move(y);
    }
    return rayleigh - shift;
}

double mu(const Graph& g) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("mu: needs at least two vertices");
    // (PAP)_ij = A_ij - (d_i + d_j)/n + 2|E|/n^2, then the trivial direction
    // is pushed to -(Delta + 1) which every Rayleigh value exceeds.
    RealMatrix a = g.adjacency_matrix();
    const double m2 = 2.0 * static_cast<double>(g.edge_count());
    const double deflate = (g.max_degree() + 1.0) / n;
    RealMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = a(i, j) - (g.degree(i) + g.degree(j)) / static_cast<double>(n) +
                      m2 / (static_cast<double>(n) * n) - deflate;
    return eig_sym(b).eigenvalues.front();
}

Graph ball(const Graph& g, int v, int q, std::vector<int>* vertices) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("ball: invalid center vertex");
    if (q < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<int> dist(g.size(), -1);
    std::vector<int> members;
    std::queue<int> work;
    dist[v] = 0;
    work.push(v);
    members.push_back(v);
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        if (dist[u] == q) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                members.push_back(w);
                work.push(w);
            }
    }
    int delta = g.max_degree();
    if (delta > 1) {
        double cap = (std::pow(delta, q + 1) - 1) / (delta - 1);
        if (static_cast<double>(members.size()) > cap)
            throw std::logic_error("ball: size exceeds (Delta^{q+1} - 1)/(Delta - 1)");
    }
    if (vertices) *vertices = members;
    return g.induced(members);
}

double star_lambda1(int t) {
    if (t < 1) throw std::invalid_argument("star_lambda1: t must be positive");
    return std::sqrt(static_cast<double>(t));
}

Subgraph Subgraph::induced(const Graph& g, const std::vector<int>& vertices) {
    Subgraph h;
    h.vertices = vertices;
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (g.adjacent(vertices[a], vertices[b]))
                h.edges.emplace_back(std::min(vertices[a], vertices[b]),
                                     std::max(vertices[a], vertices[b]));
    return h;
}

Subgraph Subgraph::star(const Graph& g, int center, int t) {
    auto nbrs = g.neighbors(center);
    if (static_cast<int>(nbrs.size()) < t)
        throw std::invalid_argument("star: center has fewer than t neighbors");
    Subgraph h;
    h.vertices.push_back(center);
    for (int i = 0; i < t; ++i) {
        h.vertices.push_back(nbrs[i]);
        h.edges.emplace_back(std::min(center, nbrs[i]), std::max(center, nbrs[i]));
    }
    return h;
}

double friedman_lower(const Graph& g, const Subgraph& h) {
    if (h.vertices.empty()) throw std::invalid_argument("friedman_lower: empty subgraph");
    std::set<int> members(h.vertices.begin(), h.vertices.end());
    if (members.size() != h.vertices.size())
        throw std::invalid_argument("friedman_lower: repeated vertex in subgraph");
    std::vector<int> local(g.size(), -1);
    for (size_t i = 0; i < h.vertices.size(); ++i) {
        int v = h.vertices[i];
        if (v < 0 || v >= g.size())
            throw std::invalid_argument("friedman_lower: subgraph vertex out of range");
        local[v] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(h.vertices.size()));
    for (auto [u, v] : h.edges) {
        if (u < 0 || u >= g.size() || v < 0 || v >= g.size() || local[u] < 0 || local[v] < 0 ||
            !g.adjacent(u, v))
            throw std::invalid_argument("friedman_lower: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge of the host graph");
        sub.add_edge(local[u], local[v]);
    }
    double lambda1_h = adjacency_lambda1(sub);
    double penalty = (2.0 * g.max_degree() - g.average_degree()) *
                     static_cast<double>(h.vertices.size()) / g.size();
    return lambda1_h - penalty;
}

double mu_lower_star(const Graph& g, int t) {
    if (t < 1 || t > g.max_degree())
        throw std::invalid_argument("mu_lower_star: t must satisfy 1 <= t <= max degree");
    return std::sqrt(static_cast<double>(t)) -
           2.0 * g.max_degree() * (t + 1.0) / static_cast<double>(g.size());
}

std::pair<int, double> jiang_best_ball(const Graph& g, int q) {
    if (g.size() == 0) throw std::invalid_argument("jiang_best_ball: empty graph");
    if (q < 1) throw std::invalid_argument("jiang_best_ball: q must be at least 1");
    int best_vertex = 0;
    double best_value = -1.0;
    for (int v = 0; v < g.size(); ++v) {
        Graph b = ball(g, v, q);
        double lam = adjacency_lambda1(b);
        if (lam > best_value + 1e-12) {
            best_value = lam;
            best_vertex = v;
        }
    }
    double dbar = g.average_degree();
    if (dbar >= 1.0) {
        double promised = 2.0 * std::sqrt(dbar - 1.0) * std::cos(kPi / (q + 2));
        if (best_value < promised - 1e-8) {
            std::ostringstream os;
            os << "jiang_best_ball: internal consistency failure, best ball lambda1 "
               << best_value << " below promised " << promised;
            throw std::logic_error(os.str());
        }
    }
    return {best_vertex, best_value};
}

RegularBoundReport regular_graph_bounds(const Graph& g, double tol) {
    int k = 0;
    if (!g.is_regular(&k))
        throw std::invalid_argument("regular_graph_bounds: graph is not regular");
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("regular_graph_bounds: needs at least two vertices");

    auto eig = spectrum(g);
    RegularBoundReport rep;
    rep.k = k;
    rep.n = n;
    rep.lambda2 = eig.eigenvalues[1];
    rep.lambda_n = eig.eigenvalues[n - 1];
    rep.lambda2_multiplicity = eig.multiplicity(rep.lambda2);
    rep.gap_ok = (k - rep.lambda2) < n / 2.0;
    rep.degenerate = (k == 0);

    double gap_frac = 1.0 - 2.0 * (k - rep.lambda2) / n;
    rep.bound1_lhs = 2.0 * (k - (k - rep.lambda2) * (k - rep.lambda2) / n);
    rep.bound2_lhs = -rep.lambda_n;
    if (gap_frac > 0.0) {
        double l2 = rep.lambda2;
        rep.bound1_rhs = l2 * (l2 + 1.0) * (2.0 * l2 + 1.0) / gap_frac - l2 * (3.0 * l2 + 1.0);
        rep.bound2_rhs = l2 * (l2 + 1.0) / gap_frac - l2;
    } else {
        rep.bound1_rhs = rep.bound2_rhs = std::numeric_limits<double>::quiet_NaN();
    }

    auto scale = [](double a, double b) { return std::max({1.0, std::abs(a), std::abs(b)}); };
    if (rep.gap_ok) {
        rep.holds1 = rep.bound1_lhs <= rep.bound1_rhs + tol * scale(rep.bound1_lhs, rep.bound1_rhs);
        rep.holds2 = rep.bound2_lhs <= rep.bound2_rhs + tol * scale(rep.bound2_lhs, rep.bound2_rhs);
        rep.tight1 = rep.holds1 && std::abs(rep.bound1_rhs - rep.bound1_lhs) <=
                                       1e-7 * scale(rep.bound1_lhs, rep.bound1_rhs);
        rep.tight2 = rep.holds2 && std::abs(rep.bound2_rhs - rep.bound2_lhs) <=
                                       1e-7 * scale(rep.bound2_lhs, rep.bound2_rhs);
    } else {
        rep.notes = "spectral gap condition k - lambda2 < n/2 fails; report is advisory";
    }
    if (rep.degenerate) rep.notes = "k = 0: both sides degenerate to 0";

    long long r = n - rep.lambda2_multiplicity;
    rep.srg_equality_predicate = (2LL * n == (r + 1) * r - 2) && r >= 1;
    return rep;
}

SphericalCode graph_to_code(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) throw std::invalid_argument("graph_to_code: graph is not regular");
    RegularBoundReport rep = regular_graph_bounds(g);
    if (!rep.gap_ok)
        throw std::invalid_argument("graph_to_code: spectral gap condition fails");
    if (!(rep.lambda2 > 0.0))
        throw std::invalid_argument(
            "graph_to_code: lambda2 <= 0 (complete or complete multipartite graph)");

    double alpha = 1.0 / (2.0 * rep.lambda2 + 1.0);
    GramMatrix m = gram_from_graph(g, alpha);
    SphericalCode code = factor_gram(m);

    // The construction promises 1 as an eigenvector of M with eigenvalue
    // (n - 2(k - lambda2)) / (2 lambda2 + 1) > 0; verify numerically.
    const int n = g.size();
    RealVector ones(n, 1.0);
    RealVector m_ones = matvec(m.real_entries(), ones);
    double lambda = (n - 2.0 * (k - rep.lambda2)) / (2.0 * rep.lambda2 + 1.0);
    for (double v : m_ones)
        if (std::abs(v - lambda) > 1e-7 * std::max(1.0, std::abs(lambda)))
            throw std::logic_error("graph_to_code: all-ones vector is not an eigenvector of M");
    if (!(lambda > 0.0)) throw std::logic_error("graph_to_code: eigenvalue at all-ones is not positive");

    int expected_rank = n - rep.lambda2_multiplicity;
    if (code.dimension != expected_rank)
        throw std::logic_error("graph_to_code: rank " + std::to_string(code.dimension) +
                               " differs from n - m(lambda2) = " + std::to_string(expected_rank));
    EquiangularCheck check = verify_equiangular(code);
    if (!check.is_equiangular || std::abs(check.alpha - alpha) > 1e-8)
        throw std::logic_error("graph_to_code: factored code is not equiangular at 1/(2 lambda2 + 1)");
    return code;
}

CorollaryReport corollary_check(const Graph& g, double epsilon) {
    int k = 0;
    if (!g.is_regular(&k)) throw std::invalid_argument("corollary_check: graph is not regular");
    if (!(epsilon > 0.0)) throw std::invalid_argument("corollary_check: epsilon must be positive");
    CorollaryReport rep;
    rep.finite_bounds = regular_graph_bounds(g);
    rep.k = k;
    rep.n = g.size();
    rep.epsilon = epsilon;
    rep.lambda2 = rep.finite_bounds.lambda2;
    rep.lambda_n = rep.finite_bounds.lambda_n;
    if (k - rep.lambda2 > (1.0 - epsilon) * g.size() / 2.0 + 1e-12) {
        std::ostringstream os;
        os << "corollary_check: spectral gap " << (k - rep.lambda2) << " exceeds (1-eps) n/2 = "
           << (1.0 - epsilon) * g.size() / 2.0;
        throw std::invalid_argument(os.str());
    }
    rep.k_cuberoot = std::cbrt(static_cast<double>(k));
    rep.sqrt_minus_lambda_n = rep.lambda_n < 0.0 ? std::sqrt(-rep.lambda_n) : 0.0;
    rep.sqrt_k = std::sqrt(static_cast<double>(k));
    rep.ratio_cuberoot = rep.k_cuberoot > 0.0 ? rep.lambda2 / rep.k_cuberoot : 0.0;
    rep.ratio_sqrt_neg =
        rep.sqrt_minus_lambda_n > 0.0 ? rep.lambda2 / rep.sqrt_minus_lambda_n : 0.0;
    rep.bipartite = g.is_bipartite();
    return rep;
}

} // namespace eqlines
