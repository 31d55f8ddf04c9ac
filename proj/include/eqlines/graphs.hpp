#pragma once

#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eqlines {

/// Adjacency spectrum, eigenvalues descending.
EigenDecomposition<double> spectrum(const Graph& g);

/// Largest eigenvalue of the adjacency matrix. Exact k for regular graphs,
/// dense Jacobi for small ones, deterministic shifted power iteration for
/// the rest.
double adjacency_lambda1(const Graph& g);

/// mu(G): the maximum Rayleigh quotient of A over vectors orthogonal to the
/// all-ones vector. Computed as the top eigenvalue of
/// P A P - (Delta+1) J / n with P = I - J/n, which pushes the trivial
/// direction below every admissible Rayleigh value.
double mu(const Graph& g);

/// Ball of radius q around v: induced subgraph on the vertices reachable by
/// a path of length at most q. `vertices` (optional) receives the member
/// list in BFS order.
Graph ball(const Graph& g, int v, int q, std::vector<int>* vertices = nullptr);

/// lambda_1(K_{1,t}) = sqrt(t).
double star_lambda1(int t);

/// A subgraph given by vertex labels of the host graph plus a subset of the
/// host's edges between them.
struct Subgraph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges; // host labels

    static Subgraph induced(const Graph& g, const std::vector<int>& vertices);
    static Subgraph star(const Graph& g, int center, int t);
};

/// Lower bound mu(G) >= lambda_1(H) - (2 Delta - dbar) |H| / n. Returns the
/// right-hand side. The bound is stated for any subgraph; for H close to G
/// it can be vacuous or even exceed mu (see tests for the documented case).
double friedman_lower(const Graph& g, const Subgraph& h);

/// Lower bound mu(G) >= sqrt(t) - 2 Delta (t+1) / n for 1 <= t <= Delta.
double mu_lower_star(const Graph& g, int t);

/// Exhaustively maximizes lambda_1(ball(g, v, q)) over vertices; lowest
/// index wins ties. The returned value is checked against
/// 2 sqrt(dbar - 1) cos(pi / (q+2)) when dbar >= 1.
std::pair<int, double> jiang_best_ball(const Graph& g, int q);

struct RegularBoundReport {
    int k = 0;
    int n = 0;
    double lambda2 = 0.0;
    double lambda_n = 0.0;
    int lambda2_multiplicity = 0;
    bool gap_ok = false;       // k - lambda2 < n/2
    double bound1_lhs = 0.0;   // 2 (k - (k - lambda2)^2 / n)
    double bound1_rhs = 0.0;   // l2(l2+1)(2l2+1) / (1 - 2(k-l2)/n) - l2(3l2+1)
    double bound2_lhs = 0.0;   // -lambda_n
    double bound2_rhs = 0.0;   // l2(l2+1) / (1 - 2(k-l2)/n) - l2
    bool holds1 = false, holds2 = false;
    bool tight1 = false, tight2 = false;
    bool srg_equality_predicate = false; // n == C(n - m(lambda2) + 1, 2) - 1
    bool degenerate = false;             // k == 0
    std::string notes;
};

/// Second-eigenvalue bounds for a k-regular graph under the spectral-gap
/// condition k - lambda2 < n/2. Throws for non-regular input; when the gap
/// condition fails the report is advisory with gap_ok = false.
RegularBoundReport regular_graph_bounds(const Graph& g, double tol = 1e-8);

/// Build the equiangular code of a regular graph: alpha = 1/(2 lambda2 + 1),
/// M = alpha J - 2 alpha A + (1 - alpha) I, factored into dimension
/// n - m(lambda2). Requires lambda2 > 0 and the spectral-gap condition.
SphericalCode graph_to_code(const Graph& g);

struct CorollaryReport {
    int k = 0, n = 0;
    double epsilon = 0.0;
    double lambda2 = 0.0, lambda_n = 0.0;
    double k_cuberoot = 0.0;
    double sqrt_minus_lambda_n = 0.0;
    double sqrt_k = 0.0;
    double ratio_cuberoot = 0.0;  // lambda2 / k^{1/3}
    double ratio_sqrt_neg = 0.0;  // lambda2 / sqrt(-lambda_n)
    bool bipartite = false;
    RegularBoundReport finite_bounds; // the non-asymptotic inequalities
};

/// Asymptotic second-eigenvalue picture for a k-regular graph with
/// k - lambda2 <= (1 - epsilon) n / 2. No constant is asserted; only the
/// finite inequalities of the regular-bound report are.
CorollaryReport corollary_check(const Graph& g, double epsilon);

} // namespace eqlines
