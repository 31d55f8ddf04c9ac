#include "eqlines/codes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eqlines {

void validate(const SphericalCode& code) {
    if (code.size() < 1) throw std::invalid_argument("code: needs at least one vector");
    if (code.dimension < 1) throw std::invalid_argument("code: dimension must be positive");
    for (int i = 0; i < code.size(); ++i) {
        const auto& v = code.vectors[i];
        if (static_cast<int>(v.size()) != code.dimension) {
            std::ostringstream os;
            os << "code: vector " << i << " has length " << v.size() << ", expected "
               << code.dimension;
            throw std::invalid_argument(os.str());
        }
        if (code.field == Field::Real)
            for (const auto& z : v)
                if (z.imag() != 0.0)
                    throw std::invalid_argument("code: real code has imaginary entries in vector " +
                                                std::to_string(i));
        double len = norm(v);
        if (std::abs(len - 1.0) > 1e-9) {
            std::ostringstream os;
            os << "code: vector " << i << " is not a unit vector (norm " << len << ")";
            throw std::invalid_argument(os.str());
        }
    }
}

GramMatrix gram(const SphericalCode& code) {
    validate(code);
    const int n = code.size();
    GramMatrix m;
    m.field = code.field;
    m.entries = ComplexMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.entries(i, j) = dot(code.vectors[i], code.vectors[j]);
    return m;
}

EquiangularCheck verify_equiangular(const SphericalCode& code, double tol) {
    validate(code);
    const int n = code.size();
    if (n < 2) throw std::invalid_argument("verify_equiangular: alpha undefined for n < 2");
    GramMatrix m = gram(code);
    KahanSum mean;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) mean.add(std::abs(m.entries(i, j)));
    EquiangularCheck check;
    check.alpha = mean.value() / (static_cast<double>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                check.max_deviation =
                    std::max(check.max_deviation, std::abs(std::abs(m.entries(i, j)) - check.alpha));
    check.tolerance = tol;
    check.is_equiangular = check.max_deviation <= tol;
    return check;
}

std::pair<Graph, double> code_to_graph(const SphericalCode& code, double tol) {
    if (code.field != Field::Real)
        throw std::invalid_argument("code_to_graph: requires a real code");
    EquiangularCheck check = verify_equiangular(code, tol);
    if (!check.is_equiangular) {
        std::ostringstream os;
        os << "code_to_graph: code is not equiangular (max deviation " << check.max_deviation
           << " at tolerance " << tol << ")";
        throw std::invalid_argument(os.str());
    }
    // At alpha ~ 0 the sign of an entry is undecidable.
    if (check.alpha <= 1e-9)
        throw std::invalid_argument("code_to_graph: alpha is zero within tolerance");
    GramMatrix m = gram(code);
    const int n = code.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.entries(i, j).real() < 0.0) g.add_edge(i, j);
    return {std::move(g), check.alpha};
}

GramMatrix gram_from_graph(const Graph& g, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("gram_from_graph: alpha must lie in (0,1)");
    const int n = g.size();
    GramMatrix m;
    m.field = Field::Real;
    m.entries = ComplexMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                m.entries(i, j) = 1.0;
            else
                m.entries(i, j) = g.adjacent(i, j) ? -alpha : alpha;
        }
    return m;
}

SphericalCode switch_subset(SphericalCode code, const std::vector<int>& subset) {
    for (int i : subset) {
        if (i < 0 || i >= code.size())
            throw std::invalid_argument("switch: index " + std::to_string(i) + " out of range");
        for (auto& z : code.vectors[i]) z = -z;
    }
    return code;
}

SphericalCode restrict_switch(const SphericalCode& code, int pivot, double tol) {
    if (code.field != Field::Real)
        throw std::invalid_argument("restrict_switch: requires a real code");
    if (pivot < 0 || pivot >= code.size())
        throw std::invalid_argument("restrict_switch: pivot out of range");
    EquiangularCheck check = verify_equiangular(code, tol);
    if (!check.is_equiangular || check.alpha <= 1e-9)
        throw std::invalid_argument("restrict_switch: requires an equiangular code with alpha > 0");
    std::vector<int> flip;
    for (int i = 0; i < code.size(); ++i) {
        if (i == pivot) continue;
        if (dot(code.vectors[pivot], code.vectors[i]).real() < 0.0) flip.push_back(i);
    }
    return switch_subset(code, flip);
}

int find_isolated_pivot(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == 0) return v;
    return -1;
}

std::pair<SphericalCode, DegreeSwitchReport> degree_bounded_switch(const SphericalCode& code,
                                                                   double tol) {
    auto [g, alpha] = code_to_graph(code, tol);
    if (find_isolated_pivot(g) < 0)
        throw std::invalid_argument(
            "degree_bounded_switch: code is not restricted (no isolated vertex)");
    const int n = code.size();

    DegreeSwitchReport report;
    report.max_degree_before = g.max_degree();
    report.degree_threshold = n / 2.0 + 1.0 / alpha - 1.0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > report.degree_threshold) report.negated.push_back(v);

    SphericalCode switched = switch_subset(code, report.negated);

    // Negating H complements exactly the edges between H and its complement.
    Graph after = g;
    std::vector<char> in_h(n, 0);
    for (int v : report.negated) in_h[v] = 1;
    for (int u : report.negated)
        for (int v = 0; v < n; ++v)
            if (!in_h[v]) after.flip_edge(u, v);
    report.max_degree_after = after.max_degree();

    double a4 = alpha * alpha * alpha * alpha;
    report.lemma_hypothesis = n >= 1.0 / a4;
    double denom = 4.0 * a4 - 3.0 / n;
    report.bound_defined = denom > 0.0;
    if (report.bound_defined) report.lemma_bound = 1.0 / (4.0 * a4) + 1.0 / denom;
    if (report.lemma_hypothesis) {
        report.bound_ok = report.bound_defined &&
                          report.max_degree_after <= report.lemma_bound + 1e-9;
        if (!report.bound_ok) {
            std::ostringstream os;
            os << "degree_bounded_switch: internal consistency failure, max degree "
               << report.max_degree_after << " exceeds bound " << report.lemma_bound;
            throw std::logic_error(os.str());
        }
        report.notes = "degree bound asserted (n >= 1/alpha^4)";
    } else {
        report.notes = report.bound_defined
                           ? "hypothesis n >= 1/alpha^4 not satisfied; bound not asserted"
                           : "hypothesis not satisfied; 4 alpha^4 - 3/n <= 0, bound undefined";
    }
    return {std::move(switched), std::move(report)};
}

SphericalCode factor_gram(const GramMatrix& m, double rank_cutoff) {
    const int n = m.size();
    if (n < 1) throw std::invalid_argument("factor_gram: empty matrix");

    SphericalCode code;
    code.field = m.field;

    // v_i = column i of Lambda^{1/2} U*, coordinates ordered by descending
    // eigenvalue, restricted to eigenvalues above the rank cutoff.
    if (m.field == Field::Real) {
        auto eig = eig_sym(m.real_entries(), rank_cutoff);
        double lambda1 = std::max(eig.eigenvalues.front(), 0.0);
        if (eig.eigenvalues.back() < -1e-8 * std::max(1.0, static_cast<double>(n)))
            throw std::invalid_argument("factor_gram: matrix is indefinite (min eigenvalue " +
                                        std::to_string(eig.eigenvalues.back()) + ")");
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (eig.eigenvalues[i] > rank_cutoff * lambda1) keep.push_back(i);
        code.dimension = static_cast<int>(keep.size());
        code.vectors.assign(n, ComplexVector(code.dimension));
        for (int i = 0; i < n; ++i)
            for (size_t k = 0; k < keep.size(); ++k)
                code.vectors[i][k] =
                    std::sqrt(eig.eigenvalues[keep[k]]) * eig.eigenvectors(i, keep[k]);
    } else {
        auto eig = eig_herm(m.entries, rank_cutoff);
        double lambda1 = std::max(eig.eigenvalues.front(), 0.0);
        if (eig.eigenvalues.back() < -1e-8 * std::max(1.0, static_cast<double>(n)))
            throw std::invalid_argument("factor_gram: matrix is indefinite");
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (eig.eigenvalues[i] > rank_cutoff * lambda1) keep.push_back(i);
        code.dimension = static_cast<int>(keep.size());
        code.vectors.assign(n, ComplexVector(code.dimension));
        for (int i = 0; i < n; ++i)
            for (size_t k = 0; k < keep.size(); ++k)
                code.vectors[i][k] =
                    std::sqrt(eig.eigenvalues[keep[k]]) * std::conj(eig.eigenvectors(i, keep[k]));
    }

    // Factoring a Gram matrix with unit diagonal gives unit vectors up to
    // rounding; renormalize so downstream validation sees exact units.
    for (auto& v : code.vectors) {
        double len = norm(v);
        if (std::abs(len - 1.0) > 1e-6)
            throw std::invalid_argument("factor_gram: diagonal entry far from one (norm " +
                                        std::to_string(len) + ")");
        for (auto& z : v) z /= len;
    }
    return code;
}

} // namespace eqlines
