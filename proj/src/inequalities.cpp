#include "eqlines/inequalities.hpp"

#include "eqlines/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace eqlines {

namespace {

double scale_of(double lhs, double rhs) { return std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

struct CodeContext {
    GramMatrix gm;
    EquiangularCheck check;
    int n = 0;
    int r = 0;
};

CodeContext make_context(const SphericalCode& code, double equi_tol = kEquiangularTol) {
    CodeContext ctx;
    ctx.gm = gram(code);
    ctx.n = code.size();
    ctx.r = code.dimension;
    if (ctx.n >= 2) ctx.check = verify_equiangular(code, equi_tol);
    else {
        ctx.check.alpha = 0.0;
        ctx.check.is_equiangular = true;
    }
    return ctx;
}

double quadform(const RealMatrix& m, const RealVector& x) { return dot(x, matvec(m, x)); }

// |M_ij|^2 applied entrywise; real symmetric for both fields.
RealMatrix abs_squared(const ComplexMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = std::norm(m(i, j));
    return out;
}

std::string degenerate_note(double lambda1, double threshold) {
    std::ostringstream os;
    os << "boundary-degenerate: lambda_1 = " << lambda1
       << " equals the hypothesis threshold " << threshold
       << " within tolerance; the lemma's fractions are 0/0 and are not evaluated";
    return os.str();
}

} // namespace

InequalityReport make_report(std::string lemma_id, double lhs, double rhs, bool hypothesis_ok,
                             std::string notes, const Tolerances& tol) {
    InequalityReport rep;
    rep.lemma_id = std::move(lemma_id);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = rhs - lhs;
    double scale = scale_of(lhs, rhs);
    rep.relative_slack = rep.slack / scale;
    rep.holds = rep.slack >= -tol.validity * scale;
    rep.tight = rep.holds && std::abs(rep.slack) <= tol.tightness * scale;
    rep.hypothesis_ok = hypothesis_ok;
    rep.notes = std::move(notes);
    return rep;
}

WelchReport welch(const SphericalCode& code, const Tolerances& tol) {
    validate(code);
    GramMatrix m = gram(code);
    const int n = code.size();
    const int r = code.dimension;
    RealMatrix fm = abs_squared(m.entries);

    auto eig = eig_sym(fm);
    double lambda1 = std::max(eig.eigenvalues.front(), 0.0);
    RealVector ones(n, 1.0);

    // 1^T f(M)^+ 1 = sum over retained eigenvalues of <u_i, 1>^2 / lambda_i.
    KahanSum quad;
    for (int i = 0; i < n; ++i) {
        double lam = eig.eigenvalues[i];
        if (lam <= kDefaultRankCutoff * lambda1) continue;
        double overlap = dot(eig.eigenvector(i), ones);
        quad.add(overlap * overlap / lam);
    }

    WelchReport rep;
    rep.r = r;
    rep.n = n;
    rep.pinv_quadform = quad.value();
    rep.classic_sum = quadform(fm, ones);
    rep.improved_lower = (static_cast<double>(n) * n / r) * (2.0 - rep.pinv_quadform / r);
    rep.identity_in_span =
        std::abs(rep.pinv_quadform - r) <= tol.validity * std::max(1.0, static_cast<double>(r));
    rep.holds_first = rep.pinv_quadform <= r + tol.validity * std::max(1.0, static_cast<double>(r));
    rep.holds_second = rep.classic_sum >=
                       rep.improved_lower - tol.validity * scale_of(rep.classic_sum, rep.improved_lower);

    if (eig.rank == n) {
        RealVector fm_ones = matvec(fm, ones);
        double target = static_cast<double>(n) / r;
        double worst = 0.0;
        for (double v : fm_ones) worst = std::max(worst, std::abs(v - target));
        rep.frame_vector_tight = worst <= tol.validity * std::max(1.0, target);
    } else {
        rep.frame_vector_tight = std::nullopt; // equality test stated only for invertible f(M)
    }
    return rep;
}

InequalityReport projection_ineq_real(const SphericalCode& code, const RealVector& x,
                                      const RealVector& y, const Tolerances& tol) {
    if (code.field != Field::Real)
        throw std::invalid_argument("projection_ineq_real: requires a real code");
    CodeContext ctx = make_context(code);
    if (!ctx.check.is_equiangular)
        throw std::invalid_argument("projection_ineq_real: code is not equiangular");
    double alpha = ctx.check.alpha;
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("projection_ineq_real: alpha out of (0,1)");
    if (static_cast<int>(x.size()) != ctx.n || static_cast<int>(y.size()) != ctx.n)
        throw std::invalid_argument("projection_ineq_real: x, y must have length n");

    RealMatrix m = ctx.gm.real_entries();
    RealVector mx = matvec(m, x);
    RealVector my = matvec(m, y);
    double a = dot(x, mx);
    double b = dot(y, my);
    double c = dot(x, my);
    double d = dot(mx, my);
    KahanSum f;
    for (int i = 0; i < ctx.n; ++i) f.add(mx[i] * mx[i] * my[i] * my[i]);

    double a2 = alpha * alpha;
    double rhs = (1.0 - a2) / 2.0 * (a * b + c * c) + a2 / (a2 * ctx.n + 1.0 - a2) * d * d;
    std::string notes;
    if (2 * ctx.n == ctx.r * (ctx.r + 1))
        notes = "n = r(r+1)/2: equality case";
    return make_report("main_r", f.value(), rhs, true, notes, tol);
}

namespace {

struct ComplexProjectionTerms {
    double a, b;   // <x,Mx>, <y,My> (real)
    cx d;          // <Mx,My>
    double f;      // sum |(Mx)_i|^2 |(My)_i|^2
};

ComplexProjectionTerms complex_terms(const CodeContext& ctx, const ComplexVector& x,
                                     const ComplexVector& y) {
    ComplexVector mx = matvec(ctx.gm.entries, x);
    ComplexVector my = matvec(ctx.gm.entries, y);
    ComplexProjectionTerms t;
    t.a = dot(x, mx).real();
    t.b = dot(y, my).real();
    t.d = dot(mx, my);
    KahanSum f;
    for (int i = 0; i < ctx.n; ++i) f.add(std::norm(mx[i]) * std::norm(my[i]));
    t.f = f.value();
    return t;
}

} // namespace

InequalityReport projection_ineq_complex(const SphericalCode& code, const ComplexVector& x,
                                         const ComplexVector& y, const Tolerances& tol) {
    CodeContext ctx = make_context(code);
    if (!ctx.check.is_equiangular)
        throw std::invalid_argument("projection_ineq_complex: code is not equiangular");
    double alpha = ctx.check.alpha;
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("projection_ineq_complex: alpha out of (0,1)");
    if (static_cast<int>(x.size()) != ctx.n || static_cast<int>(y.size()) != ctx.n)
        throw std::invalid_argument("projection_ineq_complex: x, y must have length n");

    ComplexProjectionTerms t = complex_terms(ctx, x, y);
    double a2 = alpha * alpha;
    double rhs = (1.0 - a2) * t.a * t.b + a2 / (a2 * ctx.n + 1.0 - a2) * std::norm(t.d);

    std::ostringstream notes;
    if (ctx.n == ctx.r * ctx.r) notes << "n = r^2: equality case";
    double sic_alpha = 1.0 / std::sqrt(ctx.r + 1.0);
    if (std::abs(alpha - sic_alpha) <= 1e-8) {
        double id_lhs = (ctx.r + 1.0) * t.f;
        double id_rhs = ctx.r * t.a * t.b + std::norm(t.d) / ctx.r;
        if (notes.tellp() > 0) notes << "; ";
        notes << "alpha = 1/sqrt(r+1): identity residual "
              << std::abs(id_rhs - id_lhs) / scale_of(id_lhs, id_rhs);
    }
    return make_report("main_c", t.f, rhs, true, notes.str(), tol);
}

std::pair<double, double> sic_identity_sides(const SphericalCode& code, const ComplexVector& x,
                                             const ComplexVector& y) {
    CodeContext ctx = make_context(code);
    ComplexProjectionTerms t = complex_terms(ctx, x, y);
    double lhs = (ctx.r + 1.0) * t.f;
    double rhs = ctx.r * t.a * t.b + std::norm(t.d) / ctx.r;
    return {lhs, rhs};
}

InequalityReport projection_ineq_regular(const SphericalCode& code, const RealVector& x,
                                         const Tolerances& tol) {
    if (code.field != Field::Real)
        throw std::invalid_argument("projection_ineq_regular: requires a real code");
    CodeContext ctx = make_context(code);
    if (!ctx.check.is_equiangular)
        throw std::invalid_argument("projection_ineq_regular: code is not equiangular");
    double alpha = ctx.check.alpha;
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("projection_ineq_regular: alpha out of (0,1)");
    if (static_cast<int>(x.size()) != ctx.n)
        throw std::invalid_argument("projection_ineq_regular: x must have length n");

    RealMatrix m = ctx.gm.real_entries();
    RealVector ones(ctx.n, 1.0);
    RealVector m_ones = matvec(m, ones);
    double lambda = dot(ones, m_ones) / ctx.n;
    double dev = 0.0;
    for (double v : m_ones) dev = std::max(dev, std::abs(v - lambda));
    bool hypothesis = dev <= 1e-7 * std::max(norm(m_ones), 1.0) && lambda > 0.0;

    RealVector mx = matvec(m, x);
    double lhs = dot(mx, mx); // <x, M^2 x>
    double xm = dot(x, mx);
    double x1 = dot(x, ones);
    double a2 = alpha * alpha;
    double rhs = (1.0 - a2) * ctx.n / (2.0 * lambda) * xm +
                 (lambda * lambda / ctx.n - (1.0 - a2) / 2.0) * x1 * x1;

    std::ostringstream notes;
    if (!hypothesis)
        notes << "all-ones vector is not an eigenvector of M (deviation " << dev
              << "); report is advisory";
    else if (2 * (ctx.n + 1) == ctx.r * (ctx.r + 1))
        notes << "n = r(r+1)/2 - 1: equality case";
    return make_report("main_r_regular", lhs, rhs, hypothesis, notes.str(), tol);
}

std::vector<std::string> lemma_catalog() {
    return {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11",
            "C1", "C2", "C3", "C4", "C5", "C6"};
}

namespace {

// Shared spectral data for the R-lemmas (real) or C-lemmas (either field).
struct SpectralData {
    std::vector<double> eigenvalues;
    std::vector<ComplexVector> eigenvectors;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

SpectralData spectral_data(const CodeContext& ctx, Field field) {
    SpectralData out;
    if (field == Field::Real) {
        auto eig = eig_sym(ctx.gm.real_entries());
        out.eigenvalues = eig.eigenvalues;
        for (int i = 0; i < ctx.n; ++i) out.eigenvectors.push_back(to_complex(eig.eigenvector(i)));
    } else {
        auto eig = eig_herm(ctx.gm.entries);
        out.eigenvalues = eig.eigenvalues;
        for (int i = 0; i < ctx.n; ++i) out.eigenvectors.push_back(eig.eigenvector(i));
    }
    out.lambda1 = out.eigenvalues.front();
    out.lambda2 = ctx.n >= 2 ? out.eigenvalues[1] : 0.0;
    return out;
}

void require_field(const SphericalCode& code, Field field, const std::string& lemma) {
    if (field == Field::Real && code.field != Field::Real)
        throw std::invalid_argument(lemma + ": requires a real code");
}

// R1 / C1: sum_i |x_i|^2 |y_i|^2 <= (1 - a^2) / (factor * lambda * mu) for
// orthogonal unit eigenvectors; factor = 2 real, 1 complex.
InequalityReport eigensimple(const CodeContext& ctx, const SpectralData& sd, double alpha,
                             bool real_case, int i, int j, const Tolerances& tol) {
    std::string id = real_case ? "R1" : "C1";
    if (i < 0 || j < 0 || i >= ctx.n || j >= ctx.n || i == j)
        throw std::invalid_argument(id + ": needs two distinct eigenvector indices in range");
    double lam = sd.eigenvalues[i];
    double mu = sd.eigenvalues[j];
    bool positive = lam > kDefaultRankCutoff * std::abs(sd.lambda1) &&
                    mu > kDefaultRankCutoff * std::abs(sd.lambda1);
    KahanSum lhs;
    for (int k = 0; k < ctx.n; ++k)
        lhs.add(std::norm(sd.eigenvectors[i][k]) * std::norm(sd.eigenvectors[j][k]));
    double factor = real_case ? 2.0 : 1.0;
    double rhs = positive ? (1.0 - alpha * alpha) / (factor * lam * mu)
                          : std::numeric_limits<double>::quiet_NaN();
    std::ostringstream notes;
    notes << "eigenvalues " << lam << ", " << mu;
    if (!positive) notes << "; hypothesis fails: eigenvalue not positive";
    auto rep = make_report(id, lhs.value(), rhs, positive, notes.str(), tol);
    if (!positive) {
        rep.holds = true; // vacuous
        rep.tight = false;
    }
    return rep;
}

// R2 / C2: standard-vector inequality; factor = 2 real, 1 complex.
InequalityReport standardvector(const CodeContext& ctx, double alpha, bool real_case, int i,
                                const ComplexVector& x, const Tolerances& tol) {
    std::string id = real_case ? "R2" : "C2";
    if (i < 0 || i >= ctx.n) throw std::invalid_argument(id + ": index i out of range");
    if (static_cast<int>(x.size()) != ctx.n)
        throw std::invalid_argument(id + ": x must have length n");
    ComplexVector mx = matvec(ctx.gm.entries, x);
    ComplexVector m2x = matvec(ctx.gm.entries, mx);
    double xmx = dot(x, mx).real();
    double lhs = dot(mx, mx).real(); // <x, M^2 x>
    double a2 = alpha * alpha;
    double factor = real_case ? 2.0 : 1.0;
    double rhs = (1.0 - a2) / (factor * a2) * (xmx - std::norm(mx[i])) +
                 std::norm(m2x[i]) / (a2 * ctx.n + 1.0 - a2);
    std::ostringstream notes;
    notes << "i = " << i;
    return make_report(id, lhs, rhs, true, notes.str(), tol);
}

// R3 / C3: entry lower bound for the top eigenvector plus the lambda_2
// upper bound. Threshold (1 - a^2) / (2 a^2) real, (1 - a^2) / a^2 complex.
std::vector<InequalityReport> eigenmin(const CodeContext& ctx, const SpectralData& sd,
                                       double alpha, bool real_case, const Tolerances& tol) {
    std::string id = real_case ? "R3" : "C3";
    double a2 = alpha * alpha;
    double factor = real_case ? 2.0 : 1.0;
    double threshold = (1.0 - a2) / (factor * a2);
    double lambda1 = sd.lambda1;

    if (std::abs(lambda1 - threshold) <= 1e-9 * std::max(1.0, lambda1)) {
        auto rep = make_report(id, 0.0, 0.0, false, degenerate_note(lambda1, threshold), tol);
        rep.holds = true;
        rep.tight = false;
        return {rep};
    }
    bool hypothesis = lambda1 > threshold;
    double denom = lambda1 * lambda1 / (a2 * ctx.n + 1.0 - a2) - threshold;
    double numer = 1.0 - threshold / lambda1;
    double xmin_bound = numer / denom;

    double min_entry = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ctx.n; ++k)
        min_entry = std::min(min_entry, std::norm(sd.eigenvectors[0][k]));

    std::vector<InequalityReport> out;
    {
        std::ostringstream notes;
        notes << "entry lower bound over all i for the top eigenvector";
        if (!hypothesis) notes << "; hypothesis lambda_1 > " << threshold << " fails";
        out.push_back(make_report(id, xmin_bound, min_entry, hypothesis, notes.str(), tol));
    }
    if (ctx.n >= 2) {
        double l2_bound = (1.0 - a2) / factor *
                          (lambda1 / (a2 * ctx.n + 1.0 - a2) - threshold / lambda1) / numer;
        std::ostringstream notes;
        notes << "lambda_2 upper bound";
        if (!hypothesis) notes << "; hypothesis lambda_1 > " << threshold << " fails";
        out.push_back(make_report(id, sd.lambda2, l2_bound, hypothesis, notes.str(), tol));
    }
    return out;
}

// R5 / C5: bound on n when lambda_1 clears the eigenmin threshold.
InequalityReport boundbig(const CodeContext& ctx, const SpectralData& sd, double alpha,
                          bool real_case, const Tolerances& tol) {
    std::string id = real_case ? "R5" : "C5";
    double a2 = alpha * alpha;
    double factor = real_case ? 2.0 : 1.0;
    double threshold = (1.0 - a2) / (factor * a2);
    double lambda1 = sd.lambda1;
    if (std::abs(lambda1 - threshold) <= 1e-9 * std::max(1.0, lambda1)) {
        auto rep = make_report(id, 0.0, 0.0, false, degenerate_note(lambda1, threshold), tol);
        rep.holds = true;
        return {rep};
    }
    bool hypothesis = lambda1 > threshold;
    double denom = factor * alpha - (1.0 - a2) / (alpha * lambda1);
    double rhs = (1.0 + alpha) / denom * (ctx.r - 1.0) + 1.0;
    std::ostringstream notes;
    notes << "lambda_1 = " << lambda1;
    if (!hypothesis) notes << "; hypothesis lambda_1 > " << threshold << " fails";
    return make_report(id, static_cast<double>(ctx.n), rhs, hypothesis, notes.str(), tol);
}

} // namespace

std::vector<InequalityReport> evaluate_lemma(const SphericalCode& code,
                                             const std::string& lemma_id,
                                             const LemmaParams& params, const Tolerances& tol) {
    validate(code);
    CodeContext ctx = make_context(code);
    bool real_case = lemma_id.size() >= 1 && lemma_id[0] == 'R';
    require_field(code, real_case ? Field::Real : Field::Complex, lemma_id);

    double alpha = ctx.check.alpha;
    bool equi = ctx.check.is_equiangular && alpha > 1e-9 && alpha < 1.0;
    auto not_equiangular = [&](const std::string& id) {
        auto rep = make_report(id, 0.0, 0.0, false,
                               "code is not an equiangular code with alpha in (0,1); "
                               "report is advisory",
                               tol);
        rep.holds = true;
        return std::vector<InequalityReport>{rep};
    };

    if (lemma_id == "R1" || lemma_id == "C1") {
        if (!equi) return not_equiangular(lemma_id);
        SpectralData sd = spectral_data(ctx, real_case ? Field::Real : Field::Complex);
        return {eigensimple(ctx, sd, alpha, real_case, params.i.value_or(0), params.j.value_or(1),
                            tol)};
    }
    if (lemma_id == "R2" || lemma_id == "C2") {
        if (!equi) return not_equiangular(lemma_id);
        if (!params.x) throw std::invalid_argument(lemma_id + ": missing parameter x");
        if (real_case)
            for (const auto& z : *params.x)
                if (z.imag() != 0.0) throw std::invalid_argument("R2: x must be real");
        return {standardvector(ctx, alpha, real_case, params.i.value_or(0), *params.x, tol)};
    }
    if (lemma_id == "R3" || lemma_id == "C3") {
        if (!equi) return not_equiangular(lemma_id);
        SpectralData sd = spectral_data(ctx, real_case ? Field::Real : Field::Complex);
        return eigenmin(ctx, sd, alpha, real_case, tol);
    }
    if (lemma_id == "R4" || lemma_id == "C4") {
        if (!equi) return not_equiangular(lemma_id);
        SpectralData sd = spectral_data(ctx, real_case ? Field::Real : Field::Complex);
        return {make_report(lemma_id, sd.lambda1, alpha * ctx.n + 1.0 - alpha, true, "", tol)};
    }
    if (lemma_id == "R5" || lemma_id == "C5") {
        if (!equi) return not_equiangular(lemma_id);
        SpectralData sd = spectral_data(ctx, real_case ? Field::Real : Field::Complex);
        return {boundbig(ctx, sd, alpha, real_case, tol)};
    }
    if (lemma_id == "R6" || lemma_id == "C6") {
        if (!equi) return not_equiangular(lemma_id);
        SpectralData sd = spectral_data(ctx, real_case ? Field::Real : Field::Complex);
        double rhs = sd.lambda1 / alpha * std::sqrt(static_cast<double>(ctx.r));
        return {make_report(lemma_id, static_cast<double>(ctx.n), rhs, true, "", tol)};
    }

    if (lemma_id == "R7" || lemma_id == "R8" || lemma_id == "R9" || lemma_id == "R11") {
        if (!equi) return not_equiangular(lemma_id);
        auto [g, alpha_g] = code_to_graph(code);
        alpha = alpha_g;
        double a2 = alpha * alpha;

        if (lemma_id == "R11") {
            double dbar = g.average_degree();
            double rhs = (1.0 + std::pow(2.0 * alpha / (1.0 - alpha), 2) * dbar) * (ctx.r + 1.0);
            std::ostringstream notes;
            notes << "average degree " << dbar;
            return {make_report("R11", static_cast<double>(ctx.n), rhs, true, notes.str(), tol)};
        }

        int pivot = find_isolated_pivot(g);
        bool restricted = pivot >= 0;
        if (lemma_id == "R7") {
            double rhs_product = (ctx.n + 1.0 / a2 - 1.0) *
                                 (ctx.n - 0.5 * (1.0 / a2 - 1.0) * (1.0 / a2 - 3.0));
            std::vector<InequalityReport> out;
            std::vector<int> targets;
            if (params.i)
                targets.push_back(*params.i);
            else
                for (int v = 0; v < ctx.n; ++v)
                    if (v != pivot) targets.push_back(v);
            for (int v : targets) {
                if (v < 0 || v >= ctx.n) throw std::invalid_argument("R7: vertex out of range");
                double lhs_sq = ctx.n - 2.0 * g.degree(v) + 2.0 / alpha - 2.0;
                std::ostringstream notes;
                notes << "vertex " << v << ", degree " << g.degree(v);
                bool hyp = restricted && v != pivot;
                if (!restricted) notes << "; code is not restricted";
                else if (v == pivot) notes << "; pivot vertex, lemma states i >= 2 only";
                out.push_back(
                    make_report("R7", rhs_product, lhs_sq * lhs_sq, hyp, notes.str(), tol));
            }
            return out;
        }

        if (lemma_id == "R8") {
            double c = 0.5 * (1.0 / a2 - 1.0) * (1.0 / a2 - 3.0);
            bool hyp = restricted && ctx.n > c;
            double split = ctx.n / 2.0 + 1.0 / alpha - 1.0;
            double h_bound = ctx.n - c / 2.0 + 1.0 / alpha - 1.0;
            double l_bound = 1.0 / (4.0 * a2 * a2) - std::pow(1.0 / alpha - 0.5, 2);
            // Binding vertex: smallest margin across the H and L class bounds.
            double best_margin = std::numeric_limits<double>::infinity();
            double lhs = 0.0, rhs = 0.0;
            int binding = -1, h_count = 0;
            for (int v = 0; v < ctx.n; ++v) {
                double d = g.degree(v);
                bool in_h = d > split;
                h_count += in_h ? 1 : 0;
                double margin = in_h ? d - h_bound : l_bound - d;
                if (margin < best_margin) {
                    best_margin = margin;
                    binding = v;
                    lhs = in_h ? h_bound : d;
                    rhs = in_h ? d : l_bound;
                }
            }
            std::ostringstream notes;
            notes << "|H| = " << h_count << ", binding vertex " << binding;
            if (!hyp)
                notes << (restricted ? "; hypothesis n > (1/a^2-1)(1/a^2-3)/2 fails"
                                     : "; code is not restricted");
            auto rep = make_report("R8", lhs, rhs, hyp, notes.str(), tol);
            if (!hyp) rep.holds = true;
            return {rep};
        }

        // R9: size of the high-degree set.
        double a4 = a2 * a2;
        bool hyp = restricted && ctx.n >= 1.0 / a4;
        double split = ctx.n / 2.0 + 1.0 / alpha - 1.0;
        int h_count = 0;
        for (int v = 0; v < ctx.n; ++v)
            if (g.degree(v) > split) ++h_count;
        double denom = 4.0 * a4 - 3.0 / ctx.n;
        std::ostringstream notes;
        if (denom <= 0.0) {
            notes << "hypothesis not satisfied; 4 alpha^4 - 3/n <= 0, bound undefined";
            auto rep = make_report("R9", static_cast<double>(h_count),
                                   std::numeric_limits<double>::quiet_NaN(), false, notes.str(),
                                   tol);
            rep.holds = true;
            rep.tight = false;
            return {rep};
        }
        notes << "|H| = " << h_count;
        if (!hyp)
            notes << (restricted ? "; hypothesis n >= 1/alpha^4 fails"
                                 : "; code is not restricted");
        auto rep = make_report("R9", static_cast<double>(h_count), 1.0 / denom, hyp, notes.str(),
                               tol);
        if (!hyp) rep.holds = true;
        return {rep};
    }

    if (lemma_id == "R10") {
        if (!equi) return not_equiangular(lemma_id);
        // tr(B)^2 <= tr(B^2) rk(B) applied to B = M - alpha J.
        RealMatrix b = ctx.gm.real_entries();
        for (int i = 0; i < ctx.n; ++i)
            for (int j = 0; j < ctx.n; ++j) b(i, j) -= alpha;
        KahanSum trace, trace_sq;
        for (int i = 0; i < ctx.n; ++i) trace.add(b(i, i));
        for (const auto& v : b.data()) trace_sq.add(v * v);
        int rank = eig_sym(b).rank;
        std::ostringstream notes;
        notes << "B = M - alpha J, rank " << rank;
        return {make_report("R10", trace.value() * trace.value(), trace_sq.value() * rank, true,
                            notes.str(), tol)};
    }

    throw std::invalid_argument("evaluate_lemma: unknown lemma id '" + lemma_id + "'");
}

namespace {

ComplexVector random_vector(Rng& rng, int n, bool complex_entries) {
    ComplexVector v(n);
    for (int k = 0; k < n; ++k) {
        double re = rng.next_gaussian();
        double im = complex_entries ? rng.next_gaussian() : 0.0;
        v[k] = cx(re, im);
    }
    return v;
}

RealVector real_cast(const ComplexVector& v) {
    RealVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
    return out;
}

} // namespace

std::vector<InequalityReport> sample_lemma_reports(const SphericalCode& code,
                                                   const std::string& lemma_id, int samples,
                                                   uint64_t seed, const Tolerances& tol,
                                                   int threads) {
    if (samples < 1) throw std::invalid_argument("sample_lemma_reports: samples must be positive");
    const int n = code.size();
    const bool complex_entries = code.field == Field::Complex;

    auto tag = [](InequalityReport rep, int s) {
        rep.notes = rep.notes.empty() ? "sample " + std::to_string(s)
                                      : rep.notes + "; sample " + std::to_string(s);
        return rep;
    };

    std::function<std::vector<InequalityReport>(int)> per_sample;

    if (lemma_id == "main_r") {
        per_sample = [&, n](int s) {
            Rng rng = Rng::stream(seed, s);
            RealVector x = real_cast(random_vector(rng, n, false));
            RealVector y = real_cast(random_vector(rng, n, false));
            return std::vector<InequalityReport>{tag(projection_ineq_real(code, x, y, tol), s)};
        };
    } else if (lemma_id == "main_c") {
        per_sample = [&, n](int s) {
            Rng rng = Rng::stream(seed, s);
            ComplexVector x = random_vector(rng, n, complex_entries);
            ComplexVector y = random_vector(rng, n, complex_entries);
            return std::vector<InequalityReport>{tag(projection_ineq_complex(code, x, y, tol), s)};
        };
    } else if (lemma_id == "main_r_regular") {
        per_sample = [&, n](int s) {
            Rng rng = Rng::stream(seed, s);
            RealVector x = real_cast(random_vector(rng, n, false));
            return std::vector<InequalityReport>{tag(projection_ineq_regular(code, x, tol), s)};
        };
    } else if (lemma_id == "sic_identity") {
        EquiangularCheck check = verify_equiangular(code);
        double sic_alpha = 1.0 / std::sqrt(code.dimension + 1.0);
        bool hyp = check.is_equiangular && std::abs(check.alpha - sic_alpha) <= 1e-8;
        per_sample = [&, n, hyp](int s) {
            Rng rng = Rng::stream(seed, s);
            auto [lhs, rhs] = sic_identity_sides(code, random_vector(rng, n, complex_entries),
                                                 random_vector(rng, n, complex_entries));
            std::string notes = hyp ? "" : "alpha differs from 1/sqrt(r+1); identity not expected";
            return std::vector<InequalityReport>{
                tag(make_report("sic_identity", lhs, rhs, hyp, notes, tol), s)};
        };
    } else if (lemma_id == "R2" || lemma_id == "C2") {
        per_sample = [&, n](int s) {
            Rng rng = Rng::stream(seed, s);
            LemmaParams p;
            p.x = random_vector(rng, n, complex_entries && lemma_id == "C2");
            p.i = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            auto reps = evaluate_lemma(code, lemma_id, p, tol);
            for (auto& rep : reps) rep = tag(std::move(rep), s);
            return reps;
        };
    } else if (lemma_id == "R1" || lemma_id == "C1") {
        per_sample = [&, n](int s) {
            Rng rng = Rng::stream(seed, s);
            LemmaParams p;
            int i = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            int j = n >= 2 ? static_cast<int>(rng.next_below(static_cast<uint64_t>(n - 1))) : 0;
            if (j >= i) ++j;
            p.i = i;
            p.j = j;
            auto reps = evaluate_lemma(code, lemma_id, p, tol);
            for (auto& rep : reps) rep = tag(std::move(rep), s);
            return reps;
        };
    } else {
        // Deterministic lemmas: a single evaluation regardless of `samples`.
        return evaluate_lemma(code, lemma_id, {}, tol);
    }

    std::vector<std::vector<InequalityReport>> slots(samples);
    int workers = std::max(1, std::min(threads, samples));
    if (workers == 1) {
        for (int s = 0; s < samples; ++s) slots[s] = per_sample(s);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    int s = next.fetch_add(1);
                    if (s >= samples) return;
                    try {
                        slots[s] = per_sample(s);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<InequalityReport> out;
    for (auto& slot : slots)
        for (auto& rep : slot) out.push_back(std::move(rep));
    return out;
}

} // namespace eqlines
