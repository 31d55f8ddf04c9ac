#pragma once

#include "eqlines/codes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqlines {

struct Tolerances {
    double validity = 1e-8;  // relative: holds iff slack >= -validity * scale
    double tightness = 1e-7; // relative: tight iff holds and |slack| <= tightness * scale
};

/// One evaluated inequality, normalized to the orientation lhs <= rhs so
/// that slack = rhs - lhs >= 0 always means "holds". The scale for the
/// relative slack is max(1, |lhs|, |rhs|).
struct InequalityReport {
    std::string lemma_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double relative_slack = 0.0;
    bool holds = false;
    bool tight = false;
    bool hypothesis_ok = true;
    std::string notes;
};

InequalityReport make_report(std::string lemma_id, double lhs, double rhs,
                             bool hypothesis_ok = true, std::string notes = {},
                             const Tolerances& tol = {});

/// Both Welch-type inequalities for a code, with f(x) = |x|^2 applied
/// entrywise to the Gram matrix:
///   1^T f(M)^+ 1 <= r                              (pinv_quadform)
///   1^T f(M) 1 >= (n^2/r) (2 - 1^T f(M)^+ 1 / r)   (classic_sum, improved_lower)
struct WelchReport {
    double pinv_quadform = 0.0;
    double classic_sum = 0.0;
    int r = 0;
    int n = 0;
    double improved_lower = 0.0;
    bool identity_in_span = false;              // pinv_quadform == r at tolerance
    std::optional<bool> frame_vector_tight;     // f(M) 1 == (n/r) 1; null if f(M) singular
    bool holds_first = false, holds_second = false;
};

WelchReport welch(const SphericalCode& code, const Tolerances& tol = {});

/// Projection inequality for a real equiangular code; tight when
/// n = r(r+1)/2 (cross-checked numerically, never assumed).
InequalityReport projection_ineq_real(const SphericalCode& code, const RealVector& x,
                                      const RealVector& y, const Tolerances& tol = {});

/// Complex analogue, tight when n = r^2. When alpha = 1/sqrt(r+1) within
/// tolerance, the identity
///   r <x,Mx><y,My> + (1/r)|<Mx,My>|^2 = (r+1) <f(Mx), f(My)>
/// is evaluated as well and its residual recorded in the notes.
InequalityReport projection_ineq_complex(const SphericalCode& code, const ComplexVector& x,
                                         const ComplexVector& y, const Tolerances& tol = {});

/// Two sides of the alpha = 1/sqrt(r+1) identity above, for direct checks.
std::pair<double, double> sic_identity_sides(const SphericalCode& code, const ComplexVector& x,
                                             const ComplexVector& y);

/// Refined inequality when the all-ones vector is an eigenvector of M with
/// eigenvalue lambda > 0; tight when n = r(r+1)/2 - 1. If the eigenvector
/// hypothesis fails at 1e-7 relative, the report is advisory.
InequalityReport projection_ineq_regular(const SphericalCode& code, const RealVector& x,
                                         const Tolerances& tol = {});

/// Optional arguments for catalog lemmas: eigenvector indices for R1/C1,
/// (i, x) for R2/C2, the vertex for R7.
struct LemmaParams {
    std::optional<int> i;
    std::optional<int> j;
    std::optional<ComplexVector> x;
};

/// Catalog identifiers: R1..R11 (real) and C1..C6 (complex analogues).
std::vector<std::string> lemma_catalog();

/// Evaluate one catalog lemma on a code. Lemmas with several
/// sub-inequalities (R3/C3 bound both a minimum eigenvector entry and
/// lambda_2; R7 ranges over vertices) return one report per sub-check.
/// Unknown lemma ids throw.
std::vector<InequalityReport> evaluate_lemma(const SphericalCode& code,
                                             const std::string& lemma_id,
                                             const LemmaParams& params = {},
                                             const Tolerances& tol = {});

/// Sampled report batch for the CLI: lemmas that consume vectors draw them
/// from per-index deterministic streams of `seed`; the rest evaluate once.
/// Accepts the catalog ids plus "main_r", "main_c", "main_r_regular" and
/// "sic_identity". Samples are independent, so `threads` only changes wall
/// time, never content or order.
std::vector<InequalityReport> sample_lemma_reports(const SphericalCode& code,
                                                   const std::string& lemma_id, int samples,
                                                   uint64_t seed, const Tolerances& tol = {},
                                                   int threads = 1);

} // namespace eqlines
