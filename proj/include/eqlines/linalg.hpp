#pragma once

#include "eqlines/matrix.hpp"

#include <utility>
#include <vector>

namespace eqlines {

/// Default numerical-rank cutoff, relative to the largest eigenvalue
/// magnitude. Rank statements (rk(M) <= r) have to be recovered from
/// floating point, so this is configurable at every call site.
inline constexpr double kDefaultRankCutoff = 1e-9;

/// Spectral decomposition of a symmetric / Hermitian matrix.
/// Eigenvalues are real and sorted descending; eigenvector i is the i-th
/// column of `eigenvectors` and is a unit vector.
template <typename T>
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix<T> eigenvectors;
    int rank = 0;

    std::vector<T> eigenvector(int i) const { return eigenvectors.column(i); }

    /// Multiplicity of `value` among the eigenvalues, clustering within
    /// `tol * max(1, |lambda_1|)`.
    int multiplicity(double value, double tol = 1e-7) const;

    /// Sum lambda_i u_i u_i* (sanity route used by tests).
    Matrix<T> reconstruct() const;
};

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
/// Threshold sweeps run until the off-diagonal Frobenius norm drops below
/// 1e-12 * ||M||_F, at most 100 sweeps. Deterministic for identical input.
/// Throws std::invalid_argument naming the offending entry if the input is
/// not square or not symmetric within 1e-10.
EigenDecomposition<double> eig_sym(const RealMatrix& m, double rank_cutoff = kDefaultRankCutoff);

/// Hermitian analogue of eig_sym, using a native complex Jacobi rotation
/// (a unitary two-plane rotation carrying the phase of the pivot entry).
/// Eigenvalues match the paired spectrum of the 2r x 2r real embedding
/// within 1e-9; tests cross-check this.
EigenDecomposition<cx> eig_herm(const ComplexMatrix& m, double rank_cutoff = kDefaultRankCutoff);

/// Real symmetric embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix;
/// its spectrum is that of the input with every eigenvalue doubled.
RealMatrix real_embedding(const ComplexMatrix& m);

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix:
/// sum over lambda_i > cutoff * lambda_1 of (1/lambda_i) u_i u_i*.
/// Throws if the input is indefinite beyond -1e-9 * lambda_1.
RealMatrix pinv(const RealMatrix& m, double cutoff = kDefaultRankCutoff);
ComplexMatrix pinv(const ComplexMatrix& m, double cutoff = kDefaultRankCutoff);

/// A finite family of Hermitian (or real symmetric) generators together with
/// the Gram matrix of their pairwise Frobenius inner products.
struct MatrixSpan {
    std::vector<ComplexMatrix> generators;
    RealMatrix gramian; // <W_i, W_j>_F; Hermitian PSD, real for Hermitian W

    static MatrixSpan from_generators(std::vector<ComplexMatrix> generators);
};

struct SpanProjection {
    ComplexMatrix projection;  // sum c_i W_i, the orthogonal projection of X
    double norm_sq_projected;  // <X, PX>_F = ||PX||_F^2
    ComplexVector coefficients;
};

/// Orthogonal projection of X onto span(W_1..W_n) with respect to the
/// Frobenius inner product: c = (gramian)^+ (<W_i, X>_F)_i.
SpanProjection span_project(const MatrixSpan& span, const ComplexMatrix& x,
                            double cutoff = kDefaultRankCutoff);

extern template struct EigenDecomposition<double>;
extern template struct EigenDecomposition<cx>;

} // namespace eqlines
