#include "eqlines/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace eqlines {

namespace {

template <typename T>
void check_square(const Matrix<T>& m, const char* who) {
    if (!m.square()) {
        std::ostringstream os;
        os << who << ": matrix is " << m.rows() << "x" << m.cols() << ", not square";
        throw std::invalid_argument(os.str());
    }
}

void check_symmetric(const RealMatrix& m, double tol) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol) {
                std::ostringstream os;
                os << "eig_sym: not symmetric at entry (" << i << "," << j << "): " << m(i, j)
                   << " vs " << m(j, i);
                throw std::invalid_argument(os.str());
            }
}

void check_hermitian(const ComplexMatrix& m, double tol) {
    for (int i = 0; i < m.rows(); ++i) {
        if (std::abs(m(i, i).imag()) > tol) {
            std::ostringstream os;
            os << "eig_herm: diagonal entry (" << i << "," << i << ") has imaginary part "
               << m(i, i).imag();
            throw std::invalid_argument(os.str());
        }
        for (int j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                std::ostringstream os;
                os << "eig_herm: not Hermitian at entry (" << i << "," << j << ")";
                throw std::invalid_argument(os.str());
            }
    }
}

template <typename T>
double offdiag_norm(const Matrix<T>& a) {
    KahanSum acc;
    int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc.add(std::norm(a(i, j)));
    return std::sqrt(acc.value());
}

// One cyclic-by-row threshold sweep scheme. The two-plane rotation for a
// Hermitian pivot a_pq = rho * phase (|phase| = 1) is the real Jacobi
// rotation conjugated by diag(1, conj(phase)):
//   R = I except R(p,p) = c, R(p,q) = s, R(q,p) = -conj(phase) s,
//   R(q,q) = conj(phase) c,
// which zeroes A'(p,q) in A' = R* A R. For real input phase = +-1 and this
// is the textbook rotation.
template <typename T>
void jacobi_diagonalize(Matrix<T>& a, Matrix<T>& v) {
    const int n = a.rows();
    const double target = 1e-12 * std::max(frobenius_norm(a), 1e-300);
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = offdiag_norm(a);
        if (off < target) break;
        // Rotating only entries above the per-sweep threshold guarantees
        // progress: if all entries were below it, off would already be
        // smaller than itself.
        double thresh = off / (8.0 * n);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double rho = std::abs(a(p, q));
                if (rho <= thresh || rho == 0.0) continue;
                T phase = a(p, q) / rho;
                double app = std::real(a(p, p));
                double aqq = std::real(a(q, q));
                double tau = (aqq - app) / (2.0 * rho);
                double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                T phc = detail::conj_of(phase);

                a(p, p) = T{app - t * rho};
                a(q, q) = T{aqq + t * rho};
                a(p, q) = T{0};
                a(q, p) = T{0};
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    T akp = a(k, p);
                    T akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * akp + c * phc * akq;
                    a(p, k) = detail::conj_of(a(k, p));
                    a(q, k) = detail::conj_of(a(k, q));
                }
                for (int k = 0; k < n; ++k) {
                    T vkp = v(k, p);
                    T vkq = v(k, q);
                    v(k, p) = c * vkp - s * phc * vkq;
                    v(k, q) = s * vkp + c * phc * vkq;
                }
            }
        }
    }
}

// Sort descending by eigenvalue, canonicalize each eigenvector so its
// largest-magnitude component is real and positive. Makes output
// deterministic for identical input.
template <typename T>
EigenDecomposition<T> assemble(Matrix<T>& a, Matrix<T>& v, double rank_cutoff) {
    const int n = a.rows();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = std::real(a(i, i));
    std::stable_sort(order.begin(), order.end(),
                     [&](int l, int r) { return diag[l] > diag[r]; });

    EigenDecomposition<T> out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix<T>(n, n);
    for (int idx = 0; idx < n; ++idx) {
        int src = order[idx];
        out.eigenvalues[idx] = diag[src];
        int kmax = 0;
        double best = -1.0;
        for (int k = 0; k < n; ++k) {
            double mag = std::abs(v(k, src));
            if (mag > best + 1e-14) {
                best = mag;
                kmax = k;
            }
        }
        T pivot = v(kmax, src);
        T scale = std::abs(pivot) > 0 ? T{std::abs(pivot)} / pivot : T{1};
        for (int k = 0; k < n; ++k) out.eigenvectors(k, idx) = v(k, src) * scale;
    }

    double top = 0.0;
    for (double lam : out.eigenvalues) top = std::max(top, std::abs(lam));
    out.rank = 0;
    for (double lam : out.eigenvalues)
        if (std::abs(lam) > rank_cutoff * top) ++out.rank;
    return out;
}

} // namespace

template <typename T>
int EigenDecomposition<T>::multiplicity(double value, double tol) const {
    double top = eigenvalues.empty() ? 0.0 : std::abs(eigenvalues.front());
    for (double lam : eigenvalues) top = std::max(top, std::abs(lam));
    double window = tol * std::max(1.0, top);
    int count = 0;
    for (double lam : eigenvalues)
        if (std::abs(lam - value) <= window) ++count;
    return count;
}

template <typename T>
Matrix<T> EigenDecomposition<T>::reconstruct() const {
    const int n = eigenvectors.rows();
    Matrix<T> out(n, n);
    for (size_t i = 0; i < eigenvalues.size(); ++i) {
        auto u = eigenvectors.column(static_cast<int>(i));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out(r, c) += T{eigenvalues[i]} * u[r] * detail::conj_of(u[c]);
    }
    return out;
}

template struct EigenDecomposition<double>;
template struct EigenDecomposition<cx>;

EigenDecomposition<double> eig_sym(const RealMatrix& m, double rank_cutoff) {
    check_square(m, "eig_sym");
    check_symmetric(m, 1e-10);
    RealMatrix a = m;
    // Exact symmetrization so rotations see a_pq == a_qp.
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) {
            double mean = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = a(j, i) = mean;
        }
    RealMatrix v = RealMatrix::identity(a.rows());
    jacobi_diagonalize(a, v);
    return assemble(a, v, rank_cutoff);
}

EigenDecomposition<cx> eig_herm(const ComplexMatrix& m, double rank_cutoff) {
    check_square(m, "eig_herm");
    check_hermitian(m, 1e-10);
    ComplexMatrix a = m;
    for (int i = 0; i < a.rows(); ++i) {
        a(i, i) = cx(a(i, i).real(), 0.0);
        for (int j = i + 1; j < a.cols(); ++j) {
            cx mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = mean;
            a(j, i) = std::conj(mean);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(a.rows());
    jacobi_diagonalize(a, v);
    return assemble(a, v, rank_cutoff);
}

RealMatrix real_embedding(const ComplexMatrix& m) {
    const int n = m.rows();
    RealMatrix out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out(i, j) = m(i, j).real();
            out(i, j + n) = -m(i, j).imag();
            out(i + n, j) = m(i, j).imag();
            out(i + n, j + n) = m(i, j).real();
        }
    return out;
}

namespace {

template <typename T>
Matrix<T> pinv_impl(const Matrix<T>& m, double cutoff) {
    auto eig = [&] {
        if constexpr (std::is_same_v<T, double>)
            return eig_sym(m, cutoff);
        else
            return eig_herm(m, cutoff);
    }();
    const int n = m.rows();
    double lambda1 = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    double lambda_min = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    if (lambda_min < -1e-9 * std::max(lambda1, 1.0)) {
        std::ostringstream os;
        os << "pinv: matrix is indefinite (smallest eigenvalue " << lambda_min
           << " vs largest " << lambda1 << ")";
        throw std::invalid_argument(os.str());
    }
    Matrix<T> out(n, n);
    for (size_t i = 0; i < eig.eigenvalues.size(); ++i) {
        double lam = eig.eigenvalues[i];
        if (lam <= cutoff * lambda1) continue;
        auto u = eig.eigenvectors.column(static_cast<int>(i));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out(r, c) += T{1.0 / lam} * u[r] * detail::conj_of(u[c]);
    }
    return out;
}

} // namespace

RealMatrix pinv(const RealMatrix& m, double cutoff) { return pinv_impl(m, cutoff); }
ComplexMatrix pinv(const ComplexMatrix& m, double cutoff) { return pinv_impl(m, cutoff); }

MatrixSpan MatrixSpan::from_generators(std::vector<ComplexMatrix> generators) {
    if (generators.empty()) throw std::invalid_argument("MatrixSpan: no generators");
    const int r = generators.front().rows();
    for (size_t i = 0; i < generators.size(); ++i) {
        const auto& w = generators[i];
        if (w.rows() != r || w.cols() != r)
            throw std::invalid_argument("MatrixSpan: generator " + std::to_string(i) +
                                        " has mismatched dimensions");
        check_hermitian(w, 1e-9);
    }
    MatrixSpan span;
    const int n = static_cast<int>(generators.size());
    span.gramian = RealMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            cx g = frobenius_inner(generators[i], generators[j]);
            span.gramian(i, j) = g.real();
            span.gramian(j, i) = g.real();
        }
    span.generators = std::move(generators);
    return span;
}

SpanProjection span_project(const MatrixSpan& span, const ComplexMatrix& x, double cutoff) {
    const int r = span.generators.front().rows();
    if (x.rows() != r || x.cols() != r)
        throw std::invalid_argument("span_project: X has mismatched dimensions");
    const int n = static_cast<int>(span.generators.size());

    ComplexVector g(n);
    for (int i = 0; i < n; ++i) g[i] = frobenius_inner(span.generators[i], x);

    RealMatrix gram_pinv = pinv(span.gramian, cutoff);
    ComplexVector c(n);
    for (int i = 0; i < n; ++i) {
        KahanSumComplex acc;
        for (int j = 0; j < n; ++j) acc.add(cx(gram_pinv(i, j), 0.0) * g[j]);
        c[i] = acc.value();
    }

    SpanProjection out;
    out.projection = ComplexMatrix(r, r);
    for (int i = 0; i < n; ++i) {
        for (int rr = 0; rr < r; ++rr)
            for (int cc = 0; cc < r; ++cc)
                out.projection(rr, cc) += c[i] * span.generators[i](rr, cc);
    }
    // <X, PX>_F = sum_i c_i conj(g_i); real and nonnegative for a projection.
    KahanSumComplex acc;
    for (int i = 0; i < n; ++i) acc.add(std::conj(g[i]) * c[i]);
    out.norm_sq_projected = acc.value().real();
    out.coefficients = std::move(c);
    return out;
}

} // namespace eqlines
