#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlines {

using cx = std::complex<double>;

using RealVector = std::vector<double>;
using ComplexVector = std::vector<cx>;

/// Compensated (Kahan) accumulator. Equality detection at 1e-8 on n ~ 500
/// entries needs better than naive summation.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumComplex {
public:
    void add(cx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cx value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

namespace detail {
inline double conj_of(double x) { return x; }
inline cx conj_of(cx z) { return std::conj(z); }

template <typename T> struct Accumulator;
template <> struct Accumulator<double> { using type = KahanSum; };
template <> struct Accumulator<cx> { using type = KahanSumComplex; };
} // namespace detail

/// Dense row-major matrix over double or std::complex<double>.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T{}) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    /// The all-ones matrix J.
    static Matrix ones(int n) {
        Matrix m(n, n);
        for (auto& v : m.a_) v = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<T>& data() const { return a_; }
    std::vector<T>& data() { return a_; }

    std::vector<T> column(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(T s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, T s) { return a *= s; }
    friend Matrix operator*(T s, Matrix a) { return a *= s; }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix: shape mismatch (" + std::to_string(rows_) + "x" +
                                        std::to_string(cols_) + " vs " + std::to_string(o.rows_) +
                                        "x" + std::to_string(o.cols_) + ")");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<cx>;

/// <u, v> = u* v, conjugate-linear in the first argument. Kahan-compensated.
template <typename T>
T dot(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
    typename detail::Accumulator<T>::type acc;
    for (size_t i = 0; i < u.size(); ++i) acc.add(detail::conj_of(u[i]) * v[i]);
    return acc.value();
}

template <typename T>
double norm(const std::vector<T>& v) {
    KahanSum acc;
    for (const auto& x : v) acc.add(std::norm(x));
    return std::sqrt(acc.value());
}

template <typename T>
std::vector<T> matvec(const Matrix<T>& m, const std::vector<T>& v) {
    if (static_cast<size_t>(m.cols()) != v.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<T> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        typename detail::Accumulator<T>::type acc;
        for (int j = 0; j < m.cols(); ++j) acc.add(m(i, j) * v[j]);
        out[i] = acc.value();
    }
    return out;
}

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            typename detail::Accumulator<T>::type acc;
            for (int k = 0; k < a.cols(); ++k) acc.add(a(i, k) * b(k, j));
            out(i, j) = acc.value();
        }
    return out;
}

template <typename T>
Matrix<T> adjoint(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = detail::conj_of(m(i, j));
    return out;
}

/// Frobenius inner product <A, B> = tr(A* B), conjugate-linear in A.
template <typename T>
T frobenius_inner(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_inner: dimension mismatch");
    typename detail::Accumulator<T>::type acc;
    for (size_t k = 0; k < a.data().size(); ++k)
        acc.add(detail::conj_of(a.data()[k]) * b.data()[k]);
    return acc.value();
}

template <typename T>
double frobenius_norm(const Matrix<T>& m) {
    KahanSum acc;
    for (const auto& v : m.data()) acc.add(std::norm(v));
    return std::sqrt(acc.value());
}

template <typename T>
double max_abs_entry(const Matrix<T>& m) {
    double best = 0.0;
    for (const auto& v : m.data()) best = std::max(best, std::abs(v));
    return best;
}

/// Outer product u v* (rank one).
template <typename T>
Matrix<T> outer(const std::vector<T>& u, const std::vector<T>& v) {
    Matrix<T> m(static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = u[i] * detail::conj_of(v[j]);
    return m;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = cx(m(i, j), 0.0);
    return out;
}

/// Real part of a complex matrix; callers assert the imaginary part is noise.
inline RealMatrix real_part(const ComplexMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).real();
    return out;
}

inline ComplexVector to_complex(const RealVector& v) {
    ComplexVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = cx(v[i], 0.0);
    return out;
}

} // namespace eqlines
