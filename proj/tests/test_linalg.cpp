#include "eqlines/linalg.hpp"

#include "oracle_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace eqlines;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("eig_sym: identity") {
    auto eig = eig_sym(RealMatrix::identity(3));
    REQUIRE(eig.eigenvalues.size() == 3);
    for (double lam : eig.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.rank == 3);
}

TEST_CASE("eig_sym: all-ones matrix") {
    auto eig = eig_sym(RealMatrix::ones(4));
    CHECK(eig.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(std::abs(eig.eigenvalues[i]) < 1e-12);
    CHECK(eig.rank == 1);
}

TEST_CASE("eig_sym: Gram of the 28-line code has spectrum {4^7, 0^21}") {
    auto eig = eig_sym(oracle::johnson_gram());
    CHECK(eig.multiplicity(4.0) == 7);
    CHECK(eig.multiplicity(0.0) == 21);
    CHECK(eig.rank == 7);
}

TEST_CASE("eig_sym: rejects asymmetric input naming the entry") {
    RealMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 0.5;
    CHECK_THROWS_WITH_AS(eig_sym(m), doctest::Contains("(0,1)"), std::invalid_argument);
    CHECK_THROWS_AS(eig_sym(RealMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("eig_sym: deterministic for identical input") {
    RealMatrix m = oracle::random_symmetric(9, 17);
    auto a = eig_sym(m);
    auto b = eig_sym(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors.data() == b.eigenvectors.data());
}

TEST_CASE("eig_sym: reconstruction, orthonormality and ordering on random input") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 3 + static_cast<int>(seed);
        RealMatrix m = oracle::random_symmetric(n, seed);
        auto eig = eig_sym(m);
        double lambda1 = std::abs(eig.eigenvalues.front());
        RealMatrix rec = eig.reconstruct();
        CHECK(max_abs_entry(rec - m) <= 1e-9 * std::max(1.0, lambda1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double ip = dot(eig.eigenvector(i), eig.eigenvector(j));
                CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-10);
            }
        }
        for (size_t i = 1; i < eig.eigenvalues.size(); ++i)
            CHECK(eig.eigenvalues[i - 1] >= eig.eigenvalues[i]);
    }
}

TEST_CASE("eig_herm: rank-one 2x2 Hermitian") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(0, 1) = cx(0, 1);
    m(1, 0) = cx(0, -1);
    auto eig = eig_herm(m);
    CHECK(eig.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(eig.eigenvalues[1]) < 1e-12);
    CHECK(eig.rank == 1);
}

TEST_CASE("eig_herm: Hermitian identity") {
    auto eig = eig_herm(ComplexMatrix::identity(4));
    for (double lam : eig.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_herm: Gram of the four C^2 lines has spectrum {2, 2, 0, 0}") {
    // Tight frame: n/r = 2 with multiplicity r.
    const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
    std::vector<ComplexVector> vs;
    vs.push_back({cx(1, 0), cx(0, 0)});
    for (int j = 0; j < 3; ++j) {
        cx w = std::polar(1.0, 2.0 * 3.14159265358979323846 * j / 3.0);
        vs.push_back({cx(1 / s3, 0), s2 / s3 * w});
    }
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = dot(vs[i], vs[j]);
    auto eig = eig_herm(m);
    CHECK(eig.multiplicity(2.0) == 2);
    CHECK(eig.multiplicity(0.0) == 2);
    CHECK(eig.rank == 2);
}

TEST_CASE("eig_herm: rejects non-Hermitian input") {
    ComplexMatrix skew(2, 2);
    skew(0, 1) = cx(0, 1);
    skew(1, 0) = cx(0, 1); // should be -i
    CHECK_THROWS_AS(eig_herm(skew), std::invalid_argument);

    ComplexMatrix imag_diag = ComplexMatrix::identity(2);
    imag_diag(0, 0) = cx(1, 0.5);
    CHECK_THROWS_AS(eig_herm(imag_diag), std::invalid_argument);
}

TEST_CASE("pinv: Moore-Penrose identities on random complex PSD matrices") {
    for (uint64_t seed = 31; seed <= 33; ++seed) {
        int n = 5;
        ComplexMatrix b = oracle::random_hermitian(n, seed);
        ComplexMatrix m = matmul(adjoint(b), b); // PSD
        ComplexMatrix mp = pinv(m);
        double lambda1 = eig_herm(m).eigenvalues.front();
        double tol = 1e-8 * std::max(1.0, lambda1);
        CHECK(max_abs_entry(matmul(matmul(m, mp), m) - m) <= tol);
        CHECK(max_abs_entry(matmul(matmul(mp, m), mp) - mp) <= tol);
        ComplexMatrix mmp = matmul(m, mp);
        CHECK(max_abs_entry(mmp - adjoint(mmp)) <= tol);
    }
}

TEST_CASE("eig_herm: reconstruction and orthonormality on random input") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 3 + static_cast<int>(seed);
        ComplexMatrix m = oracle::random_hermitian(n, seed);
        auto eig = eig_herm(m);
        ComplexMatrix rec = eig.reconstruct();
        CHECK(max_abs_entry(rec - m) <= 1e-9 * std::max(1.0, std::abs(eig.eigenvalues[0])));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cx ip = dot(eig.eigenvector(i), eig.eigenvector(j));
                CHECK(std::abs(ip - cx(i == j ? 1.0 : 0.0, 0.0)) <= 1e-10);
            }
    }
}

TEST_CASE("eig_herm matches the paired spectrum of the 2r x 2r real embedding") {
    for (uint64_t seed = 3; seed <= 5; ++seed) {
        int n = 4 + static_cast<int>(seed);
        ComplexMatrix m = oracle::random_hermitian(n, seed);
        auto complex_eig = eig_herm(m);
        auto embedded = eig_sym(real_embedding(m));
        REQUIRE(embedded.eigenvalues.size() == 2 * complex_eig.eigenvalues.size());
        for (int i = 0; i < n; ++i) {
            CHECK(complex_eig.eigenvalues[i] ==
                  doctest::Approx(embedded.eigenvalues[2 * i]).epsilon(1e-9));
            CHECK(complex_eig.eigenvalues[i] ==
                  doctest::Approx(embedded.eigenvalues[2 * i + 1]).epsilon(1e-9));
        }
    }
}

TEST_CASE("pinv: identity and rank-one all-ones") {
    RealMatrix id = pinv(RealMatrix::identity(3));
    CHECK(max_abs_entry(id - RealMatrix::identity(3)) < 1e-12);

    RealMatrix jp = pinv(RealMatrix::ones(3));
    RealMatrix expected = RealMatrix::ones(3) * (1.0 / 9.0);
    CHECK(max_abs_entry(jp - expected) < 1e-12);
}

TEST_CASE("pinv: (2/3 I + 1/3 J) applied to the all-ones vector") {
    // f(M) of the 4-line code in C^2; the linear system solved two ways.
    RealMatrix fm(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) fm(i, j) = i == j ? 1.0 : 1.0 / 3.0;
    RealVector ones(4, 1.0);
    RealVector via_pinv = matvec(pinv(fm), ones);
    RealVector via_ge = oracle::ge_solve(fm, ones);
    for (int i = 0; i < 4; ++i) {
        CHECK(via_pinv[i] == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(via_pinv[i] == doctest::Approx(via_ge[i]).epsilon(1e-10));
    }
}

TEST_CASE("pinv: rejects indefinite input") {
    RealMatrix m = RealMatrix::identity(2);
    m(1, 1) = -1.0;
    CHECK_THROWS_AS(pinv(m), std::invalid_argument);
}

TEST_CASE("pinv: Moore-Penrose identities on random PSD matrices") {
    for (uint64_t seed = 11; seed <= 14; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        RealMatrix m = oracle::random_psd(n, seed);
        double lambda1 = eig_sym(m).eigenvalues.front();
        RealMatrix mp = pinv(m);
        double tol = 1e-8 * std::max(1.0, lambda1);
        CHECK(max_abs_entry(matmul(matmul(m, mp), m) - m) <= tol);
        CHECK(max_abs_entry(matmul(matmul(mp, m), mp) - mp) <= tol);
        RealMatrix mmp = matmul(m, mp);
        CHECK(max_abs_entry(mmp - adjoint(mmp)) <= tol);
        RealMatrix mpm = matmul(mp, m);
        CHECK(max_abs_entry(mpm - adjoint(mpm)) <= tol);
    }
}

TEST_CASE("frobenius_inner: identity, rank-one product rule, zero") {
    CHECK(frobenius_inner(RealMatrix::identity(5), RealMatrix::identity(5)) ==
          doctest::Approx(5.0).epsilon(1e-14));

    Rng rng(99);
    auto unit = [&rng](int n) {
        ComplexVector v(n);
        for (auto& z : v) z = cx(rng.next_gaussian(), rng.next_gaussian());
        double len = norm(v);
        for (auto& z : v) z /= len;
        return v;
    };
    auto a = unit(4), b = unit(4), c = unit(4), d = unit(4);
    cx lhs = frobenius_inner(outer(a, b), outer(c, d));
    cx rhs = dot(a, c) * dot(d, b);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    CHECK(std::abs(frobenius_inner(to_complex(oracle::random_symmetric(3, 5)),
                                   ComplexMatrix(3, 3))) == 0.0);

    CHECK_THROWS_AS(frobenius_inner(RealMatrix(2, 2), RealMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("span_project: fixed point and orthogonal input") {
    ComplexMatrix w1(2, 2), w2(2, 2);
    w1(0, 0) = 1.0;
    w2(1, 1) = 1.0;
    auto span = MatrixSpan::from_generators({w1, w2});

    auto fixed = span_project(span, w1);
    CHECK(max_abs_entry(fixed.projection - w1) < 1e-10);
    CHECK(fixed.norm_sq_projected == doctest::Approx(1.0).epsilon(1e-10));

    ComplexMatrix x(2, 2); // symmetric off-diagonal, Frobenius-orthogonal to both
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    auto zero = span_project(span, x);
    CHECK(max_abs_entry(zero.projection) < 1e-12);
    CHECK(std::abs(zero.norm_sq_projected) < 1e-12);
}

TEST_CASE("span_project: n = r^2 rank-one projectors span everything") {
    // The four C^2 lines with alpha = 1/sqrt(3): projecting I is exact.
    const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
    std::vector<ComplexVector> vs;
    vs.push_back({cx(1, 0), cx(0, 0)});
    for (int j = 0; j < 3; ++j) {
        cx w = std::polar(1.0, 2.0 * 3.14159265358979323846 * j / 3.0);
        vs.push_back({cx(1 / s3, 0), s2 / s3 * w});
    }
    std::vector<ComplexMatrix> gens;
    for (const auto& v : vs) gens.push_back(outer(v, v));
    auto span = MatrixSpan::from_generators(gens);
    auto proj = span_project(span, ComplexMatrix::identity(2));
    CHECK(max_abs_entry(proj.projection - ComplexMatrix::identity(2)) < 1e-9);
    CHECK(proj.norm_sq_projected == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("span_project: gramian validity, contraction and Pythagoras on random spans") {
    for (uint64_t seed = 21; seed <= 24; ++seed) {
        Rng rng(seed);
        int r = 3 + static_cast<int>(seed % 3);
        std::vector<ComplexMatrix> gens;
        for (int g = 0; g < 4; ++g) gens.push_back(oracle::random_hermitian(r, seed * 10 + g));
        auto span = MatrixSpan::from_generators(gens);
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = 0; j < gens.size(); ++j) {
                cx expected = frobenius_inner(gens[i], gens[j]);
                CHECK(std::abs(span.gramian(static_cast<int>(i), static_cast<int>(j)) -
                               expected.real()) <= 1e-10);
                CHECK(std::abs(expected.imag()) <= 1e-10);
            }

        ComplexMatrix x(r, r);
        for (auto& v : x.data()) v = cx(rng.next_gaussian(), rng.next_gaussian());
        auto proj = span_project(span, x);
        double x_norm_sq = frobenius_inner(x, x).real();
        double scale = std::max(1.0, x_norm_sq);
        CHECK(proj.norm_sq_projected <= x_norm_sq + 1e-8 * scale);

        ComplexMatrix residual = x - proj.projection;
        double res_sq = frobenius_inner(residual, residual).real();
        CHECK(x_norm_sq - proj.norm_sq_projected == doctest::Approx(res_sq).epsilon(1e-8));

        // Idempotence: projecting the projection is a no-op.
        auto twice = span_project(span, proj.projection);
        CHECK(max_abs_entry(twice.projection - proj.projection) <= 1e-8 * scale);
    }
}

TEST_CASE("span_project: least-squares agreement with a direct solve") {
    // Normal equations solved by Gaussian elimination give the same
    // projection coefficients.
    std::vector<ComplexMatrix> gens;
    for (int g = 0; g < 3; ++g) {
        RealMatrix s = oracle::random_symmetric(4, 70 + g);
        gens.push_back(to_complex(s));
    }
    auto span = MatrixSpan::from_generators(gens);
    RealMatrix x = oracle::random_symmetric(4, 80);

    auto proj = span_project(span, to_complex(x));
    RealVector rhs(3);
    for (int i = 0; i < 3; ++i) rhs[i] = frobenius_inner(gens[i], to_complex(x)).real();
    RealVector coeff = oracle::ge_solve(span.gramian, rhs);
    for (int i = 0; i < 3; ++i)
        CHECK(proj.coefficients[i].real() == doctest::Approx(coeff[i]).epsilon(1e-9));
}

TEST_SUITE_END();
