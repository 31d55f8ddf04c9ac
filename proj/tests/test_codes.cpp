#include "eqlines/codes.hpp"

#include "eqlines/configurations.hpp"
#include "eqlines/graphs.hpp"
#include "oracle_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace eqlines;

namespace {

SphericalCode orthonormal_basis(int r) {
    SphericalCode code;
    code.field = Field::Real;
    code.dimension = r;
    for (int i = 0; i < r; ++i) {
        ComplexVector v(r);
        v[i] = 1.0;
        code.vectors.push_back(v);
    }
    return code;
}

std::vector<double> sorted_abs_offdiag(const GramMatrix& m) {
    std::vector<double> vals;
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j) vals.push_back(std::abs(m.entries(i, j)));
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace

TEST_SUITE_BEGIN("codes");

TEST_CASE("gram: orthonormal basis gives the identity") {
    GramMatrix m = gram(orthonormal_basis(3));
    CHECK(max_abs_entry(m.entries - ComplexMatrix::identity(3)) < 1e-14);
}

TEST_CASE("gram: icosahedron code has off-diagonal magnitude 1/sqrt(5)") {
    SphericalCode code;
    code.field = Field::Real;
    code.dimension = 3;
    for (const auto& v : oracle::icosahedron_vectors()) code.vectors.push_back(to_complex(v));
    GramMatrix m = gram(code);
    double expected = 1.0 / std::sqrt(5.0);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            CHECK(std::abs(m.entries(i, j)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("gram: 28-line code matches the pair-arithmetic oracle") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode code = generate_code(spec);
    GramMatrix m = gram(code);
    RealMatrix expected = oracle::johnson_gram();
    CHECK(max_abs_entry(m.entries - to_complex(expected)) < 1e-12);
}

TEST_CASE("gram: rejects non-unit vectors naming the index") {
    SphericalCode code = orthonormal_basis(3);
    code.vectors[1][0] = cx(2.0, 0.0);
    CHECK_THROWS_WITH_AS(gram(code), doctest::Contains("vector 1"), std::invalid_argument);
}

TEST_CASE("verify_equiangular: the C^2 code, a degenerate pair, a perturbed basis") {
    ConfigSpec spec;
    spec.name = "sic_c2";
    EquiangularCheck sic = verify_equiangular(generate_code(spec));
    CHECK(sic.alpha == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(sic.is_equiangular);

    EquiangularCheck ortho = verify_equiangular(orthonormal_basis(2));
    CHECK(ortho.alpha == 0.0);
    CHECK(ortho.is_equiangular); // degenerate but consistent

    SphericalCode perturbed = orthonormal_basis(3);
    perturbed.vectors[0][1] = 1e-3;
    perturbed.vectors[0][0] = std::sqrt(1.0 - 1e-6);
    CHECK_FALSE(verify_equiangular(perturbed, 1e-6).is_equiangular);

    SphericalCode single = orthonormal_basis(1);
    CHECK_THROWS_AS(verify_equiangular(single), std::invalid_argument);
}

TEST_CASE("code_to_graph: all-plus code gives the empty graph") {
    ConfigSpec spec;
    spec.name = "simplex_plus";
    spec.params = {{"n", "6"}, {"alpha", "0.3"}};
    auto [g, alpha] = code_to_graph(generate_code(spec));
    CHECK(g.size() == 6);
    CHECK(g.edge_count() == 0);
    CHECK(alpha == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("code_to_graph: restricted 28-line code minus its pivot is 10-regular with "
          "spectrum {10, 1^20, -5^6}") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode restricted = restrict_switch(generate_code(spec), 0);
    auto [g, alpha] = code_to_graph(restricted);
    CHECK(alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(g.degree(0) == 0);

    std::vector<int> rest;
    for (int v = 1; v < 28; ++v) rest.push_back(v);
    Graph induced = g.induced(rest);
    int k = 0;
    CHECK(induced.is_regular(&k));
    CHECK(k == 10);
    auto eig = spectrum(induced);
    CHECK(eig.eigenvalues[0] == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(eig.multiplicity(1.0) == 20);
    CHECK(eig.multiplicity(-5.0) == 6);
}

TEST_CASE("code_to_graph: rejects complex codes, non-equiangular codes, alpha near zero") {
    ConfigSpec spec;
    spec.name = "sic_c2";
    CHECK_THROWS_AS(code_to_graph(generate_code(spec)), std::invalid_argument);
    CHECK_THROWS_AS(code_to_graph(orthonormal_basis(3)), std::invalid_argument);

    SphericalCode skew = orthonormal_basis(3);
    skew.vectors[2] = {cx(1 / std::sqrt(2.0), 0), cx(1 / std::sqrt(2.0), 0), cx(0, 0)};
    CHECK_THROWS_AS(code_to_graph(skew), std::invalid_argument);
}

TEST_CASE("gram_from_graph: empty graph, C5, Petersen") {
    Graph empty(4);
    GramMatrix m = gram_from_graph(empty, 1.0 / 3.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(m.entries(i, j).real() ==
                  doctest::Approx(i == j ? 1.0 : 1.0 / 3.0).epsilon(1e-14));

    ConfigSpec c5spec;
    c5spec.name = "cycle";
    c5spec.params = {{"n", "5"}};
    Graph c5 = generate_graph(c5spec);
    double alpha = 1.0 / (2.0 * 0.6180339887498949 + 1.0);
    auto eig = eig_sym(real_part(gram_from_graph(c5, alpha).entries));
    CHECK(eig.rank == 3);
    CHECK(eig.eigenvalues.back() > -1e-9);

    ConfigSpec pspec;
    pspec.name = "petersen";
    auto peig = eig_sym(real_part(gram_from_graph(generate_graph(pspec), 1.0 / 3.0).entries));
    CHECK(peig.rank == 5);
    CHECK(peig.eigenvalues.back() > -1e-9);

    CHECK_THROWS_AS(gram_from_graph(empty, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gram_from_graph(empty, 1.0), std::invalid_argument);
}

TEST_CASE("switch: empty subset, full subset, single index") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode code = generate_code(spec);
    GramMatrix before = gram(code);

    SphericalCode same = switch_subset(code, {});
    CHECK(max_abs_entry(gram(same).entries - before.entries) == 0.0);

    std::vector<int> all(28);
    for (int i = 0; i < 28; ++i) all[i] = i;
    SphericalCode negated = switch_subset(code, all);
    CHECK(max_abs_entry(gram(negated).entries - before.entries) < 1e-14);

    SphericalCode one = switch_subset(code, {3});
    GramMatrix after = gram(one);
    for (int j = 0; j < 28; ++j) {
        if (j == 3) continue;
        CHECK(after.entries(3, j).real() == doctest::Approx(-before.entries(3, j).real()));
        CHECK(after.entries(j, 3).real() == doctest::Approx(-before.entries(j, 3).real()));
    }

    CHECK_THROWS_AS(switch_subset(code, {99}), std::invalid_argument);
}

TEST_CASE("switch: involution and invariance of the entry magnitudes") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode code = generate_code(spec);
    auto before = sorted_abs_offdiag(gram(code));
    Rng rng(5);
    std::vector<int> subset;
    for (int i = 0; i < 28; ++i)
        if (rng.next_below(2)) subset.push_back(i);

    SphericalCode once = switch_subset(code, subset);
    auto after = sorted_abs_offdiag(gram(once));
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i)
        CHECK(before[i] == doctest::Approx(after[i]).epsilon(1e-12));

    SphericalCode twice = switch_subset(once, subset);
    for (int i = 0; i < 28; ++i)
        for (int k = 0; k < 7; ++k)
            CHECK(twice.vectors[i][k] == code.vectors[i][k]);
}

TEST_CASE("restrict_switch: identity on a restricted code; icosahedron and 28-line examples") {
    ConfigSpec spec;
    spec.name = "icosahedron6";
    SphericalCode ico = generate_code(spec);
    SphericalCode restricted = restrict_switch(ico, 0);
    double alpha = 1.0 / std::sqrt(5.0);
    for (int i = 1; i < 6; ++i) {
        double ip = dot(restricted.vectors[0], restricted.vectors[i]).real();
        CHECK(ip == doctest::Approx(alpha).epsilon(1e-12));
    }
    auto [g, a] = code_to_graph(restricted);
    CHECK(g.degree(0) == 0);

    SphericalCode again = restrict_switch(restricted, 0);
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 3; ++k) CHECK(again.vectors[i][k] == restricted.vectors[i][k]);

    ConfigSpec jspec;
    jspec.name = "johnson28";
    SphericalCode johnson = restrict_switch(generate_code(jspec), 0);
    auto [jg, ja] = code_to_graph(johnson);
    std::vector<int> rest;
    for (int v = 1; v < 28; ++v) rest.push_back(v);
    int k = 0;
    CHECK(jg.induced(rest).is_regular(&k));
    CHECK(k == 10);
}

TEST_CASE("degree_bounded_switch: restricted 28-line code is left unchanged") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode restricted = restrict_switch(generate_code(spec), 0);
    auto [switched, report] = degree_bounded_switch(restricted);
    CHECK(report.negated.empty());
    CHECK(report.max_degree_before == 10);
    CHECK(report.max_degree_after == 10);
    CHECK(report.degree_threshold == doctest::Approx(16.0).epsilon(1e-9));
    CHECK_FALSE(report.lemma_hypothesis); // needs n >= 81
    for (int i = 0; i < 28; ++i)
        for (int k = 0; k < 7; ++k) CHECK(switched.vectors[i][k] == restricted.vectors[i][k]);
}

TEST_CASE("degree_bounded_switch: a dominating vertex gets negated") {
    // Pivot 0 isolated, vertex 1 joined to everything else. With alpha
    // small the Gram matrix stays PSD and d(1) = 46 > n/2 + 1/alpha - 1 = 42.
    const int n = 48;
    Graph g(n);
    for (int v = 2; v < n; ++v) g.add_edge(1, v);
    const double alpha = 0.05;
    SphericalCode code = factor_gram(gram_from_graph(g, alpha));
    auto [switched, report] = degree_bounded_switch(code);
    REQUIRE(report.negated == std::vector<int>{1});
    CHECK(report.max_degree_before == 46);
    CHECK(report.max_degree_after == 1); // only the flipped pivot edge remains
    auto [g2, a2] = code_to_graph(switched);
    CHECK(g2.degree(1) == 1);
    CHECK(g2.adjacent(0, 1));
}

TEST_CASE("degree_bounded_switch: empty-graph code is unchanged") {
    ConfigSpec spec;
    spec.name = "simplex_plus";
    spec.params = {{"n", "10"}, {"alpha", "0.2"}};
    SphericalCode code = generate_code(spec);
    auto [switched, report] = degree_bounded_switch(code);
    CHECK(report.negated.empty());
    CHECK(report.max_degree_after == 0);
}

TEST_CASE("degree_bounded_switch: rejects non-restricted codes") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode unrestricted = generate_code(spec); // every vertex has an edge
    CHECK_THROWS_AS(degree_bounded_switch(unrestricted), std::invalid_argument);
}

TEST_CASE("factor_gram: identity, C5 pipeline, Petersen pipeline") {
    GramMatrix id;
    id.field = Field::Real;
    id.entries = ComplexMatrix::identity(3);
    SphericalCode ortho = factor_gram(id);
    CHECK(ortho.dimension == 3);
    CHECK(max_abs_entry(gram(ortho).entries - ComplexMatrix::identity(3)) < 1e-9);

    // alpha = 1/(2 lambda2 + 1) = 1/sqrt(5); the 6-digit 0.447214 is just
    // past the PSD threshold.
    ConfigSpec c5spec;
    c5spec.name = "cycle";
    c5spec.params = {{"n", "5"}};
    double alpha5 = 1.0 / (2.0 * 0.6180339887498949 + 1.0);
    SphericalCode c5code = factor_gram(gram_from_graph(generate_graph(c5spec), alpha5));
    CHECK(c5code.dimension == 3);
    EquiangularCheck check = verify_equiangular(c5code);
    CHECK(check.is_equiangular);
    CHECK(check.alpha == doctest::Approx(0.447214).epsilon(1e-6));

    ConfigSpec pspec;
    pspec.name = "petersen";
    SphericalCode pcode = factor_gram(gram_from_graph(generate_graph(pspec), 1.0 / 3.0));
    CHECK(pcode.dimension == 5);
    EquiangularCheck pcheck = verify_equiangular(pcode);
    CHECK(pcheck.is_equiangular);
    CHECK(pcheck.alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("factor_gram: rejects indefinite matrices") {
    // C5 with alpha far above the PSD threshold.
    ConfigSpec spec;
    spec.name = "cycle";
    spec.params = {{"n", "5"}};
    GramMatrix bad = gram_from_graph(generate_graph(spec), 0.9);
    CHECK_THROWS_AS(factor_gram(bad), std::invalid_argument);
}

TEST_CASE("round trip: graph -> gram -> code -> graph reproduces the Gram matrix") {
    ConfigSpec spec;
    spec.name = "petersen";
    Graph g = generate_graph(spec);
    GramMatrix m = gram_from_graph(g, 1.0 / 3.0);
    SphericalCode code = factor_gram(m);
    auto [g2, alpha] = code_to_graph(code);
    GramMatrix m2 = gram_from_graph(g2, alpha);
    CHECK(max_abs_entry(m2.entries - m.entries) <= 1e-8);

    GramMatrix direct = gram(code);
    CHECK(max_abs_entry(direct.entries - m.entries) <= 1e-8);
}

TEST_CASE("round trip: factor_gram(gram(code)) reproduces the Gram matrix") {
    ConfigSpec spec;
    spec.name = "icosahedron6";
    SphericalCode code = generate_code(spec);
    GramMatrix m = gram(code);
    SphericalCode refactored = factor_gram(m);
    CHECK(max_abs_entry(gram(refactored).entries - m.entries) <= 1e-8);
}

TEST_CASE("subsets of an equiangular code stay equiangular with the same alpha") {
    ConfigSpec spec;
    spec.name = "johnson28";
    SphericalCode code = generate_code(spec);
    for (uint64_t seed = 1; seed <= 4; ++seed) {
        SphericalCode sub = random_subcode(code, 10, seed);
        EquiangularCheck check = verify_equiangular(sub);
        CHECK(check.is_equiangular);
        CHECK(check.alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
}

TEST_SUITE_END();
