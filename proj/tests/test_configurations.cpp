#include "eqlines/configurations.hpp"

#include "eqlines/graphs.hpp"
#include "oracle_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace eqlines;

namespace {

ConfigSpec spec_of(const std::string& name, std::map<std::string, std::string> params = {},
                   uint64_t seed = 0) {
    ConfigSpec s;
    s.name = name;
    s.params = std::move(params);
    s.seed = seed;
    return s;
}

} // namespace

TEST_SUITE_BEGIN("configurations");

TEST_CASE("johnson28: 28 lines in dimension 7 with alpha exactly 1/3") {
    SphericalCode code = generate_code(spec_of("johnson28"));
    CHECK(code.size() == 28);
    CHECK(code.dimension == 7);
    EquiangularCheck check = verify_equiangular(code);
    CHECK(check.alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(check.max_deviation <= 1e-12);
    CHECK(eig_sym(real_part(gram(code).entries)).rank == 7);
}

TEST_CASE("icosahedron6: 6 lines in R^3 with alpha = 1/sqrt(5)") {
    SphericalCode code = generate_code(spec_of("icosahedron6"));
    CHECK(code.size() == 6);
    CHECK(code.dimension == 3);
    EquiangularCheck check = verify_equiangular(code);
    CHECK(check.is_equiangular);
    CHECK(check.alpha == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));

    // Matches the vertex-coordinate oracle pairwise.
    auto reference = oracle::icosahedron_vectors();
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 3; ++k)
            CHECK(code.vectors[i][k].real() == doctest::Approx(reference[i][k]).epsilon(1e-14));
}

TEST_CASE("sic_c2: all squared inner products are 1/3") {
    SphericalCode code = generate_code(spec_of("sic_c2"));
    CHECK(code.size() == 4);
    CHECK(code.dimension == 2);
    GramMatrix m = gram(code);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(std::norm(m.entries(i, j)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sic_c3: the Hesse orbit gives 9 lines at common magnitude 1/2") {
    SphericalCode code = generate_code(spec_of("sic_c3"));
    CHECK(code.size() == 9);
    CHECK(code.dimension == 3);
    GramMatrix m = gram(code);
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            CHECK(std::abs(m.entries(i, j)) == doctest::Approx(0.5).epsilon(1e-12));

    // Independent clock-and-shift oracle agrees vector by vector.
    auto reference = oracle::hesse_orbit();
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(code.vectors[i][k] - reference[i][k]) < 1e-14);

    // Tight frame: spectrum {3, 3, 3, 0^6}.
    auto eig = eig_herm(m.entries);
    CHECK(eig.multiplicity(3.0) == 3);
    CHECK(eig.rank == 3);
}

TEST_CASE("simplex_plus: all inner products +alpha") {
    SphericalCode code = generate_code(spec_of("simplex_plus", {{"n", "9"}, {"alpha", "0.25"}}));
    CHECK(code.size() == 9);
    CHECK(code.dimension == 9);
    GramMatrix m = gram(code);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (i != j) CHECK(m.entries(i, j).real() == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("named graphs: petersen, hypercube, complete multipartite") {
    Graph petersen = generate_graph(spec_of("petersen"));
    int k = 0;
    CHECK(petersen.is_regular(&k));
    CHECK(k == 3);
    CHECK(spectrum(petersen).multiplicity(1.0) == 5);

    Graph q4 = generate_graph(spec_of("hypercube", {{"d", "4"}}));
    CHECK(q4.size() == 16);
    CHECK(q4.is_regular(&k));
    CHECK(k == 4);
    auto eig = spectrum(q4);
    CHECK(eig.multiplicity(2.0) == 4);
    CHECK(eig.multiplicity(0.0) == 6);
    CHECK(q4.is_bipartite());

    Graph k222 = generate_graph(spec_of("complete_multipartite", {{"parts", "2,2,2"}}));
    CHECK(k222.size() == 6);
    CHECK(k222.is_regular(&k));
    CHECK(k == 4);
    CHECK(spectrum(k222).eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("schlafli_complement: spectrum {10, 1^20, -5^6}") {
    Graph g = generate_graph(spec_of("schlafli_complement"));
    CHECK(g.size() == 27);
    int k = 0;
    CHECK(g.is_regular(&k));
    CHECK(k == 10);
    auto eig = spectrum(g);
    CHECK(std::abs(eig.eigenvalues[0] - 10.0) <= 1e-8);
    CHECK(eig.multiplicity(1.0) == 20);
    CHECK(eig.multiplicity(-5.0) == 6);
}

TEST_CASE("paley(13): 6-regular with lambda2 = (sqrt(13) - 1)/2") {
    Graph g = generate_graph(spec_of("paley", {{"q", "13"}}));
    int k = 0;
    CHECK(g.is_regular(&k));
    CHECK(k == 6);
    auto eig = spectrum(g);
    CHECK(eig.eigenvalues[1] == doctest::Approx((std::sqrt(13.0) - 1) / 2).epsilon(1e-9));
    CHECK(eig.multiplicity(eig.eigenvalues[1]) == 6);

    CHECK_THROWS_AS(generate_graph(spec_of("paley", {{"q", "15"}})), std::invalid_argument);
    CHECK_THROWS_AS(generate_graph(spec_of("paley", {{"q", "25"}})), std::invalid_argument);
}

TEST_CASE("random_regular: simple, k-regular, seed-reproducible") {
    Graph a = generate_graph(spec_of("random_regular", {{"n", "40"}, {"k", "5"}}, 42));
    Graph b = generate_graph(spec_of("random_regular", {{"n", "40"}, {"k", "5"}}, 42));
    Graph c = generate_graph(spec_of("random_regular", {{"n", "40"}, {"k", "5"}}, 43));
    int k = 0;
    CHECK(a.is_regular(&k));
    CHECK(k == 5);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());

    CHECK_THROWS_AS(generate_graph(spec_of("random_regular", {{"n", "5"}, {"k", "3"}})),
                    std::invalid_argument); // odd n*k
}

TEST_CASE("catalog: stable membership") {
    auto entries = catalog();
    CHECK(entries.size() >= 10);
    auto has = [&entries](const std::string& name) {
        return std::any_of(entries.begin(), entries.end(),
                           [&name](const ConfigSpec& s) { return s.name == name; });
    };
    CHECK(has("johnson28"));
    CHECK(has("sic_c3"));
    CHECK(has("icosahedron6"));
    CHECK(has("random_regular"));
    for (const auto& entry : entries) CHECK_FALSE(entry.description.empty());
}

TEST_CASE("generate: unknown names and bad params are rejected") {
    CHECK_THROWS_AS(generate(spec_of("no_such_config")), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of("simplex_plus", {{"n", "5"}})), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of("cycle", {{"n", "2"}})), std::invalid_argument);
}

TEST_CASE("random_code: reproducible unit vectors") {
    SphericalCode a = random_code(Field::Complex, 4, 10, 7);
    SphericalCode b = random_code(Field::Complex, 4, 10, 7);
    CHECK(a.vectors == b.vectors);
    validate(a);
    SphericalCode real = random_code(Field::Real, 5, 6, 3);
    validate(real);
}

TEST_SUITE_END();
