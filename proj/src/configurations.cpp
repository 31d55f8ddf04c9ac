#include "eqlines/configurations.hpp"

#include "eqlines/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqlines {

namespace {

constexpr double kPi = 3.14159265358979323846;

int param_int(const ConfigSpec& spec, const std::string& key, int fallback, bool required = false) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (required)
            throw std::invalid_argument("generate(" + spec.name + "): missing parameter '" + key +
                                        "'");
        return fallback;
    }
    return std::stoi(it->second);
}

double param_double(const ConfigSpec& spec, const std::string& key, double fallback,
                    bool required = false) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (required)
            throw std::invalid_argument("generate(" + spec.name + "): missing parameter '" + key +
                                        "'");
        return fallback;
    }
    return std::stod(it->second);
}

SphericalCode real_code_from(std::vector<RealVector> raw, bool normalize = true) {
    SphericalCode code;
    code.field = Field::Real;
    code.dimension = static_cast<int>(raw.front().size());
    for (auto& v : raw) {
        if (normalize) {
            double len = norm(v);
            for (auto& x : v) x /= len;
        }
        code.vectors.push_back(to_complex(v));
    }
    return code;
}

// Six diagonals of the regular icosahedron: one representative per
// antipodal pair of the cyclic vertices (0, +-1, +-phi).
SphericalCode make_icosahedron6() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<RealVector> raw = {
        {0.0, 1.0, phi}, {0.0, 1.0, -phi}, {1.0, phi, 0.0},
        {1.0, -phi, 0.0}, {phi, 0.0, 1.0}, {-phi, 0.0, 1.0},
    };
    return real_code_from(std::move(raw));
}

// 28 lines in R^7: e_i + e_j - 1/4 over pairs {i,j} of [8], normalized and
// expressed in an orthonormal (Helmert) basis of the hyperplane orthogonal
// to the all-ones vector. All pairwise inner products are +-1/3.
SphericalCode make_johnson28() {
    std::vector<RealVector> helmert;
    for (int k = 1; k <= 7; ++k) {
        RealVector b(8, 0.0);
        double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) b[i] = scale;
        b[k] = -static_cast<double>(k) * scale;
        helmert.push_back(std::move(b));
    }
    std::vector<RealVector> raw;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            RealVector w(8, -0.25);
            w[i] += 1.0;
            w[j] += 1.0;
            RealVector coords(7);
            for (int k = 0; k < 7; ++k) coords[k] = dot(helmert[k], w);
            raw.push_back(std::move(coords));
        }
    return real_code_from(std::move(raw));
}

// 4 lines in C^2 with alpha = 1/sqrt(3): (1,0) and (1, sqrt(2) w^j)/sqrt(3)
// for j = 0, 1, 2, where w = exp(2 pi i / 3).
SphericalCode make_sic_c2() {
    SphericalCode code;
    code.field = Field::Complex;
    code.dimension = 2;
    const double s3 = std::sqrt(3.0);
    const double s2 = std::sqrt(2.0);
    code.vectors.push_back({cx(1.0, 0.0), cx(0.0, 0.0)});
    for (int j = 0; j < 3; ++j) {
        cx w = std::polar(1.0, 2.0 * kPi * j / 3.0);
        code.vectors.push_back({cx(1.0 / s3, 0.0), s2 / s3 * w});
    }
    return code;
}

// Hesse configuration: the Weyl-Heisenberg orbit of the fiducial
// (0, 1, -1)/sqrt(2) in C^3 under X^a Z^b, with X the cyclic shift
// (e_k -> e_{k+1 mod 3}) and Z = diag(1, w, w^2), w = exp(2 pi i / 3).
SphericalCode make_sic_c3() {
    SphericalCode code;
    code.field = Field::Complex;
    code.dimension = 3;
    const double s2 = std::sqrt(2.0);
    ComplexVector fiducial = {cx(0.0, 0.0), cx(1.0 / s2, 0.0), cx(-1.0 / s2, 0.0)};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ComplexVector v(3);
            for (int k = 0; k < 3; ++k) {
                // (X^a Z^b psi)_k = w^{b (k - a)} psi_{k - a}
                int src = ((k - a) % 3 + 3) % 3;
                cx phase = std::polar(1.0, 2.0 * kPi * b * src / 3.0);
                v[k] = phase * fiducial[src];
            }
            code.vectors.push_back(std::move(v));
        }
    return code;
}

SphericalCode make_simplex_plus(int n, double alpha) {
    if (n < 2) throw std::invalid_argument("simplex_plus: n must be at least 2");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("simplex_plus: alpha must lie in (0,1)");
    GramMatrix m;
    m.field = Field::Real;
    m.entries = ComplexMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.entries(i, j) = (i == j) ? 1.0 : alpha;
    return factor_gram(m);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be positive");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("complete_multipartite: needs at least two parts");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("complete_multipartite: empty part");
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

Graph make_hypercube(int d) {
    if (d < 1 || d > 20) throw std::invalid_argument("hypercube: d must lie in [1,20]");
    int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            int u = v ^ (1 << b);
            if (u > v) g.add_edge(v, u);
        }
    return g;
}

Graph make_paley(int q) {
    if (q < 5 || q % 4 != 1) throw std::invalid_argument("paley: q must satisfy q = 1 mod 4");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("paley: q must be prime");
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<int>((1LL * x * x) % q)] = 1;
    Graph g(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (residue[(j - i) % q]) g.add_edge(i, j);
    return g;
}

Graph make_random_regular(int n, int k, uint64_t seed) {
    if (n < 2 || k < 1 || k >= n)
        throw std::invalid_argument("random_regular: need 2 <= k+1 <= n");
    if ((1LL * n * k) % 2 != 0)
        throw std::invalid_argument("random_regular: n*k must be even");
    Rng rng(seed);
    // Stub pairing with per-pair rejection of loops and multi-edges;
    // a full restart only when the leftover stubs dead-end.
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * k);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c) stubs.push_back(v);
        Graph g(n);
        bool dead_end = false;
        while (!stubs.empty() && !dead_end) {
            bool paired = false;
            for (int tries = 0; tries < 200; ++tries) {
                size_t i = static_cast<size_t>(rng.next_below(stubs.size()));
                size_t j = static_cast<size_t>(rng.next_below(stubs.size() - 1));
                if (j >= i) ++j;
                int u = stubs[i], v = stubs[j];
                if (u == v || g.adjacent(u, v)) continue;
                g.add_edge(u, v);
                if (i < j) std::swap(i, j);
                stubs[i] = stubs.back();
                stubs.pop_back();
                stubs[j] = stubs.back();
                stubs.pop_back();
                paired = true;
                break;
            }
            if (!paired) dead_end = true;
        }
        if (!dead_end) return g;
    }
    throw std::runtime_error("random_regular: rejection limit (10^4 restarts) exceeded");
}

Graph make_schlafli_complement() {
    // Restricted 28-line code minus its isolated pivot.
    SphericalCode johnson = make_johnson28();
    SphericalCode restricted = restrict_switch(johnson, 0);
    auto [g, alpha] = code_to_graph(restricted);
    (void)alpha;
    std::vector<int> rest;
    for (int v = 1; v < g.size(); ++v) rest.push_back(v);
    return g.induced(rest);
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return parts;
}

} // namespace

Configuration generate(const ConfigSpec& spec) {
    const std::string& name = spec.name;
    if (name == "icosahedron6") return make_icosahedron6();
    if (name == "johnson28") return make_johnson28();
    if (name == "sic_c2") return make_sic_c2();
    if (name == "sic_c3") return make_sic_c3();
    if (name == "simplex_plus")
        return make_simplex_plus(param_int(spec, "n", 0, true),
                                 param_double(spec, "alpha", 0.0, true));
    if (name == "cycle") return make_cycle(param_int(spec, "n", 0, true));
    if (name == "petersen") return make_petersen();
    if (name == "complete") return make_complete(param_int(spec, "n", 0, true));
    if (name == "complete_multipartite") {
        auto it = spec.params.find("parts");
        if (it == spec.params.end())
            throw std::invalid_argument("generate(complete_multipartite): missing 'parts'");
        return make_complete_multipartite(parse_parts(it->second));
    }
    if (name == "hypercube") return make_hypercube(param_int(spec, "d", 0, true));
    if (name == "schlafli_complement") return make_schlafli_complement();
    if (name == "paley") return make_paley(param_int(spec, "q", 0, true));
    if (name == "random_regular")
        return make_random_regular(param_int(spec, "n", 0, true), param_int(spec, "k", 0, true),
                                   spec.seed);
    throw std::invalid_argument("generate: unknown configuration '" + name + "'");
}

SphericalCode generate_code(const ConfigSpec& spec) {
    Configuration c = generate(spec);
    if (auto* code = std::get_if<SphericalCode>(&c)) {
        validate(*code);
        return std::move(*code);
    }
    throw std::invalid_argument("generate(" + spec.name + "): produces a graph, not a code");
}

Graph generate_graph(const ConfigSpec& spec) {
    Configuration c = generate(spec);
    if (auto* g = std::get_if<Graph>(&c)) return std::move(*g);
    throw std::invalid_argument("generate(" + spec.name + "): produces a code, not a graph");
}

std::vector<ConfigSpec> catalog() {
    std::vector<ConfigSpec> out;
    auto add = [&out](std::string name, std::map<std::string, std::string> params,
                      std::string description) {
        ConfigSpec s;
        s.name = std::move(name);
        s.params = std::move(params);
        s.description = std::move(description);
        out.push_back(std::move(s));
    };
    add("icosahedron6", {}, "6 equiangular lines in R^3, alpha = 1/sqrt(5)");
    add("johnson28", {}, "28 equiangular lines in R^7, alpha = 1/3; meets r(r+1)/2");
    add("sic_c2", {}, "4 equiangular lines in C^2, alpha = 1/sqrt(3); meets r^2");
    add("sic_c3", {}, "9 equiangular lines in C^3 (Hesse), alpha = 1/2; meets r^2");
    add("simplex_plus", {{"n", "8"}, {"alpha", "0.25"}},
        "n unit vectors with all pairwise inner products +alpha");
    add("cycle", {{"n", "5"}}, "cycle graph C_n");
    add("petersen", {}, "Petersen graph, spectrum {3, 1^5, -2^4}");
    add("complete", {{"n", "4"}}, "complete graph K_n");
    add("complete_multipartite", {{"parts", "2,2,2"}}, "complete multipartite graph");
    add("hypercube", {{"d", "4"}}, "d-dimensional hypercube graph");
    add("schlafli_complement", {},
        "27-vertex 10-regular graph of the restricted 28-line code, spectrum {10, 1^20, -5^6}");
    add("paley", {{"q", "13"}}, "Paley graph on a prime q = 1 mod 4");
    add("random_regular", {{"n", "24"}, {"k", "3"}},
        "random k-regular graph (configuration model, seed-reproducible)");
    return out;
}

SphericalCode random_code(Field field, int r, int n, uint64_t seed) {
    if (r < 1 || n < 1) throw std::invalid_argument("random_code: need r >= 1, n >= 1");
    Rng rng(seed);
    SphericalCode code;
    code.field = field;
    code.dimension = r;
    for (int i = 0; i < n; ++i) {
        ComplexVector v(r);
        for (int k = 0; k < r; ++k) {
            double re = rng.next_gaussian();
            double im = field == Field::Complex ? rng.next_gaussian() : 0.0;
            v[k] = cx(re, im);
        }
        double len = norm(v);
        for (auto& z : v) z /= len;
        code.vectors.push_back(std::move(v));
    }
    return code;
}

SphericalCode random_subcode(const SphericalCode& code, int k, uint64_t seed) {
    if (k < 1 || k > code.size())
        throw std::invalid_argument("random_subcode: size out of range");
    std::vector<int> order(code.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    order.resize(k);
    std::sort(order.begin(), order.end());
    SphericalCode out;
    out.field = code.field;
    out.dimension = code.dimension;
    for (int idx : order) out.vectors.push_back(code.vectors[idx]);
    return out;
}

} // namespace eqlines
