#pragma once

#include "eqlines/codes.hpp"
#include "eqlines/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace eqlines {

/// Identifies one generator invocation. Identical (name, params, seed)
/// yields bit-identical output.
struct ConfigSpec {
    std::string name;
    std::map<std::string, std::string> params;
    uint64_t seed = 0;
    std::string description;
};

using Configuration = std::variant<SphericalCode, Graph>;

/// Deterministic generators for the canonical codes and graphs:
///   icosahedron6          6 lines in R^3, alpha = 1/sqrt(5)
///   johnson28             28 lines in R^7, alpha = 1/3
///   sic_c2                4 lines in C^2, alpha = 1/sqrt(3)
///   sic_c3                9 lines in C^3 (Hesse configuration), alpha = 1/2
///   simplex_plus          n unit vectors with all pairwise inner products +alpha
///   cycle(n), petersen, complete(n), complete_multipartite(parts), hypercube(d)
///   schlafli_complement   27-vertex 10-regular graph, spectrum {10, 1^20, -5^6}
///   paley(q)              quadratic-residue graph, prime q = 1 mod 4
///   random_regular(n,k)   configuration model, loops/multi-edges rejected
Configuration generate(const ConfigSpec& spec);

SphericalCode generate_code(const ConfigSpec& spec);
Graph generate_graph(const ConfigSpec& spec);

/// Stable-ordered list of available generator templates.
std::vector<ConfigSpec> catalog();

/// Random unit vectors (Gaussian components normalized); used by the
/// sampling-based test corpus.
SphericalCode random_code(Field field, int r, int n, uint64_t seed);

/// Random subset of size k of the code's vectors (any subset of an
/// equiangular code is equiangular with the same alpha).
SphericalCode random_subcode(const SphericalCode& code, int k, uint64_t seed);

} // namespace eqlines
