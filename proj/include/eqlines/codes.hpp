#pragma once

#include "eqlines/graph.hpp"
#include "eqlines/linalg.hpp"
#include "eqlines/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eqlines {

enum class Field { Real, Complex };

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

/// A finite set of unit vectors in R^r or C^r.
struct SphericalCode {
    Field field = Field::Real;
    int dimension = 0; // ambient dimension r
    std::vector<ComplexVector> vectors; // imaginary parts all zero for real codes

    int size() const { return static_cast<int>(vectors.size()); }
};

/// Throws std::invalid_argument (naming the offending vector) unless every
/// vector has length r and unit norm within 1e-9, n >= 1, r >= 1, and real
/// codes carry no imaginary parts.
void validate(const SphericalCode& code);

/// Hermitian positive semidefinite matrix of pairwise inner products,
/// unit diagonal. Entries are exactly real for real codes.
struct GramMatrix {
    Field field = Field::Real;
    ComplexMatrix entries;

    int size() const { return entries.rows(); }
    RealMatrix real_entries() const { return real_part(entries); }
};

GramMatrix gram(const SphericalCode& code);

struct EquiangularCheck {
    double alpha = 0.0;         // mean off-diagonal |<v_i, v_j>|
    double max_deviation = 0.0; // max | |M_ij| - alpha | over i != j
    bool is_equiangular = false;
    double tolerance = 0.0;
};

/// Default absolute tolerance on | |M_ij| - alpha |.
inline constexpr double kEquiangularTol = 1e-8;

EquiangularCheck verify_equiangular(const SphericalCode& code, double tol = kEquiangularTol);

/// Graph of a real equiangular code: edge ij iff <v_i, v_j> < 0, so that
/// M = alpha J - 2 alpha A + (1 - alpha) I. Requires a real equiangular
/// code with alpha > 0 (otherwise the sign of an entry is undecidable).
std::pair<Graph, double> code_to_graph(const SphericalCode& code, double tol = kEquiangularTol);

/// Inverse direction of code_to_graph: M = alpha J - 2 alpha A + (1-alpha) I.
/// The result has unit diagonal but may be indefinite; callers check PSD
/// where they need it.
GramMatrix gram_from_graph(const Graph& g, double alpha);

/// Negate the vectors at `subset`. Lines, equiangularity and alpha are all
/// preserved; applying the same subset twice is the identity.
SphericalCode switch_subset(SphericalCode code, const std::vector<int>& subset);

/// Switch so that <v_i, v_pivot> = +alpha for every i != pivot; pivot then
/// is an isolated vertex of the corresponding graph.
SphericalCode restrict_switch(const SphericalCode& code, int pivot, double tol = kEquiangularTol);

/// Index of the lowest isolated vertex of the code's graph, or -1.
int find_isolated_pivot(const Graph& g);

struct DegreeSwitchReport {
    std::vector<int> negated;     // the high-degree set H
    int max_degree_before = 0;
    int max_degree_after = 0;
    double degree_threshold = 0;  // n/2 + 1/alpha - 1
    bool lemma_hypothesis = false; // n >= 1/alpha^4
    double lemma_bound = 0;       // 1/(4a^4) + 1/(4a^4 - 3/n), when defined
    bool bound_defined = false;
    bool bound_ok = true;         // checked only under the hypothesis
    std::string notes;
};

/// Negates the high-degree set H = {v : d(v) > n/2 + 1/alpha - 1} of a
/// restricted code. When n >= 1/alpha^4 the resulting maximum degree is
/// checked against 1/(4 alpha^4) + 1/(4 alpha^4 - 3/n); a violation throws
/// (internal-consistency failure). Outside the hypothesis the report only
/// records what happened.
std::pair<SphericalCode, DegreeSwitchReport> degree_bounded_switch(const SphericalCode& code,
                                                                   double tol = kEquiangularTol);

/// Factor a PSD Gram matrix into a code of dimension rank(M): rows of
/// Lambda^{1/2} U* on the positive-eigenvalue coordinates, ordered by
/// descending eigenvalue.
SphericalCode factor_gram(const GramMatrix& m, double rank_cutoff = kDefaultRankCutoff);

} // namespace eqlines
