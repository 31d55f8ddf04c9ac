#pragma once

#include "eqlines/codes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqlines {

/// Angle parameter accepted as a decimal ("0.25"), a rational ("1/3"), or
/// an inverse square root ("1/sqrt(5)"). The exact forms matter because the
/// Neumann applicability test (is 1/alpha an odd integer?) is arithmetic,
/// not numeric; decimals fall back to a 1e-9 nearness test flagged as a
/// numeric guess.
struct Alpha {
    enum class Kind { Decimal, Rational, InverseSqrt };

    Kind kind = Kind::Decimal;
    double value = 0.0;
    long long num = 0, den = 0; // Rational: value = num/den
    long long radicand = 0;     // InverseSqrt: value = 1/sqrt(radicand)

    static Alpha parse(const std::string& text);
    static Alpha from_value(double value);
    std::string describe() const;

    struct OddIntegerTest {
        bool inverse_is_odd_integer = false;
        bool numeric_guess = false;
    };
    /// Whether 1/alpha is an odd integer, exactly where the form allows.
    OddIntegerTest inverse_odd_integer() const;

    /// alpha^2 as an exact fraction (num, den) when the form permits:
    /// (p^2, q^2) for p/q, (1, k) for 1/sqrt(k). Empty for decimals.
    std::optional<std::pair<long long, long long>> squared_rational() const;
};

/// sqrt(r) / (2 a^3) + (1 + a) r / (2 a)
double bound_real_spectral(int r, double alpha);

/// max(2/a^5 + 2/(a^3 (1-a)), (2 + 8 a^2/(1-a)^2) (r+1))
double bound_real_degree(int r, double alpha);

/// (1 + 1/(4 cos^2(pi/(q+2)))), the asymptotic linear-coefficient for a
/// given ball radius q >= 2; tends to 5/4 as q grows.
double asymptotic_factor(int q);

/// asymptotic_factor(q) * r. Asymptotic only: valid in the regime
/// alpha >> r^{-1/(2q+1)}; use asymptotic_threshold to report the raw
/// threshold alongside.
double bound_real_asymptotic(int r, double alpha, int q);
double asymptotic_threshold(int r, int q); // r^{-1/(2q+1)}

/// sqrt(r) / a^3 + r / a
double bound_complex(int r, double alpha);

/// r (1 - a^2) / (1 - a^2 r), applicable iff alpha < 1/sqrt(r).
std::optional<double> bound_relative(int r, double alpha);
/// Same bound through exact rational arithmetic when alpha's form allows
/// (e.g. r = 7, alpha = 1/3 gives exactly 28); falls back to the double
/// path for decimals.
std::optional<double> bound_relative(int r, const Alpha& alpha);

/// r(r+1)/2 real, r^2 complex.
long long bound_absolute(int r, Field field);

/// (1/2)(1/a^2 - 1)(1/a^2 - 2) inside the window
/// 1/sqrt(r+2) <= a <= sqrt(3/(r+16)), a <= 1/3 (real lines only).
std::optional<double> bound_yu(int r, double alpha);
std::optional<double> bound_yu(int r, const Alpha& alpha);

/// (2/(3 a^2) + 4/7) r + 2 for a <= 1/3 (real lines only).
std::optional<double> bound_glazyrin_yu(int r, double alpha);
std::optional<double> bound_glazyrin_yu(int r, const Alpha& alpha);

struct BoundEntry {
    std::string name;
    std::optional<double> value; // empty when not applicable
    bool applicable = false;
    bool certified = true; // asymptotic entries are labeled, never "best"
    std::string note;
};

struct BoundRow {
    int r = 0;
    Alpha alpha;
    std::vector<BoundEntry> entries;
    std::string best_name;
    std::optional<double> best_value;
};

struct BoundTable {
    std::vector<BoundRow> rows;
    int q = 2;
    bool floored = false;
};

/// One row per r: all named bounds at (r, alpha), each marked applicable /
/// certified, plus the best (minimum) certified applicable value. Bound
/// values below the trivial lower bound r are flagged and excluded from
/// "best" but never clamped. With `floor_values` the entries are floored to
/// integers (line counts are integral).
BoundTable comparison_table(const std::vector<int>& r_values, const Alpha& alpha, int q = 2,
                            bool floor_values = false);

} // namespace eqlines
