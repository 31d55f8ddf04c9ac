#include "eqlines/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eqlines {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_domain(int r, double alpha, const char* who) {
    if (r < 1) throw std::invalid_argument(std::string(who) + ": r must be a positive integer");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument(std::string(who) + ": alpha must lie in (0,1)");
}

long long parse_ll(const std::string& s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("alpha: trailing characters in '" + s + "'");
    return v;
}
} // namespace

Alpha Alpha::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("alpha: empty");

    Alpha a;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (den.rfind("sqrt(", 0) == 0 && den.back() == ')') {
            a.kind = Kind::InverseSqrt;
            long long p = parse_ll(num);
            if (p != 1) throw std::invalid_argument("alpha: only 1/sqrt(k) surds are supported");
            a.radicand = parse_ll(den.substr(5, den.size() - 6));
            if (a.radicand < 1) throw std::invalid_argument("alpha: sqrt of a non-positive integer");
            a.value = 1.0 / std::sqrt(static_cast<double>(a.radicand));
            return a;
        }
        a.kind = Kind::Rational;
        a.num = parse_ll(num);
        a.den = parse_ll(den);
        if (a.den == 0) throw std::invalid_argument("alpha: zero denominator");
        a.value = static_cast<double>(a.num) / static_cast<double>(a.den);
        return a;
    }
    a.kind = Kind::Decimal;
    size_t pos = 0;
    a.value = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("alpha: cannot parse '" + text + "'");
    return a;
}

Alpha Alpha::from_value(double value) {
    Alpha a;
    a.kind = Kind::Decimal;
    a.value = value;
    return a;
}

std::string Alpha::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Rational: os << num << "/" << den; break;
    case Kind::InverseSqrt: os << "1/sqrt(" << radicand << ")"; break;
    case Kind::Decimal: os << value; break;
    }
    return os.str();
}

std::optional<std::pair<long long, long long>> Alpha::squared_rational() const {
    switch (kind) {
    case Kind::Rational:
        if (num <= 0 || den <= 0) return std::nullopt;
        return std::make_pair(num * num, den * den);
    case Kind::InverseSqrt: return std::make_pair(1LL, radicand);
    case Kind::Decimal: return std::nullopt;
    }
    return std::nullopt;
}

Alpha::OddIntegerTest Alpha::inverse_odd_integer() const {
    OddIntegerTest t;
    switch (kind) {
    case Kind::Rational:
        // 1/alpha = den/num is an odd integer iff num divides den with an
        // odd quotient.
        if (num != 0 && den % num == 0) {
            long long q = den / num;
            t.inverse_is_odd_integer = q > 0 && q % 2 == 1;
        }
        return t;
    case Kind::InverseSqrt: {
        // 1/alpha = sqrt(radicand): integer iff radicand is a perfect square.
        long long root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(radicand))));
        if (root * root == radicand) t.inverse_is_odd_integer = root % 2 == 1;
        return t;
    }
    case Kind::Decimal: {
        t.numeric_guess = true;
        double inv = 1.0 / value;
        double nearest = std::round(inv);
        long long k = static_cast<long long>(nearest);
        t.inverse_is_odd_integer = std::abs(inv - nearest) <= 1e-9 && k > 0 && k % 2 == 1;
        return t;
    }
    }
    return t;
}

double bound_real_spectral(int r, double alpha) {
    check_domain(r, alpha, "bound_real_spectral");
    return std::sqrt(static_cast<double>(r)) / (2.0 * alpha * alpha * alpha) +
           (1.0 + alpha) * r / (2.0 * alpha);
}

double bound_real_degree(int r, double alpha) {
    check_domain(r, alpha, "bound_real_degree");
    double a3 = alpha * alpha * alpha;
    double a5 = a3 * alpha * alpha;
    double first = 2.0 / a5 + 2.0 / (a3 * (1.0 - alpha));
    double second = (2.0 + 8.0 * alpha * alpha / ((1.0 - alpha) * (1.0 - alpha))) * (r + 1.0);
    return std::max(first, second);
}

double asymptotic_factor(int q) {
    if (q < 2) throw std::invalid_argument("asymptotic_factor: q must be at least 2");
    double c = std::cos(kPi / (q + 2.0));
    return 1.0 + 1.0 / (4.0 * c * c);
}

double bound_real_asymptotic(int r, double alpha, int q) {
    check_domain(r, alpha, "bound_real_asymptotic");
    return asymptotic_factor(q) * r;
}

double asymptotic_threshold(int r, int q) {
    if (r < 1) throw std::invalid_argument("asymptotic_threshold: r must be positive");
    if (q < 2) throw std::invalid_argument("asymptotic_threshold: q must be at least 2");
    return std::pow(static_cast<double>(r), -1.0 / (2.0 * q + 1.0));
}

double bound_complex(int r, double alpha) {
    check_domain(r, alpha, "bound_complex");
    return std::sqrt(static_cast<double>(r)) / (alpha * alpha * alpha) + r / alpha;
}

std::optional<double> bound_relative(int r, double alpha) {
    check_domain(r, alpha, "bound_relative");
    double a2 = alpha * alpha;
    if (!(a2 * r < 1.0)) return std::nullopt; // needs alpha < 1/sqrt(r)
    return r * (1.0 - a2) / (1.0 - a2 * r);
}

std::optional<double> bound_relative(int r, const Alpha& alpha) {
    if (auto sq = alpha.squared_rational()) {
        auto [p2, q2] = *sq;
        check_domain(r, alpha.value, "bound_relative");
        if (!(p2 * r < q2)) return std::nullopt;
        // r (q^2 - p^2) / (q^2 - p^2 r), both integers
        return static_cast<double>(r) * static_cast<double>(q2 - p2) /
               static_cast<double>(q2 - p2 * r);
    }
    return bound_relative(r, alpha.value);
}

long long bound_absolute(int r, Field field) {
    if (r < 1) throw std::invalid_argument("bound_absolute: r must be positive");
    long long rr = r;
    return field == Field::Real ? rr * (rr + 1) / 2 : rr * rr;
}

std::optional<double> bound_yu(int r, double alpha) {
    check_domain(r, alpha, "bound_yu");
    double lo = 1.0 / std::sqrt(r + 2.0);
    double hi = std::sqrt(3.0 / (r + 16.0));
    if (!(alpha >= lo && alpha <= hi && alpha <= 1.0 / 3.0 + 1e-15)) return std::nullopt;
    double inv2 = 1.0 / (alpha * alpha);
    return 0.5 * (inv2 - 1.0) * (inv2 - 2.0);
}

std::optional<double> bound_glazyrin_yu(int r, double alpha) {
    check_domain(r, alpha, "bound_glazyrin_yu");
    if (alpha > 1.0 / 3.0 + 1e-15) return std::nullopt;
    return (2.0 / (3.0 * alpha * alpha) + 4.0 / 7.0) * r + 2.0;
}

std::optional<double> bound_yu(int r, const Alpha& alpha) {
    if (auto sq = alpha.squared_rational()) {
        auto [p2, q2] = *sq;
        check_domain(r, alpha.value, "bound_yu");
        // window: 1/(r+2) <= a^2 <= 3/(r+16) and a^2 <= 1/9, all exact
        bool in_window = p2 * (r + 2) >= q2 && p2 * (r + 16) <= 3 * q2 && 9 * p2 <= q2;
        if (!in_window) return std::nullopt;
        double inv2 = static_cast<double>(q2) / static_cast<double>(p2);
        return 0.5 * (inv2 - 1.0) * (inv2 - 2.0);
    }
    return bound_yu(r, alpha.value);
}

std::optional<double> bound_glazyrin_yu(int r, const Alpha& alpha) {
    if (auto sq = alpha.squared_rational()) {
        auto [p2, q2] = *sq;
        check_domain(r, alpha.value, "bound_glazyrin_yu");
        if (9 * p2 > q2) return std::nullopt; // alpha <= 1/3, exact
        double inv2 = static_cast<double>(q2) / static_cast<double>(p2);
        return (2.0 * inv2 / 3.0 + 4.0 / 7.0) * r + 2.0;
    }
    return bound_glazyrin_yu(r, alpha.value);
}

BoundTable comparison_table(const std::vector<int>& r_values, const Alpha& alpha, int q,
                            bool floor_values) {
    if (r_values.empty()) throw std::invalid_argument("comparison_table: empty r list");
    if (q < 2) throw std::invalid_argument("comparison_table: q must be at least 2");
    BoundTable table;
    table.q = q;
    table.floored = floor_values;
    double a = alpha.value;

    for (int r : r_values) {
        BoundRow row;
        row.r = r;
        row.alpha = alpha;

        auto add = [&](std::string name, std::optional<double> value, bool certified,
                       std::string note = {}) {
            BoundEntry e;
            e.name = std::move(name);
            e.applicable = value.has_value();
            e.certified = certified;
            e.note = std::move(note);
            if (value && floor_values) value = std::floor(*value);
            e.value = value;
            if (e.value && *e.value < static_cast<double>(r)) {
                e.note = e.note.empty()
                             ? "below the trivial lower bound r; inapplicable regime"
                             : e.note + "; below the trivial lower bound r";
            }
            row.entries.push_back(std::move(e));
        };

        // Column order fixes the deterministic tie-break for "best".
        add("relative", bound_relative(r, alpha), true,
            bound_relative(r, alpha) ? "" : "needs alpha < 1/sqrt(r)");
        add("absolute", static_cast<double>(bound_absolute(r, Field::Real)), true);
        add("yu", bound_yu(r, alpha), true,
            bound_yu(r, alpha) ? "" : "window 1/sqrt(r+2) <= alpha <= sqrt(3/(r+16)), alpha <= 1/3");
        {
            auto odd = alpha.inverse_odd_integer();
            std::string note;
            std::optional<double> value;
            if (!odd.inverse_is_odd_integer) {
                value = 2.0 * r;
                note = "applies because 1/alpha is not an odd integer";
            } else {
                note = "1/alpha is an odd integer; bound does not apply";
            }
            if (odd.numeric_guess) note += " (numeric guess from decimal alpha)";
            add("neumann", value, true, note);
        }
        add("glazyrin_yu", bound_glazyrin_yu(r, alpha), true,
            bound_glazyrin_yu(r, alpha) ? "" : "needs alpha <= 1/3");
        add("thm_spectral_real", bound_real_spectral(r, a), true);
        add("thm_degree_real", bound_real_degree(r, a), true);
        add("thm_complex", bound_complex(r, a), true);
        {
            std::ostringstream note;
            note << "asymptotic - not a certified finite-r bound; needs alpha >> r^(-1/(2q+1)) = "
                 << asymptotic_threshold(r, q) << " at q = " << q;
            add("thm_asymptotic_real", bound_real_asymptotic(r, a, q), false, note.str());
        }

        for (const auto& e : row.entries) {
            if (!e.applicable || !e.certified || !e.value) continue;
            if (*e.value < static_cast<double>(r)) continue; // flagged, not selectable
            if (!row.best_value || *e.value < *row.best_value) {
                row.best_value = *e.value;
                row.best_name = e.name;
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace eqlines
