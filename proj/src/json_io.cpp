#include "eqlines/json_io.hpp"
#include "eqlines/version.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace eqlines {

JsonValue& JsonValue::push(JsonValue v) {
    if (!std::holds_alternative<std::shared_ptr<Array>>(data_)) data_ = std::make_shared<Array>();
    auto& arr = std::get<std::shared_ptr<Array>>(data_);
    if (!arr) arr = std::make_shared<Array>();
    arr->items.push_back(std::move(v));
    return *this;
}

JsonValue& JsonValue::set(std::string key, JsonValue v) {
    if (!std::holds_alternative<std::shared_ptr<Object>>(data_)) data_ = std::make_shared<Object>();
    auto& obj = std::get<std::shared_ptr<Object>>(data_);
    if (!obj) obj = std::make_shared<Object>();
    obj->items.emplace_back(std::move(key), std::move(v));
    return *this;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

void write_newline_indent(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<size_t>(indent) * depth, ' ');
}

} // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(data_)) {
        out += "null";
    } else if (auto* b = std::get_if<bool>(&data_)) {
        out += *b ? "true" : "false";
    } else if (auto* i = std::get_if<int64_t>(&data_)) {
        out += std::to_string(*i);
    } else if (auto* d = std::get_if<double>(&data_)) {
        out += format_double(*d);
    } else if (auto* s = std::get_if<std::string>(&data_)) {
        write_escaped(out, *s);
    } else if (auto* arr = std::get_if<std::shared_ptr<Array>>(&data_)) {
        const auto& items = (*arr)->items;
        if (items.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (size_t k = 0; k < items.size(); ++k) {
            if (k) out += ',';
            write_newline_indent(out, indent, depth + 1);
            items[k].write(out, indent, depth + 1);
        }
        write_newline_indent(out, indent, depth);
        out += ']';
    } else if (auto* obj = std::get_if<std::shared_ptr<Object>>(&data_)) {
        const auto& items = (*obj)->items;
        if (items.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        for (size_t k = 0; k < items.size(); ++k) {
            if (k) out += ',';
            write_newline_indent(out, indent, depth + 1);
            write_escaped(out, items[k].first);
            out += indent > 0 ? ": " : ":";
            items[k].second.write(out, indent, depth + 1);
        }
        write_newline_indent(out, indent, depth);
        out += '}';
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

// --- parsing ---

SphericalCode parse_code_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("code file: invalid JSON: ") + e.what());
    }
    SphericalCode code;
    std::string field = j.at("field").get<std::string>();
    if (field == "real")
        code.field = Field::Real;
    else if (field == "complex")
        code.field = Field::Complex;
    else
        throw std::invalid_argument("code file: field must be \"real\" or \"complex\"");
    code.dimension = j.at("r").get<int>();
    for (const auto& vec : j.at("vectors")) {
        ComplexVector v;
        for (const auto& entry : vec) {
            if (code.field == Field::Real) {
                if (!entry.is_number())
                    throw std::invalid_argument("code file: real vectors hold plain numbers");
                v.emplace_back(entry.get<double>(), 0.0);
            } else {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::invalid_argument("code file: complex entries are [re, im] pairs");
                v.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            }
        }
        code.vectors.push_back(std::move(v));
    }
    validate(code);
    return code;
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph file: invalid JSON: ") + e.what());
    }
    int n = j.at("n").get<int>();
    Graph g(n);
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2)
            throw std::invalid_argument("graph file: edges are [i, j] pairs");
        int u = edge[0].get<int>();
        int v = edge[1].get<int>();
        if (u >= v)
            throw std::invalid_argument("graph file: edges must satisfy i < j");
        if (g.adjacent(u, v)) throw std::invalid_argument("graph file: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_graph_any(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    // Adjacency-list text: one "u v" pair per line; n inferred.
    std::istringstream is(text);
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw std::invalid_argument("graph file: expected 'u v' per line");
        edges.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    return Graph::from_edges(n, edges);
}

// --- serialization ---

JsonValue code_to_json(const SphericalCode& code) {
    JsonValue j = JsonValue::object();
    j.set("field", field_name(code.field));
    j.set("r", code.dimension);
    JsonValue vectors = JsonValue::array();
    for (const auto& v : code.vectors) {
        JsonValue row = JsonValue::array();
        for (const auto& z : v) {
            if (code.field == Field::Real) {
                row.push(z.real());
            } else {
                JsonValue pair = JsonValue::array();
                pair.push(z.real());
                pair.push(z.imag());
                row.push(std::move(pair));
            }
        }
        vectors.push(std::move(row));
    }
    j.set("vectors", std::move(vectors));
    return j;
}

JsonValue graph_to_json(const Graph& g) {
    JsonValue j = JsonValue::object();
    j.set("n", g.size());
    JsonValue edges = JsonValue::array();
    for (auto [u, v] : g.edges()) {
        JsonValue e = JsonValue::array();
        e.push(u);
        e.push(v);
        edges.push(std::move(e));
    }
    j.set("edges", std::move(edges));
    return j;
}

JsonValue configuration_to_json(const Configuration& c, const ConfigSpec& provenance) {
    JsonValue j = std::holds_alternative<SphericalCode>(c)
                      ? code_to_json(std::get<SphericalCode>(c))
                      : graph_to_json(std::get<Graph>(c));
    JsonValue prov = JsonValue::object();
    prov.set("name", provenance.name);
    JsonValue params = JsonValue::object();
    for (const auto& [k, v] : provenance.params) params.set(k, v);
    prov.set("params", std::move(params));
    prov.set("seed", provenance.seed);
    prov.set("library_version", EQLINES_VERSION);
    j.set("provenance", std::move(prov));
    return j;
}

JsonValue equiangular_check_to_json(const EquiangularCheck& check) {
    JsonValue j = JsonValue::object();
    j.set("alpha", check.alpha);
    j.set("max_deviation", check.max_deviation);
    j.set("is_equiangular", check.is_equiangular);
    j.set("tolerance", check.tolerance);
    return j;
}

JsonValue welch_to_json(const WelchReport& rep) {
    JsonValue j = JsonValue::object();
    j.set("pinv_quadform", rep.pinv_quadform);
    j.set("classic_sum", rep.classic_sum);
    j.set("r", rep.r);
    j.set("n", rep.n);
    j.set("improved_lower", rep.improved_lower);
    j.set("classic_lower", static_cast<double>(rep.n) * rep.n / rep.r);
    j.set("identity_in_span", rep.identity_in_span);
    if (rep.frame_vector_tight)
        j.set("frame_vector_tight", *rep.frame_vector_tight);
    else
        j.set("frame_vector_tight", nullptr); // f(M) singular: not applicable
    j.set("holds_first", rep.holds_first);
    j.set("holds_second", rep.holds_second);
    return j;
}

JsonValue inequality_report_to_json(const InequalityReport& rep) {
    JsonValue j = JsonValue::object();
    j.set("lemma_id", rep.lemma_id);
    j.set("lhs", rep.lhs);
    j.set("rhs", rep.rhs);
    j.set("slack", rep.slack);
    j.set("relative_slack", rep.relative_slack);
    j.set("holds", rep.holds);
    j.set("tight", rep.tight);
    j.set("hypothesis_ok", rep.hypothesis_ok);
    j.set("notes", rep.notes);
    return j;
}

JsonValue inequality_reports_to_json(const std::vector<InequalityReport>& reps) {
    JsonValue arr = JsonValue::array();
    for (const auto& rep : reps) arr.push(inequality_report_to_json(rep));
    return arr;
}

JsonValue regular_bound_report_to_json(const RegularBoundReport& rep) {
    JsonValue j = JsonValue::object();
    j.set("k", rep.k);
    j.set("n", rep.n);
    j.set("lambda2", rep.lambda2);
    j.set("lambda_n", rep.lambda_n);
    j.set("lambda2_multiplicity", rep.lambda2_multiplicity);
    j.set("gap_ok", rep.gap_ok);
    j.set("bound1_lhs", rep.bound1_lhs);
    j.set("bound1_rhs", rep.bound1_rhs);
    j.set("bound2_lhs", rep.bound2_lhs);
    j.set("bound2_rhs", rep.bound2_rhs);
    j.set("holds1", rep.holds1);
    j.set("holds2", rep.holds2);
    j.set("tight1", rep.tight1);
    j.set("tight2", rep.tight2);
    j.set("srg_equality_predicate", rep.srg_equality_predicate);
    j.set("degenerate", rep.degenerate);
    j.set("notes", rep.notes);
    return j;
}

JsonValue degree_switch_report_to_json(const DegreeSwitchReport& rep) {
    JsonValue j = JsonValue::object();
    JsonValue negated = JsonValue::array();
    for (int v : rep.negated) negated.push(v);
    j.set("negated", std::move(negated));
    j.set("negated_count", static_cast<long long>(rep.negated.size()));
    j.set("max_degree_before", rep.max_degree_before);
    j.set("max_degree_after", rep.max_degree_after);
    j.set("degree_threshold", rep.degree_threshold);
    j.set("lemma_hypothesis", rep.lemma_hypothesis);
    if (rep.bound_defined)
        j.set("lemma_bound", rep.lemma_bound);
    else
        j.set("lemma_bound", nullptr);
    j.set("bound_ok", rep.bound_ok);
    j.set("notes", rep.notes);
    return j;
}

JsonValue bound_table_to_json(const BoundTable& table) {
    JsonValue j = JsonValue::object();
    j.set("q", table.q);
    j.set("floored", table.floored);
    JsonValue rows = JsonValue::array();
    for (const auto& row : table.rows) {
        JsonValue r = JsonValue::object();
        r.set("r", row.r);
        r.set("alpha", row.alpha.value);
        r.set("alpha_form", row.alpha.describe());
        JsonValue entries = JsonValue::array();
        for (const auto& e : row.entries) {
            JsonValue entry = JsonValue::object();
            entry.set("bound_name", e.name);
            if (e.value)
                entry.set("value", *e.value);
            else
                entry.set("value", nullptr);
            entry.set("applicable", e.applicable);
            entry.set("certified", e.certified);
            entry.set("note", e.note);
            entries.push(std::move(entry));
        }
        r.set("bounds", std::move(entries));
        r.set("best_name", row.best_name);
        if (row.best_value)
            r.set("best_value", *row.best_value);
        else
            r.set("best_value", nullptr);
        rows.push(std::move(r));
    }
    j.set("rows", std::move(rows));
    return j;
}

std::string bound_table_to_csv(const BoundTable& table) {
    std::string out = "r,alpha,bound_name,value,applicable,certified\n";
    for (const auto& row : table.rows) {
        for (const auto& e : row.entries) {
            out += std::to_string(row.r);
            out += ',';
            out += format_double(row.alpha.value);
            out += ',';
            out += e.name;
            out += ',';
            out += e.value ? format_double(*e.value) : "";
            out += ',';
            out += e.applicable ? "true" : "false";
            out += ',';
            out += e.certified ? "true" : "false";
            out += '\n';
        }
        out += std::to_string(row.r);
        out += ',';
        out += format_double(row.alpha.value);
        out += ",best,";
        out += row.best_value ? format_double(*row.best_value) : "";
        out += ",true,true\n";
    }
    return out;
}

} // namespace eqlines
