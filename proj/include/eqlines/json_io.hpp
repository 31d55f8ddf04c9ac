#pragma once

#include "eqlines/bounds.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/configurations.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/graphs.hpp"
#include "eqlines/inequalities.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eqlines {

/// Insertion-ordered JSON value with doubles printed at 17 significant
/// digits, so identical runs emit byte-identical, round-trippable output.
/// Non-finite doubles serialize as null.
class JsonValue {
public:
    JsonValue() : data_(nullptr) {}
    JsonValue(std::nullptr_t) : data_(nullptr) {}
    JsonValue(bool b) : data_(b) {}
    JsonValue(int v) : data_(static_cast<int64_t>(v)) {}
    JsonValue(long long v) : data_(static_cast<int64_t>(v)) {}
    JsonValue(uint64_t v) : data_(static_cast<int64_t>(v)) {}
    JsonValue(double v) : data_(v) {}
    JsonValue(const char* s) : data_(std::string(s)) {}
    JsonValue(std::string s) : data_(std::move(s)) {}

    static JsonValue array() {
        JsonValue v;
        v.data_ = std::make_shared<Array>();
        return v;
    }
    static JsonValue object() {
        JsonValue v;
        v.data_ = std::make_shared<Object>();
        return v;
    }

    JsonValue& push(JsonValue v);
    JsonValue& set(std::string key, JsonValue v);

    std::string dump(int indent = 2) const;

private:
    struct Array;
    struct Object;
    using Data = std::variant<std::nullptr_t, bool, int64_t, double, std::string,
                              std::shared_ptr<Array>, std::shared_ptr<Object>>;

    struct Array {
        std::vector<JsonValue> items;
    };
    struct Object {
        std::vector<std::pair<std::string, JsonValue>> items;
    };

    void write(std::string& out, int indent, int depth) const;

    Data data_;
};

/// One double at 17 significant digits (%.17g); used by both JSON and CSV.
std::string format_double(double v);

// --- input parsing (JSON via nlohmann; graphs also accept "u v" lines) ---

SphericalCode parse_code_json(const std::string& text);
Graph parse_graph_json(const std::string& text);
/// Accepts the JSON graph format or an adjacency-list text with one
/// "u v" pair per line.
Graph parse_graph_any(const std::string& text);

// --- serialization ---

JsonValue code_to_json(const SphericalCode& code);
JsonValue graph_to_json(const Graph& g);
JsonValue configuration_to_json(const Configuration& c, const ConfigSpec& provenance);
JsonValue equiangular_check_to_json(const EquiangularCheck& check);
JsonValue welch_to_json(const WelchReport& rep);
JsonValue inequality_report_to_json(const InequalityReport& rep);
JsonValue inequality_reports_to_json(const std::vector<InequalityReport>& reps);
JsonValue regular_bound_report_to_json(const RegularBoundReport& rep);
JsonValue degree_switch_report_to_json(const DegreeSwitchReport& rep);
JsonValue bound_table_to_json(const BoundTable& table);
std::string bound_table_to_csv(const BoundTable& table);

} // namespace eqlines
