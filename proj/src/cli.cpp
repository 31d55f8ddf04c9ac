#include "eqlines/cli.hpp"

#include "eqlines/bounds.hpp"
#include "eqlines/codes.hpp"
#include "eqlines/configurations.hpp"
#include "eqlines/graphs.hpp"
#include "eqlines/inequalities.hpp"
#include "eqlines/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eqlines {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

uint64_t default_seed() {
    if (const char* env = std::getenv("EQLINES_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::invalid_argument("EQLINES_SEED is not a valid integer");
        }
    }
    return 0;
}

std::vector<int> parse_r_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw std::invalid_argument("--r: empty list");
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"equiangular lines toolkit: verification, inequality reports, "
                 "bound tables, graph spectra"};
    app.require_subcommand(1);
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp,
                 "suppress the timestamp field for byte-reproducible output");

    std::string input = "-";
    double tol = 1e-8;
    std::string lemma;
    int samples = 20;
    uint64_t seed = default_seed();
    int threads = 1;
    std::string r_list;
    std::string alpha_text;
    int q = 2;
    std::string format = "json";
    bool floor_values = false;
    std::string mode;
    int pivot = 0;
    std::string name;
    std::vector<std::string> param_kvs;

    auto* verify_cmd = app.add_subcommand("verify", "equiangularity check of a code");
    verify_cmd->add_option("--input", input, "code JSON file, - for stdin");
    verify_cmd->add_option("--tol", tol, "absolute tolerance on | |M_ij| - alpha |");

    auto* welch_cmd = app.add_subcommand("welch", "Welch-type report for a code");
    welch_cmd->add_option("--input", input, "code JSON file, - for stdin");

    auto* ineq_cmd = app.add_subcommand("ineq", "evaluate a catalog inequality");
    ineq_cmd->add_option("--input", input, "code JSON file, - for stdin");
    ineq_cmd->add_option("--lemma", lemma, "R1..R11, C1..C6, main_r, main_c, main_r_regular, sic_identity")
        ->required();
    ineq_cmd->add_option("--samples", samples, "sample count for vector-valued lemmas");
    ineq_cmd->add_option("--seed", seed, "sampling seed (default: EQLINES_SEED or 0)");
    ineq_cmd->add_option("--threads", threads, "worker threads; affects wall time only");

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound comparison table");
    bounds_cmd->add_option("--r", r_list, "comma-separated dimensions, e.g. 7,23")->required();
    bounds_cmd->add_option("--alpha", alpha_text, "angle as decimal, p/q, or 1/sqrt(k)")->required();
    bounds_cmd->add_option("--q", q, "ball radius for the asymptotic bound (q >= 2)");
    bounds_cmd->add_option("--format", format, "json or csv");
    bounds_cmd->add_flag("--floor", floor_values, "floor bound values to integers");

    auto* graph_cmd = app.add_subcommand("graph-bounds", "second-eigenvalue bounds of a regular graph");
    graph_cmd->add_option("--input", input, "graph JSON or 'u v' line file, - for stdin");

    auto* switch_cmd = app.add_subcommand("switch", "switching transforms of a code");
    switch_cmd->add_option("--input", input, "code JSON file, - for stdin");
    switch_cmd->add_option("--mode", mode, "restrict or degree")->required();
    switch_cmd->add_option("--pivot", pivot, "pivot vertex for --mode restrict");

    auto* generate_cmd = app.add_subcommand("generate", "emit a catalog configuration");
    generate_cmd->add_option("--name", name, "configuration name")->required();
    generate_cmd->add_option("--params", param_kvs, "key=value parameters");
    generate_cmd->add_option("--seed", seed, "seed for randomized generators");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("eqlines");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto emit = [&](JsonValue j) {
        if (!no_timestamp) j.set("timestamp", iso_timestamp());
        out << j.dump(2);
    };

    try {
        if (*verify_cmd) {
            SphericalCode code = parse_code_json(read_input(input, in));
            EquiangularCheck check = verify_equiangular(code, tol);
            emit(equiangular_check_to_json(check));
            return check.is_equiangular ? 0 : 1;
        }

        if (*welch_cmd) {
            SphericalCode code = parse_code_json(read_input(input, in));
            WelchReport rep = welch(code);
            emit(welch_to_json(rep));
            return rep.holds_first && rep.holds_second ? 0 : 1;
        }

        if (*ineq_cmd) {
            SphericalCode code = parse_code_json(read_input(input, in));
            auto reports = sample_lemma_reports(code, lemma, samples, seed, {}, threads);
            JsonValue j = JsonValue::object();
            j.set("lemma_id", lemma);
            j.set("samples", samples);
            j.set("seed", seed);
            j.set("reports", inequality_reports_to_json(reports));
            bool ok = true;
            for (const auto& rep : reports)
                if (rep.hypothesis_ok && !rep.holds) ok = false;
            j.set("all_hold", ok);
            emit(std::move(j));
            return ok ? 0 : 1;
        }

        if (*bounds_cmd) {
            Alpha alpha = Alpha::parse(alpha_text);
            BoundTable table = comparison_table(parse_r_list(r_list), alpha, q, floor_values);
            if (format == "csv") {
                out << bound_table_to_csv(table);
            } else if (format == "json") {
                emit(bound_table_to_json(table));
            } else {
                throw std::invalid_argument("--format must be json or csv");
            }
            return 0;
        }

        if (*graph_cmd) {
            Graph g = parse_graph_any(read_input(input, in));
            RegularBoundReport rep = regular_graph_bounds(g);
            emit(regular_bound_report_to_json(rep));
            if (!rep.gap_ok) return 0; // advisory only, nothing was checked
            return rep.holds1 && rep.holds2 ? 0 : 1;
        }

        if (*switch_cmd) {
            SphericalCode code = parse_code_json(read_input(input, in));
            if (mode == "restrict") {
                SphericalCode switched = restrict_switch(code, pivot);
                JsonValue j = JsonValue::object();
                j.set("code", code_to_json(switched));
                JsonValue rep = JsonValue::object();
                rep.set("mode", "restrict");
                rep.set("pivot", pivot);
                j.set("report", std::move(rep));
                emit(std::move(j));
                return 0;
            }
            if (mode == "degree") {
                auto [switched, rep] = degree_bounded_switch(code);
                JsonValue j = JsonValue::object();
                j.set("code", code_to_json(switched));
                JsonValue report = degree_switch_report_to_json(rep);
                report.set("mode", "degree");
                j.set("report", std::move(report));
                emit(std::move(j));
                return rep.bound_ok ? 0 : 1;
            }
            throw std::invalid_argument("--mode must be restrict or degree");
        }

        if (*generate_cmd) {
            ConfigSpec spec;
            spec.name = name;
            spec.seed = seed;
            for (const auto& kv : param_kvs) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--params expects key=value, got '" + kv + "'");
                spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            Configuration c = generate(spec);
            emit(configuration_to_json(c, spec));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace eqlines
