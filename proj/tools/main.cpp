// Command-line front end. Links the shared library strictly through the C
// API in rpebble.h; CLI11 and nlohmann/json are used for argument parsing
// and presentation only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rpebble.h"

namespace {

struct GraphHandle {
    rpeb_graph* g = nullptr;
    ~GraphHandle() { rpeb_graph_free(g); }
};

struct CString {
    char* s = nullptr;
    ~CString() { rpeb_string_free(s); }
};

int exit_code(rpeb_status status) {
    if (status == RPEB_OK) return 0;
    return status == RPEB_ERR_BUDGET ? 2 : 1;
}

int report_error(rpeb_status status) {
    std::cerr << "error: " << rpeb_last_error() << "\n";
    return exit_code(status);
}

bool looks_like_file(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return true;
    std::ifstream probe(spec);
    return probe.good();
}

rpeb_status load_graph(const std::string& spec, GraphHandle& handle) {
    if (looks_like_file(spec)) {
        std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return RPEB_ERR_INVALID;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        return rpeb_graph_from_edge_text(buffer.str().c_str(), &handle.g);
    }
    return rpeb_graph_from_spec(spec.c_str(), &handle.g);
}

std::vector<int32_t> parse_config(const std::string& text, int n) {
    std::vector<int32_t> config;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) config.push_back(std::stoi(item));
    if (static_cast<int>(config.size()) != n)
        throw CLI::ValidationError("--config", "expected " + std::to_string(n) + " counts");
    return config;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact t-restricted optimal graph pebbling toolkit"};
    app.require_subcommand(1);

    std::string graph_spec, format = "text", out_path, config_text, suite = "alkanes";
    std::string cert_json;
    int t = 2;
    int target = 0;
    int threads = 1;
    std::uint64_t budget = 0;
    bool certificates = false;

    auto add_common = [&](CLI::App* cmd, bool with_graph = true) {
        if (with_graph)
            cmd->add_option("--graph", graph_spec,
                            "graph source: generator spec (path:6, alkane:3, spider:2,1,1, "
                            "named:neopentane), graph6 string, or an edge-list file")
                ->required();
        cmd->add_option("--format", format, "output format: text, json or csv");
        cmd->add_option("--budget", budget, "search node budget override");
        cmd->add_option("--threads", threads, "worker threads for enumeration sweeps");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* value_cmd = app.add_subcommand("value", "compute pi*_t (pi* with --t 0)");
    add_common(value_cmd);
    value_cmd->add_option("--t", t, "per-vertex cap; 0 means unrestricted");

    auto* count_cmd =
        app.add_subcommand("count", "compute pi*_t and the optimal-configuration count");
    add_common(count_cmd);
    count_cmd->add_option("--t", t, "per-vertex cap; 0 means unrestricted");

    auto* solve_cmd = app.add_subcommand("solve", "decide solvability of a configuration");
    add_common(solve_cmd);
    solve_cmd->add_option("--config", config_text, "pebble counts, comma separated")->required();
    solve_cmd->add_flag("--certificates", certificates, "emit per-target move certificates");

    auto* verify_cmd = app.add_subcommand("verify", "reachability of one target with certificate");
    add_common(verify_cmd);
    verify_cmd->add_option("--config", config_text, "pebble counts, comma separated")->required();
    verify_cmd->add_option("--target", target, "target vertex")->required();
    verify_cmd->add_option("--cert", cert_json, "verify this certificate JSON instead of searching");

    auto* bounds_cmd = app.add_subcommand("bounds", "domination-based bounds");
    add_common(bounds_cmd);

    auto* sym_cmd = app.add_subcommand("sym", "automorphism group order, orbits and D");
    add_common(sym_cmd);

    auto* family_cmd = app.add_subcommand("family", "enumerate the radius-<=2, D=2 tree family");
    add_common(family_cmd, /*with_graph=*/false);

    auto* repro_cmd = app.add_subcommand("reproduce", "run a reproduction suite");
    add_common(repro_cmd, /*with_graph=*/false);
    repro_cmd->add_option("--suite", suite, "alkanes, family or paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    rpeb_search_options opts;
    rpeb_search_options_init(&opts);
    if (budget) {
        opts.node_budget = budget;
        opts.enumeration_budget = budget;
    }
    opts.threads = threads;

    try {
        if (family_cmd->parsed() || repro_cmd->parsed()) {
            CString out;
            rpeb_status status;
            if (family_cmd->parsed()) {
                if (format == "csv" || format == "text")
                    status = rpeb_reproduce("family", "csv", &opts, &out.s);
                else
                    status = rpeb_family_json(&opts, &out.s);
            } else {
                std::string fmt = format == "csv" ? "csv" : "json";
                status = rpeb_reproduce(suite.c_str(), fmt.c_str(), &opts, &out.s);
            }
            if (status != RPEB_OK) return report_error(status);
            emit(out.s, out_path);
            return 0;
        }

        GraphHandle graph;
        if (auto status = load_graph(graph_spec, graph); status != RPEB_OK)
            return report_error(status);
        int n = rpeb_graph_order(graph.g);

        if (value_cmd->parsed() || count_cmd->parsed()) {
            if (format == "json") {
                CString out;
                if (auto status = rpeb_optimal_json(graph.g, t, &opts, &out.s); status != RPEB_OK)
                    return report_error(status);
                emit(out.s, out_path);
                return 0;
            }
            int32_t value = 0;
            uint64_t count = 0;
            if (auto status = rpeb_optimal_value(graph.g, t, &opts, &value, &count);
                status != RPEB_OK)
                return report_error(status);
            std::ostringstream text;
            if (value_cmd->parsed())
                text << value << "\n";
            else
                text << count << "\n";
            emit(text.str(), out_path);
            return 0;
        }

        if (solve_cmd->parsed()) {
            auto config = parse_config(config_text, n);
            CString out;
            if (auto status =
                    rpeb_solve_json(graph.g, config.data(), certificates ? 1 : 0, budget, &out.s);
                status != RPEB_OK)
                return report_error(status);
            if (format == "json") {
                emit(out.s, out_path);
                return 0;
            }
            auto j = nlohmann::json::parse(out.s);
            std::ostringstream text;
            text << (j["solvable"].get<bool>() ? "solvable" : "unsolvable") << "\n";
            for (const auto& tj : j["targets"]) {
                if (!tj["reachable"].get<bool>())
                    text << "unreachable target " << tj["target"].get<int>() << "\n";
                else if (certificates)
                    text << "target " << tj["target"].get<int>() << " certificate "
                         << tj["certificate"]["moves"].dump() << "\n";
            }
            emit(text.str(), out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto config = parse_config(config_text, n);
            if (!cert_json.empty()) {
                int32_t valid = 0, failed_step = -1;
                if (auto status = rpeb_verify_certificate(graph.g, config.data(),
                                                          cert_json.c_str(), &valid, &failed_step);
                    status != RPEB_OK)
                    return report_error(status);
                std::ostringstream text;
                text << (valid ? "valid" : "invalid") << "\n";
                if (!valid) text << "failed at step " << failed_step << "\n";
                emit(text.str(), out_path);
                return 0;
            }
            CString out;
            if (auto status = rpeb_verify_json(graph.g, config.data(), target, budget, &out.s);
                status != RPEB_OK)
                return report_error(status);
            if (format == "json") {
                emit(out.s, out_path);
                return 0;
            }
            auto j = nlohmann::json::parse(out.s);
            std::ostringstream text;
            text << (j["reachable"].get<bool>() ? "solvable" : "unsolvable") << "\n";
            if (j.contains("certificate"))
                text << "certificate " << j["certificate"]["moves"].dump() << "\n"
                     << "verified " << (j["verified"].get<bool>() ? "true" : "false") << "\n";
            emit(text.str(), out_path);
            return 0;
        }

        if (bounds_cmd->parsed()) {
            CString out;
            if (auto status = rpeb_bounds_json(graph.g, &out.s); status != RPEB_OK)
                return report_error(status);
            if (format == "json") {
                emit(out.s, out_path);
                return 0;
            }
            auto j = nlohmann::json::parse(out.s);
            std::ostringstream text;
            text << "gamma=" << j["gamma"].get<int>() << " gamma_R=" << j["gamma_R"].get<int>()
                 << " gamma_t="
                 << (j["gamma_t"].is_null() ? std::string("undefined")
                                            : std::to_string(j["gamma_t"].get<int>()))
                 << " two_gamma=" << j["two_gamma"].get<int>();
            if (j.contains("n_minus_l_plus_1"))
                text << " n_minus_l_plus_1=" << j["n_minus_l_plus_1"].get<int>();
            if (j.contains("five_n_over_7"))
                text << " five_n_over_7=" << j["five_n_over_7"].get<int>();
            text << "\n";
            emit(text.str(), out_path);
            return 0;
        }

        if (sym_cmd->parsed()) {
            CString out;
            if (auto status = rpeb_symmetry_json(graph.g, &out.s); status != RPEB_OK)
                return report_error(status);
            if (format == "json") {
                emit(out.s, out_path);
                return 0;
            }
            auto j = nlohmann::json::parse(out.s);
            std::ostringstream text;
            text << "order=" << j["order"].get<std::uint64_t>()
                 << " D=" << j["distinguishing"].get<int>() << " orbits=" << j["orbits"].dump()
                 << "\n";
            emit(text.str(), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
