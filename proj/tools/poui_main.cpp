#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poui/energy.hpp"
#include "poui/errors.hpp"
#include "poui/io.hpp"
#include "poui/sim.hpp"
#include "poui/types.hpp"

namespace {

std::string reductions_path(const std::string& out_path) {
    auto dot = out_path.rfind('.');
    if (dot == std::string::npos || out_path.find('/', dot) != std::string::npos)
        return out_path + "_reductions";
    return out_path.substr(0, dot) + "_reductions" + out_path.substr(dot);
}

/// Parses "0.1,0.2,0.4"; returns nullopt on any malformed entry.
std::optional<std::vector<double>> parse_values(const std::string& list) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto comma = list.find(',', start);
        std::string token =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (used != token.size() || !std::isfinite(v)) return std::nullopt;
        values.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

int run_simulate(const std::string& config, const std::string& out,
                 std::optional<std::uint64_t> seed) {
    poui::SimParams params = poui::load_params(config);
    if (seed) params.seed = *seed;
    poui::SimTrace trace = poui::run_simulation(params);
    poui::write_file_atomic(out, poui::trace_to_csv(trace));
    return 0;
}

int run_energy(const std::string& out) {
    poui::EnergyTable table = poui::energy_table();
    poui::write_file_atomic(out, poui::energy_table_csv(table));
    poui::write_file_atomic(reductions_path(out), poui::energy_reductions_csv(table));
    return 0;
}

int run_sweep(const std::string& config, const std::string& param,
              const std::vector<double>& values, const std::string& out) {
    poui::SimParams base = poui::load_params(config);
    auto points = poui::sweep(base, param, values);
    poui::write_file_atomic(out, poui::sweep_to_csv(param, points));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PoUI consensus simulator: job market, staking consensus, "
                 "dynamic reward control and energy accounting"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed_value = 0;
    bool seed_set = false;
    std::string param_name;
    std::string values_list;

    auto* simulate = app.add_subcommand("simulate", "Run one simulation and write the trace CSV");
    simulate->add_option("--config", config_path, "parameter file (key = value lines)")
        ->required();
    simulate->add_option("--out", out_path, "output CSV path")->required();
    simulate->add_option("--seed", seed_value, "override the config seed")
        ->each([&](const std::string&) { seed_set = true; });

    auto* energy = app.add_subcommand(
        "energy", "Write the per-mechanism energy table CSV and the reductions CSV");
    energy->add_option("--out", out_path, "output CSV path")->required();

    auto* sweep_cmd =
        app.add_subcommand("sweep", "Run one simulation per parameter value; write summaries");
    sweep_cmd->add_option("--config", config_path, "parameter file")->required();
    sweep_cmd->add_option("--param", param_name, "one of alpha, delta, beta, gamma")
        ->required()
        ->check(CLI::IsMember({"alpha", "delta", "beta", "gamma"}));
    sweep_cmd->add_option("--values", values_list, "comma-separated list of values")
        ->required();
    sweep_cmd->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 covers --help; anything else is a usage error
    }

    std::vector<double> sweep_values;
    if (sweep_cmd->parsed()) {
        auto parsed = parse_values(values_list);
        if (!parsed) {
            std::cerr << "error: --values must be a comma-separated list of finite reals, got '"
                      << values_list << "'\n";
            return 2;
        }
        sweep_values = std::move(*parsed);
    }

    try {
        if (simulate->parsed())
            return run_simulate(config_path, out_path,
                                seed_set ? std::optional<std::uint64_t>(seed_value)
                                         : std::nullopt);
        if (energy->parsed()) return run_energy(out_path);
        if (sweep_cmd->parsed()) return run_sweep(config_path, param_name, sweep_values, out_path);
    } catch (const poui::SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
