// Command-line front end: resolution-profile search, drop export and the
// Monte-Carlo sweeps (speed/J/NR/p0) with CSV + SVG reports.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d2dsim/adc_search.hpp"
#include "d2dsim/errors.hpp"
#include "d2dsim/harness.hpp"
#include "d2dsim/report.hpp"

namespace {

using namespace d2dsim;

SystemConfig make_config(const std::string& path, std::optional<std::uint64_t> seed,
                         std::optional<int> trials) {
    SystemConfig cfg = path.empty() ? SystemConfig{} : load_config_file(path);
    if (seed) cfg.seed = *seed;
    if (trials) cfg.trials = *trials;
    cfg.validate();
    return cfg;
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream os(p);
    if (!os) throw ConfigError("cannot write " + p.string());
    return os;
}

void emit_sweep(const SweepReport& report, const std::filesystem::path& dir,
                const std::string& stem, const std::string& title, bool log_x) {
    std::filesystem::create_directories(dir);
    auto csv = open_out(dir / (stem + ".csv"));
    write_sweep_csv(csv, report);
    auto svg = open_out(dir / (stem + ".svg"));
    write_sweep_svg(svg, report, title, log_x);
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << " and "
              << (dir / (stem + ".svg")).string() << "\n";
}

void print_sweep(const SweepReport& report) {
    std::cout << axis_name(report.axis)
              << "  4SA(mean+-sem)        RA(mean+-sem)         excluded\n";
    for (const auto& p : report.points) {
        std::cout << "  " << p.value << "\t" << p.fourstep.mean_sum_rate << " +- "
                  << p.fourstep.sem << "\t" << p.ra.mean_sum_rate << " +- " << p.ra.sem << "\t"
                  << p.excluded << "/" << p.trials << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"D2D underlay uplink simulator (mixed-resolution-ADC base station)"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", axis_str = "speed";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::vector<double> values, j_values{4, 2, 1, 0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
    std::vector<int> nr_values{16, 32, 64};

    auto* adc = app.add_subcommand("adc-search", "resolution profile for an energy budget");
    int a_nr = 32, a_bmax = 8;
    double a_c0 = -1.0, a_c1 = 0.0, a_budget = 1.0;
    adc->add_option("--nr", a_nr, "antenna count")->required();
    adc->add_option("--bmax", a_bmax, "max ADC bits")->required();
    adc->add_option("--c0", a_c0, "energy coefficient (default 1/(nr*2^bmax))");
    adc->add_option("--c1", a_c1, "energy offset");
    adc->add_option("--budget", a_budget, "energy budget J")->required();

    auto* drop_cmd = app.add_subcommand("drop", "export one scenario drop as CSV");
    std::string drop_out = "drop.csv";
    drop_cmd->add_option("--config", config_path, "config file");
    drop_cmd->add_option("--seed", seed, "drop seed");
    drop_cmd->add_option("--out", drop_out, "output CSV path");

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo sweep along one axis");
    sim->add_option("--config", config_path, "config file");
    sim->add_option("--axis", axis_str, "speed | j | nr | p0")
        ->check(CLI::IsMember({"speed", "j", "nr", "p0"}));
    sim->add_option("--values", values, "axis values")->delimiter(',')->required();
    sim->add_option("--trials", trials, "trials per point");
    sim->add_option("--seed", seed, "master seed");
    sim->add_option("--out", out_dir, "output directory");

    auto* table = app.add_subcommand("table", "budget sweep per antenna count");
    table->add_option("--config", config_path, "config file");
    table->add_option("--nr-values", nr_values, "antenna counts")->delimiter(',');
    table->add_option("--j-values", j_values, "energy budgets")->delimiter(',');
    table->add_option("--trials", trials, "trials per point");
    table->add_option("--seed", seed, "master seed");
    table->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (adc->parsed()) {
        if (a_c0 <= 0.0) a_c0 = 1.0 / (double(a_nr) * std::exp2(double(a_bmax)));
        ResolutionProfile profile = decremental_search(a_nr, a_bmax, a_c0, a_c1, a_budget);
        const auto [psi1, psi2] = psi_stats(profile);
        std::cout << "profile: " << profile.to_csv() << "\n"
                  << "energy: " << bs_energy(profile, a_c0, a_c1) << "\n"
                  << "psi1: " << psi1 << "\n"
                  << "psi2: " << psi2 << "\n";
        return 0;
    }

    if (drop_cmd->parsed()) {
        SystemConfig cfg = make_config(config_path, seed, trials);
        ScenarioDrop drop = generate_drop(cfg, cfg.seed);
        auto os = open_out(drop_out);
        write_drop_csv(os, drop);
        std::cout << "wrote " << drop_out << " (" << drop.vehicles.size() << " vehicles)\n";
        return 0;
    }

    if (sim->parsed()) {
        SystemConfig cfg = make_config(config_path, seed, trials);
        SweepAxis axis = SweepAxis::speed;
        if (axis_str == "j") axis = SweepAxis::budget;
        else if (axis_str == "nr") axis = SweepAxis::antennas;
        else if (axis_str == "p0") axis = SweepAxis::outage;
        SweepReport report = monte_carlo_sweep(cfg, axis, values);
        print_sweep(report);
        emit_sweep(report, out_dir, "sweep_" + axis_str, "sum CUE rate vs " + axis_name(axis),
                   axis == SweepAxis::budget);
        return 0;
    }

    if (table->parsed()) {
        SystemConfig cfg = make_config(config_path, seed, trials);
        for (int nr : nr_values) {
            SystemConfig point = cfg;
            point.nr = nr; // resolved c0 kept fixed across antenna counts
            SweepReport report = monte_carlo_sweep(point, SweepAxis::budget, j_values);
            std::cout << "nr = " << nr << "\n";
            print_sweep(report);
            emit_sweep(report, out_dir, "table_nr" + std::to_string(nr),
                       "sum CUE rate vs budget, nr=" + std::to_string(nr), true);
        }
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
