// sfcplan: analyze, plan, simulate, and sweep subchained service function
// chains. Subcommands write CSV files and print a short summary (suppressed
// with --quiet); exit codes distinguish parse (2), validation (3),
// infeasible (4), unstable (5), and diverged (6) failures.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfcplan/csv.hpp"
#include "sfcplan/errors.hpp"
#include "sfcplan/figures.hpp"
#include "sfcplan/planner.hpp"
#include "sfcplan/queueing.hpp"
#include "sfcplan/rng.hpp"
#include "sfcplan/scenario.hpp"
#include "sfcplan/sim.hpp"

namespace {

using namespace sfcplan;

struct CommonArgs {
    std::string scenario_path;
    std::string out_dir;
    bool quiet = false;
};

Scenario resolve_scenario(const CommonArgs& args) {
    if (args.scenario_path.empty())
        return parse_scenario(table1_scenario_text(), "<builtin:table1>");
    return load_scenario(args.scenario_path);
}

std::string resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SFCPLAN_OUT_DIR"); env && *env) return env;
    return ".";
}

std::string output_path(const CommonArgs& args, const std::string& stem) {
    const std::string dir = resolve_out_dir(args.out_dir);
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / (stem + ".csv")).string();
}

std::string sanitize(std::string text) {
    for (char& c : text)
        if (c == ':' || c == '/' || c == '\\') c = '-';
    return text;
}

void emit(const CommonArgs& args, const std::string& stem, const std::vector<CsvRow>& rows) {
    const std::string path = output_path(args, stem);
    write_csv_file(path, rows);
    if (!args.quiet) std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
}

struct SimFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> warmup;
    std::optional<std::int64_t> departures;
    std::optional<int> replications;
    std::optional<std::int64_t> trials;
    int jobs = 1;

    SimOverrides overrides() const {
        SimOverrides sim;
        sim.warmup_departures = warmup;
        sim.measured_departures = departures;
        sim.replications = replications;
        sim.trials = trials;
        return sim;
    }
};

void add_sim_flags(CLI::App* cmd, SimFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Base RNG seed (default: scenario sim seed, else 42)");
    cmd->add_option("--warmup", flags.warmup, "Departures discarded before measuring");
    cmd->add_option("--departures", flags.departures, "Measured departures per replication");
    cmd->add_option("--reps", flags.replications, "Independent replications");
    cmd->add_option("--trials", flags.trials, "Monte Carlo availability trials");
    cmd->add_option("--jobs", flags.jobs, "Concurrent simulation jobs")->check(CLI::PositiveNumber);
}

std::uint64_t resolve_seed(const SimFlags& flags, const Scenario& scenario) {
    if (flags.seed) return *flags.seed;
    if (scenario.sim.seed) return *scenario.sim.seed;
    return 42;
}

template <typename T>
T value_or(const std::optional<T>& first, const std::optional<T>& second, T fallback) {
    return first ? *first : (second ? *second : fallback);
}

int cmd_analyze(const CommonArgs& args, const std::string& config_label) {
    const Scenario scenario = resolve_scenario(args);
    std::vector<ChainConfig> configs = scenario.configs;
    if (!config_label.empty()) configs = {ChainConfig::parse(config_label)};
    if (configs.empty()) configs = {ChainConfig::sc()};

    std::vector<CsvRow> rows;
    for (const ChainConfig& config : configs) {
        const AnalysisReport report = analyze(scenario.sfc, config);
        if (!report.expected_response_time) {
            const int bottleneck = scenario.sfc.bottleneck_index();
            throw UnstableError("vnf[" + std::to_string(bottleneck) + "] saturated: arrival_rate " +
                                std::to_string(scenario.sfc.arrival_rate) + " >= service_rate " +
                                std::to_string(scenario.sfc.vnfs[bottleneck].service_rate));
        }
        CsvRow row;
        row.scenario = scenario.name;
        row.config_label = config.label();
        row.l_or_b = config.variant == ChainVariant::sc ? 1 : config.count;
        row.reliability_analytic = report.reliability;
        row.response_analytic = *report.expected_response_time;
        row.resources = report.total_resources;
        rows.push_back(row);
        if (!args.quiet)
            std::cout << config.label() << ": reliability=" << format_double(report.reliability)
                      << " response=" << format_double(*report.expected_response_time)
                      << " s resources=" << format_double(report.total_resources) << "\n";
    }
    emit(args, "analyze_" + sanitize(scenario.name), rows);
    return 0;
}

int cmd_plan(const CommonArgs& args, const std::string& setting_text, int l_max) {
    const Scenario scenario = resolve_scenario(args);
    PlanRequest request;
    request.sfc = scenario.sfc;
    request.setting = parse_plan_setting(setting_text);
    request.l_max = l_max;
    const PlanResult result = plan(request);

    CsvRow row;
    row.scenario = scenario.name;
    row.config_label = request.setting == PlanSetting::mm1
                           ? ChainConfig::subchain_mm1(result.subchains).label()
                           : ChainConfig::common_scheduler_mmm(result.subchains).label();
    row.l_or_b = result.subchains;
    row.reliability_analytic = result.predicted_reliability;
    row.response_analytic = result.predicted_response;
    row.resources = scenario.sfc.total_resource_weight();
    std::vector<CsvRow> rows{row};

    if (!args.quiet) {
        std::cout << "setting " << to_string(result.setting) << ": l=" << result.subchains
                  << " response=" << format_double(result.predicted_response)
                  << " s (sla " << format_double(scenario.sfc.delay_sla)
                  << " s) reliability=" << format_double(result.predicted_reliability) << "\n";
        if (result.used_scan_fallback)
            std::cout << "note: response was not monotone across the search range; "
                         "the result was recomputed by exhaustive scan\n";
    }
    emit(args, "plan_" + sanitize(scenario.name) + "_" + setting_text, rows);
    return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& config_label, const SimFlags& flags) {
    const Scenario scenario = resolve_scenario(args);
    const ChainConfig config = ChainConfig::parse(config_label);
    const std::uint64_t seed = resolve_seed(flags, scenario);

    SimConfig sim;
    sim.topology = build_topology(scenario.sfc, config);
    sim.arrival_rate = scenario.sfc.arrival_rate;
    sim.warmup_departures =
        value_or(flags.warmup, scenario.sim.warmup_departures, std::int64_t{10'000});
    sim.measured_departures =
        value_or(flags.departures, scenario.sim.measured_departures, std::int64_t{100'000});
    sim.replications = value_or(flags.replications, scenario.sim.replications, 10);
    sim.max_queue_length =
        value_or(std::optional<std::int64_t>{}, scenario.sim.max_queue_length, std::int64_t{10'000'000});
    sim.seed = seed;
    const SimResult sim_result = run_simulation(sim, flags.jobs);

    const std::int64_t trials = value_or(flags.trials, scenario.sim.trials, std::int64_t{1'000'000});
    const AvailabilityEstimate availability =
        estimate_availability(scenario.sfc, config, trials, derive_seed(seed, 0x61766169));

    const AnalysisReport report = analyze(scenario.sfc, config);
    CsvRow row;
    row.scenario = scenario.name;
    row.config_label = config.label();
    row.l_or_b = config.variant == ChainVariant::sc ? 1 : config.count;
    row.reliability_analytic = report.reliability;
    row.reliability_simulated = availability.estimate;
    row.ci_rel = availability.ci95_halfwidth;
    row.response_analytic = *report.expected_response_time;
    row.response_simulated = sim_result.mean_response;
    row.ci_resp = sim_result.ci95_halfwidth;
    row.resources = report.total_resources;
    row.seed = seed;

    if (!args.quiet) {
        std::cout << config.label() << ": simulated response=" << format_double(sim_result.mean_response)
                  << " s +/- " << format_double(sim_result.ci95_halfwidth)
                  << " (analytic " << format_double(*report.expected_response_time) << " s), "
                  << "availability=" << format_double(availability.estimate) << " +/- "
                  << format_double(availability.ci95_halfwidth) << " (analytic "
                  << format_double(report.reliability) << "), seed=" << seed << "\n";
    }
    emit(args, "simulate_" + sanitize(scenario.name) + "_" + sanitize(config.label()), {row});
    return 0;
}

int cmd_reproduce(const CommonArgs& args, const std::string& figure, const SimFlags& flags,
                  bool analytic_only) {
    const Scenario scenario = resolve_scenario(args);
    FigureOptions options;
    options.seed = resolve_seed(flags, scenario);
    options.with_simulation = !analytic_only;
    options.sim = flags.overrides();
    options.jobs = flags.jobs;
    const std::vector<CsvRow> rows = make_figure(figure, scenario, options);
    emit(args, "fig" + figure + "_" + sanitize(scenario.name), rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reliability and delay planning for subchained service function chains"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string config_label;
    std::string setting_text;
    std::string figure;
    int l_max = 1'000'000;
    bool analytic_only = false;
    SimFlags sim_flags;

    auto add_common = [&](CLI::App* cmd, bool scenario_required) {
        auto* opt = cmd->add_option("--scenario", common.scenario_path, "Scenario file path");
        if (scenario_required) opt->required();
        cmd->add_option("--out", common.out_dir,
                        "Output directory (default: $SFCPLAN_OUT_DIR, else .)");
        cmd->add_flag("--quiet", common.quiet, "Suppress the human-readable summary");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Closed-form report per configuration");
    add_common(analyze_cmd, true);
    analyze_cmd->add_option("--config", config_label, "Configuration label (sc, scb:B, mm1:L, mmm:L)");

    CLI::App* plan_cmd = app.add_subcommand("plan", "Pick the subchain count for a setting");
    add_common(plan_cmd, true);
    plan_cmd->add_option("--setting", setting_text, "mm1 or mmm")->required();
    plan_cmd->add_option("--l-max", l_max, "Subchain count cap")->check(CLI::PositiveNumber);

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Discrete-event + availability simulation of one configuration");
    add_common(simulate_cmd, true);
    simulate_cmd->add_option("--config", config_label, "Configuration label")->required();
    add_sim_flags(simulate_cmd, sim_flags);

    CLI::App* reproduce_cmd =
        app.add_subcommand("reproduce", "Benchmark sweep CSVs (figure ids 5a..5f)");
    add_common(reproduce_cmd, false);
    reproduce_cmd->add_option("--figure", figure, "One of 5a 5b 5c 5d 5e 5f")->required();
    reproduce_cmd->add_flag("--analytic-only", analytic_only, "Skip simulated columns");
    add_sim_flags(reproduce_cmd, sim_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(common, config_label);
        if (plan_cmd->parsed()) return cmd_plan(common, setting_text, l_max);
        if (simulate_cmd->parsed()) return cmd_simulate(common, config_label, sim_flags);
        if (reproduce_cmd->parsed()) return cmd_reproduce(common, figure, sim_flags, analytic_only);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
