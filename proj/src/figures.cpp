#include "sfcplan/figures.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "sfcplan/errors.hpp"
#include "sfcplan/planner.hpp"
#include "sfcplan/queueing.hpp"
#include "sfcplan/rng.hpp"
#include "sfcplan/sim.hpp"

namespace sfcplan {

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"5a", "5b", "5c", "5d", "5e", "5f"};
    return ids;
}

namespace {

struct SimEffort {
    std::int64_t warmup = 10'000;
    std::int64_t measured = 100'000;
    int replications = 10;
    std::int64_t trials = 1'000'000;
    std::int64_t max_queue = 10'000'000;
};

SimEffort resolve_effort(const SimOverrides& scenario, const SimOverrides& cli) {
    SimEffort effort;
    auto pick = [](auto& target, const auto& first, const auto& second) {
        if (second) target = *second;
        if (first) target = *first;
    };
    pick(effort.warmup, cli.warmup_departures, scenario.warmup_departures);
    pick(effort.measured, cli.measured_departures, scenario.measured_departures);
    pick(effort.replications, cli.replications, scenario.replications);
    pick(effort.trials, cli.trials, scenario.trials);
    pick(effort.max_queue, cli.max_queue_length, scenario.max_queue_length);
    return effort;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

// Per-row stream: a pure function of (base seed, figure, series, x), so rows
// keep their seeds no matter how the sweep is split across threads.
std::uint64_t row_seed(std::uint64_t base, const std::string& figure, const std::string& label, int x) {
    return derive_seed(base, fnv1a(figure + "|" + label + "|" + std::to_string(x)));
}

void run_tasks(std::vector<std::function<void()>>& tasks, int jobs) {
    if (jobs <= 1 || tasks.size() <= 1) {
        for (auto& task : tasks) task();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) tasks[i]();
    };
    std::vector<std::thread> pool;
    const int thread_count = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(thread_count);
    for (int j = 0; j < thread_count; ++j) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
}

std::vector<int> subchain_axis(const Scenario& scenario) {
    if (const SweepSpec* sweep = scenario.sweep_for("l")) return sweep->values();
    // default: up to two points past the largest planned count, so the
    // SLA-violating region is visible
    int planned = 1;
    for (PlanSetting setting : {PlanSetting::mm1, PlanSetting::mmm}) {
        try {
            planned = std::max(planned, plan({scenario.sfc, setting}).subchains);
        } catch (const InfeasibleError&) {
            // reliability sweeps still make sense without a feasible plan
        }
    }
    std::vector<int> axis;
    for (int l = 1; l <= planned + 2; ++l) axis.push_back(l);
    return axis;
}

std::vector<int> chain_length_axis(const Scenario& scenario) {
    if (const SweepSpec* sweep = scenario.sweep_for("vnf_count")) return sweep->values();
    std::vector<int> axis;
    for (int n = 2; n <= 10; ++n) axis.push_back(n);
    return axis;
}

// Chain of length n built by cycling the scenario's VNF pattern.
SfcSpec resize_chain(const SfcSpec& sfc, int n) {
    SfcSpec resized = sfc;
    resized.vnfs.clear();
    for (int i = 0; i < n; ++i)
        resized.vnfs.push_back(sfc.vnfs[i % sfc.vnfs.size()]);
    return resized;
}

CsvRow analytic_row(const Scenario& scenario, const ChainConfig& config, int x) {
    CsvRow row;
    row.scenario = scenario.name;
    row.config_label = config.label();
    row.l_or_b = x;
    row.reliability_analytic = reliability(scenario.sfc, config);
    row.response_analytic = *analyze(scenario.sfc, config).expected_response_time;
    row.resources = total_resources(scenario.sfc, config);
    return row;
}

// 5a/5b grid: all four deployment shapes across the subchain axis. The scb
// series runs on the scenario's "b" sweep when one is given, otherwise on
// the shared axis (scb(b) pairs with mmm(l=b+1) at matched redundancy).
std::vector<CsvRow> subchain_grid(const std::string& figure, const Scenario& scenario,
                                  const FigureOptions& options, bool with_availability) {
    const SimEffort effort = resolve_effort(scenario.sim, options.sim);
    const std::vector<int> axis = subchain_axis(scenario);
    const std::vector<int> backup_axis =
        scenario.sweep_for("b") ? scenario.sweep_for("b")->values() : axis;

    std::vector<CsvRow> rows;
    std::vector<std::function<void()>> tasks;
    auto add_row = [&](const ChainConfig& config, int x) {
        CsvRow row = analytic_row(scenario, config, x);
        rows.push_back(row);
        if (with_availability) {
            const std::size_t slot = rows.size() - 1;
            const std::uint64_t seed = row_seed(options.seed, figure, rows[slot].config_label, x);
            rows[slot].seed = seed;
            tasks.push_back([&rows, slot, seed, config, &scenario, &effort] {
                const AvailabilityEstimate estimate =
                    estimate_availability(scenario.sfc, config, effort.trials, seed);
                rows[slot].reliability_simulated = estimate.estimate;
                rows[slot].ci_rel = estimate.ci95_halfwidth;
            });
        }
    };

    for (int x : axis) {
        add_row(ChainConfig::sc(), x);
        add_row(ChainConfig::subchain_mm1(x), x);
        add_row(ChainConfig::common_scheduler_mmm(x), x);
    }
    for (int b : backup_axis) add_row(ChainConfig::scb(b), b);
    run_tasks(tasks, options.jobs);
    return rows;
}

// 5d/5e: response vs subchain count for both subchain settings; 5e appends
// the delay budget as its own series.
std::vector<CsvRow> response_rows(const std::string& figure, const Scenario& scenario,
                                  const FigureOptions& options, bool with_sla_series) {
    const SimEffort effort = resolve_effort(scenario.sim, options.sim);
    std::vector<CsvRow> rows;
    std::vector<std::function<void()>> tasks;
    for (int l : subchain_axis(scenario)) {
        for (const ChainConfig& config :
             {ChainConfig::subchain_mm1(l), ChainConfig::common_scheduler_mmm(l)}) {
            rows.push_back(analytic_row(scenario, config, l));
            if (options.with_simulation) {
                const std::size_t slot = rows.size() - 1;
                const std::uint64_t seed = row_seed(options.seed, figure, rows[slot].config_label, l);
                rows[slot].seed = seed;
                tasks.push_back([&rows, slot, seed, config, &scenario, &effort] {
                    SimConfig sim;
                    sim.topology = build_topology(scenario.sfc, config);
                    sim.arrival_rate = scenario.sfc.arrival_rate;
                    sim.warmup_departures = effort.warmup;
                    sim.measured_departures = effort.measured;
                    sim.replications = effort.replications;
                    sim.max_queue_length = effort.max_queue;
                    sim.seed = seed;
                    const SimResult result = run_simulation(sim);
                    rows[slot].response_simulated = result.mean_response;
                    rows[slot].ci_resp = result.ci95_halfwidth;
                });
            }
        }
        if (with_sla_series) {
            CsvRow budget;
            budget.scenario = scenario.name;
            budget.config_label = "sla";
            budget.l_or_b = l;
            budget.reliability_analytic = 1.0;
            budget.response_analytic = scenario.sfc.delay_sla;
            budget.resources = 0.0;
            rows.push_back(budget);
        }
    }
    run_tasks(tasks, options.jobs);
    return rows;
}

// 5c: subchain count chosen by the planner as the chain grows.
std::vector<CsvRow> planned_counts_rows(const Scenario& scenario) {
    std::vector<CsvRow> rows;
    bool any_feasible = false;
    for (int n : chain_length_axis(scenario)) {
        const SfcSpec chain = resize_chain(scenario.sfc, n);
        for (PlanSetting setting : {PlanSetting::mm1, PlanSetting::mmm}) {
            PlanResult result;
            try {
                result = plan({chain, setting});
            } catch (const InfeasibleError&) {
                continue; // no feasible subchain count at this length
            }
            any_feasible = true;
            CsvRow row;
            row.scenario = scenario.name + "/v=" + std::to_string(n);
            row.config_label = setting == PlanSetting::mm1
                                   ? ChainConfig::subchain_mm1(result.subchains).label()
                                   : ChainConfig::common_scheduler_mmm(result.subchains).label();
            row.l_or_b = result.subchains;
            row.reliability_analytic = result.predicted_reliability;
            row.response_analytic = result.predicted_response;
            row.resources = chain.total_resource_weight();
            rows.push_back(row);
        }
    }
    if (!any_feasible)
        throw InfeasibleError("no chain length in the sweep admits a feasible subchain count");
    return rows;
}

// 5f: reliability of each deployment shape as the chain grows, subchain
// variants at their planned counts.
std::vector<CsvRow> reliability_vs_length_rows(const Scenario& scenario) {
    std::vector<CsvRow> rows;
    bool any_feasible = false;
    for (int n : chain_length_axis(scenario)) {
        const SfcSpec chain = resize_chain(scenario.sfc, n);
        Scenario local = scenario;
        local.sfc = chain;
        local.name = scenario.name + "/v=" + std::to_string(n);
        rows.push_back(analytic_row(local, ChainConfig::sc(), 1));
        rows.push_back(analytic_row(local, ChainConfig::scb(1), 1));
        for (PlanSetting setting : {PlanSetting::mm1, PlanSetting::mmm}) {
            PlanResult result;
            try {
                result = plan({chain, setting});
            } catch (const InfeasibleError&) {
                continue;
            }
            any_feasible = true;
            const ChainConfig config = setting == PlanSetting::mm1
                                           ? ChainConfig::subchain_mm1(result.subchains)
                                           : ChainConfig::common_scheduler_mmm(result.subchains);
            rows.push_back(analytic_row(local, config, result.subchains));
        }
    }
    if (!any_feasible)
        throw InfeasibleError("no chain length in the sweep admits a feasible subchain count");
    return rows;
}

} // namespace

std::vector<CsvRow> make_figure(const std::string& figure_id, const Scenario& scenario,
                                const FigureOptions& options) {
    validate(scenario.sfc);
    const int bottleneck = scenario.sfc.bottleneck_index();
    if (bottleneck >= 0)
        throw UnstableError("vnf[" + std::to_string(bottleneck) +
                            "] saturated; no response sweep is defined");
    if (figure_id == "5a")
        return subchain_grid(figure_id, scenario, options, options.with_simulation);
    if (figure_id == "5b") return subchain_grid(figure_id, scenario, options, false);
    if (figure_id == "5c") return planned_counts_rows(scenario);
    if (figure_id == "5d") return response_rows(figure_id, scenario, options, false);
    if (figure_id == "5e") return response_rows(figure_id, scenario, options, true);
    if (figure_id == "5f") return reliability_vs_length_rows(scenario);
    throw ValidationError("unknown figure id '" + figure_id + "' (expected 5a..5f)");
}

} // namespace sfcplan
