#include <doctest.h>

#include <cmath>
#include <random>

#include "sfcplan/errors.hpp"
#include "sfcplan/queueing.hpp"
#include "sfcplan/sim.hpp"
#include "test_helpers.hpp"

using namespace sfcplan;
using sfcplan::testing::table1_chain;

namespace {

SimConfig quick_sim(const SfcSpec& sfc, const ChainConfig& config, std::uint64_t seed) {
    SimConfig sim;
    sim.topology = build_topology(sfc, config);
    sim.arrival_rate = sfc.arrival_rate;
    sim.warmup_departures = 2'000;
    sim.measured_departures = 30'000;
    sim.replications = 5;
    sim.seed = seed;
    return sim;
}

} // namespace

TEST_SUITE_BEGIN("sim");

TEST_CASE("topology shapes per configuration") {
    const SfcSpec sfc = table1_chain();

    const Topology sc = build_topology(sfc, ChainConfig::sc());
    CHECK(sc.stations.size() == 4);
    CHECK(sc.branch_count() == 1);
    CHECK(sc.entry_probability[0] == 1.0);
    for (const Station& station : sc.stations) {
        CHECK(station.server_count == 1);
        CHECK(station.service_rate == doctest::Approx(200.0));
    }
    CHECK(sc.stations[3].next == -1);

    // backups carry no traffic, so the queueing path equals sc
    const Topology scb = build_topology(sfc, ChainConfig::scb(2));
    CHECK(scb.stations.size() == 4);
    CHECK(scb.branch_count() == 1);

    const Topology split = build_topology(sfc, ChainConfig::subchain_mm1(3));
    CHECK(split.stations.size() == 12);
    CHECK(split.branch_count() == 3);
    double probability_sum = 0.0;
    for (int b = 0; b < 3; ++b) {
        CHECK(split.entry_probability[b] == doctest::Approx(1.0 / 3.0));
        probability_sum += split.entry_probability[b];
        int stages = 0;
        for (int s = split.entry_station[b]; s >= 0; s = split.stations[s].next) {
            CHECK(split.stations[s].service_rate == doctest::Approx(200.0 / 3.0));
            CHECK(split.stations[s].server_count == 1);
            ++stages;
        }
        CHECK(stages == split.stage_count);
    }
    CHECK(probability_sum == doctest::Approx(1.0));

    const Topology pooled = build_topology(sfc, ChainConfig::common_scheduler_mmm(3));
    CHECK(pooled.stations.size() == 4);
    CHECK(pooled.branch_count() == 1);
    for (const Station& station : pooled.stations) {
        CHECK(station.server_count == 3);
        CHECK(station.service_rate == doctest::Approx(200.0 / 3.0));
    }
}

TEST_CASE("both subchain variants at l = 1 collapse to the plain chain") {
    const SfcSpec sfc = table1_chain();
    const Topology sc = build_topology(sfc, ChainConfig::sc());
    for (const ChainConfig& config :
         {ChainConfig::subchain_mm1(1), ChainConfig::common_scheduler_mmm(1)}) {
        const Topology topo = build_topology(sfc, config);
        REQUIRE(topo.stations.size() == sc.stations.size());
        CHECK(topo.branch_count() == 1);
        for (std::size_t s = 0; s < topo.stations.size(); ++s) {
            CHECK(topo.stations[s].service_rate == sc.stations[s].service_rate);
            CHECK(topo.stations[s].server_count == sc.stations[s].server_count);
            CHECK(topo.stations[s].next == sc.stations[s].next);
        }
    }
}

TEST_CASE("simulated mean response tracks the closed forms") {
    const SfcSpec sfc = table1_chain();

    SUBCASE("plain chain") {
        const SimResult result = run_simulation(quick_sim(sfc, ChainConfig::sc(), 11));
        CHECK(std::abs(result.mean_response - 0.04) <= 0.02 * 0.04);
    }
    SUBCASE("three parallel copies") {
        const SimResult result = run_simulation(quick_sim(sfc, ChainConfig::subchain_mm1(3), 12));
        CHECK(std::abs(result.mean_response - 0.12) <= 0.02 * 0.12);
    }
    SUBCASE("six-way split behind one scheduler") {
        const double analytic = sfc_response_mmm(sfc, 6);
        const SimResult result =
            run_simulation(quick_sim(sfc, ChainConfig::common_scheduler_mmm(6), 13));
        CHECK(std::abs(result.mean_response - analytic) <= 0.03 * analytic);
    }
}

TEST_CASE("fixed seeds reproduce bit-identical results at any parallelism") {
    const SfcSpec sfc = table1_chain();
    const SimConfig sim = quick_sim(sfc, ChainConfig::subchain_mm1(3), 77);

    const SimResult a = run_simulation(sim, 1);
    const SimResult b = run_simulation(sim, 1);
    const SimResult c = run_simulation(sim, 4);

    CHECK(a.mean_response == b.mean_response);
    CHECK(a.per_replication_means == b.per_replication_means);
    CHECK(a.mean_response == c.mean_response);
    CHECK(a.ci95_halfwidth == c.ci95_halfwidth);
    CHECK(a.per_replication_means == c.per_replication_means);
    CHECK(a.branch_arrivals == c.branch_arrivals);
    CHECK(a.mean_in_system == c.mean_in_system);

    const SimConfig reseeded = quick_sim(sfc, ChainConfig::subchain_mm1(3), 78);
    CHECK(run_simulation(reseeded).mean_response != a.mean_response);
}

TEST_CASE("probabilistic splitting spreads arrivals evenly across branches") {
    const SfcSpec sfc = table1_chain();
    const int branches = 3;
    const SimResult result =
        run_simulation(quick_sim(sfc, ChainConfig::subchain_mm1(branches), 21));
    REQUIRE(result.branch_arrivals.size() == branches);
    const double total = static_cast<double>(result.total_arrivals);
    const double expected = total / branches;
    const double sigma = std::sqrt(total * (1.0 / branches) * (1.0 - 1.0 / branches));
    for (std::uint64_t count : result.branch_arrivals)
        CHECK(std::abs(static_cast<double>(count) - expected) <= 3.0 * sigma);
}

TEST_CASE("mean population agrees with arrival rate times mean response") {
    const SfcSpec sfc = table1_chain();
    for (const ChainConfig& config : {ChainConfig::sc(), ChainConfig::subchain_mm1(2),
                                      ChainConfig::common_scheduler_mmm(3)}) {
        const SimResult result = run_simulation(quick_sim(sfc, config, 31));
        const double little = sfc.arrival_rate * result.mean_response;
        CHECK(std::abs(result.mean_in_system - little) <= 0.02 * little);
    }
}

TEST_CASE("saturated topologies are rejected before running") {
    SfcSpec sfc = table1_chain();
    sfc.vnfs[1].service_rate = 100.0;
    SimConfig sim;
    sim.topology = build_topology(sfc, ChainConfig::sc());
    sim.arrival_rate = sfc.arrival_rate;
    CHECK_THROWS_AS(run_simulation(sim), UnstableError);
}

TEST_CASE("a queue blowing past its bound reports divergence") {
    SfcSpec sfc;
    sfc.vnfs = {VnfSpec{110.0, 0.9, 1.0}};
    sfc.arrival_rate = 100.0;
    sfc.delay_sla = 1.0;
    SimConfig sim = quick_sim(sfc, ChainConfig::sc(), 5);
    sim.replications = 1;
    sim.warmup_departures = 0;
    sim.measured_departures = 5'000;
    sim.max_queue_length = 10; // rho = 0.91 wanders far beyond this
    CHECK_THROWS_AS(run_simulation(sim), DivergedError);
}

TEST_CASE("runs below the CI-reporting floor are refused") {
    SimConfig sim = quick_sim(table1_chain(), ChainConfig::sc(), 1);
    sim.measured_departures = 999;
    CHECK_THROWS_WITH_AS(run_simulation(sim), doctest::Contains(">= 1000"), ValidationError);
}

TEST_SUITE_END();
