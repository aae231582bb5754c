#include <doctest.h>

#include <cmath>
#include <random>

#include "sfcplan/errors.hpp"
#include "sfcplan/sfc.hpp"
#include "sfcplan/sim.hpp"
#include "test_helpers.hpp"

using namespace sfcplan;
using sfcplan::testing::random_chain;
using sfcplan::testing::table1_chain;

namespace {

void check_within_3_sigma(const SfcSpec& sfc, const ChainConfig& config, double closed_form,
                          std::int64_t trials, std::uint64_t seed) {
    const AvailabilityEstimate result = estimate_availability(sfc, config, trials, seed);
    const double sigma = std::sqrt(closed_form * (1.0 - closed_form) / static_cast<double>(trials));
    CHECK(std::abs(result.estimate - closed_form) <= 3.0 * sigma + 1e-15);
    CHECK(result.trials == trials);
    CHECK(result.ci95_halfwidth >= 0.0);
}

} // namespace

TEST_SUITE_BEGIN("availability");

TEST_CASE("perfect stages give exactly 1.0 in every configuration") {
    SfcSpec sfc;
    sfc.vnfs.assign(3, VnfSpec{200.0, 1.0, 1.0});
    sfc.arrival_rate = 100.0;
    sfc.delay_sla = 1.0;
    for (const ChainConfig& config : {ChainConfig::sc(), ChainConfig::scb(2),
                                      ChainConfig::subchain_mm1(4),
                                      ChainConfig::common_scheduler_mmm(4)}) {
        CHECK(estimate_availability(sfc, config, 50'000, 3).estimate == 1.0);
    }
}

TEST_CASE("estimates land within 3 sigma of the closed forms (benchmark chain)") {
    const SfcSpec sfc = table1_chain();
    const std::int64_t trials = 1'000'000;
    check_within_3_sigma(sfc, ChainConfig::sc(), reliability_sc(sfc), trials, 101);
    check_within_3_sigma(sfc, ChainConfig::scb(1), reliability_scb(sfc, 1), trials, 102);
    check_within_3_sigma(sfc, ChainConfig::subchain_mm1(3), reliability_subchain_mm1(sfc, 3),
                         trials, 103);
    check_within_3_sigma(sfc, ChainConfig::common_scheduler_mmm(3), reliability_mmm(sfc, 3),
                         trials, 104);
}

TEST_CASE("estimates land within 3 sigma of the closed forms (random chains)") {
    std::mt19937_64 gen(7301);
    std::uniform_int_distribution<int> count_dist(1, 5);
    for (int i = 0; i < 20; ++i) {
        const SfcSpec sfc = random_chain(gen);
        const int k = count_dist(gen);
        const std::uint64_t seed = 1000 + i;
        check_within_3_sigma(sfc, ChainConfig::sc(), reliability_sc(sfc), 100'000, seed);
        check_within_3_sigma(sfc, ChainConfig::scb(k), reliability_scb(sfc, k), 100'000, seed + 1);
        check_within_3_sigma(sfc, ChainConfig::subchain_mm1(k), reliability_subchain_mm1(sfc, k),
                             100'000, seed + 2);
        check_within_3_sigma(sfc, ChainConfig::common_scheduler_mmm(k), reliability_mmm(sfc, k),
                             100'000, seed + 3);
    }
}

TEST_CASE("estimation is deterministic per seed and refuses tiny runs") {
    const SfcSpec sfc = table1_chain();
    const AvailabilityEstimate a = estimate_availability(sfc, ChainConfig::sc(), 10'000, 9);
    const AvailabilityEstimate b = estimate_availability(sfc, ChainConfig::sc(), 10'000, 9);
    CHECK(a.estimate == b.estimate);
    CHECK_THROWS_WITH_AS(estimate_availability(sfc, ChainConfig::sc(), 9'999, 9),
                         doctest::Contains(">= 10000"), ValidationError);
}

TEST_SUITE_END();
