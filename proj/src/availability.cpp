#include <cmath>
#include <string>

#include "sfcplan/errors.hpp"
#include "sfcplan/rng.hpp"
#include "sfcplan/sim.hpp"

namespace sfcplan {

namespace {

// Structure functions per configuration; every instance is an independent
// Bernoulli draw at its VNF's up probability. Loops stop as soon as the
// trial's outcome is decided.

bool chain_up_sc(const SfcSpec& sfc, Rng& rng) {
    for (const auto& vnf : sfc.vnfs)
        if (!rng.bernoulli(vnf.reliability)) return false;
    return true;
}

bool stage_any_up(double reliability, int instances, Rng& rng) {
    for (int i = 0; i < instances; ++i)
        if (rng.bernoulli(reliability)) return true;
    return false;
}

bool chain_up_per_stage(const SfcSpec& sfc, int instances_per_stage, Rng& rng) {
    for (const auto& vnf : sfc.vnfs)
        if (!stage_any_up(vnf.reliability, instances_per_stage, rng)) return false;
    return true;
}

bool chain_up_subchains(const SfcSpec& sfc, int subchains, Rng& rng) {
    for (int i = 0; i < subchains; ++i)
        if (chain_up_sc(sfc, rng)) return true;
    return false;
}

} // namespace

AvailabilityEstimate estimate_availability(const SfcSpec& sfc, const ChainConfig& config,
                                           std::int64_t trials, std::uint64_t seed) {
    validate(sfc);
    validate(config);
    if (trials < 10'000)
        throw ValidationError("availability estimation needs trials >= 10000, got " +
                              std::to_string(trials));

    Rng rng(seed);
    std::int64_t up = 0;
    switch (config.variant) {
    case ChainVariant::sc:
        for (std::int64_t t = 0; t < trials; ++t) up += chain_up_sc(sfc, rng);
        break;
    case ChainVariant::scb:
        for (std::int64_t t = 0; t < trials; ++t)
            up += chain_up_per_stage(sfc, config.count + 1, rng);
        break;
    case ChainVariant::subchain_mm1:
        for (std::int64_t t = 0; t < trials; ++t)
            up += chain_up_subchains(sfc, config.count, rng);
        break;
    case ChainVariant::common_scheduler_mmm:
        for (std::int64_t t = 0; t < trials; ++t)
            up += chain_up_per_stage(sfc, config.count, rng);
        break;
    }

    AvailabilityEstimate estimate;
    estimate.trials = trials;
    estimate.estimate = static_cast<double>(up) / static_cast<double>(trials);
    estimate.ci95_halfwidth =
        1.96 * std::sqrt(estimate.estimate * (1.0 - estimate.estimate) / static_cast<double>(trials));
    return estimate;
}

} // namespace sfcplan
