#include "sfcplan/queueing.hpp"

#include <string>

#include "sfcplan/errors.hpp"

namespace sfcplan {

namespace {

void require_positive_rates(const StationLoad& load) {
    if (!(load.arrival_rate > 0.0))
        throw ValidationError("arrival_rate must be > 0, got " + std::to_string(load.arrival_rate));
    if (!(load.service_rate > 0.0))
        throw ValidationError("service_rate must be > 0, got " + std::to_string(load.service_rate));
}

void require_stable(const StationLoad& load) {
    if (load.arrival_rate >= load.service_rate)
        throw UnstableError("station saturated: arrival_rate " + std::to_string(load.arrival_rate) +
                            " >= service_rate " + std::to_string(load.service_rate));
}

void require_stable(const SfcSpec& sfc) {
    const int bottleneck = sfc.bottleneck_index();
    if (bottleneck >= 0)
        throw UnstableError("vnf[" + std::to_string(bottleneck) + "] saturated: arrival_rate " +
                            std::to_string(sfc.arrival_rate) + " >= service_rate " +
                            std::to_string(sfc.vnfs[bottleneck].service_rate));
}

} // namespace

double mm1_response(const StationLoad& load) {
    require_positive_rates(load);
    require_stable(load);
    return 1.0 / (load.service_rate - load.arrival_rate);
}

double erlang_c(int servers, double offered_load) {
    if (servers < 1)
        throw ValidationError("erlang_c needs servers >= 1, got " + std::to_string(servers));
    if (!(offered_load > 0.0))
        throw ValidationError("erlang_c needs offered_load > 0, got " + std::to_string(offered_load));
    const double capacity = static_cast<double>(servers);
    if (offered_load >= capacity)
        throw UnstableError("erlang_c: offered_load " + std::to_string(offered_load) +
                            " >= servers " + std::to_string(servers));

    // Running-term recurrence over a^i/i!. Scaling term and sum by the same
    // factor leaves the final ratio unchanged, so the terms are renormalized
    // whenever they grow large; factorials never appear explicitly.
    double term = 1.0; // a^0/0!
    double sum = 0.0;  // sum_{i=0}^{m-1} a^i/i!
    for (int i = 0; i < servers; ++i) {
        sum += term;
        term *= offered_load / static_cast<double>(i + 1);
        if (term > 1e280) {
            term *= 1e-280;
            sum *= 1e-280;
        }
    }
    const double waiting_mass = term / (1.0 - offered_load / capacity); // a^m/(m!(1-rho))
    return waiting_mass / (sum + waiting_mass);
}

double mmm_vnf_response(const StationLoad& load, int splits) {
    require_positive_rates(load);
    if (splits < 1)
        throw ValidationError("split count must be >= 1, got " + std::to_string(splits));
    require_stable(load);
    const double l = static_cast<double>(splits);
    const double rho = load.utilization();
    const double waiting = erlang_c(splits, l * rho);
    return (l / load.service_rate) * (1.0 + waiting / (l * (1.0 - rho)));
}

double sfc_response_sc(const SfcSpec& sfc) {
    validate(sfc);
    require_stable(sfc);
    double total = 0.0;
    for (const auto& vnf : sfc.vnfs) total += 1.0 / (vnf.service_rate - sfc.arrival_rate);
    return total;
}

double sfc_response_subchain_mm1(const SfcSpec& sfc, int subchains) {
    if (subchains < 1)
        throw ValidationError("subchain count must be >= 1, got " + std::to_string(subchains));
    // lambda/l against mu/l: the per-stage term is exactly l/(mu - lambda),
    // so the total is exactly l times the plain-chain response.
    return static_cast<double>(subchains) * sfc_response_sc(sfc);
}

double sfc_response_mmm(const SfcSpec& sfc, int splits) {
    validate(sfc);
    if (splits < 1)
        throw ValidationError("split count must be >= 1, got " + std::to_string(splits));
    require_stable(sfc);
    double total = 0.0;
    for (const auto& vnf : sfc.vnfs)
        total += mmm_vnf_response({sfc.arrival_rate, vnf.service_rate}, splits);
    return total;
}

} // namespace sfcplan
