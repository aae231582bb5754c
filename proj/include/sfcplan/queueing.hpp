#ifndef SFCPLAN_QUEUEING_HPP
#define SFCPLAN_QUEUEING_HPP

#include "sfcplan/sfc.hpp"

namespace sfcplan {

/// Offered traffic at one queueing station.
struct StationLoad {
    double arrival_rate = 0.0; // packets/second
    double service_rate = 0.0; // packets/second

    double utilization() const { return arrival_rate / service_rate; }
};

/// Mean response (waiting + service) time of an M/M/1 station, 1/(mu - lambda).
/// Throws UnstableError when arrival_rate >= service_rate.
double mm1_response(const StationLoad& load);

/// Erlang-C probability that an arriving job has to wait in an M/M/m queue
/// with `servers` servers and total offered load `offered_load` = lambda/mu
/// per server summed, i.e. a = lambda / (mu_per_server). Stable for large
/// server counts; never evaluates a factorial.
double erlang_c(int servers, double offered_load);

/// Mean response time of one VNF split into `splits` instances of rate
/// service_rate/splits behind a common scheduler (an M/M/l station).
double mmm_vnf_response(const StationLoad& load, int splits);

/// Mean end-to-end response of the plain chain: sum of per-stage M/M/1
/// responses, every stage seeing the full arrival rate.
/// Throws UnstableError naming the first bottleneck VNF.
double sfc_response_sc(const SfcSpec& sfc);

/// Mean end-to-end response with `subchains` parallel lower-capacity chains.
/// Exactly subchains * sfc_response_sc: each stage runs at mu/l and sees
/// lambda/l, so stability does not depend on the subchain count.
double sfc_response_subchain_mm1(const SfcSpec& sfc, int subchains);

/// Mean end-to-end response when every VNF is an M/M/l station with l
/// instances of rate mu/l behind one scheduler.
double sfc_response_mmm(const SfcSpec& sfc, int splits);

} // namespace sfcplan

#endif
