#ifndef SFCPLAN_SIM_HPP
#define SFCPLAN_SIM_HPP

#include <cstdint>
#include <vector>

#include "sfcplan/sfc.hpp"

namespace sfcplan {

/// One queueing station: server_count identical exponential servers of rate
/// service_rate each, behind a single FIFO queue.
struct Station {
    double service_rate = 0.0; // per server
    int server_count = 1;
    int next = -1; // downstream station index, -1 = sink
};

/// Station graph for one (SfcSpec, ChainConfig) pair. Packets enter at one of
/// the entry stations (chosen with the matching probability) and follow the
/// `next` links to the sink; every path visits exactly stage_count stations.
struct Topology {
    std::vector<Station> stations;
    std::vector<int> entry_station;
    std::vector<double> entry_probability;
    int stage_count = 0;

    int branch_count() const { return static_cast<int>(entry_station.size()); }
};

/// sc/scb map to a single path at the original rates (scb backups are cold
/// standby and carry no traffic); subchain_mm1(l) maps to l parallel copies
/// at rates mu/l with a 1/l probabilistic split at the source;
/// common_scheduler_mmm(l) maps to one path of l-server stations at mu/l.
Topology build_topology(const SfcSpec& sfc, const ChainConfig& config);

struct SimConfig {
    Topology topology;
    double arrival_rate = 0.0; // packets/second, Poisson
    std::int64_t warmup_departures = 10'000;
    std::int64_t measured_departures = 100'000; // must be >= 1000 for CI reporting
    int replications = 10;
    std::uint64_t seed = 0;
    std::int64_t max_queue_length = 10'000'000; // DivergedError beyond this
};

struct SimResult {
    double mean_response = 0.0;   // seconds, mean of per-replication means
    double ci95_halfwidth = 0.0;  // across replications
    std::vector<double> per_replication_means;
    std::int64_t departures_counted = 0;
    std::uint64_t seed = 0;
    // Time-average number of packets in the whole system over the measured
    // window, averaged across replications (Little's-law cross-check).
    double mean_in_system = 0.0;
    // Packets routed to each entry branch, summed over replications.
    std::vector<std::uint64_t> branch_arrivals;
    std::uint64_t total_arrivals = 0;
};

/// Event-driven simulation of the topology under Poisson arrivals and
/// exponential service. Sojourn times are recorded per packet from source to
/// sink; the first warmup_departures sink departures are discarded and the
/// next measured_departures are averaged. Bit-reproducible for a fixed seed:
/// replication k always runs on derive_seed(seed, k), and results are
/// combined in replication order, so any replication_jobs value (parallel
/// replications) produces the identical SimResult.
/// Throws UnstableError before running when any station is saturated, and
/// DivergedError if a queue exceeds max_queue_length.
SimResult run_simulation(const SimConfig& config, int replication_jobs = 1);

struct AvailabilityEstimate {
    double estimate = 0.0; // fraction of trials with the chain up
    std::int64_t trials = 0;
    double ci95_halfwidth = 0.0; // normal-approximation binomial
};

/// Monte Carlo availability: each trial draws an independent up/down state
/// for every VNF instance (every replica, backup, and split instance is an
/// independent draw at the same per-VNF probability) and evaluates the
/// configuration's structure function. Availability is a static draw, a
/// separate experiment from the queueing simulation. Requires trials >= 10000.
AvailabilityEstimate estimate_availability(const SfcSpec& sfc, const ChainConfig& config,
                                           std::int64_t trials, std::uint64_t seed);

} // namespace sfcplan

#endif
