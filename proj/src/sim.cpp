#include "sfcplan/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <queue>
#include <string>

#include "sfcplan/errors.hpp"
#include "sfcplan/rng.hpp"

namespace sfcplan {

Topology build_topology(const SfcSpec& sfc, const ChainConfig& config) {
    validate(sfc);
    validate(config);
    const int stages = static_cast<int>(sfc.vnfs.size());
    Topology topo;
    topo.stage_count = stages;

    auto add_chain = [&](double rate_divisor, int servers) {
        const int first = static_cast<int>(topo.stations.size());
        for (int v = 0; v < stages; ++v) {
            Station station;
            station.service_rate = sfc.vnfs[v].service_rate / rate_divisor;
            station.server_count = servers;
            station.next = (v + 1 < stages) ? first + v + 1 : -1;
            topo.stations.push_back(station);
        }
        return first;
    };

    switch (config.variant) {
    case ChainVariant::sc:
    case ChainVariant::scb:
        // scb backups are cold standby and carry no traffic, so the queueing
        // path is identical to sc.
        topo.entry_station.push_back(add_chain(1.0, 1));
        topo.entry_probability.push_back(1.0);
        break;
    case ChainVariant::subchain_mm1: {
        const int l = config.count;
        for (int i = 0; i < l; ++i) {
            topo.entry_station.push_back(add_chain(static_cast<double>(l), 1));
            topo.entry_probability.push_back(1.0 / static_cast<double>(l));
        }
        break;
    }
    case ChainVariant::common_scheduler_mmm: {
        const int l = config.count;
        topo.entry_station.push_back(add_chain(static_cast<double>(l), l));
        topo.entry_probability.push_back(1.0);
        break;
    }
    }
    return topo;
}

namespace {

struct Event {
    double time = 0.0;
    std::uint64_t seq = 0; // insertion order; breaks time ties deterministically
    std::int32_t station = -1; // -1 = external arrival
    std::int32_t packet = -1;
};

struct LaterEvent {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

struct StationState {
    std::deque<std::int32_t> waiting;
    int busy_servers = 0;
};

struct ReplicationStats {
    double mean_response = 0.0;
    double mean_in_system = 0.0;
    std::vector<std::uint64_t> branch_arrivals;
    std::uint64_t total_arrivals = 0;
};

class Replication {
public:
    Replication(const SimConfig& config, std::uint64_t seed)
        : config_(config), topo_(config.topology), rng_(seed),
          states_(topo_.stations.size()),
          branch_arrivals_(topo_.entry_station.size(), 0) {}

    ReplicationStats run() {
        schedule(rng_.exponential(config_.arrival_rate), -1, -1);
        if (config_.warmup_departures == 0) mark_window_start(0.0);

        const std::int64_t target = config_.warmup_departures + config_.measured_departures;
        while (departures_ < target) {
            const Event event = pop();
            if (event.station < 0) handle_external_arrival(event.time);
            else handle_service_completion(event);
        }

        ReplicationStats stats;
        stats.mean_response = response_sum_ / static_cast<double>(config_.measured_departures);
        const double window = window_end_ - window_start_;
        stats.mean_in_system = window > 0.0 ? (area_at_end_ - area_at_start_) / window : 0.0;
        stats.branch_arrivals = branch_arrivals_;
        stats.total_arrivals = total_arrivals_;
        return stats;
    }

private:
    void schedule(double time, std::int32_t station, std::int32_t packet) {
        heap_.push(Event{time, next_seq_++, station, packet});
    }

    Event pop() {
        const Event event = heap_.top();
        heap_.pop();
        return event;
    }

    void account_population(double now) {
        area_ += static_cast<double>(in_system_) * (now - last_change_);
        last_change_ = now;
    }

    void mark_window_start(double now) {
        window_start_ = now;
        area_at_start_ = area_;
        measuring_ = true;
    }

    int choose_branch() {
        if (topo_.entry_station.size() == 1) return 0;
        const double u = rng_.next_unit();
        double acc = 0.0;
        const int last = static_cast<int>(topo_.entry_station.size()) - 1;
        for (int i = 0; i < last; ++i) {
            acc += topo_.entry_probability[i];
            if (u <= acc) return i;
        }
        return last;
    }

    void start_service(std::int32_t station, std::int32_t packet, double now) {
        ++states_[station].busy_servers;
        schedule(now + rng_.exponential(topo_.stations[station].service_rate), station, packet);
    }

    void enter_station(std::int32_t station, std::int32_t packet, double now) {
        StationState& state = states_[station];
        if (state.busy_servers < topo_.stations[station].server_count) {
            start_service(station, packet, now);
            return;
        }
        state.waiting.push_back(packet);
        if (static_cast<std::int64_t>(state.waiting.size()) > config_.max_queue_length)
            throw DivergedError("station " + std::to_string(station) + " queue exceeded " +
                                std::to_string(config_.max_queue_length) + " packets");
    }

    void handle_external_arrival(double now) {
        account_population(now);
        ++in_system_;
        ++total_arrivals_;
        const std::int32_t packet = static_cast<std::int32_t>(packet_arrival_.size());
        packet_arrival_.push_back(now);
        const int branch = choose_branch();
        ++branch_arrivals_[branch];
        enter_station(topo_.entry_station[branch], packet, now);
        schedule(now + rng_.exponential(config_.arrival_rate), -1, -1);
    }

    void handle_service_completion(const Event& event) {
        StationState& state = states_[event.station];
        --state.busy_servers;
        const int next = topo_.stations[event.station].next;
        if (next >= 0) {
            enter_station(next, event.packet, event.time);
        } else {
            record_departure(event.packet, event.time);
        }
        if (!state.waiting.empty()) {
            const std::int32_t queued = state.waiting.front();
            state.waiting.pop_front();
            start_service(event.station, queued, event.time);
        }
    }

    void record_departure(std::int32_t packet, double now) {
        account_population(now);
        --in_system_;
        ++departures_;
        if (departures_ == config_.warmup_departures) {
            mark_window_start(now);
            return;
        }
        if (measuring_) {
            response_sum_ += now - packet_arrival_[packet];
            if (departures_ == config_.warmup_departures + config_.measured_departures) {
                window_end_ = now;
                area_at_end_ = area_;
            }
        }
    }

    const SimConfig& config_;
    const Topology& topo_;
    Rng rng_;
    std::priority_queue<Event, std::vector<Event>, LaterEvent> heap_;
    std::vector<StationState> states_;
    std::vector<double> packet_arrival_;
    std::vector<std::uint64_t> branch_arrivals_;
    std::uint64_t next_seq_ = 0;
    std::uint64_t total_arrivals_ = 0;
    std::int64_t departures_ = 0;
    std::int64_t in_system_ = 0;
    double last_change_ = 0.0;
    double area_ = 0.0;
    bool measuring_ = false;
    double window_start_ = 0.0;
    double window_end_ = 0.0;
    double area_at_start_ = 0.0;
    double area_at_end_ = 0.0;
    double response_sum_ = 0.0;
};

void require_runnable(const SimConfig& config) {
    if (config.topology.stations.empty() || config.topology.entry_station.empty())
        throw ValidationError("topology has no stations");
    if (!(config.arrival_rate > 0.0))
        throw ValidationError("arrival_rate must be > 0, got " + std::to_string(config.arrival_rate));
    if (config.warmup_departures < 0)
        throw ValidationError("warmup_departures must be >= 0");
    if (config.measured_departures < 1000)
        throw ValidationError("measured_departures must be >= 1000 for CI reporting, got " +
                              std::to_string(config.measured_departures));
    if (config.replications < 1)
        throw ValidationError("replications must be >= 1, got " + std::to_string(config.replications));
    if (config.max_queue_length < 1)
        throw ValidationError("max_queue_length must be >= 1");

    double probability_sum = 0.0;
    for (double p : config.topology.entry_probability) probability_sum += p;
    if (std::abs(probability_sum - 1.0) > 1e-9)
        throw ValidationError("entry probabilities must sum to 1");

    // Stability precheck: every station's offered rate against its capacity.
    for (std::size_t b = 0; b < config.topology.entry_station.size(); ++b) {
        const double branch_rate = config.arrival_rate * config.topology.entry_probability[b];
        for (int s = config.topology.entry_station[b]; s >= 0; s = config.topology.stations[s].next) {
            const Station& station = config.topology.stations[s];
            const double capacity = station.service_rate * station.server_count;
            if (branch_rate >= capacity)
                throw UnstableError("station " + std::to_string(s) + " saturated: arrival rate " +
                                    std::to_string(branch_rate) + " >= capacity " +
                                    std::to_string(capacity));
        }
    }
}

} // namespace

SimResult run_simulation(const SimConfig& config, int replication_jobs) {
    require_runnable(config);
    if (replication_jobs < 1) replication_jobs = 1;

    const int replications = config.replications;
    std::vector<ReplicationStats> outcomes(replications);

    // Replication k always runs on derive_seed(seed, k); outcomes are merged
    // in replication order, so the result is identical for any job count.
    if (replication_jobs == 1) {
        for (int k = 0; k < replications; ++k)
            outcomes[k] = Replication(config, derive_seed(config.seed, k)).run();
    } else {
        std::vector<std::future<ReplicationStats>> futures(replications);
        for (int k = 0; k < replications; ++k) {
            futures[k] = std::async(std::launch::async, [&config, k] {
                return Replication(config, derive_seed(config.seed, k)).run();
            });
        }
        for (int k = 0; k < replications; ++k) outcomes[k] = futures[k].get();
    }

    SimResult result;
    result.seed = config.seed;
    result.departures_counted = config.measured_departures * replications;
    result.branch_arrivals.assign(config.topology.entry_station.size(), 0);
    result.per_replication_means.reserve(replications);

    double response_total = 0.0;
    double in_system_total = 0.0;
    for (const auto& outcome : outcomes) {
        result.per_replication_means.push_back(outcome.mean_response);
        response_total += outcome.mean_response;
        in_system_total += outcome.mean_in_system;
        result.total_arrivals += outcome.total_arrivals;
        for (std::size_t b = 0; b < result.branch_arrivals.size(); ++b)
            result.branch_arrivals[b] += outcome.branch_arrivals[b];
    }
    result.mean_response = response_total / replications;
    result.mean_in_system = in_system_total / replications;

    if (replications > 1) {
        double squared = 0.0;
        for (double mean : result.per_replication_means) {
            const double d = mean - result.mean_response;
            squared += d * d;
        }
        const double stddev = std::sqrt(squared / (replications - 1));
        result.ci95_halfwidth = 1.96 * stddev / std::sqrt(static_cast<double>(replications));
    }
    return result;
}

} // namespace sfcplan
