#ifndef SFCPLAN_SCENARIO_HPP
#define SFCPLAN_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfcplan/sfc.hpp"

namespace sfcplan {

/// Integer sweep over one variable ("l", "b", or "vnf_count").
struct SweepSpec {
    std::string variable;
    int first = 1;
    int last = 1;
    int step = 1;

    std::vector<int> values() const;
};

/// Optional overrides for simulation effort; unset fields fall back to the
/// library defaults.
struct SimOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> warmup_departures;
    std::optional<std::int64_t> measured_departures;
    std::optional<int> replications;
    std::optional<std::int64_t> trials;
    std::optional<std::int64_t> max_queue_length;
};

struct Scenario {
    int schema_version = 1;
    std::string name;
    SfcSpec sfc;
    std::vector<ChainConfig> configs;
    SimOverrides sim;
    std::vector<SweepSpec> sweeps;

    const SweepSpec* sweep_for(std::string_view variable) const;
};

/// Parses the line-oriented scenario format (see scenarios/table1.scenario).
/// `origin` is used as the file name in "file:line: message" diagnostics.
/// Throws ParseError for malformed lines and ValidationError for invariant
/// violations, both naming the offending line and field.
Scenario parse_scenario(std::string_view text, const std::string& origin);

/// Reads and parses a scenario file.
Scenario load_scenario(const std::string& path);

/// The bundled default scenario (four identical stages at half load); the
/// same content ships as scenarios/table1.scenario.
const char* table1_scenario_text();

} // namespace sfcplan

#endif
