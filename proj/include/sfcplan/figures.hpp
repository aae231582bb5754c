#ifndef SFCPLAN_FIGURES_HPP
#define SFCPLAN_FIGURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sfcplan/csv.hpp"
#include "sfcplan/scenario.hpp"

namespace sfcplan {

struct FigureOptions {
    std::uint64_t seed = 42;
    bool with_simulation = true; // 5a/5d/5e carry simulated points by default
    SimOverrides sim;            // effort overrides on top of the scenario's
    int jobs = 1;                // concurrent sweep points
};

/// Known sweep ids, in order: 5a reliability vs subchains, 5b resources vs
/// subchains, 5c planned subchains vs chain length, 5d/5e response vs
/// subchains (5e adds the SLA budget as its own series), 5f reliability vs
/// chain length at the planned subchain count.
const std::vector<std::string>& figure_ids();

/// Builds the CSV rows for one figure id from a scenario. The subchain range
/// defaults to [1, planned l + 2] and the chain-length range to [2, 10];
/// scenario sweeps over "l" / "b" / "vnf_count" override them.
/// Throws ValidationError for an unknown figure id.
std::vector<CsvRow> make_figure(const std::string& figure_id, const Scenario& scenario,
                                const FigureOptions& options);

} // namespace sfcplan

#endif
