#ifndef SFCPLAN_PLANNER_HPP
#define SFCPLAN_PLANNER_HPP

#include <string>

#include "sfcplan/sfc.hpp"

namespace sfcplan {

enum class PlanSetting { mm1, mmm };

std::string to_string(PlanSetting setting);
PlanSetting parse_plan_setting(const std::string& text);

struct PlanRequest {
    SfcSpec sfc;
    PlanSetting setting = PlanSetting::mm1;
    int l_max = 1'000'000;
};

struct PlanResult {
    int subchains = 1;
    double predicted_response = 0.0;    // seconds, always <= sfc.delay_sla
    double predicted_reliability = 0.0; // for the chosen subchain count
    PlanSetting setting = PlanSetting::mm1;
    // Set when the binary search's feasibility-boundary guard failed and the
    // answer was recomputed by linear scan (would indicate a non-monotone
    // response curve).
    bool used_scan_fallback = false;
};

/// Largest subchain count whose end-to-end response stays within the SLA in
/// the per-subchain-scheduler setting: floor(sla / plain-chain response),
/// clamped to [1, l_max]. Constant-time. Throws InfeasibleError when even a
/// single chain exceeds the SLA and UnstableError when any stage saturates.
PlanResult plan_mm1(const PlanRequest& req);

/// Largest split count in [1, l_max] whose common-scheduler response is
/// strictly below the SLA, found by binary search (the response is monotone
/// increasing in the split count, which the search verifies after the fact).
PlanResult plan_mmm(const PlanRequest& req);

/// Dispatches on req.setting.
PlanResult plan(const PlanRequest& req);

} // namespace sfcplan

#endif
