#include "sfcplan/planner.hpp"

#include <cmath>
#include <string>

#include "sfcplan/errors.hpp"
#include "sfcplan/queueing.hpp"

namespace sfcplan {

std::string to_string(PlanSetting setting) {
    return setting == PlanSetting::mm1 ? "mm1" : "mmm";
}

PlanSetting parse_plan_setting(const std::string& text) {
    if (text == "mm1") return PlanSetting::mm1;
    if (text == "mmm") return PlanSetting::mmm;
    throw ParseError("unknown setting '" + text + "' (expected mm1 or mmm)");
}

namespace {

void require_valid(const PlanRequest& req) {
    validate(req.sfc);
    if (req.l_max < 1)
        throw ValidationError("l_max must be >= 1, got " + std::to_string(req.l_max));
}

int largest_feasible_by_scan(const PlanRequest& req, double sla) {
    int best = 0;
    for (int l = 1; l <= req.l_max; ++l) {
        if (sfc_response_mmm(req.sfc, l) < sla) best = l;
    }
    return best;
}

} // namespace

PlanResult plan_mm1(const PlanRequest& req) {
    require_valid(req);
    const double base = sfc_response_sc(req.sfc); // throws UnstableError when saturated
    const double sla = req.sfc.delay_sla;
    if (base > sla)
        throw InfeasibleError("plain chain already exceeds the SLA: response " +
                              std::to_string(base) + " s > " + std::to_string(sla) + " s");

    long long l;
    const double ratio = sla / base;
    if (ratio >= static_cast<double>(req.l_max)) {
        l = req.l_max;
    } else {
        l = static_cast<long long>(std::floor(ratio));
        if (l < 1) l = 1;
        // the division can round across the integer boundary in either
        // direction; settle the floor against the constraint itself
        while (static_cast<double>(l + 1) * base <= sla && l + 1 <= req.l_max) ++l;
    }
    while (l > 1 && static_cast<double>(l) * base > sla) --l;

    PlanResult result;
    result.subchains = static_cast<int>(l);
    result.predicted_response = sfc_response_subchain_mm1(req.sfc, result.subchains);
    result.predicted_reliability = reliability_subchain_mm1(req.sfc, result.subchains);
    result.setting = PlanSetting::mm1;
    return result;
}

PlanResult plan_mmm(const PlanRequest& req) {
    require_valid(req);
    const double sla = req.sfc.delay_sla;
    const double at_one = sfc_response_mmm(req.sfc, 1); // throws UnstableError when saturated
    if (!(at_one < sla))
        throw InfeasibleError("single-chain response " + std::to_string(at_one) +
                              " s is not strictly below the SLA " + std::to_string(sla) + " s");

    PlanResult result;
    result.setting = PlanSetting::mmm;

    // Largest l in [1, l_max] with response strictly below the SLA. The
    // response is monotone increasing in l, which makes the feasible set a
    // prefix; binary search maintains lo feasible and hi infeasible.
    int l;
    if (sfc_response_mmm(req.sfc, req.l_max) < sla) {
        l = req.l_max; // cap binds
    } else {
        int lo = 1;
        int hi = req.l_max;
        while (hi - lo > 1) {
            const int mid = lo + (hi - lo) / 2;
            if (sfc_response_mmm(req.sfc, mid) < sla) lo = mid;
            else hi = mid;
        }
        l = lo;
    }

    // Post-search guard: the result must be feasible and l+1 infeasible
    // (unless capped). A violation means the curve was not monotone after
    // all; recompute by exhaustive scan in that case.
    const bool boundary_ok = sfc_response_mmm(req.sfc, l) < sla &&
                             (l == req.l_max || !(sfc_response_mmm(req.sfc, l + 1) < sla));
    if (!boundary_ok) {
        l = largest_feasible_by_scan(req, sla);
        if (l == 0)
            throw InfeasibleError("no split count in [1, l_max] meets the SLA");
        result.used_scan_fallback = true;
    }

    result.subchains = l;
    result.predicted_response = sfc_response_mmm(req.sfc, l);
    result.predicted_reliability = reliability_mmm(req.sfc, l);
    return result;
}

PlanResult plan(const PlanRequest& req) {
    return req.setting == PlanSetting::mm1 ? plan_mm1(req) : plan_mmm(req);
}

} // namespace sfcplan
