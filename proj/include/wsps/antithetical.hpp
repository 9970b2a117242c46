#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "wsps/errors.hpp"
#include "wsps/job.hpp"
#include "wsps/schedule.hpp"

namespace wsps {

// An instance is antithetical when p_i <= p_j implies w_i >= w_j for every
// job pair: shorter jobs are never lighter. Over the normalized order this
// reduces to non-increasing weights, with equal processing times forcing
// equal weights (the implication runs both ways for tied jobs).
inline bool is_antithetical(const Instance& instance) {
    for (std::size_t i = 0; i + 1 < instance.size(); ++i) {
        const Job& a = instance[i];
        const Job& b = instance[i + 1];
        if (a.w < b.w) return false;
        if (a.p == b.p && a.w != b.w) return false;
    }
    return true;
}

// Schedules every job on the shared processor in processing-time order. For
// antithetical instances this is optimal. The full order is always feasible:
// each start stays strictly below the previous processing time, hence below
// the next, larger-or-equal one.
inline SyncSchedule solve_antithetical(const Instance& instance) {
    if (!is_antithetical(instance)) {
        throw NotAntithetical("processing-time order is only guaranteed optimal for antithetical instances");
    }
    std::vector<std::size_t> order(instance.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return build_schedule(instance, order);
}

}  // namespace wsps
