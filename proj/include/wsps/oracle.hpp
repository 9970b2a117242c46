#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsps/envelope.hpp"
#include "wsps/errors.hpp"
#include "wsps/job.hpp"
#include "wsps/schedule.hpp"

namespace wsps {

struct OracleResult {
    SyncSchedule best_schedule;
    double optimum = 0.0;          // equals best_schedule.objective
    std::uint64_t explored = 0;    // feasible ordered subsets evaluated, empty one included
};

inline constexpr std::size_t kDefaultOracleLimit = 10;

namespace detail {

// Depth-first enumeration of ordered subsets. A job whose processing time
// the running clock has already reached is skipped together with every
// extension that would place it later: starts only grow along a prefix, so
// such extensions stay infeasible.
class BruteForceSearch {
public:
    explicit BruteForceSearch(const Instance& instance) : instance_(instance) {
        used_.assign(instance.size(), false);
        prefix_.reserve(instance.size());
    }

    void run() {
        ++explored_;  // the empty schedule, objective 0
        descend(0.0, 0.0);
    }

    const std::vector<std::size_t>& best_order() const noexcept { return best_order_; }
    std::uint64_t explored() const noexcept { return explored_; }

private:
    void descend(double clock, double objective) {
        for (std::size_t pos = 0; pos < instance_.size(); ++pos) {
            if (used_[pos] || clock >= instance_[pos].p) continue;
            const double completion = (clock + instance_[pos].p) / 2.0;
            const double extended = objective + instance_[pos].w * (completion - clock);
            ++explored_;
            prefix_.push_back(pos);
            if (extended > best_objective_) {
                best_objective_ = extended;
                best_order_ = prefix_;
            }
            used_[pos] = true;
            descend(completion, extended);
            used_[pos] = false;
            prefix_.pop_back();
        }
    }

    const Instance& instance_;
    std::vector<bool> used_;
    std::vector<std::size_t> prefix_;
    std::vector<std::size_t> best_order_;
    double best_objective_ = 0.0;
    std::uint64_t explored_ = 0;
};

}  // namespace detail

// Evaluates every feasible ordered subset of jobs and returns the maximizer.
// Ground truth for small instances; deliberately without any bounding beyond
// feasibility pruning. Ties at the optimum resolve to the first maximizer in
// lexicographic position order.
inline OracleResult brute_force_opt(const Instance& instance,
                                    std::size_t limit = kDefaultOracleLimit) {
    if (instance.size() > limit) {
        throw InstanceTooLarge("brute force limited to " + std::to_string(limit) +
                               " jobs, got " + std::to_string(instance.size()));
    }
    detail::BruteForceSearch search(instance);
    search.run();
    OracleResult result;
    result.best_schedule = build_schedule(instance, search.best_order());
    result.optimum = result.best_schedule.objective;
    result.explored = search.explored();
    return result;
}

// Area of the envelope spanned by the optimal schedule's completion times
// and weights. By the envelope identity this equals the optimum itself.
inline double optimal_envelope_area(const OracleResult& result) {
    return envelope_area(schedule_envelope(result.best_schedule));
}

}  // namespace wsps
