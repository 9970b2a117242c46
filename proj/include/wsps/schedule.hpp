#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsps/envelope.hpp"
#include "wsps/errors.hpp"
#include "wsps/job.hpp"
#include "wsps/numeric.hpp"

namespace wsps {

// One job's slot on the shared processor. Processing time and weight are
// copied from the instance so a schedule can be checked on its own.
struct ScheduleEntry {
    std::string id;
    double p = 0.0;
    double w = 0.0;
    double start = 0.0;       // when the job enters the shared processor
    double completion = 0.0;  // when it finishes, on both processors at once

    double overlap() const noexcept { return completion - start; }
};

// A synchronized schedule: an ordered subset of jobs on the shared processor,
// back to back from time 0, each finishing on the shared and its private
// processor simultaneously. Jobs not listed run privately and contribute 0.
struct SyncSchedule {
    std::vector<ScheduleEntry> entries;
    double objective = 0.0;  // total weighted overlap

    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
};

// Recomputes the total weighted overlap from the entries. For a well-formed
// schedule this equals the stored objective.
inline double total_weighted_overlap(const SyncSchedule& schedule) {
    double sum = 0.0;
    for (const ScheduleEntry& entry : schedule.entries) {
        sum += entry.w * (entry.completion - entry.start);
    }
    return sum;
}

// Builds the synchronized schedule for the given order of instance positions.
// Each job starts where the previous one completed and completes halfway
// between its start and its processing time:
//
//   start[0] = 0,  completion[i] = (start[i] + p[i]) / 2,  start[i+1] = completion[i]
//
// Throws InfeasiblePermutation if a job's start would reach its processing
// time (its shared interval would be empty or negative).
inline SyncSchedule build_schedule(const Instance& instance, std::span<const std::size_t> order) {
    std::vector<bool> used(instance.size(), false);
    SyncSchedule schedule;
    schedule.entries.reserve(order.size());
    double clock = 0.0;
    for (std::size_t pos : order) {
        if (pos >= instance.size()) {
            throw UnknownJob("position " + std::to_string(pos));
        }
        if (used[pos]) {
            throw DuplicateId(instance[pos].id);
        }
        used[pos] = true;
        const Job& job = instance[pos];
        if (clock >= job.p) {
            throw InfeasiblePermutation(job.id);
        }
        const double completion = (clock + job.p) / 2.0;
        schedule.entries.push_back({job.id, job.p, job.w, clock, completion});
        schedule.objective += job.w * (completion - clock);
        clock = completion;
    }
    return schedule;
}

inline SyncSchedule build_schedule(const Instance& instance, std::span<const std::string> order) {
    std::unordered_map<std::string, std::size_t> position;
    position.reserve(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) {
        position.emplace(instance[i].id, i);
    }
    std::vector<std::size_t> resolved;
    resolved.reserve(order.size());
    for (const std::string& id : order) {
        auto it = position.find(id);
        if (it == position.end()) {
            throw UnknownJob(id);
        }
        resolved.push_back(it->second);
    }
    return build_schedule(instance, resolved);
}

enum class ViolationKind {
    UnknownJob,         // entry id not present in the instance
    DuplicateJob,       // same job appears twice on the shared processor
    ParameterMismatch,  // entry p or w differs from the instance
    Gap,                // idle time before this entry's start
    Overlap,            // this entry starts before the previous one completed
    Desync,             // completion differs from (start + p) / 2
    EmptyInterval,      // shared interval has nonpositive length
    ObjectiveMismatch,  // stored objective differs from the recomputed sum
};

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::UnknownJob: return "unknown-job";
        case ViolationKind::DuplicateJob: return "duplicate-job";
        case ViolationKind::ParameterMismatch: return "parameter-mismatch";
        case ViolationKind::Gap: return "gap";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::Desync: return "desync";
        case ViolationKind::EmptyInterval: return "empty-interval";
        case ViolationKind::ObjectiveMismatch: return "objective-mismatch";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::string job_id;  // empty for schedule-level violations
    std::string detail;
};

// Re-derives every schedule invariant against the instance and reports one
// violation per broken invariant. An empty result means the schedule is a
// valid synchronized schedule for the instance.
inline std::vector<Violation> validate_schedule(const Instance& instance,
                                                const SyncSchedule& schedule) {
    std::vector<Violation> violations;
    std::unordered_map<std::string, std::size_t> position;
    position.reserve(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) {
        position.emplace(instance[i].id, i);
    }

    std::unordered_map<std::string, int> seen;
    double prev_completion = 0.0;
    for (const ScheduleEntry& entry : schedule.entries) {
        double p = entry.p;
        auto it = position.find(entry.id);
        if (it == position.end()) {
            violations.push_back({ViolationKind::UnknownJob, entry.id, "job not in instance"});
        } else {
            const Job& job = instance[it->second];
            p = job.p;
            if (!approx_equal(entry.p, job.p) || !approx_equal(entry.w, job.w)) {
                violations.push_back({ViolationKind::ParameterMismatch, entry.id,
                                      "entry p/w differ from the instance"});
            }
        }
        if (++seen[entry.id] == 2) {
            violations.push_back(
                {ViolationKind::DuplicateJob, entry.id, "job scheduled more than once"});
        }

        if (!approx_equal(entry.start, prev_completion)) {
            if (entry.start > prev_completion) {
                violations.push_back({ViolationKind::Gap, entry.id,
                                      "starts at " + std::to_string(entry.start) + " but " +
                                          std::to_string(prev_completion) + " was free"});
            } else {
                violations.push_back({ViolationKind::Overlap, entry.id,
                                      "starts at " + std::to_string(entry.start) +
                                          " before the previous completion " +
                                          std::to_string(prev_completion)});
            }
        }
        const double expected_completion = (entry.start + p) / 2.0;
        if (!approx_equal(entry.completion, expected_completion)) {
            violations.push_back({ViolationKind::Desync, entry.id,
                                  "completion " + std::to_string(entry.completion) +
                                      " != (start + p) / 2 = " +
                                      std::to_string(expected_completion)});
        }
        if (entry.overlap() <= kRelTol * std::max(1.0, p)) {
            violations.push_back(
                {ViolationKind::EmptyInterval, entry.id, "shared interval has no length"});
        }
        prev_completion = entry.completion;
    }

    if (!approx_equal(schedule.objective, total_weighted_overlap(schedule))) {
        violations.push_back({ViolationKind::ObjectiveMismatch, "",
                              "stored objective differs from the recomputed overlap sum"});
    }
    return violations;
}

// The step function whose breakpoints are the completion times and whose
// heights are the weights of the scheduled jobs, in order. Its area equals
// the schedule's total weighted overlap: the i-th term telescopes to
// w[i] * (C[i] - C[i-1]) = w[i] * (completion - start).
inline Envelope schedule_envelope(const SyncSchedule& schedule) {
    if (schedule.empty()) {
        throw EmptySchedule("cannot build an envelope of an empty schedule");
    }
    std::vector<double> breakpoints;
    std::vector<double> heights;
    breakpoints.reserve(schedule.size());
    heights.reserve(schedule.size());
    for (const ScheduleEntry& entry : schedule.entries) {
        breakpoints.push_back(entry.completion);
        heights.push_back(entry.w);
    }
    return Envelope(std::move(breakpoints), std::move(heights));
}

}  // namespace wsps
