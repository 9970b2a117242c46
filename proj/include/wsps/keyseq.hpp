#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "wsps/envelope.hpp"
#include "wsps/errors.hpp"
#include "wsps/job.hpp"
#include "wsps/schedule.hpp"

namespace wsps {

// The unique subsequence of instance positions i_1 < ... < i_l with
//   (i)   i_l = n-1 (the longest job closes the sequence),
//   (ii)  strictly decreasing weights,
//   (iii) every skipped position weighs no more than the key position
//         closing its block.
// Its upper envelope steps over the key processing times with the key
// weights as heights; the envelope's area ustar upper-bounds the optimum
// and lower-bounds twice the key schedule's objective.
struct KeySequence {
    std::vector<std::size_t> indices;  // positions into the normalized instance
    Envelope upper_envelope;
    double ustar = 0.0;
};

// Checks conditions (i)-(iii) directly. Returns false as well when indices
// is not a strictly increasing sequence of valid positions.
inline bool verify_key_conditions(const Instance& instance,
                                  std::span<const std::size_t> indices) {
    if (instance.empty() || indices.empty()) return false;
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= instance.size()) return false;
        if (j > 0 && indices[j] <= indices[j - 1]) return false;
    }
    // (i): ends at the last (longest) job
    if (indices.back() != instance.size() - 1) return false;
    // (ii): strictly decreasing weights
    for (std::size_t j = 0; j + 1 < indices.size(); ++j) {
        if (!(instance[indices[j]].w > instance[indices[j + 1]].w)) return false;
    }
    // (iii): each block (prev key, this key] is dominated by its key weight
    std::size_t block_start = 0;
    for (std::size_t key : indices) {
        for (std::size_t k = block_start; k <= key; ++k) {
            if (instance[k].w > instance[key].w) return false;
        }
        block_start = key + 1;
    }
    return true;
}

// Builds the key sequence with a right-to-left scan: a position enters it
// exactly when its weight strictly exceeds the largest weight seen so far,
// i.e. the key positions are the strict suffix maxima of the weight list.
// O(n) over the normalized instance.
inline KeySequence key_sequence(const Instance& instance) {
    if (instance.empty()) {
        throw EmptyInstance("key sequence requires at least one job");
    }
    std::vector<std::size_t> indices;
    double suffix_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = instance.size(); i-- > 0;) {
        if (instance[i].w > suffix_max) {
            indices.push_back(i);
            suffix_max = instance[i].w;
        }
    }
    std::reverse(indices.begin(), indices.end());

    std::vector<double> breakpoints;
    std::vector<double> heights;
    breakpoints.reserve(indices.size());
    heights.reserve(indices.size());
    for (std::size_t pos : indices) {
        breakpoints.push_back(instance[pos].p);
        heights.push_back(instance[pos].w);
    }
    Envelope envelope(std::move(breakpoints), std::move(heights));
    const double ustar = envelope_area(envelope);
    return {std::move(indices), std::move(envelope), ustar};
}

struct KeySeqSolution {
    SyncSchedule schedule;
    double certificate = 0.0;  // ustar; objective / certificate lies in [1/2, 1]
};

// Schedules the key jobs in key order. Always feasible: each key job starts
// no later than the previous key processing time, which is strictly below
// its own. Guarantees objective >= certificate / 2 and
// optimum <= certificate, making the result self-certifying.
inline KeySeqSolution solve_keyseq(const Instance& instance) {
    KeySequence key = key_sequence(instance);
    SyncSchedule schedule = build_schedule(instance, key.indices);
    return {std::move(schedule), key.ustar};
}

}  // namespace wsps
