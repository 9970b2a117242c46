#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsps/errors.hpp"

namespace wsps {

// One agent's divisible job: it can run on the agent's private processor
// and, for part of its length, on the shared processor.
struct Job {
    std::string id;
    double p = 0.0;  // processing time
    double w = 0.0;  // payoff per time unit of overlap
};

// A validated job collection, sorted by processing time ascending with ties
// broken by weight ascending (heaviest tied job last). Zero-length jobs have
// been dropped. Built through normalize_instance.
class Instance {
public:
    Instance() = default;

    const std::vector<Job>& jobs() const noexcept { return jobs_; }
    std::size_t size() const noexcept { return jobs_.size(); }
    bool empty() const noexcept { return jobs_.empty(); }
    const Job& operator[](std::size_t pos) const { return jobs_[pos]; }

private:
    explicit Instance(std::vector<Job> sorted) : jobs_(std::move(sorted)) {}
    friend Instance normalize_instance(std::vector<Job> raw);

    std::vector<Job> jobs_;
};

namespace detail {

// Duplicate-id detection over a flat open-addressing table; node-based sets
// dominate normalization time at a million jobs.
inline void check_unique_ids(const std::vector<Job>& jobs) {
    const std::size_t n = jobs.size();
    if (n < 2) return;
    std::size_t capacity = 4;
    while (capacity < 2 * n) capacity <<= 1;
    const std::size_t mask = capacity - 1;
    constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
    std::vector<std::size_t> table(capacity, kEmpty);
    std::vector<std::size_t> hashes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t h = std::hash<std::string_view>{}(jobs[i].id);
        hashes[i] = h;
        std::size_t slot = h & mask;
        while (table[slot] != kEmpty) {
            const std::size_t j = table[slot];
            if (hashes[j] == h && jobs[j].id == jobs[i].id) {
                throw DuplicateId(jobs[i].id);
            }
            slot = (slot + 1) & mask;
        }
        table[slot] = i;
    }
}

}  // namespace detail

// Validates raw jobs, drops zero-length ones (they can never contribute a
// positive overlap) and sorts by (p asc, w asc). The sort is stable, so jobs
// with identical (p, w) keep their input order.
inline Instance normalize_instance(std::vector<Job> raw) {
    for (const Job& job : raw) {
        if (!(job.p >= 0.0) || !std::isfinite(job.p)) {
            throw NegativeParameter("job " + job.id + ": processing time must be finite and >= 0");
        }
        if (!(job.w >= 0.0) || !std::isfinite(job.w)) {
            throw NegativeParameter("job " + job.id + ": weight must be finite and >= 0");
        }
    }
    detail::check_unique_ids(raw);

    std::erase_if(raw, [](const Job& job) { return job.p == 0.0; });
    std::stable_sort(raw.begin(), raw.end(), [](const Job& a, const Job& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.w < b.w;
    });
    return Instance(std::move(raw));
}

}  // namespace wsps
