#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "wsps/errors.hpp"
#include "wsps/job.hpp"

namespace wsps {

enum class GenKind {
    Uniform,       // independent p and w
    Antithetical,  // sorted p paired with non-increasing w
    Tight,         // n identical jobs; worst case for the key-sequence ratio
    Equal,         // alias of Tight
};

inline GenKind parse_gen_kind(std::string_view name) {
    if (name == "uniform") return GenKind::Uniform;
    if (name == "antithetical") return GenKind::Antithetical;
    if (name == "tight") return GenKind::Tight;
    if (name == "equal") return GenKind::Equal;
    throw BadParameters("unknown generator kind: " + std::string(name));
}

inline const char* to_string(GenKind kind) {
    switch (kind) {
        case GenKind::Uniform: return "uniform";
        case GenKind::Antithetical: return "antithetical";
        case GenKind::Tight: return "tight";
        case GenKind::Equal: return "equal";
    }
    return "unknown";
}

struct ValueRange {
    double lo = 1.0;
    double hi = 10.0;
};

namespace detail {

// mt19937_64 output mapped through the 53-bit mantissa; avoids
// std::uniform_real_distribution, whose stream is not pinned by the
// standard, so the same seed yields the same instance everywhere.
inline double uniform_real(std::mt19937_64& rng, const ValueRange& range) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return range.lo + unit * (range.hi - range.lo);
}

inline void require_positive(const ValueRange& range, const char* what) {
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo <= 0.0 ||
        range.hi < range.lo) {
        throw BadParameters(std::string(what) + " range must satisfy 0 < lo <= hi");
    }
}

}  // namespace detail

// Deterministic per (kind, n, seed, ranges). Tight/equal instances use the
// low end of each range as the common value.
inline Instance generate(GenKind kind, std::size_t n, std::uint64_t seed,
                         ValueRange p_range = {}, ValueRange w_range = {}) {
    if (n < 1) {
        throw BadParameters("generator needs n >= 1");
    }
    detail::require_positive(p_range, "processing time");
    detail::require_positive(w_range, "weight");

    std::mt19937_64 rng(seed);
    std::vector<Job> jobs;
    jobs.reserve(n);
    auto id_of = [](std::size_t i) { return "j" + std::to_string(i + 1); };

    switch (kind) {
        case GenKind::Uniform: {
            for (std::size_t i = 0; i < n; ++i) {
                jobs.push_back({id_of(i), detail::uniform_real(rng, p_range),
                                detail::uniform_real(rng, w_range)});
            }
            break;
        }
        case GenKind::Antithetical: {
            std::vector<double> ps(n), ws(n);
            for (double& p : ps) p = detail::uniform_real(rng, p_range);
            for (double& w : ws) w = detail::uniform_real(rng, w_range);
            std::sort(ps.begin(), ps.end());
            std::sort(ws.begin(), ws.end(), std::greater<>());
            // equal processing times must carry equal weights; lift each tied
            // run to the run's first (largest) weight, which keeps the whole
            // weight list non-increasing
            for (std::size_t i = 1; i < n; ++i) {
                if (ps[i] == ps[i - 1]) ws[i] = ws[i - 1];
            }
            for (std::size_t i = 0; i < n; ++i) {
                jobs.push_back({id_of(i), ps[i], ws[i]});
            }
            break;
        }
        case GenKind::Tight:
        case GenKind::Equal: {
            for (std::size_t i = 0; i < n; ++i) {
                jobs.push_back({id_of(i), p_range.lo, w_range.lo});
            }
            break;
        }
    }
    return normalize_instance(std::move(jobs));
}

}  // namespace wsps
