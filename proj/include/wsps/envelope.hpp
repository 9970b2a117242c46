#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wsps/errors.hpp"

namespace wsps {

// A step function over time: height heights()[i] on the interval
// (breakpoints()[i-1], breakpoints()[i]], with an implicit breakpoint 0 in
// front and height 0 beyond the last breakpoint.
class Envelope {
public:
    Envelope(std::vector<double> breakpoints, std::vector<double> heights)
        : breakpoints_(std::move(breakpoints)), heights_(std::move(heights)) {
        if (breakpoints_.empty() || breakpoints_.size() != heights_.size()) {
            throw BadParameters("envelope: breakpoints and heights must have equal nonzero length");
        }
        double prev = 0.0;
        for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
            if (!std::isfinite(breakpoints_[i]) || breakpoints_[i] <= prev) {
                throw BadParameters("envelope: breakpoints must be strictly increasing and > 0");
            }
            if (!std::isfinite(heights_[i]) || heights_[i] < 0.0) {
                throw BadParameters("envelope: heights must be finite and >= 0");
            }
            prev = breakpoints_[i];
        }
    }

    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<double>& heights() const noexcept { return heights_; }
    std::size_t steps() const noexcept { return breakpoints_.size(); }

private:
    std::vector<double> breakpoints_;
    std::vector<double> heights_;
};

// Area under the step function: sum of heights[i] * (q[i] - q[i-1]) with
// q[-1] taken as 0.
inline double envelope_area(const Envelope& envelope) {
    double area = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < envelope.steps(); ++i) {
        area += envelope.heights()[i] * (envelope.breakpoints()[i] - prev);
        prev = envelope.breakpoints()[i];
    }
    return area;
}

}  // namespace wsps
