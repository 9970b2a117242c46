#pragma once

#include <algorithm>
#include <cmath>

namespace wsps {

// Tolerance used for all derived-value comparisons. Schedule times are dyadic
// rationals (repeated halving), so integer inputs stay exact and this slack
// only has to absorb serialization and accumulation noise.
inline constexpr double kRelTol = 1e-9;

// Relative comparison with an absolute floor of 1, so values near zero are
// compared absolutely.
inline bool approx_equal(double a, double b, double rel = kRelTol) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace wsps
