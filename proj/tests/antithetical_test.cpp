#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "wsps/wsps.hpp"

using namespace wsps;
using wsps_test::make_instance;

TEST_CASE("antithetical recognition") {
    CHECK(is_antithetical(make_instance({{"a", 1, 2}, {"b", 2, 1}})));
    CHECK_FALSE(is_antithetical(make_instance({{"a", 1, 1}, {"b", 2, 2}})));
    // equal processing times with unequal weights violate the two-sided implication
    CHECK_FALSE(is_antithetical(make_instance({{"a", 2, 1}, {"b", 2, 3}})));
    CHECK(is_antithetical(Instance{}));
    CHECK(is_antithetical(make_instance({{"a", 5, 0}})));
    CHECK(is_antithetical(make_instance({{"a", 1, 3}, {"b", 2, 3}, {"c", 3, 1}})));
}

TEST_CASE("processing-time order on a three-job antithetical instance") {
    const Instance inst = make_instance({{"j1", 1, 3}, {"j2", 2, 2}, {"j3", 3, 1}});
    REQUIRE(is_antithetical(inst));
    const SyncSchedule s = solve_antithetical(inst);

    REQUIRE(s.size() == 3);
    CHECK(s.entries[0].completion == 0.5);
    CHECK(s.entries[1].completion == 1.25);
    CHECK(s.entries[2].completion == 2.125);
    CHECK(s.objective == 3.875);  // 1.5 + 1.5 + 0.875
}

TEST_CASE("single job solves to half its weighted length") {
    const Instance inst = make_instance({{"a", 7, 3}});
    CHECK(solve_antithetical(inst).objective == 3.0 * 7.0 / 2.0);
}

TEST_CASE("n equal jobs yield wp(1 - 2^-n)") {
    for (std::size_t n = 1; n <= 20; ++n) {
        std::vector<wsps_test::RawJob> raw;
        for (std::size_t i = 0; i < n; ++i) {
            raw.push_back({"j" + std::to_string(i), 1.0, 1.0});
        }
        const SyncSchedule s = solve_antithetical(make_instance(raw));
        CHECK(s.objective == 1.0 - std::ldexp(1.0, -static_cast<int>(n)));  // exact dyadics
    }
}

TEST_CASE("solve_antithetical refuses non-antithetical instances") {
    const Instance inst = make_instance({{"a", 1, 1}, {"b", 2, 2}});
    CHECK_THROWS_AS(solve_antithetical(inst), NotAntithetical);
}

TEST_CASE("solve_antithetical schedules every job") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 25; ++round) {
        const Instance inst = wsps_test::random_antithetical(rng, 1 + rng() % 40);
        const SyncSchedule s = solve_antithetical(inst);
        REQUIRE(s.size() == inst.size());
        for (std::size_t i = 0; i < inst.size(); ++i) {
            CHECK(s.entries[i].id == inst[i].id);
        }
        CHECK(validate_schedule(inst, s).empty());
    }
}

TEST_CASE("SPT matches the brute-force oracle on antithetical instances") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 2 + rng() % 7;  // up to 8 jobs
        const Instance inst = wsps_test::random_antithetical(rng, n);
        const double spt = solve_antithetical(inst).objective;
        const double opt = brute_force_opt(inst).optimum;
        CHECK(approx_equal(spt, opt));
    }
}

TEST_CASE("SPT dominates every feasible full permutation") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 15; ++round) {
        const std::size_t n = 2 + rng() % 6;  // up to 7 jobs, n! orders
        const Instance inst = wsps_test::random_antithetical(rng, n);
        const double spt = solve_antithetical(inst).objective;

        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        do {
            try {
                const SyncSchedule s = build_schedule(inst, perm);
                CHECK(s.objective <= spt + kRelTol * std::max(1.0, spt));
            } catch (const InfeasiblePermutation&) {
                // non-SPT orders may be infeasible; those don't compete
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("dropping jobs never helps an antithetical instance") {
    std::mt19937_64 rng(34);
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = 2 + rng() % 5;  // reference enumeration, keep small
        const Instance inst = wsps_test::random_antithetical(rng, n);
        const double spt = solve_antithetical(inst).objective;
        const auto reference = wsps_test::reference_enumerate(inst);
        // the max over all ordered subsets, proper ones included, is the SPT value
        CHECK(approx_equal(reference.optimum, spt));
        CHECK(reference.best_order.size() == n);
    }
}

TEST_CASE("identical jobs can be exchanged without changing the objective") {
    const Instance inst = make_instance({{"x", 2, 3}, {"y", 2, 3}, {"z", 5, 1}});
    REQUIRE(is_antithetical(inst));
    const double a = build_schedule(inst, std::vector<std::size_t>{0, 1, 2}).objective;
    const double b = build_schedule(inst, std::vector<std::size_t>{1, 0, 2}).objective;
    CHECK(a == b);
    CHECK(solve_antithetical(inst).objective == a);
}
