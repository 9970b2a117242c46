#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "wsps/wsps.hpp"

using namespace wsps;
using wsps_test::make_instance;

TEST_CASE("key sequence of a weight zigzag") {
    // p = (1,2,3), w = (5,1,4): job 2 is dominated, jobs 1 and 3 are the
    // strict suffix maxima
    const Instance inst = make_instance({{"j1", 1, 5}, {"j2", 2, 1}, {"j3", 3, 4}});
    const KeySequence key = key_sequence(inst);
    CHECK(key.indices == std::vector<std::size_t>{0, 2});
    CHECK(key.ustar == 13.0);  // 5*1 + 4*(3-1)
    CHECK(key.upper_envelope.breakpoints() == std::vector<double>{1.0, 3.0});
    CHECK(key.upper_envelope.heights() == std::vector<double>{5.0, 4.0});
}

TEST_CASE("equal jobs collapse the key sequence to the last job") {
    const Instance inst = make_instance({{"a", 2, 3}, {"b", 2, 3}, {"c", 2, 3}});
    const KeySequence key = key_sequence(inst);
    CHECK(key.indices == std::vector<std::size_t>{2});
    CHECK(key.ustar == 6.0);  // w * p
}

TEST_CASE("strictly decreasing weights admit the full sequence") {
    const Instance inst = make_instance({{"j1", 1, 3}, {"j2", 2, 2}, {"j3", 3, 1}});
    const KeySequence key = key_sequence(inst);
    CHECK(key.indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(key.ustar == 6.0);  // 3*1 + 2*1 + 1*1
}

TEST_CASE("key sequence requires a nonempty instance") {
    CHECK_THROWS_AS(key_sequence(Instance{}), EmptyInstance);
    CHECK_THROWS_AS(solve_keyseq(Instance{}), EmptyInstance);
}

TEST_CASE("key conditions verifier") {
    const Instance inst = make_instance({{"j1", 1, 5}, {"j2", 2, 1}, {"j3", 3, 4}});
    CHECK(verify_key_conditions(inst, std::vector<std::size_t>{0, 2}));
    // (iii) fails: w_1 = 5 > w_3 = 4 inside the single block
    CHECK_FALSE(verify_key_conditions(inst, std::vector<std::size_t>{2}));
    // (i) fails: does not end at the last position
    CHECK_FALSE(verify_key_conditions(inst, std::vector<std::size_t>{0}));
    // (ii) fails: weights not strictly decreasing
    CHECK_FALSE(verify_key_conditions(inst, std::vector<std::size_t>{1, 2}));
    // malformed index lists
    CHECK_FALSE(verify_key_conditions(inst, std::vector<std::size_t>{}));
    CHECK_FALSE(verify_key_conditions(inst, std::vector<std::size_t>{2, 0}));
    CHECK_FALSE(verify_key_conditions(inst, std::vector<std::size_t>{0, 7}));
}

TEST_CASE("envelope area arithmetic") {
    CHECK(envelope_area(Envelope({1, 3}, {5, 4})) == 13.0);
    CHECK(envelope_area(Envelope({4}, {2.5})) == 10.0);
    CHECK(envelope_area(Envelope({2, 6}, {3, 1})) == 10.0);
}

TEST_CASE("envelope construction validates its invariants") {
    CHECK_THROWS_AS(Envelope({}, {}), BadParameters);
    CHECK_THROWS_AS(Envelope({1, 2}, {1}), BadParameters);
    CHECK_THROWS_AS(Envelope({2, 1}, {1, 1}), BadParameters);
    CHECK_THROWS_AS(Envelope({0}, {1}), BadParameters);
    CHECK_THROWS_AS(Envelope({-1}, {1}), BadParameters);
    CHECK_THROWS_AS(Envelope({1}, {-2}), BadParameters);
    CHECK_NOTHROW(Envelope({1}, {0}));
}

TEST_CASE("solve_keyseq schedules the key jobs and reports the certificate") {
    const Instance inst = make_instance({{"j1", 1, 5}, {"j2", 2, 1}, {"j3", 3, 4}});
    const KeySeqSolution sol = solve_keyseq(inst);

    REQUIRE(sol.schedule.size() == 2);
    CHECK(sol.schedule.entries[0].id == "j1");
    CHECK(sol.schedule.entries[0].start == 0.0);
    CHECK(sol.schedule.entries[0].completion == 0.5);
    CHECK(sol.schedule.entries[1].id == "j3");
    CHECK(sol.schedule.entries[1].start == 0.5);
    CHECK(sol.schedule.entries[1].completion == 1.75);
    CHECK(sol.schedule.objective == 7.5);  // 0.5*5 + 1.25*4
    CHECK(sol.certificate == 13.0);
    CHECK(2.0 * sol.schedule.objective >= sol.certificate);
    CHECK(validate_schedule(inst, sol.schedule).empty());
}

TEST_CASE("single job: the key schedule is optimal and certified by wp") {
    const Instance inst = make_instance({{"a", 3, 2}});
    const KeySeqSolution sol = solve_keyseq(inst);
    CHECK(sol.schedule.objective == 3.0);  // wp / 2
    CHECK(sol.certificate == 6.0);         // wp
}

TEST_CASE("twice the key objective covers the certificate") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 60; ++round) {
        const Instance inst = wsps_test::random_instance(rng, 1 + rng() % 40);
        const KeySeqSolution sol = solve_keyseq(inst);
        const double omega = sol.schedule.objective;
        CHECK(2.0 * omega >= sol.certificate - kRelTol * std::max(1.0, sol.certificate));
        CHECK(omega <= sol.certificate + kRelTol * std::max(1.0, sol.certificate));

        // per-job form: each key job overlaps at least half the gap to the
        // previous key processing time
        const KeySequence key = key_sequence(inst);
        double prev_p = 0.0;
        for (std::size_t k = 0; k < key.indices.size(); ++k) {
            const ScheduleEntry& entry = sol.schedule.entries[k];
            const double gap = (entry.p - prev_p) / 2.0;
            CHECK(entry.overlap() >= gap - kRelTol * std::max(1.0, gap));
            prev_p = entry.p;
        }
    }
}

TEST_CASE("certificate upper-bounds the optimum and the key schedule halves it") {
    std::mt19937_64 rng(72);
    for (int round = 0; round < 30; ++round) {
        const Instance inst = wsps_test::random_instance(rng, 2 + rng() % 6);  // n <= 7
        const KeySeqSolution sol = solve_keyseq(inst);
        const double opt = brute_force_opt(inst).optimum;
        CHECK(opt <= sol.certificate + kRelTol * sol.certificate);
        CHECK(sol.schedule.objective >= 0.5 * opt - kRelTol);
    }
}

TEST_CASE("exhaustive subsequence search confirms uniqueness") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 25; ++round) {
        const Instance inst = wsps_test::random_instance(rng, 1 + rng() % 10);
        const auto all = wsps_test::key_condition_subsequences(inst);
        REQUIRE(all.size() == 1);
        CHECK(all[0] == key_sequence(inst).indices);
    }
    // weight ties across distinct processing times: only the last of an
    // equal-weight run can be a key index
    const Instance ties = make_instance({{"a", 1, 4}, {"b", 2, 4}, {"c", 3, 4}});
    const auto all = wsps_test::key_condition_subsequences(ties);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == std::vector<std::size_t>{2});
}

TEST_CASE("key weights are suffix maxima") {
    std::mt19937_64 rng(74);
    for (int round = 0; round < 30; ++round) {
        const Instance inst = wsps_test::random_instance(rng, 1 + rng() % 20);
        for (std::size_t pos : key_sequence(inst).indices) {
            double suffix_max = 0.0;
            for (std::size_t j = pos; j < inst.size(); ++j) {
                suffix_max = std::max(suffix_max, inst[j].w);
            }
            CHECK(inst[pos].w == suffix_max);
        }
    }
}

TEST_CASE("on strictly-decreasing-weight antithetical instances keyseq equals SPT") {
    std::mt19937_64 rng(75);
    for (int round = 0; round < 20; ++round) {
        const Instance inst = wsps_test::random_antithetical(rng, 2 + rng() % 20);
        bool strict = true;
        for (std::size_t i = 0; i + 1 < inst.size(); ++i) {
            if (!(inst[i].w > inst[i + 1].w)) strict = false;
        }
        if (!strict) continue;  // continuous weights make ties vanishingly rare
        const KeySeqSolution key = solve_keyseq(inst);
        const SyncSchedule spt = solve_antithetical(inst);
        REQUIRE(key.schedule.size() == inst.size());
        CHECK(key.schedule.objective == spt.objective);
        for (std::size_t i = 0; i < inst.size(); ++i) {
            CHECK(key.schedule.entries[i].id == spt.entries[i].id);
        }
    }
}

TEST_CASE("tightness family ratio follows (1/2)/(1 - 2^-n)") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const Instance inst = generate(GenKind::Tight, n, 0, {1.0, 1.0}, {1.0, 1.0});
        const KeySeqSolution key = solve_keyseq(inst);
        const SyncSchedule all_jobs = solve_antithetical(inst);

        CHECK(key.schedule.objective == 0.5);
        CHECK(key.certificate == 1.0);
        const double expected_all = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
        CHECK(all_jobs.objective == expected_all);
        CHECK(key.schedule.objective / all_jobs.objective == 0.5 / expected_all);
    }
}
