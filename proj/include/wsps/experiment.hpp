#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "wsps/errors.hpp"
#include "wsps/generator.hpp"
#include "wsps/keyseq.hpp"
#include "wsps/oracle.hpp"

namespace wsps {

struct RatioRow {
    double omega_key = 0.0;
    double omega_opt = 0.0;
    double ustar = 0.0;

    double opt_ratio() const { return omega_opt > 0.0 ? omega_key / omega_opt : 1.0; }
    double cert_ratio() const { return ustar > 0.0 ? omega_key / ustar : 1.0; }
};

struct RatioReport {
    std::size_t instance_size = 0;
    std::vector<RatioRow> rows;
    double min_opt_ratio = std::numeric_limits<double>::quiet_NaN();
    double mean_opt_ratio = std::numeric_limits<double>::quiet_NaN();
    double min_cert_ratio = std::numeric_limits<double>::quiet_NaN();
    double mean_cert_ratio = std::numeric_limits<double>::quiet_NaN();
    // min_opt_ratio >= 1/2 - 1e-9 whenever rows exist; vacuously true otherwise
    bool bound_ok = true;
};

// Profiles the key-sequence schedule against the brute-force optimum and its
// own certificate over `count` generated instances. Instance i uses seed
// seed + i, so reports are reproducible row by row.
inline RatioReport run_ratio_experiment(std::size_t count, std::size_t n, std::uint64_t seed,
                                        GenKind kind = GenKind::Uniform,
                                        std::size_t oracle_limit = kDefaultOracleLimit) {
    if (n > oracle_limit) {
        throw InstanceTooLarge("ratio experiment needs the oracle: n <= " +
                               std::to_string(oracle_limit));
    }
    RatioReport report;
    report.instance_size = n;
    report.rows.reserve(count);
    double sum_opt = 0.0;
    double sum_cert = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const Instance instance = generate(kind, n, seed + i);
        const KeySeqSolution key = solve_keyseq(instance);
        const OracleResult oracle = brute_force_opt(instance, oracle_limit);
        const RatioRow row{key.schedule.objective, oracle.optimum, key.certificate};
        sum_opt += row.opt_ratio();
        sum_cert += row.cert_ratio();
        report.rows.push_back(row);
    }
    if (!report.rows.empty()) {
        report.min_opt_ratio = std::numeric_limits<double>::infinity();
        report.min_cert_ratio = std::numeric_limits<double>::infinity();
        for (const RatioRow& row : report.rows) {
            report.min_opt_ratio = std::min(report.min_opt_ratio, row.opt_ratio());
            report.min_cert_ratio = std::min(report.min_cert_ratio, row.cert_ratio());
        }
        report.mean_opt_ratio = sum_opt / static_cast<double>(report.rows.size());
        report.mean_cert_ratio = sum_cert / static_cast<double>(report.rows.size());
        report.bound_ok = report.min_opt_ratio >= 0.5 - 1e-9;
    }
    return report;
}

}  // namespace wsps
