// Command-line front end: solve instances, validate schedule files against
// their instances, generate benchmark instances, profile the approximation
// ratio, and time the solvers.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wsps/wsps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitBadInput = 2;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw wsps::ParseError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw wsps::ParseError("cannot write " + path);
    }
    out << text << '\n';
}

struct SolveOptions {
    std::string algo = "auto";
    std::string input;
    std::string output;
};

int run_solve(const SolveOptions& opt) {
    const wsps::Instance instance = wsps::parse_instance(read_text(opt.input));

    std::string algo = opt.algo;
    if (algo == "auto") {
        algo = wsps::is_antithetical(instance) ? "spt" : "keyseq";
    }

    wsps::SyncSchedule schedule;
    std::optional<double> certificate;
    if (algo == "spt") {
        schedule = wsps::solve_antithetical(instance);
    } else if (algo == "keyseq") {
        if (instance.empty()) {
            schedule = wsps::SyncSchedule{};
        } else {
            wsps::KeySeqSolution solution = wsps::solve_keyseq(instance);
            schedule = std::move(solution.schedule);
            certificate = solution.certificate;
        }
    } else if (algo == "brute") {
        schedule = wsps::brute_force_opt(instance).best_schedule;
    } else {
        throw wsps::BadParameters("unknown algorithm: " + algo);
    }

    write_text(opt.output, wsps::emit_schedule(instance, schedule, algo, certificate));
    std::cerr << "algorithm=" << algo << " n=" << instance.size()
              << " scheduled=" << schedule.size() << " objective=" << schedule.objective;
    if (certificate) {
        std::cerr << " certificate=" << *certificate;
    }
    std::cerr << '\n';
    return kExitOk;
}

int run_validate(const std::string& instance_path, const std::string& schedule_path) {
    const wsps::Instance instance = wsps::parse_instance(read_text(instance_path));
    const wsps::ScheduleFile file = wsps::parse_schedule(read_text(schedule_path));
    const std::vector<wsps::Violation> violations = wsps::validate_schedule_file(instance, file);
    if (violations.empty()) {
        std::cout << "ok: schedule is a valid synchronized schedule for the instance\n";
        return kExitOk;
    }
    for (const wsps::Violation& v : violations) {
        std::cout << "violation kind=" << wsps::to_string(v.kind);
        if (!v.job_id.empty()) {
            std::cout << " job=" << v.job_id;
        }
        std::cout << " detail=\"" << v.detail << "\"\n";
    }
    return kExitValidationFailure;
}

struct GenOptions {
    std::string kind = "uniform";
    std::size_t n = 10;
    std::uint64_t seed = 1;
    std::string out;
    wsps::ValueRange p_range;
    wsps::ValueRange w_range;
};

int run_gen(const GenOptions& opt) {
    const wsps::Instance instance =
        wsps::generate(wsps::parse_gen_kind(opt.kind), opt.n, opt.seed, opt.p_range, opt.w_range);
    write_text(opt.out, wsps::emit_instance(instance));
    return kExitOk;
}

struct RatioOptions {
    std::size_t count = 100;
    std::size_t n = 5;
    std::uint64_t seed = 1;
    std::string kind = "uniform";
};

int run_ratio(const RatioOptions& opt) {
    const wsps::RatioReport report =
        wsps::run_ratio_experiment(opt.count, opt.n, opt.seed, wsps::parse_gen_kind(opt.kind));
    std::cout << "instances=" << report.rows.size() << " n=" << report.instance_size
              << " kind=" << opt.kind << '\n';
    if (report.rows.empty()) {
        std::cout << "empty report\n";
        return kExitOk;
    }
    std::cout << "Omega(S_key)/Omega_opt: min=" << report.min_opt_ratio
              << " mean=" << report.mean_opt_ratio << '\n';
    std::cout << "Omega(S_key)/ustar:     min=" << report.min_cert_ratio
              << " mean=" << report.mean_cert_ratio << '\n';
    if (!report.bound_ok) {
        std::cout << "BOUND VIOLATED: min ratio fell below 1/2\n";
        return kExitValidationFailure;
    }
    return kExitOk;
}

struct BenchOptions {
    std::vector<std::size_t> sizes = {10'000, 100'000, 1'000'000};
    int repeats = 3;
};

// Times normalization plus solve from raw (shuffled) jobs, best of repeats.
int run_bench(const BenchOptions& opt) {
    using Clock = std::chrono::steady_clock;
    std::cout << "n,algo,best_ms\n";
    for (std::size_t n : opt.sizes) {
        const wsps::Instance generated = wsps::generate(wsps::GenKind::Antithetical, n, 7);
        std::vector<wsps::Job> raw = generated.jobs();
        std::mt19937_64 rng(13);
        std::shuffle(raw.begin(), raw.end(), rng);

        for (const std::string& algo : {std::string("spt"), std::string("keyseq")}) {
            double best_ms = std::numeric_limits<double>::infinity();
            double objective = 0.0;
            for (int r = 0; r < opt.repeats; ++r) {
                std::vector<wsps::Job> copy = raw;
                const auto start = Clock::now();
                const wsps::Instance instance = wsps::normalize_instance(std::move(copy));
                if (algo == "spt") {
                    objective = wsps::solve_antithetical(instance).objective;
                } else {
                    objective = wsps::solve_keyseq(instance).schedule.objective;
                }
                const auto stop = Clock::now();
                best_ms = std::min(
                    best_ms, std::chrono::duration<double, std::milli>(stop - start).count());
            }
            std::cout << n << ',' << algo << ',' << best_ms << '\n';
            std::cerr << "  (" << algo << " n=" << n << " objective=" << objective << ")\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted single-shared-processor scheduling solver"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance and emit a schedule");
    solve->add_option("--algo", solve_opt.algo, "auto | spt | keyseq | brute")
        ->check(CLI::IsMember({"auto", "spt", "keyseq", "brute"}));
    solve->add_option("--input", solve_opt.input, "instance file (- for stdin)")->required();
    solve->add_option("--output", solve_opt.output, "schedule file (default stdout)");

    std::string validate_instance;
    std::string validate_schedule;
    CLI::App* validate =
        app.add_subcommand("validate", "Check a schedule file against its instance");
    validate->add_option("--instance", validate_instance, "instance file")->required();
    validate->add_option("--schedule", validate_schedule, "schedule file")->required();

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--kind", gen_opt.kind, "uniform | antithetical | tight | equal");
    gen->add_option("--n", gen_opt.n, "number of jobs")->required();
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--out", gen_opt.out, "output file (default stdout)");
    gen->add_option("--pmin", gen_opt.p_range.lo, "processing time range low (default 1)");
    gen->add_option("--pmax", gen_opt.p_range.hi, "processing time range high (default 10)");
    gen->add_option("--wmin", gen_opt.w_range.lo, "weight range low (default 1)");
    gen->add_option("--wmax", gen_opt.w_range.hi, "weight range high (default 10)");

    RatioOptions ratio_opt;
    CLI::App* ratio =
        app.add_subcommand("ratio", "Profile Omega(S_key) against the oracle and ustar");
    ratio->add_option("--count", ratio_opt.count, "number of instances");
    ratio->add_option("--n", ratio_opt.n, "jobs per instance (<= oracle limit)");
    ratio->add_option("--seed", ratio_opt.seed, "base RNG seed");
    ratio->add_option("--kind", ratio_opt.kind, "generator kind");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "Time normalize+solve at growing sizes");
    bench->add_option("--n", bench_opt.sizes, "instance sizes (default 1e4 1e5 1e6)");
    bench->add_option("--repeats", bench_opt.repeats, "repetitions per size (default 3)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return run_solve(solve_opt);
        if (validate->parsed()) return run_validate(validate_instance, validate_schedule);
        if (gen->parsed()) return run_gen(gen_opt);
        if (ratio->parsed()) return run_ratio(ratio_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    } catch (const wsps::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}
