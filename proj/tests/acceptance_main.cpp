// Acceptance gate: runs every numbered criterion of the error-analysis
// harness at desk scale and prints one PASS/FAIL line per criterion.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "fbp/report.hpp"

int main(int argc, char** argv) {
    using namespace fbp::report;
    namespace fs = std::filesystem;

    Options opts;
    opts.profile = Profile::Desk;
    opts.seed = 42;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--profile" && i + 1 < argc) {
            opts.profile = parse_profile(argv[++i]);
        } else if (arg == "--seed" && i + 1 < argc) {
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr,
                         "usage: %s [--profile quick|desk|full] [--seed N]\n",
                         argv[0]);
            return 2;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    const SweepCache cache = run_sweeps(opts);

    std::vector<CriterionResult> results;
    results.push_back(check_table_constants());
    results.push_back(check_filter_l1_norms());
    results.push_back(check_finiteness_frontier());
    results.push_back(check_moment_conditions());
    results.push_back(check_approximation_slopes(cache, opts));
    results.push_back(check_filter_order(cache));
    results.push_back(check_data_error(cache));
    results.push_back(check_data_order(cache));
    results.push_back(check_total_error_rate(cache));
    results.push_back(check_lemma_suites(opts.seed));
    results.push_back(check_convolution_form());
    results.push_back(check_back_projection_bound(opts.seed));
    results.push_back(check_special_functions());

    const fs::path scratch =
        fs::temp_directory_path() / "fbp_acceptance_determinism";
    fs::create_directories(scratch);
    results.push_back(check_determinism(scratch));
    fs::remove_all(scratch);

    bool all_pass = true;
    for (const CriterionResult& c : results) {
        std::printf("criterion %2d [%s]: %s - %s\n", c.id, c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
        all_pass = all_pass && c.pass;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0)
            .count();
    std::printf("%s (%zu criteria, %.1f s)\n",
                all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED",
                results.size(), secs);
    return all_pass ? 0 : 1;
}
