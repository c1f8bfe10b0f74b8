#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fbp/experiments.hpp"

namespace fbp::report {

enum class Profile { Quick, Desk, Full };
Profile parse_profile(const std::string& s);

struct Options {
    Profile profile = Profile::Desk;
    std::uint64_t seed = 42;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured-vs-expected summary, empty on trivial pass
};

struct Report {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

// Sweep data shared between several criteria and the figure outputs.
// Keys: "shepp", "smooth1", "smooth2" for approximation sweeps.
struct SweepCache {
    std::map<std::string, SweepResult> approx;
    SweepResult data;   // Shepp-Logan, nu in {5,7}
    SweepResult total;  // smooth sigma=1 a-priori rate sweep
    double besov_seminorm = 0.0;  // smooth sigma=1, alpha=3/2, p=q=2
};

SweepCache run_sweeps(const Options& opts);

// Individual checks (numbered as in the summary report).
CriterionResult check_table_constants();
CriterionResult check_filter_l1_norms();
CriterionResult check_finiteness_frontier();
CriterionResult check_moment_conditions();
CriterionResult check_approximation_slopes(const SweepCache& cache,
                                           const Options& opts);
CriterionResult check_filter_order(const SweepCache& cache);
CriterionResult check_data_error(const SweepCache& cache);
CriterionResult check_data_order(const SweepCache& cache);
CriterionResult check_total_error_rate(const SweepCache& cache);
CriterionResult check_lemma_suites(std::uint64_t seed);
CriterionResult check_convolution_form();
CriterionResult check_back_projection_bound(std::uint64_t seed);
CriterionResult check_special_functions();
// Runs the figure emitter twice into scratch subdirectories and compares
// the produced CSVs byte for byte.
CriterionResult check_determinism(const std::filesystem::path& scratch_dir);

// Writes the figure-analogue CSVs for the cached sweeps into out_dir
// (deterministic: no wall-clock columns).
void emit_figures(const SweepCache& cache, const std::filesystem::path& out_dir);

// Full driver: runs the sweeps, writes figure CSVs, evaluates every
// criterion, and writes summary.txt plus slopes.csv into out_dir.
Report reproduce_paper(const std::filesystem::path& out_dir,
                       const Options& opts = {});

}  // namespace fbp::report
