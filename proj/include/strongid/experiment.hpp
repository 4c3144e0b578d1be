#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strongid/code.hpp"
#include "strongid/graph.hpp"

namespace strongid {

struct ExperimentSpec {
    int r = 1;
    int d = 1;
    std::optional<double> q;  // default: q_star from the graph's max degree
    int trials = 1;
    std::uint64_t master_seed = 0;
    int threads = 1;
};

struct TrialRecord {
    int trial_index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int delta_max = 0;
    int r = 0;
    int d = 0;
    double q_used = 0.0;
    int code_size = 0;
    int n_bad = 0;
    bool valid = false;
    double gamma_bound = 0.0;  // n * Gamma(q_used)
};

struct ExperimentSummary {
    int trials = 0;
    int n = 0;
    int delta_max = 0;
    int r = 0;
    int d = 0;
    double q_used = 0.0;
    double mean_code_size = 0.0;
    double sample_std = 0.0;  // 0 for a single trial
    double std_error = 0.0;
    double gamma_bound = 0.0;
    bool bound_respected = false;  // mean <= gamma_bound + 3 * std_error
};

struct ExperimentResult {
    std::vector<TrialRecord> records;  // ordered by trial_index
    ExperimentSummary summary;
};

/// Runs `trials` independent randomized constructions on g with per-trial
/// seeds derived from the master seed, verifying each output. The graph's
/// strong index is checked once upfront (NotRStrong otherwise). Trials may
/// run on spec.threads workers; records and summary are identical for every
/// thread count.
ExperimentResult run_experiment(const Graph& g, const ExperimentSpec& spec);

/// Fixed-header CSV ("trial_index,seed,n,delta_max,r,d,q_used,code_size,
/// n_bad,valid,gamma_bound"), one row per record, LF line endings, doubles
/// printed with %.17g.
std::string records_to_csv(const std::vector<TrialRecord>& records);

/// %.17g rendering used everywhere a double crosses a text boundary.
std::string format_double(double x);

}  // namespace strongid
