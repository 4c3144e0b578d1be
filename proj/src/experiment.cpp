#include "strongid/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "strongid/analysis.hpp"
#include "strongid/rng.hpp"

namespace strongid {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ExperimentResult run_experiment(const Graph& g, const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (spec.q && !(*spec.q >= 0.0 && *spec.q <= 1.0))
        throw std::invalid_argument("experiment: q must lie in [0,1]");
    if (strong_index_shortfall(g, spec.r)) throw NotRStrong(spec.r, strong_index(g));

    const DegreeStats deg = degree_stats(g);
    const double q_used =
        spec.q ? *spec.q : std::clamp(q_star(deg.delta_max, spec.r, spec.d), 0.0, 1.0);
    const double gamma_bound = g.vertex_count() * gamma_factor(q_used, deg.delta_max, spec.r, spec.d);

    std::vector<TrialRecord> records(spec.trials);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < spec.trials; i = next.fetch_add(1)) {
            TrialRecord rec;
            rec.trial_index = i;
            rec.seed = derive_seed(spec.master_seed, kStreamTrial, i);
            rec.n = g.vertex_count();
            rec.delta_max = deg.delta_max;
            rec.r = spec.r;
            rec.d = spec.d;
            rec.q_used = q_used;
            CodeResult code = randomized_code(g, {spec.r, spec.d}, q_used, rec.seed);
            rec.code_size = static_cast<int>(code.code.size());
            rec.n_bad = static_cast<int>(code.bad.size());
            rec.valid = is_identification_code(g, code.code, spec.r).valid;
            rec.gamma_bound = gamma_bound;
            records[i] = rec;
        }
    };

    const int threads = std::max(1, spec.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ExperimentSummary s;
    s.trials = spec.trials;
    s.n = g.vertex_count();
    s.delta_max = deg.delta_max;
    s.r = spec.r;
    s.d = spec.d;
    s.q_used = q_used;
    s.gamma_bound = gamma_bound;
    double sum = 0.0;
    for (const auto& rec : records) sum += rec.code_size;
    s.mean_code_size = sum / spec.trials;
    if (spec.trials > 1) {
        double ss = 0.0;
        for (const auto& rec : records) {
            double dx = rec.code_size - s.mean_code_size;
            ss += dx * dx;
        }
        s.sample_std = std::sqrt(ss / (spec.trials - 1));
    }
    s.std_error = s.sample_std / std::sqrt(static_cast<double>(spec.trials));
    s.bound_respected = s.mean_code_size <= s.gamma_bound + 3.0 * s.std_error;
    return {std::move(records), s};
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
    std::string out = "trial_index,seed,n,delta_max,r,d,q_used,code_size,n_bad,valid,gamma_bound\n";
    for (const auto& r : records) {
        out += std::to_string(r.trial_index);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.delta_max);
        out += ',';
        out += std::to_string(r.r);
        out += ',';
        out += std::to_string(r.d);
        out += ',';
        out += format_double(r.q_used);
        out += ',';
        out += std::to_string(r.code_size);
        out += ',';
        out += std::to_string(r.n_bad);
        out += ',';
        out += r.valid ? "true" : "false";
        out += ',';
        out += format_double(r.gamma_bound);
        out += '\n';
    }
    return out;
}

}  // namespace strongid
