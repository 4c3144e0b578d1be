#include "strongid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace strongid {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Binomial(trials, q) lower tail P(X <= k_max). Terms are evaluated
// individually via log-gamma so that trial counts up to graph order do not
// overflow the binomial coefficient.
double binomial_lower_tail(int trials, int k_max, double q) {
    if (k_max < 0) return 0.0;
    if (k_max >= trials) return 1.0;
    if (q <= 0.0) return 1.0;
    if (q >= 1.0) return 0.0;
    const double lg_n = std::lgamma(trials + 1.0);
    const double log_q = std::log(q);
    const double log_1q = std::log1p(-q);
    double sum = 0.0;
    for (int l = 0; l <= k_max; ++l) {
        double log_term = lg_n - std::lgamma(l + 1.0) - std::lgamma(trials - l + 1.0) +
                          l * log_q + (trials - l) * log_1q;
        sum += std::exp(log_term);
    }
    return std::min(sum, 1.0);
}

}  // namespace

double c_const(int d, int r) {
    require(d >= 1, "c_const: d must be >= 1");
    require(r >= 1, "c_const: r must be >= 1");
    return d * std::pow(d + 1.0, -1.0 - 1.0 / d) * std::pow(2.0 * r, -1.0 / d);
}

double q_star(int delta_max, int r, int d) {
    require(delta_max >= 2, "q_star: delta_max must be >= 2");
    require(r >= 1, "q_star: r must be >= 1");
    require(d >= 1, "q_star: d must be >= 1");
    double k = 2.0 * r * std::pow(delta_max + 1.0, r + 2.0) * (d + 1.0);
    return 1.0 - std::pow(k, -1.0 / d);
}

double gamma_factor(double q, int delta_max, int r, int d) {
    require(q >= 0.0 && q <= 1.0, "gamma_factor: q must lie in [0,1]");
    require(r >= 1 && d >= 1, "gamma_factor: r and d must be >= 1");
    return q + 2.0 * r * std::pow(delta_max + 1.0, r + 2.0) * std::pow(1.0 - q, d + 1.0);
}

BoundReport theta_bounds(int n, int delta_max, int r, int d) {
    require(n >= 1, "theta_bounds: n must be >= 1");
    require(delta_max >= 2, "theta_bounds: delta_max must be >= 2");
    require(r >= 1 && d >= 1, "theta_bounds: r and d must be >= 1");
    BoundReport rep;
    rep.n = n;
    rep.delta_max = delta_max;
    rep.r = r;
    rep.d = d;
    rep.c_dr = c_const(d, r);
    rep.q_star = q_star(delta_max, r, d);
    rep.gamma_at_q_star = gamma_factor(rep.q_star, delta_max, r, d);
    rep.lower = n / (delta_max + 1.0);
    rep.upper = n * (1.0 - rep.c_dr / std::pow(delta_max + 1.0, (r + 2.0) / d));
    return rep;
}

double f1_prob(double q, int deg_closed, int r) {
    require(q >= 0.0 && q <= 1.0, "f1_prob: q must lie in [0,1]");
    require(deg_closed >= 1, "f1_prob: closed degree must be >= 1");
    require(r >= 1, "f1_prob: r must be >= 1");
    return binomial_lower_tail(deg_closed, r - 1, q);
}

double f2_prob(double q, int dist_size, int r) {
    require(q >= 0.0 && q <= 1.0, "f2_prob: q must lie in [0,1]");
    require(dist_size >= 1, "f2_prob: distinguishing-set size must be >= 1");
    require(r >= 1, "f2_prob: r must be >= 1");
    return binomial_lower_tail(dist_size, r - 1, q);
}

double concentration_bound(double theta, double eps) {
    require(theta > 0.0, "concentration_bound: theta must be > 0");
    if (!(eps > 0.0 && eps <= 0.5))
        throw InvalidEpsilon("concentration_bound: eps must lie in (0, 1/2], got " +
                             std::to_string(eps));
    return 2.0 * std::exp(-eps * eps * theta / 4.0);
}

double common_tail_bound(int n, double p) {
    require(n >= 2, "common_tail_bound: n must be >= 2");
    require(p > 0.0 && p < 1.0, "common_tail_bound: p must lie in (0,1)");
    return std::exp(1.0 - (n - 1.0) * p / 2.0);
}

}  // namespace strongid
