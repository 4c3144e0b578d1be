#pragma once

#include "strongid/errors.hpp"

namespace strongid {

/// Closed-form bounds on theta/n, the minimum identification-code fraction,
/// for a graph with maximum degree delta_max whose neighbourhoods are
/// (r+d+1)-strong. Pure arithmetic: the caller owns the hypothesis.
struct BoundReport {
    int n = 0;
    int delta_max = 0;
    int r = 0;
    int d = 0;
    double c_dr = 0.0;             // c(d,r) = d (d+1)^{-1-1/d} (2r)^{-1/d}
    double q_star = 0.0;           // minimizer of gamma_factor
    double gamma_at_q_star = 0.0;  // expected per-vertex code-size factor at q_star
    double lower = 0.0;            // n / (delta_max + 1)
    double upper = 0.0;            // n (1 - c(d,r) / (delta_max+1)^{(r+2)/d})
};

/// c(d,r) = d (d+1)^{-1-1/d} (2r)^{-1/d}; always in (0,1).
double c_const(int d, int r);

/// The sampling probability minimizing gamma_factor:
/// q* = 1 - (2r (delta+1)^{r+2} (d+1))^{-1/d}. Requires delta_max >= 2.
double q_star(int delta_max, int r, int d);

/// Gamma(q) = q + 2r (delta+1)^{r+2} (1-q)^{d+1}, the per-vertex expected
/// size factor of the randomized construction.
double gamma_factor(double q, int delta_max, int r, int d);

BoundReport theta_bounds(int n, int delta_max, int r, int d);

/// Probability that a vertex with closed degree deg_closed collects at most
/// r-1 sampled neighbours: the Binomial(deg_closed, q) lower tail at r-1.
/// Saturates to 1 when r-1 >= deg_closed.
double f1_prob(double q, int deg_closed, int r);

/// Same binomial tail with the distinguishing-set size as the trial count
/// (the per-witness term of the second bad-vertex condition).
double f2_prob(double q, int dist_size, int r);

/// Two-sided deviation bound 2 exp(-eps^2 theta / 4) for a Bernoulli sum
/// with mean theta; the estimate requires 0 < eps <= 1/2 (InvalidEpsilon
/// otherwise).
double concentration_bound(double theta, double eps);

/// Per-pair tail bound e * exp(-(n-1)p/2) on the common-neighbour count
/// exceeding (n-1)p/4 in G(n,p); the caller applies the union bound.
double common_tail_bound(int n, double p);

}  // namespace strongid
