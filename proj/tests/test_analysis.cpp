#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "strongid/analysis.hpp"
#include "strongid/generators.hpp"
#include "strongid/graph.hpp"

using namespace strongid;
using doctest::Approx;

namespace {

// Independent binomial lower tail: long-double multiplicative recurrence
// over the pmf, no log-gamma.
double tail_oracle(int trials, int k_max, double q) {
    if (k_max < 0) return 0.0;
    if (k_max >= trials) return 1.0;
    if (q <= 0.0) return 1.0;
    if (q >= 1.0) return 0.0;
    long double term = std::pow(static_cast<long double>(1.0L - q), trials);  // l = 0
    long double sum = term;
    for (int l = 1; l <= k_max; ++l) {
        term *= static_cast<long double>(trials - l + 1) / l;
        term *= static_cast<long double>(q) / (1.0L - q);
        sum += term;
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("c_const anchors") {
    CHECK(c_const(1, 1) == Approx(0.125).epsilon(1e-14));
    CHECK(c_const(2, 1) == Approx(2.0 * std::pow(3.0, -1.5) * std::pow(2.0, -0.5)).epsilon(1e-14));
    CHECK(c_const(1, 2) == Approx(0.0625).epsilon(1e-14));
    for (int d = 1; d <= 6; ++d)
        for (int r = 1; r <= 6; ++r) {
            double c = c_const(d, r);
            CHECK(c > 0.0);
            CHECK(c < 1.0);
        }
}

TEST_CASE("q_star anchors and stationarity") {
    CHECK(q_star(2, 1, 1) == Approx(1.0 - 1.0 / 108.0).epsilon(1e-14));
    CHECK(q_star(2, 1, 2) == Approx(1.0 - std::sqrt(1.0 / 162.0)).epsilon(1e-14));

    // q_star solves 1 - 2r (delta+1)^{r+2} (d+1) (1-q)^d = 0. Evaluated on
    // the (1-q) term directly: recovering it as 1.0 - q_star would cancel
    // away the digits under test.
    for (int delta = 2; delta <= 10; ++delta)
        for (int r = 1; r <= 4; ++r)
            for (int d = 1; d <= 4; ++d) {
                double q0 = q_star(delta, r, d);
                CHECK(q0 > 0.0);
                CHECK(q0 < 1.0);
                double k = 2.0 * r * std::pow(delta + 1.0, r + 2.0) * (d + 1.0);
                double one_minus_q0 = std::pow(k, -1.0 / d);
                CHECK(q0 == Approx(1.0 - one_minus_q0).epsilon(1e-15));
                double deriv = 1.0 - k * std::pow(one_minus_q0, d);
                CHECK(std::abs(deriv) < 1e-12);
            }

    // central difference on Gamma in long double at the anchor parameters
    auto gamma_ld = [](long double q, int delta, int r, int d) {
        return q + 2.0L * r * std::pow(static_cast<long double>(delta + 1), r + 2) *
                       std::pow(1.0L - q, d + 1);
    };
    for (auto [delta, r, d] : {std::tuple{2, 1, 1}, std::tuple{2, 1, 2}, std::tuple{3, 2, 2}}) {
        long double q0 = q_star(delta, r, d);
        long double h = 1e-8L;
        long double slope = (gamma_ld(q0 + h, delta, r, d) - gamma_ld(q0 - h, delta, r, d)) / (2 * h);
        CHECK(std::abs(static_cast<double>(slope)) < 1e-10);
    }
}

TEST_CASE("gamma_factor") {
    for (int delta = 2; delta <= 10; ++delta)
        for (int r = 1; r <= 4; ++r)
            for (int d = 1; d <= 4; ++d) CHECK(gamma_factor(1.0, delta, r, d) == 1.0);

    CHECK(gamma_factor(q_star(2, 1, 1), 2, 1, 1) == Approx(1.0 - 1.0 / 216.0).epsilon(1e-14));

    SUBCASE("closed-form identity over the grid") {
        for (int delta = 2; delta <= 10; ++delta)
            for (int r = 1; r <= 4; ++r)
                for (int d = 1; d <= 4; ++d) {
                    double lhs = gamma_factor(q_star(delta, r, d), delta, r, d);
                    double rhs =
                        1.0 - c_const(d, r) / std::pow(delta + 1.0, (r + 2.0) / d);
                    CHECK(lhs == Approx(rhs).epsilon(1e-12));
                }
    }

    SUBCASE("q_star minimizes gamma on a grid") {
        for (int delta : {2, 4, 8})
            for (int r : {1, 3})
                for (int d : {1, 4}) {
                    double best = gamma_factor(q_star(delta, r, d), delta, r, d);
                    for (int i = 0; i <= 100; ++i)
                        CHECK(best <= gamma_factor(i / 100.0, delta, r, d) + 1e-15);
                }
    }
}

TEST_CASE("theta_bounds") {
    BoundReport rep = theta_bounds(216, 2, 1, 1);
    CHECK(rep.lower == Approx(72.0).epsilon(1e-14));
    CHECK(rep.upper == Approx(215.0).epsilon(1e-12));
    CHECK(rep.q_star == Approx(1.0 - 1.0 / 108.0).epsilon(1e-14));

    CHECK(theta_bounds(4, 2, 1, 1).lower == Approx(4.0 / 3.0).epsilon(1e-14));

    for (int delta = 2; delta <= 10; ++delta)
        for (int r = 1; r <= 4; ++r)
            for (int d = 1; d <= 4; ++d) {
                BoundReport b = theta_bounds(1000, delta, r, d);
                CHECK(b.lower <= b.upper);
                CHECK(b.upper / b.n > 0.0);
                CHECK(b.upper / b.n < 1.0);
                // upper is n * Gamma(q_star) by construction of the constant
                CHECK(b.upper == Approx(b.n * b.gamma_at_q_star).epsilon(1e-12));
            }

    CHECK_THROWS_AS(theta_bounds(10, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("f1_prob") {
    CHECK(f1_prob(1.0, 7, 1) == 0.0);
    CHECK(f1_prob(0.0, 7, 3) == 1.0);
    CHECK(f1_prob(0.5, 3, 2) == Approx(0.5).epsilon(1e-14));
    CHECK(f1_prob(0.3, 2, 5) == 1.0);  // saturated tail

    SUBCASE("matches the independent tail oracle") {
        for (int trials : {1, 2, 5, 17, 64, 261, 1441})
            for (double q : {0.01, 0.1, 0.5, 0.9, 0.99})
                for (int r : {1, 2, 3, 7}) {
                    double got = f1_prob(q, trials, r);
                    double want = tail_oracle(trials, r - 1, q);
                    CHECK(got >= 0.0);
                    CHECK(got <= 1.0);
                    if (want > 1e-300)
                        CHECK(got == Approx(want).epsilon(1e-12));
                    else
                        CHECK(got <= 1e-300);
                }
    }
}

TEST_CASE("f2_prob") {
    CHECK(f2_prob(0.5, 4, 1) == Approx(1.0 / 16.0).epsilon(1e-14));
    // same kernel as f1, different argument role
    for (int size : {1, 3, 10})
        for (double q : {0.2, 0.7})
            for (int r : {1, 2}) CHECK(f2_prob(q, size, r) == f1_prob(q, size, r));

    SUBCASE("nonincreasing in q") {
        for (int size : {2, 6, 30})
            for (int r : {1, 3}) {
                double prev = 1.0;
                for (int i = 0; i <= 50; ++i) {
                    double cur = f2_prob(i / 50.0, size, r);
                    CHECK(cur <= prev + 1e-15);
                    prev = cur;
                }
            }
    }
}

TEST_CASE("concentration_bound") {
    CHECK(concentration_bound(100.0, 0.5) == Approx(2.0 * std::exp(-6.25)).epsilon(1e-14));
    CHECK_THROWS_AS(concentration_bound(100.0, 0.0), InvalidEpsilon);
    CHECK_THROWS_AS(concentration_bound(100.0, 0.6), InvalidEpsilon);
    CHECK_THROWS_AS(concentration_bound(100.0, -0.1), InvalidEpsilon);
    CHECK_THROWS_AS(concentration_bound(0.0, 0.5), std::invalid_argument);

    double prev = 2.0;
    for (double theta : {1.0, 10.0, 100.0, 1000.0}) {
        double b = concentration_bound(theta, 0.5);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("common_tail_bound") {
    double p = lemma_p(1441, 3);
    CHECK(common_tail_bound(1441, p) == Approx(std::exp(1.0 - 1440.0 * p / 2.0)).epsilon(1e-14));
    CHECK(common_tail_bound(1441, 0.080813) == Approx(1.5e-25).epsilon(0.05));

    double prev = 10.0;
    for (double pp : {0.01, 0.05, 0.2, 0.8}) {
        double b = common_tail_bound(100, pp);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("degree-event bound vs Monte Carlo" * doctest::timeout(300)) {
    // Pr(|deg - (n-1)p| >= (n-1)p/2) per vertex, compared with the
    // two-sided deviation bound at eps = 1/2 over 100 generated graphs.
    const int n = 1441;
    const double p = lemma_p(n, 3);
    const double theta = (n - 1) * p;
    const double bound = concentration_bound(theta, 0.5);
    long long samples = 0, violations = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = gnp(n, p, 31000 + seed);
        for (int v = 0; v < n; ++v) {
            ++samples;
            if (std::abs(g.degree(v) - theta) >= theta / 2.0) ++violations;
        }
    }
    double freq = static_cast<double>(violations) / samples;
    double se = std::sqrt(std::max(freq, 1.0 / samples) * (1.0 - freq) / samples);
    CHECK(freq - 3.0 * se <= bound);
}

TEST_CASE("common-neighbour tail bound vs Monte Carlo" * doctest::timeout(300)) {
    // Frequency of T_ij > (n-1)p/4 across all pairs of a few generated
    // graphs; the analytic per-pair bound must not be exceeded beyond
    // binomial sampling error.
    const int n = 1441;
    const double p = lemma_p(n, 3);
    const double cap = (n - 1) * p / 4.0;
    const double bound = common_tail_bound(n, p);
    long long samples = 0, violations = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = gnp(n, p, 32000 + seed);
        for (int i = 0; i < n; ++i) {
            auto [lo, hi] = g.row_span(i);
            for (int j = i + 1; j < n; ++j) {
                ++samples;
                if (count_and(g.open_row(i), g.open_row(j), lo, hi) > cap) ++violations;
            }
        }
    }
    double freq = static_cast<double>(violations) / samples;
    double se = std::sqrt(std::max(freq, 1.0 / samples) * (1.0 - freq) / samples);
    CHECK(freq - 3.0 * se <= bound);
}
