#include "strongid/code.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <string>

#include "strongid/analysis.hpp"
#include "strongid/rng.hpp"

namespace strongid {

namespace {

// Packed indicator vector over [0,n), matching the graph's word layout.
struct Bits {
    std::vector<std::uint64_t> words;

    Bits(int word_count) : words(word_count, 0) {}
    void set(int i) { words[i / 64] |= 1ull << (i % 64); }
    bool test(int i) const { return (words[i / 64] >> (i % 64)) & 1u; }
    const std::uint64_t* data() const { return words.data(); }
    std::uint64_t* data() { return words.data(); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words) c += std::popcount(w);
        return c;
    }
    std::vector<int> to_ids() const {
        std::vector<int> out;
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }
};

Bits bits_from_ids(const Graph& g, std::span<const int> ids, const char* what) {
    Bits b(g.words());
    for (int v : ids) {
        if (v < 0 || v >= g.vertex_count())
            throw InvalidVertex(std::string(what) + " member " + std::to_string(v) +
                                " out of range [0," + std::to_string(g.vertex_count()) + ")");
        b.set(v);
    }
    return b;
}

void require_pairs(const Graph& g) {
    if (g.vertex_count() < 2)
        throw TooSmall("needs at least 2 vertices, got " + std::to_string(g.vertex_count()));
}

// Shared scan skeleton: tracks the running minimum over ordered pairs and
// the first pair attaining it. `pair_count` maps (v,u) to the count, capped
// at the current minimum (values >= cap may be inexact, values < cap are
// exact, which is all the minimum tracking needs).
template <typename PairCount>
std::pair<int, std::pair<int, int>> min_over_ordered_pairs(int n, PairCount pair_count) {
    int best = INT_MAX;
    std::pair<int, int> arg{-1, -1};
    for (int v = 0; v < n && best > 0; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            int c = pair_count(v, u, best);
            if (c < best) {
                best = c;
                arg = {v, u};
                if (best == 0) break;  // nothing can attain less
            }
        }
    }
    return {best, arg};
}

}  // namespace

int strong_index(const Graph& g) {
    require_pairs(g);
    auto [best, arg] = min_over_ordered_pairs(g.vertex_count(), [&](int v, int u, int cap) {
        auto [lo, hi] = g.row_span(v);
        return count_andnot_capped(g.closed_row(v), g.closed_row(u), lo, hi, cap);
    });
    return best;
}

std::optional<std::pair<int, int>> strong_index_shortfall(const Graph& g, int k) {
    require_pairs(g);
    if (k <= 0) return std::nullopt;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto [lo, hi] = g.row_span(v);
        const std::uint64_t* row = g.closed_row(v);
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            if (count_andnot_capped(row, g.closed_row(u), lo, hi, k) < k)
                return std::make_pair(v, u);
        }
    }
    return std::nullopt;
}

VerifyOutcome is_identification_code(const Graph& g, std::span<const int> code, int r) {
    require_pairs(g);
    if (r < 1) throw std::invalid_argument("is_identification_code: r must be >= 1");
    Bits cbits = bits_from_ids(g, code, "code");

    auto [best, arg] = min_over_ordered_pairs(g.vertex_count(), [&](int v, int u, int cap) {
        auto [lo, hi] = g.row_span(v);
        return count_and3_capped(g.closed_row(v), g.closed_row(u), cbits.data(), lo, hi, cap);
    });

    VerifyOutcome out;
    out.achieved_min = best;
    out.valid = best >= r;
    if (!out.valid) out.witness = VerifyWitness{arg.first, arg.second, best};
    return out;
}

namespace {

std::vector<int> bad_vertices_impl(const Graph& g, const Bits& z, int r) {
    const int n = g.vertex_count();
    const int words = g.words();
    std::vector<std::uint64_t> sv(words, 0);
    std::vector<int> bad;
    for (int v = 0; v < n; ++v) {
        auto [lo, hi] = g.row_span(v);
        const std::uint64_t* row = g.closed_row(v);
        int sampled_in_nbhd = 0;
        for (int w = lo; w < hi; ++w) {
            sv[w] = row[w] & z.data()[w];
            sampled_in_nbhd += std::popcount(sv[w]);
        }
        if (sampled_in_nbhd <= r - 1) {
            bad.push_back(v);
            continue;
        }
        // Second condition. Scanning every w != v is exact: for w beyond
        // distance two, N[v]\N[w] = N[v], whose sampled count we just saw
        // is >= r.
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            if (count_andnot_capped(sv.data(), g.closed_row(w), lo, hi, r) <= r - 1) {
                bad.push_back(v);
                break;
            }
        }
    }
    return bad;
}

}  // namespace

std::vector<int> bad_vertices(const Graph& g, std::span<const int> sampled, int r) {
    if (r < 1) throw std::invalid_argument("bad_vertices: r must be >= 1");
    Bits z = bits_from_ids(g, sampled, "sampled set");
    return bad_vertices_impl(g, z, r);
}

CodeResult randomized_code(const Graph& g, CodeParams params, std::optional<double> q,
                           std::uint64_t seed) {
    require_pairs(g);
    if (params.r < 1 || params.d < 1)
        throw std::invalid_argument("randomized_code: r and d must be >= 1");
    if (q && !(*q >= 0.0 && *q <= 1.0))
        throw std::invalid_argument("randomized_code: q must lie in [0,1]");
    if (strong_index_shortfall(g, params.r))
        throw NotRStrong(params.r, strong_index(g));

    double q_used;
    if (q) {
        q_used = *q;
    } else {
        q_used = std::clamp(q_star(degree_stats(g).delta_max, params.r, params.d), 0.0, 1.0);
    }

    const int n = g.vertex_count();
    SplitMix64 rng(seed);
    Bits z(g.words());
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(q_used)) z.set(v);

    std::vector<int> bad = bad_vertices_impl(g, z, params.r);

    Bits closure(g.words());
    for (int v : bad) {
        auto [lo, hi] = g.row_span(v);
        const std::uint64_t* row = g.closed_row(v);
        for (int w = lo; w < hi; ++w) closure.data()[w] |= row[w];
    }

    Bits y(g.words());
    for (int w = 0; w < g.words(); ++w)
        y.data()[w] = z.data()[w] | closure.data()[w];

    CodeResult res;
    res.code = y.to_ids();
    res.sampled = z.to_ids();
    res.bad = std::move(bad);
    res.bad_closure = closure.to_ids();
    res.q_used = q_used;
    res.seed = seed;
    return res;
}

namespace {

// Valid-code check specialized for the exhaustive search: single-word
// masks, precomputed distinguishing sets, early exit on the first failing
// pair.
struct MaskChecker {
    int n;
    int r;
    std::vector<std::uint64_t> dist;  // dist[v*n+u] = mask of N[v]\N[u]

    MaskChecker(const Graph& g, int r_) : n(g.vertex_count()), r(r_), dist(std::size_t(n) * n, 0) {
        std::vector<std::uint64_t> closed(n, 0);
        for (int v = 0; v < n; ++v) {
            closed[v] = 1ull << v;
            for (int u : g.neighbors(v)) closed[v] |= 1ull << u;
        }
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (u != v) dist[std::size_t(v) * n + u] = closed[v] & ~closed[u];
    }

    bool valid(std::uint64_t code_mask) const {
        const std::uint64_t* row = dist.data();
        for (int v = 0; v < n; ++v, row += n) {
            for (int u = 0; u < n; ++u) {
                if (u != v && std::popcount(row[u] & code_mask) < r) return false;
            }
        }
        return true;
    }
};

}  // namespace

std::optional<std::pair<int, std::vector<int>>> exact_min_code(const Graph& g, int r,
                                                               std::optional<int> size_cap,
                                                               int exhaustive_limit) {
    require_pairs(g);
    if (r < 1) throw std::invalid_argument("exact_min_code: r must be >= 1");
    const int n = g.vertex_count();
    const int limit = std::min(exhaustive_limit, 64);
    if (n > limit)
        throw TooLargeForExact("exact search limited to n <= " + std::to_string(limit) +
                               ", got n = " + std::to_string(n));
    if (strong_index_shortfall(g, r)) return std::nullopt;  // no code exists, not even V

    MaskChecker checker(g, r);
    const int delta_max = degree_stats(g).delta_max;
    const int k_start = (n + delta_max) / (delta_max + 1);  // ceil(n/(delta+1))
    const int k_end = std::min(size_cap.value_or(n), n);

    std::vector<int> pick;
    for (int k = std::max(k_start, 1); k <= k_end; ++k) {
        // Lexicographically ordered k-combinations of {0..n-1}.
        pick.resize(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int v : pick) mask |= 1ull << v;
            if (checker.valid(mask)) return std::make_pair(k, pick);

            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;  // only reachable with a size_cap below the minimum
}

}  // namespace strongid
