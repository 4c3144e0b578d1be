#include "strongid/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "strongid/code.hpp"
#include "strongid/rng.hpp"

namespace strongid {

Graph cycle(int n) {
    if (n < 3) throw InvalidSize("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw InvalidSize("complete graph needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) throw InvalidSize("path needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InvalidSize("gnp needs n >= 1, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

double lemma_p(int n, int y) {
    if (n < 2) throw std::invalid_argument("lemma_p: n must be >= 2");
    if (y < 3) throw std::invalid_argument("lemma_p: y must be >= 3");
    double p = std::max(16.0 * std::log(n), 4.0 * y) / (n - 1.0);
    if (p > 1.0)
        throw InfeasibleP("required edge probability " + std::to_string(p) +
                          " exceeds 1 at n = " + std::to_string(n));
    return p;
}

namespace {

LemmaParams fill_params(int n, int y, double p, int max_retries) {
    LemmaParams lp;
    lp.n = n;
    lp.y = y;
    lp.p = p;
    lp.max_retries = max_retries;
    lp.degree_cap = 2.0 * (n - 1.0) * p;
    lp.common_cap = (n - 1.0) * p / 4.0;
    lp.strong_target = y - 1;
    return lp;
}

}  // namespace

LemmaParams LemmaParams::make(int n, int y, int max_retries) {
    if (max_retries < 1) throw std::invalid_argument("LemmaParams: max_retries must be >= 1");
    double p = lemma_p(n, y);  // throws InfeasibleP first
    long long min_n = 160ll * y * y + 1;
    if (n < min_n)
        throw InvalidSize("block generation needs n >= 160y^2+1 = " + std::to_string(min_n) +
                          ", got n = " + std::to_string(n));
    return fill_params(n, y, p, max_retries);
}

LemmaParams LemmaParams::diagnostic(int n, int y) {
    if (n < 2) throw std::invalid_argument("LemmaParams: n must be >= 2");
    if (y < 3) throw std::invalid_argument("LemmaParams: y must be >= 3");
    double p = std::max(16.0 * std::log(n), 4.0 * y) / (n - 1.0);
    return fill_params(n, y, p, 0);
}

LemmaVerdict verify_lemma_graph(const Graph& g, const LemmaParams& params) {
    if (g.vertex_count() != params.n)
        throw std::invalid_argument("verify_lemma_graph: graph order " +
                                    std::to_string(g.vertex_count()) + " != params.n " +
                                    std::to_string(params.n));
    const int n = g.vertex_count();
    LemmaVerdict v;

    v.degree_ok = true;
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) > params.degree_cap) {
            v.degree_ok = false;
            v.degree_witness = x;
            break;
        }
    }

    v.common_ok = true;
    for (int i = 0; i < n && v.common_ok; ++i) {
        auto [lo, hi] = g.row_span(i);
        const std::uint64_t* row = g.open_row(i);
        for (int j = i + 1; j < n; ++j) {
            if (count_and(row, g.open_row(j), lo, hi) > params.common_cap) {
                v.common_ok = false;
                v.common_witness = {i, j};
                break;
            }
        }
    }

    auto shortfall = strong_index_shortfall(g, params.strong_target);
    v.strong_ok = !shortfall.has_value();
    v.strong_witness = shortfall;

    v.connected_ok = is_connected(g);
    if (!v.connected_ok) {
        // first vertex a BFS from 0 cannot reach
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(x))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        for (int x = 0; x < n; ++x)
            if (!seen[x]) {
                v.unreached_witness = x;
                break;
            }
    }
    return v;
}

std::pair<Graph, LemmaVerdict> generate_lemma_graph(const LemmaParams& params,
                                                    std::uint64_t seed) {
    if (!(params.p > 0.0 && params.p <= 1.0))
        throw InfeasibleP("generate_lemma_graph: p = " + std::to_string(params.p) +
                          " outside (0,1]");
    if (params.n < 160ll * params.y * params.y + 1)
        throw InvalidSize("generate_lemma_graph: n below 160y^2+1");

    LemmaVerdict last;
    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        Graph g = gnp(params.n, params.p, derive_seed(seed, kStreamLemmaAttempt, attempt));
        LemmaVerdict verdict = verify_lemma_graph(g, params);
        verdict.attempts_used = attempt + 1;
        if (verdict.pass()) return {std::move(g), verdict};
        last = verdict;
    }
    throw GenerationFailed(last, params.max_retries);
}

int m_of_w(int w, int c_override) {
    if (w < 2) throw std::invalid_argument("m_of_w: w must be >= 2");
    long long formula = 160ll * (w + 1) * (w + 1) + 1;
    return static_cast<int>(std::max<long long>(c_override, formula));
}

ChainResult build_strong_graph(int n, int w, std::uint64_t seed, int max_retries,
                               int c_override) {
    const int block = m_of_w(w, c_override);
    if (n < block)
        throw InvalidSize("chained construction needs n >= M(w) = " + std::to_string(block) +
                          ", got n = " + std::to_string(n));

    ChainPlan plan;
    plan.w = w;
    plan.block_size = block;
    const int t = n / block;  // last block gets n-(T-1)M in [M, 2M)
    for (int i = 0; i < t - 1; ++i) plan.block_sizes.push_back(block);
    plan.block_sizes.push_back(n - (t - 1) * block);

    std::vector<Edge> edges;
    std::vector<LemmaVerdict> verdicts;
    std::vector<int> offsets(t, 0);
    double max_block_degree_cap = 0.0;

    for (int i = 0; i < t; ++i) {
        offsets[i] = (i == 0) ? 0 : offsets[i - 1] + plan.block_sizes[i - 1];
        LemmaParams params = LemmaParams::make(plan.block_sizes[i], w + 1, max_retries);
        max_block_degree_cap = std::max(max_block_degree_cap, params.degree_cap);
        try {
            auto [g, verdict] = generate_lemma_graph(params, derive_seed(seed, kStreamChainBlock, i));
            verdicts.push_back(verdict);
            for (const auto& [a, b] : g.edges()) edges.emplace_back(offsets[i] + a, offsets[i] + b);
        } catch (const GenerationFailed& e) {
            throw GenerationFailed(e.last_verdict, e.attempts, i);
        }
    }

    // One edge between adjacent blocks. Out-port of block i is local id 0
    // for the first block and local id 1 otherwise; in-port is always local
    // id 0, so interior blocks use two distinct vertices.
    for (int i = 0; i + 1 < t; ++i) {
        int from = offsets[i] + (i == 0 ? 0 : 1);
        int to = offsets[i + 1];
        plan.links.emplace_back(from, to);
        edges.emplace_back(from, to);
    }

    ChainResult result{Graph(n, edges), std::move(plan), std::move(verdicts)};

    // Re-verify the assembled graph; chaining cannot break these, but the
    // guarantees are checked rather than assumed.
    if (!is_connected(result.graph))
        throw Error("assembled chain graph is not connected");
    if (strong_index_shortfall(result.graph, w))
        throw Error("assembled chain graph lost the " + std::to_string(w) + "-strong property");
    if (degree_stats(result.graph).delta_max > max_block_degree_cap + 1.0)
        throw Error("assembled chain graph exceeds the degree cap");
    return result;
}

GenerationFailed::GenerationFailed(const LemmaVerdict& verdict, int attempts_, int block_)
    : Error(block_ >= 0 ? "block " + std::to_string(block_) + " generation failed after " +
                              std::to_string(attempts_) + " attempts"
                        : "generation failed after " + std::to_string(attempts_) + " attempts"),
      last_verdict(verdict), attempts(attempts_), block(block_) {}

}  // namespace strongid
