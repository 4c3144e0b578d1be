#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strongid/graph.hpp"

namespace strongid {

// --- fixture families ---------------------------------------------------

Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph path(int n);      // n >= 1
Graph petersen();       // the 3-regular graph on 10 vertices

/// G(n,p): every pair (i,j), i < j, iterated in lexicographic order, gets an
/// independent Bernoulli(p) draw from SplitMix64(seed).
Graph gnp(int n, double p, std::uint64_t seed);

/// Edge probability max(16 ln n, 4y)/(n-1) of the random-graph
/// construction. Throws InfeasibleP when the value exceeds 1 (n too small
/// for this regime).
double lemma_p(int n, int y);

/// Parameters for generating / checking one random block: a graph drawn at
/// edge probability p should have max degree <= 2(n-1)p, all common-
/// neighbour counts <= (n-1)p/4, the (y-1)-strong neighbourhood property,
/// and be connected.
struct LemmaParams {
    int n = 0;
    int y = 0;
    double p = 0.0;
    int max_retries = 100;
    double degree_cap = 0.0;   // 2(n-1)p
    double common_cap = 0.0;   // (n-1)p/4
    int strong_target = 0;     // y-1

    /// Validating factory for generation: requires feasible p and
    /// n >= 160 y^2 + 1 (throws InfeasibleP / InvalidSize).
    static LemmaParams make(int n, int y, int max_retries = 100);

    /// Thresholds only, for grading arbitrary graphs against the caps a
    /// given (n,y) would impose. Skips the feasibility and size checks, so
    /// p may exceed 1; not usable for generation.
    static LemmaParams diagnostic(int n, int y);
};

/// Deterministic per-property verdict with witnesses for the failed checks.
struct LemmaVerdict {
    bool degree_ok = false;
    bool common_ok = false;
    bool strong_ok = false;
    bool connected_ok = false;
    std::optional<int> degree_witness;                  // vertex over the cap
    std::optional<std::pair<int, int>> common_witness;  // pair over the cap
    std::optional<std::pair<int, int>> strong_witness;  // pair below the target
    std::optional<int> unreached_witness;               // vertex unreachable from 0
    int attempts_used = 0;

    bool pass() const { return degree_ok && common_ok && strong_ok && connected_ok; }
};

/// Checks the four properties of LemmaParams against g (which must have
/// params.n vertices). Integer observables are compared against the real
/// caps with <=; all four checks always run.
LemmaVerdict verify_lemma_graph(const Graph& g, const LemmaParams& params);

struct GenerationFailed;

/// Generate-and-verify loop: draws gnp(n, p, derive_seed(seed, attempt))
/// until a draw passes verify_lemma_graph, up to max_retries attempts.
/// Throws GenerationFailed (carrying the last verdict) on exhaustion.
std::pair<Graph, LemmaVerdict> generate_lemma_graph(const LemmaParams& params,
                                                    std::uint64_t seed);

/// Minimum block size for target strength w: max(c_override, 160(w+1)^2+1).
/// The override stands in for the absolute constant of the underlying
/// existence argument, which is not effective; the default 1 leaves the
/// explicit term in charge.
int m_of_w(int w, int c_override = 1);

/// Layout of the block-chained construction.
struct ChainPlan {
    int w = 0;
    int block_size = 0;                      // M(w)
    std::vector<int> block_sizes;            // T-1 blocks of M(w), last in [M, 2M)
    std::vector<std::pair<int, int>> links;  // global ids of each chaining edge
};

struct ChainResult {
    Graph graph;
    ChainPlan plan;
    std::vector<LemmaVerdict> block_verdicts;
};

/// Builds an n-vertex connected graph with the w-strong neighbourhood
/// property by generating independent verified blocks and joining adjacent
/// blocks with one edge. Interior blocks use two distinct link vertices
/// (lowest two local ids), so chaining adds at most one edge per vertex and
/// the final max degree stays within (max block degree cap) + 1.
/// Connectivity, strength and the degree cap are re-verified on the
/// assembled graph before returning.
ChainResult build_strong_graph(int n, int w, std::uint64_t seed, int max_retries = 100,
                               int c_override = 1);

/// Generation gave up: carries the final attempt's verdict for diagnosis,
/// and the block index when thrown from the chained builder.
struct GenerationFailed : Error {
    GenerationFailed(const LemmaVerdict& verdict, int attempts, int block = -1);
    LemmaVerdict last_verdict;
    int attempts;
    int block;  // -1 outside block chaining
};

}  // namespace strongid
