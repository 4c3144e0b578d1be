#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "strongid/graph.hpp"

namespace strongid {

/// Index / slack pair for the randomized construction.
struct CodeParams {
    int r = 1;  // required identification index, >= 1
    int d = 1;  // slack exponent in the size analysis, >= 1
};

/// Output of the randomized construction, with full provenance:
/// code = sampled ∪ bad_closure, bad_closure = ∪_{v in bad} N[v].
struct CodeResult {
    std::vector<int> code;         // Y, sorted ascending
    std::vector<int> sampled;      // Z
    std::vector<int> bad;          // Y_b
    std::vector<int> bad_closure;  // Z_b
    double q_used = 0.0;
    std::uint64_t seed = 0;
};

struct VerifyWitness {
    int v = 0;
    int u = 0;
    int count = 0;  // #((N[v]\N[u]) ∩ C) at the witness pair
};

/// Verdict of the identification-code check. `achieved_min` is the exact
/// minimum of #((N[v]\N[u]) ∩ C) over all ordered pairs of distinct
/// vertices; the witness (present exactly when invalid) is the
/// lexicographically first ordered pair attaining that minimum.
struct VerifyOutcome {
    bool valid = false;
    int achieved_min = 0;
    std::optional<VerifyWitness> witness;
};

/// Largest k such that #(N[v]\N[u]) >= k for every ordered pair of distinct
/// vertices (the graph's strong-neighbourhood index). Throws TooSmall for
/// n < 2.
int strong_index(const Graph& g);

/// Threshold form of strong_index: empty optional when the index is >= k,
/// otherwise the lexicographically first ordered pair falling short. Much
/// cheaper than the exact index when only a comparison is needed.
std::optional<std::pair<int, int>> strong_index_shortfall(const Graph& g, int k);

/// Checks #((N[v]\N[u]) ∩ code) >= r over all ordered pairs of distinct
/// vertices. Members of `code` must lie in [0,n) (InvalidVertex otherwise);
/// duplicates are ignored. Throws TooSmall for n < 2.
VerifyOutcome is_identification_code(const Graph& g, std::span<const int> code, int r);

/// The set of bad vertices for a sampled set Z: v is bad iff
/// #(N[v] ∩ Z) <= r-1, or some other vertex w has #((N[v]\N[w]) ∩ Z) <= r-1.
/// (Only w within distance two of v can trigger the second condition; for
/// any farther w the count equals #(N[v] ∩ Z), which the first condition
/// already covers. The scan exploits this instead of materializing balls.)
std::vector<int> bad_vertices(const Graph& g, std::span<const int> sampled, int r);

/// Randomized construction: samples Z by independent Bernoulli(q) draws in
/// ascending vertex order from SplitMix64(seed), then returns
/// Y = Z ∪ (∪_{v bad} N[v]). When q is omitted it defaults to
/// q_star(delta_max, r, d) clamped into [0,1]. The output is always a valid
/// code with index r; if the graph is not r-strong no code exists at all and
/// NotRStrong is thrown (carrying the achieved index).
CodeResult randomized_code(const Graph& g, CodeParams params, std::optional<double> q,
                           std::uint64_t seed);

inline constexpr int kDefaultExactLimit = 24;

/// Exhaustive minimum code: enumerates subsets by increasing cardinality
/// (lexicographic within a cardinality, starting at ceil(n/(delta_max+1)))
/// and returns the first valid one, or nullopt when the graph is not
/// r-strong (no code exists) or no code within size_cap exists. Throws
/// TooLargeForExact above the exhaustive limit (default 24, hard max 64).
std::optional<std::pair<int, std::vector<int>>> exact_min_code(
    const Graph& g, int r, std::optional<int> size_cap = std::nullopt,
    int exhaustive_limit = kDefaultExactLimit);

}  // namespace strongid
