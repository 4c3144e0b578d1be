#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongid/errors.hpp"

namespace strongid {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph over vertex ids 0..n-1.
///
/// Adjacency is stored twice: as sorted neighbour lists (for iteration and
/// serialization) and as packed 64-bit rows of the open and closed
/// neighbourhood indicator vectors (for the pairwise set-arithmetic scans,
/// which have to be O(n/64) per pair to keep n ~ 3000 workloads tractable).
/// All accessors are const; instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed. Throws InvalidEdge for an endpoint
    /// outside [0,n), SelfLoop for an edge (v,v).
    Graph(int n, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    /// Open neighbourhood N(v), sorted ascending.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool has_edge(int u, int v) const;

    /// All edges as (u,v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

    // --- packed-row access (used by the scanning kernels) ---

    int words() const { return words_; }
    const std::uint64_t* closed_row(int v) const { return closed_.data() + static_cast<std::size_t>(v) * words_; }
    const std::uint64_t* open_row(int v) const { return open_.data() + static_cast<std::size_t>(v) * words_; }
    /// Word range [lo,hi) covering every set bit of closed_row(v).
    std::pair<int, int> row_span(int v) const { return span_[v]; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InvalidVertex("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> closed_;
    std::vector<std::uint64_t> open_;
    std::vector<std::pair<int, int>> span_;
};

struct DegreeStats {
    int delta_max = 0;  // max open degree
    int delta_min = 0;  // min open degree
};

/// Validating construction wrapper (same contract as the Graph constructor;
/// additionally rejects n < 1).
Graph build_graph(int n, std::span<const Edge> edges);

/// N[v] = N(v) ∪ {v}, sorted ascending.
std::vector<int> closed_neighborhood(const Graph& g, int v);

/// N[v] \ N[u]: the vertices that see v but not u. Not symmetric in (v,u).
/// Throws SameVertex when v == u.
std::vector<int> distinguishing_set(const Graph& g, int v, int u);

/// N(i) ∩ N(j) over open neighbourhoods (never contains i or j).
std::vector<int> common_neighbors(const Graph& g, int i, int j);

DegreeStats degree_stats(const Graph& g);

/// True iff a traversal from vertex 0 reaches all vertices (single vertex
/// counts as connected).
bool is_connected(const Graph& g);

/// Parses the edge-list text format:
///   - '#' lines are comments, blank lines are skipped
///   - first data line is "n m"
///   - exactly m data lines "u v" with 0 <= u,v < n and u != v follow
/// Throws ParseError (with 1-based line number) on malformed input.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: "n m\n" then one "u v\n" per edge, u < v,
/// edges in lexicographic order, LF line endings.
std::string serialize_edge_list(const Graph& g);

// --- word-level kernels -----------------------------------------------
//
// Every pairwise quantity in the library reduces to a popcount over an
// and/and-not combination of packed rows. The capped variants stop as soon
// as the running count reaches `cap`; callers use them when only the
// comparison against a threshold (or a running minimum) matters. A capped
// call that returns a value < cap is exact.

inline int count_and(const std::uint64_t* a, const std::uint64_t* b, int lo, int hi) {
    int acc = 0;
    for (int w = lo; w < hi; ++w) acc += std::popcount(a[w] & b[w]);
    return acc;
}

inline int count_andnot_capped(const std::uint64_t* a, const std::uint64_t* b, int lo, int hi,
                               int cap) {
    int acc = 0;
    for (int w = lo; w < hi; ++w) {
        acc += std::popcount(a[w] & ~b[w]);
        if (acc >= cap) return acc;
    }
    return acc;
}

inline int count_and3_capped(const std::uint64_t* a, const std::uint64_t* b,
                             const std::uint64_t* c, int lo, int hi, int cap) {
    int acc = 0;
    for (int w = lo; w < hi; ++w) {
        acc += std::popcount(a[w] & ~b[w] & c[w]);
        if (acc >= cap) return acc;
    }
    return acc;
}

}  // namespace strongid
