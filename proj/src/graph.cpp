#include "strongid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace strongid {

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 1) throw InvalidSize("vertex count must be >= 1, got " + std::to_string(n));
    n_ = n;
    words_ = (n + 63) / 64;

    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    m_ = static_cast<int>(norm.size());

    adj_.assign(n, {});
    for (const auto& [u, v] : norm) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    closed_.assign(static_cast<std::size_t>(n) * words_, 0);
    open_.assign(static_cast<std::size_t>(n) * words_, 0);
    auto set_bit = [this](std::vector<std::uint64_t>& rows, int row, int bit) {
        rows[static_cast<std::size_t>(row) * words_ + bit / 64] |= 1ull << (bit % 64);
    };
    for (int v = 0; v < n; ++v) {
        set_bit(closed_, v, v);
        for (int u : adj_[v]) {
            set_bit(closed_, v, u);
            set_bit(open_, v, u);
        }
    }

    span_.resize(n);
    for (int v = 0; v < n; ++v) {
        const std::uint64_t* row = closed_row(v);
        int lo = 0, hi = words_;
        while (lo < hi && row[lo] == 0) ++lo;
        while (hi > lo && row[hi - 1] == 0) --hi;
        span_[v] = {lo, hi};
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (open_row(u)[v / 64] >> (v % 64)) & 1u;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<int> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<int> distinguishing_set(const Graph& g, int v, int u) {
    g.check_vertex(v);
    g.check_vertex(u);
    if (v == u) throw SameVertex("distinguishing set needs two distinct vertices");
    std::vector<int> nv = closed_neighborhood(g, v);
    std::vector<int> nu = closed_neighborhood(g, u);
    std::vector<int> out;
    std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(out));
    return out;
}

std::vector<int> common_neighbors(const Graph& g, int i, int j) {
    g.check_vertex(i);
    g.check_vertex(j);
    if (i == j) throw SameVertex("common neighbours need two distinct vertices");
    const auto& ni = g.neighbors(i);
    const auto& nj = g.neighbors(j);
    std::vector<int> out;
    std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(), std::back_inserter(out));
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    if (g.vertex_count() == 0) return s;
    s.delta_min = g.degree(0);
    s.delta_max = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        s.delta_min = std::min(s.delta_min, d);
        s.delta_max = std::max(s.delta_max, d);
    }
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
        }
    }
    return reached == n;
}

namespace {

// Splits text into lines, tracking 1-based line numbers; '#' lines and
// blank lines are skipped.
struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Returns the next data line, or empty optional at end of input.
    bool next(std::string_view& out, int& no) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line = (eol == std::string_view::npos)
                                        ? text.substr(pos)
                                        : text.substr(pos, eol - pos);
            pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
            ++line_no;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;  // blank
            if (line[first] == '#') continue;               // comment
            out = line;
            no = line_no;
            return true;
        }
        return false;
    }
};

// Parses exactly `want` base-10 integers from a line.
std::vector<long long> parse_ints(std::string_view line, int want, int line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || ptr != line.data() + j)
            throw ParseError(line_no, "expected integer, got '" + std::string(line.substr(i, j - i)) + "'");
        out.push_back(value);
        i = j;
    }
    if (static_cast<int>(out.size()) != want)
        throw ParseError(line_no, "expected " + std::to_string(want) + " integers, got " +
                                      std::to_string(out.size()));
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    int no = 0;

    if (!reader.next(line, no)) throw ParseError(1, "missing header line 'n m'");
    auto header = parse_ints(line, 2, no);
    long long n = header[0], m = header[1];
    if (n < 1) throw ParseError(no, "vertex count must be >= 1");
    if (m < 0) throw ParseError(no, "edge count must be >= 0");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!reader.next(line, no))
            throw ParseError(reader.line_no + 1,
                             "expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        auto uv = parse_ints(line, 2, no);
        long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(no, "endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (reader.next(line, no)) throw ParseError(no, "trailing content after edge list");

    return Graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out;
    out += std::to_string(g.vertex_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace strongid
