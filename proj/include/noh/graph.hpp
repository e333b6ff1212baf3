#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace noh {

using vertex_id = std::uint32_t;

/// Immutable undirected simple graph in CSR form. Neighbor lists are sorted
/// ascending; symmetry and simplicity are enforced at construction.
class graph {
public:
    graph() = default;

    /// Build from an undirected edge list over vertices 0..n-1. Throws on
    /// self-loops, duplicate edges and out-of-range endpoints.
    graph(std::size_t n, std::span<const std::pair<vertex_id, vertex_id>> edges)
    {
        std::vector<std::size_t> deg(n, 0);
        for (const auto &[u, v] : edges) {
            if (u >= n || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("graph: self-loop");
            ++deg[u];
            ++deg[v];
        }
        offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v)
            offsets_[v + 1] = offsets_[v] + deg[v];
        neighbors_.resize(offsets_[n]);
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (const auto &[u, v] : edges) {
            neighbors_[cursor[u]++] = v;
            neighbors_[cursor[v]++] = u;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
            const auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
            std::sort(first, last);
            if (std::adjacent_find(first, last) != last)
                throw std::invalid_argument("graph: duplicate edge");
        }
        n_edges_ = edges.size();
    }

    std::size_t n_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t n_edges() const { return n_edges_; }

    std::size_t degree(vertex_id v) const
    {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }

    /// Sorted ascending neighbor list.
    std::span<const vertex_id> neighbors(vertex_id v) const
    {
        check_vertex(v);
        return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    bool has_edge(vertex_id u, vertex_id v) const
    {
        const auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::size_t max_degree() const
    {
        std::size_t best = 0;
        for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
            best = std::max(best, offsets_[v + 1] - offsets_[v]);
        return best;
    }

private:
    void check_vertex(vertex_id v) const
    {
        if (v >= n_vertices())
            throw std::out_of_range("graph: vertex id out of range");
    }

    std::vector<std::size_t> offsets_;
    std::vector<vertex_id> neighbors_;
    std::size_t n_edges_ = 0;
};

/// Result of ingesting a whitespace-separated edge list.
struct edge_list_load {
    graph g;
    std::vector<std::int64_t> original_ids; // dense id -> label in the file
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

namespace detail {

inline bool parse_int64(std::string_view tok, std::int64_t &out)
{
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

} // namespace detail

/// Load "u v" pairs, one edge per line. '#'-prefixed lines are comments.
/// Vertices are relabeled densely 0..N-1 in first-appearance order;
/// self-loops and duplicate edges are dropped and counted.
inline edge_list_load load_edge_list(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_edge_list: cannot open " + path.string());

    edge_list_load out;
    std::unordered_map<std::int64_t, vertex_id> dense;
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    std::string line;
    std::size_t line_no = 0;

    const auto intern = [&](std::int64_t label) {
        const auto [it, inserted] = dense.emplace(label, static_cast<vertex_id>(dense.size()));
        if (inserted)
            out.original_ids.push_back(label);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        const auto start = sv.find_first_not_of(" \t\r");
        if (start == std::string_view::npos)
            continue;
        if (sv[start] == '#')
            continue;
        sv.remove_prefix(start);

        const auto sep = sv.find_first_of(" \t");
        std::int64_t a = 0, b = 0;
        bool ok = sep != std::string_view::npos && detail::parse_int64(sv.substr(0, sep), a);
        if (ok) {
            auto rest = sv.substr(sep);
            const auto bstart = rest.find_first_not_of(" \t\r");
            ok = bstart != std::string_view::npos;
            if (ok) {
                rest.remove_prefix(bstart);
                const auto bend = rest.find_first_of(" \t\r");
                if (bend != std::string_view::npos)
                    rest = rest.substr(0, bend);
                ok = detail::parse_int64(rest, b);
            }
        }
        if (!ok)
            throw std::runtime_error("load_edge_list: malformed line " + std::to_string(line_no) +
                                     " in " + path.string());

        if (a == b) {
            ++out.self_loops_dropped;
            continue;
        }
        edges.emplace_back(intern(a), intern(b));
    }
    if (edges.empty() && out.self_loops_dropped == 0)
        throw std::runtime_error("load_edge_list: no edges in " + path.string());

    // Drop duplicates, treating (u,v) and (v,u) as the same edge.
    for (auto &[u, v] : edges)
        if (u > v)
            std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    out.duplicates_dropped = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());

    out.g = graph(dense.size(), edges);
    return out;
}

/// Canonical writer: one "u v" line per edge with u < v, sorted.
inline void save_edge_list(const graph &g, const std::filesystem::path &path)
{
    std::ofstream outf(path);
    if (!outf)
        throw std::runtime_error("save_edge_list: cannot open " + path.string());
    for (vertex_id u = 0; u < g.n_vertices(); ++u)
        for (const vertex_id v : g.neighbors(u))
            if (u < v)
                outf << u << ' ' << v << '\n';
    if (!outf)
        throw std::runtime_error("save_edge_list: write failed for " + path.string());
}

} // namespace noh
