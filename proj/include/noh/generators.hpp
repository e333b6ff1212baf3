#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <unordered_set>
#include <variant>
#include <vector>

#include "noh/graph.hpp"
#include "noh/rng.hpp"

namespace noh {

namespace detail {

/// Pick `count` distinct targets with probability proportional to degree,
/// implemented networkx-style: a flat list holding every vertex once per
/// incident half-edge, sampled uniformly with rejection of repeats.
inline void pick_preferential(std::vector<vertex_id> &targets, std::size_t count,
                              const std::vector<vertex_id> &repeated,
                              vertex_id n_existing, xoshiro256 &rng)
{
    targets.clear();
    while (targets.size() < count) {
        vertex_id t;
        if (repeated.empty())
            t = static_cast<vertex_id>(rng.bounded(n_existing)); // no edges yet: uniform
        else
            t = repeated[rng.bounded(repeated.size())];
        if (std::find(targets.begin(), targets.end(), t) == targets.end())
            targets.push_back(t);
    }
}

} // namespace detail

/// Barabasi-Albert preferential attachment. The seed graph is a star on the
/// first m vertices (center 0); every later vertex attaches to m distinct
/// existing vertices with probability proportional to degree.
/// Edge count: (m-1) + m*(n-m).
inline graph generate_scale_free(std::size_t n, std::size_t m, std::uint64_t seed)
{
    if (m < 1 || m >= n)
        throw std::invalid_argument("generate_scale_free: need 1 <= m < n");

    xoshiro256 rng(seed);
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    edges.reserve((m - 1) + m * (n - m));
    std::vector<vertex_id> repeated;
    repeated.reserve(2 * edges.capacity());

    for (vertex_id v = 1; v < m; ++v) {
        edges.emplace_back(0, v);
        repeated.push_back(0);
        repeated.push_back(v);
    }

    std::vector<vertex_id> targets;
    for (vertex_id v = static_cast<vertex_id>(m); v < n; ++v) {
        detail::pick_preferential(targets, m, repeated, v, rng);
        for (const vertex_id t : targets) {
            edges.emplace_back(t, v);
            repeated.push_back(t);
            repeated.push_back(v);
        }
    }
    return graph(n, edges);
}

/// Watts-Strogatz ring rewiring. Start from the ring lattice where every
/// vertex links to K/2 neighbors on each side, then rewire each clockwise
/// edge with probability p to a uniform target, resampling self-loops and
/// duplicates. Edge count is exactly n*K/2.
inline graph generate_small_world(std::size_t n, std::size_t k, double p, std::uint64_t seed)
{
    if (k % 2 != 0 || k < 2 || k >= n)
        throw std::invalid_argument("generate_small_world: need even K with 2 <= K < n");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("generate_small_world: need 0 <= p <= 1");

    xoshiro256 rng(seed);
    std::vector<std::unordered_set<vertex_id>> adj(n);
    for (auto &s : adj)
        s.reserve(2 * k);

    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (vertex_id u = 0; u < n; ++u) {
            const auto v = static_cast<vertex_id>((u + j) % n);
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (vertex_id u = 0; u < n; ++u) {
            if (!rng.bernoulli(p))
                continue;
            if (adj[u].size() >= n - 1)
                continue; // u already linked to everyone; nothing to rewire to
            const auto v = static_cast<vertex_id>((u + j) % n);
            auto w = static_cast<vertex_id>(rng.bounded(n));
            while (w == u || adj[u].count(w) != 0)
                w = static_cast<vertex_id>(rng.bounded(n));
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }

    std::vector<std::pair<vertex_id, vertex_id>> edges;
    edges.reserve(n * k / 2);
    for (vertex_id u = 0; u < n; ++u)
        for (const vertex_id v : adj[u])
            if (u < v)
                edges.emplace_back(u, v);
    return graph(n, edges);
}

/// Growth with variable increments: each arriving vertex creates c new
/// preferential-attachment edges, where c is a lognormal(mu, sigma) draw
/// rounded half-up and clamped to [1, current vertex count].
inline graph generate_nve(std::size_t n, double lognormal_mu, double lognormal_sigma,
                          std::uint64_t seed)
{
    if (n < 2)
        throw std::invalid_argument("generate_nve: need n >= 2");
    if (!(lognormal_sigma > 0.0))
        throw std::invalid_argument("generate_nve: need lognormal_sigma > 0");

    xoshiro256 rng(seed);
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    std::vector<vertex_id> repeated;
    std::vector<vertex_id> targets;

    for (vertex_id v = 1; v < n; ++v) {
        const double draw = std::exp(lognormal_mu + lognormal_sigma * rng.normal());
        double rounded = std::floor(draw + 0.5);
        rounded = std::min(rounded, static_cast<double>(v));
        const auto c = static_cast<std::size_t>(std::max(1.0, rounded));
        detail::pick_preferential(targets, c, repeated, v, rng);
        for (const vertex_id t : targets) {
            edges.emplace_back(t, v);
            repeated.push_back(t);
            repeated.push_back(v);
        }
    }
    return graph(n, edges);
}

// Initial-topology specification, as consumed by the experiment configs.

struct scale_free_params {
    std::size_t m = 5;
};

struct small_world_params {
    std::size_t k = 10;
    double p = 0.3;
};

struct nve_params {
    double lognormal_mu = 2.0;
    double lognormal_sigma = 0.5;
};

struct edge_list_params {
    std::filesystem::path path;
};

struct generator_spec {
    std::variant<scale_free_params, small_world_params, nve_params, edge_list_params> kind;
    std::size_t n_vertices = 0;

    graph build(std::uint64_t seed) const
    {
        return std::visit(
            [&](const auto &params) -> graph {
                using T = std::decay_t<decltype(params)>;
                if constexpr (std::is_same_v<T, scale_free_params>)
                    return generate_scale_free(n_vertices, params.m, seed);
                else if constexpr (std::is_same_v<T, small_world_params>)
                    return generate_small_world(n_vertices, params.k, params.p, seed);
                else if constexpr (std::is_same_v<T, nve_params>)
                    return generate_nve(n_vertices, params.lognormal_mu,
                                        params.lognormal_sigma, seed);
                else
                    return load_edge_list(params.path).g;
            },
            kind);
    }
};

} // namespace noh
