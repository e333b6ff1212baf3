#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "noh/graph.hpp"
#include "noh/process.hpp"

namespace noh {

/// Empirical distribution over integer values (network sizes, degrees).
class histogram {
public:
    histogram() = default;

    void add(std::int64_t value, std::uint64_t count = 1)
    {
        counts_[value] += count;
        total_ += count;
    }

    static histogram from_samples(std::span<const std::int64_t> samples)
    {
        histogram h;
        for (const std::int64_t s : samples)
            h.add(s);
        return h;
    }

    std::uint64_t total() const { return total_; }
    bool empty() const { return total_ == 0; }

    std::uint64_t count(std::int64_t value) const
    {
        const auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    double frequency(std::int64_t value) const
    {
        return total_ == 0 ? 0.0 : static_cast<double>(count(value)) / static_cast<double>(total_);
    }

    /// Ascending (value, count) pairs.
    const std::map<std::int64_t, std::uint64_t> &bins() const { return counts_; }

    std::int64_t min_value() const { return counts_.begin()->first; }
    std::int64_t max_value() const { return counts_.rbegin()->first; }

    /// Merge another histogram into this one (pooled samples).
    void merge(const histogram &other)
    {
        for (const auto &[value, count] : other.counts_)
            add(value, count);
    }

private:
    std::map<std::int64_t, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Sizes observed inside the closed window [t_lo, t_hi].
inline histogram size_histogram(const size_series &series, double t_lo, double t_hi)
{
    if (!(t_lo <= t_hi))
        throw std::invalid_argument("size_histogram: empty window");
    histogram h;
    for (std::size_t i = 0; i < series.t.size(); ++i)
        if (series.t[i] >= t_lo && series.t[i] <= t_hi)
            h.add(static_cast<std::int64_t>(series.size[i]));
    if (h.empty())
        throw std::invalid_argument("size_histogram: no observations inside window");
    return h;
}

/// KL(p||Q) = sum_n p_n ln(p_n / Q_n), natural log, with p given over states
/// 0..len-1. States where p_n > 0 but the empirical frequency is zero receive
/// an additive smoothing floor eps (default 1/(2*total)); the floored mass is
/// added on top and the whole empirical vector renormalized.
inline double kl_divergence(std::span<const double> p, const histogram &q, double epsilon = 0.0)
{
    if (q.empty())
        throw std::invalid_argument("kl_divergence: empty empirical histogram");
    const double eps =
        epsilon > 0.0 ? epsilon : 1.0 / (2.0 * static_cast<double>(q.total()));

    double extra_mass = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n)
        if (p[n] > 0.0 && q.count(static_cast<std::int64_t>(n)) == 0)
            extra_mass += eps;
    const double norm = 1.0 + extra_mass;

    double kl = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (p[n] <= 0.0)
            continue;
        const double f = q.frequency(static_cast<std::int64_t>(n));
        const double qn = (f > 0.0 ? f : eps) / norm;
        kl += p[n] * std::log(p[n] / qn);
    }
    return kl;
}

/// KL between two empirical distributions: the first histogram's frequencies
/// play the role of p. Requires nonnegative support.
inline double kl_divergence(const histogram &p, const histogram &q, double epsilon = 0.0)
{
    if (p.empty())
        throw std::invalid_argument("kl_divergence: empty p histogram");
    if (p.min_value() < 0)
        throw std::invalid_argument("kl_divergence: negative support");
    std::vector<double> dense(static_cast<std::size_t>(p.max_value()) + 1, 0.0);
    for (const auto &[value, count] : p.bins())
        dense[static_cast<std::size_t>(value)] =
            static_cast<double>(count) / static_cast<double>(p.total());
    return kl_divergence(dense, q, epsilon);
}

/// Fisher-Pearson moment coefficient g1 = m3 / m2^{3/2} (population form).
inline double skewness(std::span<const double> samples)
{
    if (samples.size() < 3)
        throw std::invalid_argument("skewness: need at least 3 samples");
    const auto n = static_cast<double>(samples.size());
    double mean = 0;
    for (const double x : samples)
        mean += x;
    mean /= n;
    double m2 = 0, m3 = 0;
    for (const double x : samples) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    if (m2 <= 0.0)
        throw std::domain_error("skewness: zero variance");
    return m3 / (m2 * std::sqrt(m2));
}

/// Online-degree distribution over the online vertices of a snapshot.
inline histogram degree_histogram(const online_snapshot &snap)
{
    if (snap.online.empty())
        throw std::invalid_argument("degree_histogram: no online vertices");
    histogram h;
    for (const std::uint32_t k : snap.online_degree)
        h.add(k);
    return h;
}

namespace detail {

inline std::size_t count_common(std::span<const vertex_id> a, std::span<const vertex_id> b)
{
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

} // namespace detail

/// Average local clustering: mean over all vertices of the fraction of
/// neighbor pairs that are themselves linked; vertices of degree < 2
/// contribute 0.
inline double clustering_coefficient(const graph &g)
{
    const std::size_t n = g.n_vertices();
    if (g.n_edges() == 0)
        throw std::invalid_argument("clustering_coefficient: graph has no edges");
    double acc = 0;
    for (vertex_id v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        const std::size_t k = nb.size();
        if (k < 2)
            continue;
        std::size_t links = 0;
        for (const vertex_id u : nb)
            links += detail::count_common(nb, g.neighbors(u));
        // every triangle through v is counted twice in `links`
        acc += static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
    return acc / static_cast<double>(n);
}

/// Clustering of the online-induced subgraph, averaged over online vertices.
inline double clustering_coefficient(const graph &g, const online_snapshot &snap)
{
    if (snap.online.empty())
        throw std::invalid_argument("clustering_coefficient: no online vertices");
    std::vector<bool> online(g.n_vertices(), false);
    for (const vertex_id v : snap.online)
        online[v] = true;

    double acc = 0;
    std::vector<vertex_id> nb_v;
    for (const vertex_id v : snap.online) {
        nb_v.clear();
        for (const vertex_id u : g.neighbors(v))
            if (online[u])
                nb_v.push_back(u);
        const std::size_t k = nb_v.size();
        if (k < 2)
            continue;
        std::size_t links = 0;
        for (const vertex_id u : nb_v)
            for (const vertex_id w : g.neighbors(u))
                if (w != v && online[w] &&
                    std::binary_search(nb_v.begin(), nb_v.end(), w))
                    ++links;
        acc += static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
    return acc / static_cast<double>(snap.online.size());
}

inline double mean_degree(const graph &g)
{
    if (g.n_vertices() == 0)
        throw std::invalid_argument("mean_degree: empty graph");
    return 2.0 * static_cast<double>(g.n_edges()) / static_cast<double>(g.n_vertices());
}

/// Mean degree of the online-induced subgraph.
inline double mean_degree(const online_snapshot &snap)
{
    if (snap.online.empty())
        throw std::invalid_argument("mean_degree: no online vertices");
    return 2.0 * static_cast<double>(snap.active_edges) /
           static_cast<double>(snap.online.size());
}

namespace detail {

/// Pearson correlation of degrees across edge endpoints; each undirected
/// edge contributes both orientations.
inline double degree_correlation(std::span<const double> deg_x, std::span<const double> deg_y)
{
    const auto n = static_cast<double>(deg_x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < deg_x.size(); ++i) {
        sx += deg_x[i];
        sy += deg_y[i];
    }
    const double mx = sx / n, my = sy / n;
    double cxy = 0, cxx = 0, cyy = 0;
    for (std::size_t i = 0; i < deg_x.size(); ++i) {
        const double dx = deg_x[i] - mx, dy = deg_y[i] - my;
        cxy += dx * dy;
        cxx += dx * dx;
        cyy += dy * dy;
    }
    if (cxx <= 0.0 || cyy <= 0.0)
        throw std::domain_error("assortativity: zero degree variance");
    return cxy / std::sqrt(cxx * cyy);
}

} // namespace detail

inline double assortativity(const graph &g)
{
    if (g.n_edges() == 0)
        throw std::invalid_argument("assortativity: graph has no edges");
    std::vector<double> x, y;
    x.reserve(2 * g.n_edges());
    y.reserve(2 * g.n_edges());
    for (vertex_id u = 0; u < g.n_vertices(); ++u) {
        const auto du = static_cast<double>(g.degree(u));
        for (const vertex_id v : g.neighbors(u)) {
            x.push_back(du);
            y.push_back(static_cast<double>(g.degree(v)));
        }
    }
    return detail::degree_correlation(x, y);
}

/// Assortativity of the online-induced subgraph (online degrees across
/// active edges).
inline double assortativity(const graph &g, const online_snapshot &snap)
{
    if (snap.active_edges == 0)
        throw std::invalid_argument("assortativity: no active edges");
    std::vector<std::uint32_t> online_deg(g.n_vertices(), 0);
    std::vector<bool> online(g.n_vertices(), false);
    for (std::size_t i = 0; i < snap.online.size(); ++i) {
        online[snap.online[i]] = true;
        online_deg[snap.online[i]] = snap.online_degree[i];
    }
    std::vector<double> x, y;
    x.reserve(2 * snap.active_edges);
    y.reserve(2 * snap.active_edges);
    for (const vertex_id u : snap.online) {
        for (const vertex_id v : g.neighbors(u)) {
            if (!online[v])
                continue;
            x.push_back(static_cast<double>(online_deg[u]));
            y.push_back(static_cast<double>(online_deg[v]));
        }
    }
    return detail::degree_correlation(x, y);
}

inline double mean_absolute_error(std::span<const double> observed,
                                  std::span<const double> predicted)
{
    if (observed.size() != predicted.size() || observed.empty())
        throw std::invalid_argument("mean_absolute_error: length mismatch");
    double acc = 0;
    for (std::size_t i = 0; i < observed.size(); ++i)
        acc += std::abs(observed[i] - predicted[i]);
    return acc / static_cast<double>(observed.size());
}

} // namespace noh
