#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "noh/graph.hpp"
#include "noh/rng.hpp"

namespace noh {

enum class phase : std::uint8_t { hidden = 0, online = 1 };

struct noh_params {
    double lambda; // rate at which a hidden vertex goes online
    double mu;     // rate at which an online vertex hides

    noh_params(double lambda_, double mu_) : lambda(lambda_), mu(mu_)
    {
        if (!(lambda > 0.0) || !(mu > 0.0))
            throw std::invalid_argument("noh_params: rates must be positive");
    }
};

/// Holding time in the given phase: Exp(mu) while online, Exp(lambda) while
/// hidden, via inverse CDF on a uniform strictly inside (0,1) so durations
/// are strictly positive and finite.
inline double sample_duration(phase ph, const noh_params &params, xoshiro256 &rng)
{
    return rng.exponential(ph == phase::online ? params.mu : params.lambda);
}

struct vertex_state {
    phase state;
    double next_transition;
};

struct online_snapshot {
    double t = 0;
    std::vector<vertex_id> online;              // ascending
    std::size_t active_edges = 0;               // both endpoints online
    std::vector<std::uint32_t> online_degree;   // parallel to `online`
};

struct initial_condition {
    double q = 1.0; // probability a vertex starts online

    static initial_condition all_online() { return {1.0}; }
    static initial_condition fraction(double q)
    {
        if (!(q >= 0.0 && q <= 1.0))
            throw std::invalid_argument("initial_condition: need 0 <= q <= 1");
        return {q, true};
    }

    bool is_all() const { return !bernoulli_draws; }

private:
    initial_condition(double q_, bool draws = false) : q(q_), bernoulli_draws(draws) {}
    bool bernoulli_draws = false; // Fraction(q) consumes one extra uniform per vertex
    friend class noh_process;
};

/// Exact event-driven simulation of the online/hidden dynamics: every vertex
/// carries an exponential clock for its current phase; the earliest clock
/// fires, the vertex flips, and a fresh duration is drawn for the new phase.
/// The graph is not owned and must outlive the process.
class noh_process {
public:
    noh_process(const graph &g, noh_params params, std::uint64_t seed,
                initial_condition init = initial_condition::all_online())
        : graph_(&g), params_(params), rng_(seed)
    {
        const std::size_t n = g.n_vertices();
        states_.reserve(n);
        std::vector<event> heap;
        heap.reserve(n);
        // Clocks are drawn in vertex-id order; with Fraction(q) the phase
        // uniform precedes the duration draw for each vertex.
        for (vertex_id v = 0; v < n; ++v) {
            const bool online = init.is_all() ? true : rng_.bernoulli(init.q);
            const phase ph = online ? phase::online : phase::hidden;
            const double d = sample_duration(ph, params_, rng_);
            states_.push_back({ph, d});
            heap.push_back({d, v});
            if (online)
                ++online_count_;
        }
        queue_ = event_queue(event_cmp{}, std::move(heap));
    }

    const graph &topology() const { return *graph_; }
    const noh_params &params() const { return params_; }
    double clock() const { return clock_; }
    std::size_t online_count() const { return online_count_; }
    phase vertex_phase(vertex_id v) const { return states_.at(v).state; }

    /// Time of the next pending transition (+inf on an empty graph).
    double next_event_time() const
    {
        return queue_.empty() ? std::numeric_limits<double>::infinity() : queue_.top().when;
    }

    /// Process every transition up to and including time t, in time order
    /// with ties broken by ascending vertex id, then set the clock to t.
    void advance_to(double t)
    {
        if (t < clock_)
            throw std::invalid_argument("advance_to: target time precedes clock");
        while (!queue_.empty() && queue_.top().when <= t) {
            const auto [when, v] = queue_.top();
            queue_.pop();
            auto &st = states_[v];
            st.state = (st.state == phase::online) ? phase::hidden : phase::online;
            if (st.state == phase::online)
                ++online_count_;
            else
                --online_count_;
            st.next_transition = when + sample_duration(st.state, params_, rng_);
            queue_.push({st.next_transition, v});
        }
        clock_ = t;
    }

    /// Consistent view at the current clock. Online-degree is recomputed by
    /// neighbor scan; each active edge is counted once.
    online_snapshot snapshot() const
    {
        online_snapshot snap;
        snap.t = clock_;
        snap.online.reserve(online_count_);
        for (vertex_id v = 0; v < states_.size(); ++v)
            if (states_[v].state == phase::online)
                snap.online.push_back(v);
        snap.online_degree.reserve(snap.online.size());
        for (const vertex_id v : snap.online) {
            std::uint32_t k = 0;
            for (const vertex_id u : graph_->neighbors(v)) {
                if (states_[u].state == phase::online) {
                    ++k;
                    if (u > v)
                        ++snap.active_edges;
                }
            }
            snap.online_degree.push_back(k);
        }
        return snap;
    }

private:
    struct event {
        double when;
        vertex_id vertex;
    };
    struct event_cmp {
        bool operator()(const event &a, const event &b) const
        {
            return a.when > b.when || (a.when == b.when && a.vertex > b.vertex);
        }
    };
    using event_queue = std::priority_queue<event, std::vector<event>, event_cmp>;

    const graph *graph_;
    noh_params params_;
    double clock_ = 0;
    std::vector<vertex_state> states_;
    event_queue queue_;
    xoshiro256 rng_;
    std::size_t online_count_ = 0;
};

struct size_series {
    std::vector<double> t;
    std::vector<std::size_t> size;
};

struct series_options {
    bool size = true;
    bool online_degrees = false;    // per-vertex (vertex, k) pairs
    bool degree_counts = false;     // counts of online-degree values, indexed by degree
};

struct observation {
    double t = 0;
    std::size_t size = 0;
    std::vector<std::pair<vertex_id, std::uint32_t>> online_degrees;
    std::vector<std::uint64_t> degree_counts;
};

/// Advance to each observation time in order and record the requested
/// observables. Times must be ascending and start at or after the clock.
inline std::vector<observation> run_series(noh_process &proc, std::span<const double> times,
                                           const series_options &opts = {})
{
    std::vector<observation> records;
    records.reserve(times.size());
    double prev = proc.clock();
    for (const double t : times) {
        if (t < prev)
            throw std::invalid_argument("run_series: observation times must be ascending");
        prev = t;
        proc.advance_to(t);
        observation rec;
        rec.t = t;
        rec.size = proc.online_count();
        if (opts.online_degrees || opts.degree_counts) {
            const auto snap = proc.snapshot();
            if (opts.online_degrees) {
                rec.online_degrees.reserve(snap.online.size());
                for (std::size_t i = 0; i < snap.online.size(); ++i)
                    rec.online_degrees.emplace_back(snap.online[i], snap.online_degree[i]);
            }
            if (opts.degree_counts) {
                for (const std::uint32_t k : snap.online_degree) {
                    if (rec.degree_counts.size() <= k)
                        rec.degree_counts.resize(k + 1, 0);
                    ++rec.degree_counts[k];
                }
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

inline size_series to_size_series(std::span<const observation> records)
{
    size_series s;
    s.t.reserve(records.size());
    s.size.reserve(records.size());
    for (const auto &rec : records) {
        s.t.push_back(rec.t);
        s.size.push_back(rec.size);
    }
    return s;
}

} // namespace noh
