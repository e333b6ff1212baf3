#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace noh {

/// Parameters of the online-count chain: state space {0,...,n0} where n0 is
/// the initial network size N(0), or an initial degree k_i(0) when the chain
/// tracks one vertex's online neighbors.
struct theory_params {
    std::size_t n0;
    double lambda;
    double mu;

    theory_params(std::size_t n0_, double lambda_, double mu_)
        : n0(n0_), lambda(lambda_), mu(mu_)
    {
        if (!(lambda > 0.0) || !(mu > 0.0))
            throw std::invalid_argument("theory_params: rates must be positive");
    }

    double ratio() const { return lambda / mu; }
};

/// log pi_n for the stationary law pi_n = C(n0,n) (lambda/mu)^n / (1+lambda/mu)^n0,
/// i.e. Binomial(n0, lambda/(lambda+mu)). Computed through log-gamma, so it
/// stays finite for n0 in the hundreds of thousands.
inline double log_stationary_pmf(const theory_params &p, std::size_t n)
{
    if (n > p.n0)
        throw std::domain_error("log_stationary_pmf: state beyond n0");
    const auto n0 = static_cast<double>(p.n0);
    const auto nd = static_cast<double>(n);
    const double log_choose =
        std::lgamma(n0 + 1.0) - std::lgamma(nd + 1.0) - std::lgamma(n0 - nd + 1.0);
    return log_choose + nd * std::log(p.ratio()) - n0 * std::log1p(p.ratio());
}

/// Full stationary PMF over {0,...,n0}: exponentiated log form, renormalized.
/// States whose probability underflows the subnormal range come out as 0 in
/// linear space; log_stationary_pmf stays exact for those.
inline std::vector<double> stationary_pmf(const theory_params &p)
{
    std::vector<double> probs(p.n0 + 1);
    for (std::size_t n = 0; n <= p.n0; ++n)
        probs[n] = std::exp(log_stationary_pmf(p, n));
    double sum = 0;
    for (const double x : probs)
        sum += x;
    for (double &x : probs)
        x /= sum;
    return probs;
}

/// E[N] = n0 r / (1 + r) with r = lambda/mu. Also E[k_i] with n0 = k_i(0).
inline double expected_size(const theory_params &p)
{
    const double r = p.ratio();
    return static_cast<double>(p.n0) * r / (1.0 + r);
}

/// D[N] = n0 r / (1 + r)^2.
inline double variance_size(const theory_params &p)
{
    const double r = p.ratio();
    return static_cast<double>(p.n0) * r / ((1.0 + r) * (1.0 + r));
}

/// Stationary probability that a vertex with initial degree n0 has no online
/// neighbor: (1 + lambda/mu)^{-n0}. Strictly positive.
inline double isolation_probability(const theory_params &p)
{
    return std::exp(-static_cast<double>(p.n0) * std::log1p(p.ratio()));
}

/// Dense CTMC generator of the online-count chain. Tridiagonal with
/// q_{m,m+1} = (n0-m) lambda, q_{m,m-1} = m mu, and diagonal entries equal to
/// the negative off-diagonal row sum, so every row sums to zero.
class rate_matrix {
public:
    static constexpr std::size_t default_cap = 1024;

    rate_matrix(std::size_t dimension, std::vector<double> entries)
        : dim_(dimension), entries_(std::move(entries))
    {
        if (entries_.size() != dim_ * dim_)
            throw std::invalid_argument("rate_matrix: entry count does not match dimension");
    }

    std::size_t dimension() const { return dim_; }

    double operator()(std::size_t row, std::size_t col) const
    {
        if (row >= dim_ || col >= dim_)
            throw std::out_of_range("rate_matrix: index out of range");
        return entries_[row * dim_ + col];
    }

private:
    std::size_t dim_;
    std::vector<double> entries_;
};

inline rate_matrix build_rate_matrix(const theory_params &p,
                                     std::size_t cap = rate_matrix::default_cap)
{
    if (p.n0 > cap)
        throw std::length_error("build_rate_matrix: n0 exceeds materialization cap");
    const std::size_t dim = p.n0 + 1;
    std::vector<double> q(dim * dim, 0.0);
    for (std::size_t m = 0; m < dim; ++m) {
        const double up = static_cast<double>(p.n0 - m) * p.lambda;
        const double down = static_cast<double>(m) * p.mu;
        if (m + 1 < dim)
            q[m * dim + (m + 1)] = up;
        if (m > 0)
            q[m * dim + (m - 1)] = down;
        q[m * dim + m] = -((m + 1 < dim ? up : 0.0) + (m > 0 ? down : 0.0));
    }
    return rate_matrix(dim, std::move(q));
}

/// Stationary vector of a birth-death generator via the detailed-balance
/// recursion pi_{n+1} = pi_n q_{n,n+1} / q_{n+1,n}, accumulated in log space
/// and normalized. Independent of the binomial closed form: only the matrix
/// entries are consulted.
inline std::vector<double> solve_stationary(const rate_matrix &q)
{
    const std::size_t dim = q.dimension();
    if (dim == 0)
        throw std::invalid_argument("solve_stationary: empty generator");

    std::vector<double> log_pi(dim, 0.0);
    for (std::size_t n = 0; n + 1 < dim; ++n) {
        const double up = q(n, n + 1);
        const double down = q(n + 1, n);
        if (!(up > 0.0) || !(down > 0.0))
            throw std::invalid_argument("solve_stationary: zero transition rate breaks irreducibility");
        log_pi[n + 1] = log_pi[n] + std::log(up) - std::log(down);
    }

    double max_log = log_pi[0];
    for (const double x : log_pi)
        max_log = std::max(max_log, x);
    std::vector<double> pi(dim);
    double sum = 0;
    for (std::size_t n = 0; n < dim; ++n) {
        pi[n] = std::exp(log_pi[n] - max_log);
        sum += pi[n];
    }
    for (double &x : pi)
        x /= sum;
    return pi;
}

} // namespace noh
