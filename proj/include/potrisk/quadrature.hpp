#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "potrisk/errors.hpp"
#include "potrisk/gpd.hpp"
#include "potrisk/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace potrisk {

enum class Engine { trapezoid, simpson, pseudo_mc, weyl, niederreiter };

Engine engine_from_name(const std::string& name);
std::string engine_name(Engine e);

struct QuadratureConfig {
    Engine engine = Engine::trapezoid;
    std::int64_t slices = 1'000'000;
    std::uint64_t seed = 0; // pseudo_mc only
};

namespace detail {

inline constexpr std::int64_t kBlock = 8192;

// Kahan accumulator.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Deterministic blocked reduction: each block is summed serially, block sums
// are combined in index order, so the result does not depend on the number of
// OpenMP workers.
template <class Term>
double blocked_sum(std::int64_t count, Term term) {
    const std::int64_t nblocks = (count + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<std::size_t>(nblocks));
    std::vector<std::int64_t> bad(std::size_t(nblocks), -1);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        Kahan acc;
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(count, lo + kBlock);
        for (std::int64_t i = lo; i < hi; ++i) {
            double v = term(i);
            if (!std::isfinite(v)) {
                if (bad[std::size_t(b)] < 0) bad[std::size_t(b)] = i;
                continue;
            }
            acc.add(v);
        }
        partial[std::size_t(b)] = acc.sum;
    }
    for (std::int64_t b = 0; b < nblocks; ++b)
        if (bad[std::size_t(b)] >= 0)
            throw domain_error("non-finite integrand value at node index " +
                               std::to_string(bad[std::size_t(b)]));
    Kahan total;
    for (double p : partial) total.add(p);
    return total.sum;
}

template <class Term>
double serial_sum(std::int64_t count, Term term) {
    Kahan acc;
    for (std::int64_t i = 0; i < count; ++i) {
        double v = term(i);
        if (!std::isfinite(v))
            throw domain_error("non-finite integrand value at node index " + std::to_string(i));
        acc.add(v);
    }
    return acc.sum;
}

// Newton-Cotes node weights on the open-at-1 grid p_i = i/N, i = 0..N-1.
// The last cell [(N-1)/N, 1) is deliberately excluded: the SRM integrand
// diverges at p = 1 for xi > 0.
inline double trapezoid_weight(std::int64_t i, std::int64_t n) {
    const double h = 1.0 / double(n);
    return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

inline double simpson_weight(std::int64_t i, std::int64_t n) {
    // m = n-1 intervals over the same grid; when m is odd, Simpson covers the
    // first m-1 intervals and the last one falls back to a trapezoid.
    const double h = 1.0 / double(n);
    const std::int64_t m = n - 1;
    if (m % 2 == 0) {
        if (i == 0 || i == m) return h / 3.0;
        return (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    }
    const std::int64_t me = m - 1; // even Simpson part covers nodes 0..me
    double w = 0.0;
    if (i <= me) {
        if (i == 0 || i == me) w += h / 3.0;
        else w += (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    }
    if (i == me || i == m) w += 0.5 * h; // trapezoid over the final interval
    return w;
}

std::vector<double> equidistributed_nodes(Engine e, std::int64_t n);

// Uniform nodes from per-block RNG substreams; the node set depends only on
// the seed, not on the worker count.
std::vector<double> pseudo_nodes(std::uint64_t seed, std::int64_t n);

// Trapezoid rule over an irregular, ascending node set.
template <class F, class Sum>
double irregular_trapezoid(const std::vector<double>& nodes, F&& f, Sum sum) {
    const std::int64_t n = std::int64_t(nodes.size());
    std::vector<double> values(nodes.size());
    // evaluation is the expensive part; reuse the deterministic reduction to
    // both parallelize and surface non-finite values with a node index
    sum(n, [&](std::int64_t i) {
        values[std::size_t(i)] = f(nodes[std::size_t(i)]);
        return values[std::size_t(i)];
    });
    return sum(n - 1, [&](std::int64_t i) {
        return 0.5 * (nodes[std::size_t(i) + 1] - nodes[std::size_t(i)]) *
               (values[std::size_t(i)] + values[std::size_t(i) + 1]);
    });
}

template <class F, class Sum>
double integrate_impl(F&& f, const QuadratureConfig& cfg, Sum sum) {
    const std::int64_t n = cfg.slices;
    if (n < 2) throw domain_error("quadrature requires at least 2 slices");
    switch (cfg.engine) {
        case Engine::trapezoid:
            return sum(n, [&](std::int64_t i) {
                return trapezoid_weight(i, n) * f(double(i) / double(n));
            });
        case Engine::simpson:
            return sum(n, [&](std::int64_t i) {
                return simpson_weight(i, n) * f(double(i) / double(n));
            });
        case Engine::pseudo_mc: {
            auto nodes = pseudo_nodes(cfg.seed, n);
            return sum(n, [&](std::int64_t i) { return f(nodes[std::size_t(i)]); }) /
                   double(n);
        }
        case Engine::weyl:
        case Engine::niederreiter: {
            auto nodes = equidistributed_nodes(cfg.engine, n);
            std::sort(nodes.begin(), nodes.end());
            return irregular_trapezoid(nodes, f, sum);
        }
    }
    throw domain_error("unknown quadrature engine");
}

} // namespace detail

// Integrate f over [0,1). Deterministic for the non-random engines and for
// pseudo_mc given a seed; the OpenMP reduction is independent of worker count.
template <class F>
double integrate(F&& f, const QuadratureConfig& cfg) {
    return detail::integrate_impl(std::forward<F>(f), cfg,
                                  [](std::int64_t c, auto term) {
                                      return detail::blocked_sum(c, term);
                                  });
}

// Single-threaded reference path, kept for testing the parallel kernels.
template <class F>
double integrate_serial(F&& f, const QuadratureConfig& cfg) {
    return detail::integrate_impl(std::forward<F>(f), cfg,
                                  [](std::int64_t c, auto term) {
                                      return detail::serial_sum(c, term);
                                  });
}

struct BenchErrorTable {
    std::vector<Engine> engines;
    std::vector<std::int64_t> slice_grid;
    double baseline = 0.0; // trapezoid at N = 20,000,000
    std::vector<std::vector<double>> percent_error; // [engine][slice]
};

// Percent approximation errors of the SRM integral for each (engine, N)
// against the 20-million-slice trapezoid baseline.
BenchErrorTable bench_errors(const GpdFit& fit, double risk_aversion,
                             const std::vector<Engine>& engines,
                             const std::vector<std::int64_t>& slice_grid,
                             std::uint64_t seed = 0);

} // namespace potrisk
