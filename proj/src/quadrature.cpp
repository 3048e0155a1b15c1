#include "potrisk/quadrature.hpp"
#include "potrisk/risk_measures.hpp"

#include <cmath>

namespace potrisk {

Engine engine_from_name(const std::string& name) {
    if (name == "trapezoid") return Engine::trapezoid;
    if (name == "simpson") return Engine::simpson;
    if (name == "pseudo-mc" || name == "pseudo_mc") return Engine::pseudo_mc;
    if (name == "weyl") return Engine::weyl;
    if (name == "niederreiter") return Engine::niederreiter;
    throw input_error("unknown quadrature engine '" + name + "'");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::trapezoid: return "trapezoid";
        case Engine::simpson: return "simpson";
        case Engine::pseudo_mc: return "pseudo-mc";
        case Engine::weyl: return "weyl";
        case Engine::niederreiter: return "niederreiter";
    }
    return "?";
}

namespace detail {

std::vector<double> equidistributed_nodes(Engine e, std::int64_t n) {
    // Both one-dimensional sequences are multiplicative Weyl sequences
    // frac(i * m): m = sqrt(2) for Weyl, m = 2^{1/(d+1)} with d = 1 for
    // Niederreiter. In one dimension the two multipliers coincide, which is
    // why published benchmark rows for the two methods are identical.
    const double mult =
        (e == Engine::weyl) ? std::sqrt(2.0) : std::pow(2.0, 1.0 / 2.0);
    std::vector<double> nodes(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 1; i <= n; ++i) {
        double v = std::fmod(double(i) * mult, 1.0);
        nodes[std::size_t(i - 1)] = v;
    }
    return nodes;
}

std::vector<double> pseudo_nodes(std::uint64_t seed, std::int64_t n) {
    const std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> nodes(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        auto eng = substream_engine(seed, std::uint64_t(b));
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        for (std::int64_t i = lo; i < hi; ++i) nodes[std::size_t(i)] = uniform01(eng);
    }
    return nodes;
}

} // namespace detail

BenchErrorTable bench_errors(const GpdFit& fit, double risk_aversion,
                             const std::vector<Engine>& engines,
                             const std::vector<std::int64_t>& slice_grid,
                             std::uint64_t seed) {
    BenchErrorTable table;
    table.engines = engines;
    table.slice_grid = slice_grid;
    table.baseline =
        srm_gpd(fit, risk_aversion, {Engine::trapezoid, 20'000'000, 0});
    for (Engine e : engines) {
        std::vector<double> row;
        row.reserve(slice_grid.size());
        for (std::int64_t n : slice_grid) {
            double est = srm_gpd(fit, risk_aversion, {e, n, seed});
            row.push_back(100.0 * (est - table.baseline) / table.baseline);
        }
        table.percent_error.push_back(std::move(row));
    }
    return table;
}

} // namespace potrisk
