#include "potrisk/bootstrap.hpp"
#include "potrisk/errors.hpp"
#include "potrisk/rng.hpp"

#include <algorithm>
#include <cmath>

namespace potrisk {

namespace {

std::vector<double> sorted_uniforms(const GpdFit& fit, std::uint64_t seed, std::uint64_t index) {
    auto eng = substream_engine(seed, index);
    std::vector<double> p(std::size_t(fit.n));
    for (auto& v : p) v = uniform01(eng);
    std::sort(p.begin(), p.end());
    return p;
}

// 1-based rank of the resample VaR order statistic at confidence alpha.
std::int64_t var_rank(double alpha, std::int64_t n) {
    auto k = std::int64_t(std::ceil(alpha * double(n)));
    return std::clamp<std::int64_t>(k, 1, n);
}

} // namespace

std::vector<double> resample_quantiles(const GpdFit& fit, std::uint64_t seed,
                                       std::uint64_t index) {
    auto p = sorted_uniforms(fit, seed, index);
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = tail_quantile(fit, p[i]);
    return q;
}

std::vector<BootstrapSummary> boot_risk_many(const GpdFit& fit,
                                             const std::vector<RiskMeasureSpec>& specs,
                                             const BootstrapConfig& config,
                                             const QuadratureConfig& point_quad) {
    const std::int64_t B = config.resamples;
    if (B < 100) throw domain_error("bootstrap needs at least 100 resamples");
    if (!(config.ci_level > 0.0 && config.ci_level < 1.0))
        throw domain_error("ci level must lie in (0,1)");
    const auto lo_rank = std::int64_t(std::floor(double(B) * (1.0 - config.ci_level) / 2.0));
    const auto hi_rank = std::int64_t(std::ceil(double(B) * (1.0 + config.ci_level) / 2.0));
    if (lo_rank < 1 || hi_rank > B)
        throw domain_error("too few resamples for the requested CI ranks (need rank >= 1)");

    for (const auto& spec : specs) {
        if (spec.kind == MeasureKind::srm) {
            if (!(spec.risk_aversion > 0.0)) throw domain_error("SRM requires R > 0");
        } else if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
            throw domain_error("VaR/ES require alpha in (0,1)");
        }
    }

    const std::size_t ns = specs.size();
    const double xi = fit.params.xi;
    const double es_shift = (fit.params.beta - xi * fit.u) / (1.0 - xi);
    for (const auto& spec : specs)
        if (spec.kind == MeasureKind::es && xi >= 1.0)
            throw domain_error("ES is infinite for xi >= 1");

    std::vector<std::vector<double>> estimates(ns, std::vector<double>(std::size_t(B)));

#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < B; ++j) {
        auto p = sorted_uniforms(fit, config.seed, std::uint64_t(j));
        const std::int64_t n = fit.n;
        std::vector<double> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = tail_quantile(fit, p[i]);
        for (std::size_t s = 0; s < ns; ++s) {
            const auto& spec = specs[s];
            double est = 0.0;
            switch (spec.kind) {
                case MeasureKind::var:
                    est = q[std::size_t(var_rank(spec.alpha, n) - 1)];
                    break;
                case MeasureKind::es:
                    est = q[std::size_t(var_rank(spec.alpha, n) - 1)] / (1.0 - xi) + es_shift;
                    break;
                case MeasureKind::srm: {
                    // Monte-Carlo evaluation of the spectral integral on the
                    // resample's own probability nodes: mean of phi(p_i) q_i.
                    detail::Kahan acc;
                    for (std::size_t i = 0; i < p.size(); ++i)
                        acc.add(spectrum_exp(p[i], spec.risk_aversion) * q[i]);
                    est = acc.sum / double(n);
                    break;
                }
            }
            estimates[s][std::size_t(j)] = est;
        }
    }

    std::vector<BootstrapSummary> out;
    out.reserve(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        auto& e = estimates[s];
        detail::Kahan msum;
        for (double v : e) msum.add(v);
        const double mean = msum.sum / double(B);
        detail::Kahan vsum;
        for (double v : e) vsum.add((v - mean) * (v - mean));
        const double sd = std::sqrt(vsum.sum / double(B - 1));

        std::vector<double> sorted(e);
        std::sort(sorted.begin(), sorted.end());

        BootstrapSummary sm;
        sm.spec = specs[s];
        sm.point = evaluate_risk(fit, specs[s], point_quad).value;
        sm.resample_mean = mean;
        sm.se = sd;
        sm.ci_lo = sorted[std::size_t(lo_rank - 1)];
        sm.ci_hi = sorted[std::size_t(hi_rank - 1)];
        sm.std_ci_lo = sm.ci_lo / mean;
        sm.std_ci_hi = sm.ci_hi / mean;
        out.push_back(sm);
    }
    return out;
}

BootstrapSummary boot_risk(const GpdFit& fit, const RiskMeasureSpec& spec,
                           const BootstrapConfig& config, const QuadratureConfig& point_quad) {
    return boot_risk_many(fit, {spec}, config, point_quad).front();
}

} // namespace potrisk
