#include "potrisk/risk_measures.hpp"
#include "potrisk/errors.hpp"

#include <cmath>

#include "json.hpp"

namespace potrisk {

MeasureKind measure_from_name(const std::string& name) {
    if (name == "var") return MeasureKind::var;
    if (name == "es") return MeasureKind::es;
    if (name == "srm") return MeasureKind::srm;
    throw input_error("unknown risk measure '" + name + "' (expected var|es|srm)");
}

std::string measure_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::var: return "var";
        case MeasureKind::es: return "es";
        case MeasureKind::srm: return "srm";
    }
    return "?";
}

double tail_quantile(const GpdFit& fit, double alpha) {
    const double xi = fit.params.xi;
    const double beta = fit.params.beta;
    const double t = (double(fit.n) / double(fit.n_exceed)) * (1.0 - alpha);
    if (t == 0.0) {
        if (xi >= 0.0) throw domain_error("infinite quantile: alpha = 1 with xi >= 0");
        return fit.u - beta / xi; // finite upper endpoint
    }
    if (std::abs(xi) < kXiZeroTol)
        return fit.u - beta * std::log(t);
    return fit.u + (beta / xi) * std::expm1(-xi * std::log(t));
}

bool in_fitted_tail(const GpdFit& fit, double alpha) {
    // slack absorbs the rounding in (n/N_u)(1 - alpha) at the exact boundary
    return (double(fit.n) / double(fit.n_exceed)) * (1.0 - alpha) <= 1.0 + 1e-12;
}

double var_gpd(const GpdFit& fit, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw domain_error("VaR confidence level must lie in (0,1]");
    return tail_quantile(fit, alpha);
}

double es_gpd(const GpdFit& fit, double alpha) {
    const double xi = fit.params.xi;
    if (xi >= 1.0) throw domain_error("ES is infinite for xi >= 1");
    const double q = var_gpd(fit, alpha);
    return q / (1.0 - xi) + (fit.params.beta - xi * fit.u) / (1.0 - xi);
}

double spectrum_exp(double p, double risk_aversion) {
    if (!(risk_aversion > 0.0)) throw domain_error("risk aversion R must be positive");
    if (p < 0.0 || p > 1.0) throw domain_error("spectrum argument p outside [0,1]");
    // 1 - e^{-R} written as -expm1(-R) to stay accurate for small R
    return risk_aversion * std::exp(-risk_aversion * (1.0 - p)) / (-std::expm1(-risk_aversion));
}

double spectrum_cell_weight(std::int64_t i, std::int64_t n_cells, double risk_aversion) {
    if (!(risk_aversion > 0.0)) throw domain_error("risk aversion R must be positive");
    if (i < 1 || i > n_cells) throw domain_error("cell index outside 1..n_cells");
    const double r = risk_aversion;
    const double nd = double(n_cells);
    // e^{-R(1-i/n)} - e^{-R(1-(i-1)/n)} = e^{-R(1-i/n)} (1 - e^{-R/n})
    return std::exp(-r * (1.0 - double(i) / nd)) * (-std::expm1(-r / nd)) / (-std::expm1(-r));
}

double srm_gpd(const GpdFit& fit, double risk_aversion, const QuadratureConfig& quad) {
    if (!(risk_aversion > 0.0)) throw domain_error("risk aversion R must be positive");
    if (fit.params.xi >= 1.0)
        throw domain_error("SRM integral diverges for xi >= 1");
    auto integrand = [&](double p) { return spectrum_exp(p, risk_aversion) * tail_quantile(fit, p); };
    return integrate(integrand, quad);
}

double srm_discrete(std::span<const double> sorted_losses, double risk_aversion) {
    const auto m = std::int64_t(sorted_losses.size());
    if (m < 2) throw domain_error("srm_discrete needs at least 2 losses");
    for (std::int64_t i = 1; i < m; ++i)
        if (sorted_losses[std::size_t(i)] < sorted_losses[std::size_t(i) - 1])
            throw domain_error("srm_discrete requires losses sorted ascending");
    detail::Kahan acc;
    for (std::int64_t i = 1; i <= m; ++i)
        acc.add(spectrum_cell_weight(i, m, risk_aversion) * sorted_losses[std::size_t(i - 1)]);
    return acc.sum;
}

RiskEstimate evaluate_risk(const GpdFit& fit, const RiskMeasureSpec& spec,
                           const QuadratureConfig& quad) {
    RiskEstimate est;
    est.spec = spec;
    est.fit = fit;
    est.quadrature = quad;
    switch (spec.kind) {
        case MeasureKind::var: est.value = var_gpd(fit, spec.alpha); break;
        case MeasureKind::es: est.value = es_gpd(fit, spec.alpha); break;
        case MeasureKind::srm: est.value = srm_gpd(fit, spec.risk_aversion, quad); break;
    }
    return est;
}

std::string risk_estimate_to_json(const RiskEstimate& est, const std::string& fit_id) {
    nlohmann::json j;
    j["kind"] = measure_name(est.spec.kind);
    if (est.spec.kind == MeasureKind::srm) {
        j["R"] = est.spec.risk_aversion;
        j["engine"] = engine_name(est.quadrature.engine);
        j["slices"] = est.quadrature.slices;
    } else {
        j["alpha"] = est.spec.alpha;
    }
    j["value"] = est.value;
    j["fit_id"] = fit_id;
    return j.dump(2);
}

} // namespace potrisk
