#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "potrisk/gpd.hpp"
#include "potrisk/quadrature.hpp"

namespace potrisk {

enum class MeasureKind { var, es, srm };

MeasureKind measure_from_name(const std::string& name);
std::string measure_name(MeasureKind kind);

// Exactly one conditioning parameter is meaningful: alpha for VaR/ES,
// risk_aversion for SRM.
struct RiskMeasureSpec {
    MeasureKind kind = MeasureKind::var;
    double alpha = 0.0;
    double risk_aversion = 0.0;

    static RiskMeasureSpec var(double alpha) { return {MeasureKind::var, alpha, 0.0}; }
    static RiskMeasureSpec es(double alpha) { return {MeasureKind::es, alpha, 0.0}; }
    static RiskMeasureSpec srm(double r) { return {MeasureKind::srm, 0.0, r}; }

    double param() const { return kind == MeasureKind::srm ? risk_aversion : alpha; }
};

struct RiskEstimate {
    double value = 0.0; // daily % loss
    RiskMeasureSpec spec;
    GpdFit fit;
    QuadratureConfig quadrature; // SRM only
};

// Tail quantile at confidence level `alpha`:
//   q = u + (beta/xi) * [((n/N_u)(1-alpha))^(-xi) - 1]
// (exponential-limit branch for |xi| < tol). Extrapolates below the threshold
// for alpha <= 1 - N_u/n; q can drop below u, even below 0, there.
double tail_quantile(const GpdFit& fit, double alpha);

// True when the estimate lies inside the fitted tail, i.e. (n/N_u)(1-alpha) <= 1.
bool in_fitted_tail(const GpdFit& fit, double alpha);

double var_gpd(const GpdFit& fit, double alpha);

// ES = q_alpha/(1-xi) + (beta - xi*u)/(1-xi); requires xi < 1.
double es_gpd(const GpdFit& fit, double alpha);

// Exponential risk-aversion spectrum phi(p) = R e^{-R(1-p)} / (1 - e^{-R}).
double spectrum_exp(double p, double risk_aversion);

// Closed-form spectrum mass of cell ((i-1)/n, i/n], 1-based i; sums to 1.
double spectrum_cell_weight(std::int64_t i, std::int64_t n_cells, double risk_aversion);

// Spectral risk measure: integral of phi(p) * q_p over [0,1) by the requested
// quadrature engine.
double srm_gpd(const GpdFit& fit, double risk_aversion, const QuadratureConfig& quad = {});

// Discrete SRM over sorted losses with closed-form cell weights.
double srm_discrete(std::span<const double> sorted_losses, double risk_aversion);

RiskEstimate evaluate_risk(const GpdFit& fit, const RiskMeasureSpec& spec,
                           const QuadratureConfig& quad = {});

std::string risk_estimate_to_json(const RiskEstimate& est, const std::string& fit_id);

} // namespace potrisk
