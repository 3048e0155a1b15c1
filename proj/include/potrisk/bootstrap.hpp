#pragma once

#include <cstdint>
#include <vector>

#include "potrisk/gpd.hpp"
#include "potrisk/risk_measures.hpp"

namespace potrisk {

struct BootstrapConfig {
    std::int64_t resamples = 5000;
    std::uint64_t seed = 42;
    double ci_level = 0.90;
};

struct BootstrapSummary {
    RiskMeasureSpec spec;
    double point = 0.0;         // estimate from the fitted parameters
    double resample_mean = 0.0; // mean of the resample estimates
    double se = 0.0;            // sd of resample estimates, divisor B-1
    double ci_lo = 0.0, ci_hi = 0.0;
    double std_ci_lo = 0.0, std_ci_hi = 0.0; // bounds / resample_mean
};

// One semi-parametric resample: n sorted uniforms mapped through the fitted
// tail quantile function; ascending. `index` selects the RNG substream, so
// resamples are reproducible independently of evaluation order.
std::vector<double> resample_quantiles(const GpdFit& fit, std::uint64_t seed,
                                       std::uint64_t index);

// Several measures evaluated on a shared set of resamples; the resamples are
// the same whichever subset of specs is requested.
std::vector<BootstrapSummary> boot_risk_many(const GpdFit& fit,
                                             const std::vector<RiskMeasureSpec>& specs,
                                             const BootstrapConfig& config,
                                             const QuadratureConfig& point_quad = {});

BootstrapSummary boot_risk(const GpdFit& fit, const RiskMeasureSpec& spec,
                           const BootstrapConfig& config,
                           const QuadratureConfig& point_quad = {});

} // namespace potrisk
