#pragma once

#include <string>
#include <utility>
#include <vector>

#include "potrisk/gpd.hpp"
#include "potrisk/market_data.hpp"

namespace potrisk {

enum class DiagnosticKind { qq_normal, mean_excess, shape_stability };

std::string diagnostic_kind_name(DiagnosticKind kind);

struct DiagnosticCurve {
    DiagnosticKind kind;
    std::vector<std::pair<double, double>> points; // x strictly increasing
    std::vector<std::string> warnings;             // omitted grid points etc.
};

// Standard normal quantile function (Acklam's rational approximation with a
// Halley refinement step).
double inverse_normal_cdf(double p);

// (theoretical, empirical) quantile pairs against a location-scale matched
// normal, plotting positions (i - 0.5)/n.
DiagnosticCurve qq_normal(const LossSeries& series);

// Mean excess e(u) = mean(x - u | x > u) over a threshold grid.
DiagnosticCurve mean_excess(const LossSeries& series, const std::vector<double>& thresholds);

// (N_u, xi_hat(u)) pairs from refitting the GPD at each grid threshold.
// x is the threshold; points carry the fitted shape, warnings any omissions.
struct ShapeStabilityPoint {
    double threshold;
    std::int64_t n_exceed;
    double xi;
    double se_xi;
};

struct ShapeStabilityCurve {
    std::vector<ShapeStabilityPoint> points;
    std::vector<std::string> warnings;
};

ShapeStabilityCurve shape_stability(const LossSeries& series,
                                    const std::vector<double>& thresholds,
                                    const FitOptions& opts = {});

// CSV with a "# kind=..." comment line then "x,y" rows.
std::string diagnostic_to_csv(const DiagnosticCurve& curve);
std::string shape_stability_to_csv(const ShapeStabilityCurve& curve);

} // namespace potrisk
