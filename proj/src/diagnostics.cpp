#include "potrisk/diagnostics.hpp"
#include "potrisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace potrisk {

std::string diagnostic_kind_name(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::qq_normal: return "qq_normal";
        case DiagnosticKind::mean_excess: return "mean_excess";
        case DiagnosticKind::shape_stability: return "shape_stability";
    }
    return "?";
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("inverse_normal_cdf: p outside (0,1)");

    // Acklam coefficients.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= phigh) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley step against the exact CDF.
    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

DiagnosticCurve qq_normal(const LossSeries& series) {
    const auto n = std::int64_t(series.losses.size());
    if (n < 10) throw domain_error("qq_normal needs at least 10 observations");
    double mean = std::accumulate(series.losses.begin(), series.losses.end(), 0.0) / double(n);
    double var = 0.0;
    for (double x : series.losses) var += (x - mean) * (x - mean);
    var /= double(n - 1);
    if (!(var > 0.0)) throw domain_error("qq_normal: zero-variance sample");
    double sd = std::sqrt(var);

    std::vector<double> sorted(series.losses);
    std::sort(sorted.begin(), sorted.end());

    DiagnosticCurve curve{DiagnosticKind::qq_normal, {}, {}};
    curve.points.reserve(std::size_t(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        double pp = (double(i) - 0.5) / double(n);
        curve.points.emplace_back(mean + sd * inverse_normal_cdf(pp), sorted[std::size_t(i - 1)]);
    }
    return curve;
}

DiagnosticCurve mean_excess(const LossSeries& series, const std::vector<double>& thresholds) {
    DiagnosticCurve curve{DiagnosticKind::mean_excess, {}, {}};
    auto grid = thresholds;
    std::sort(grid.begin(), grid.end());
    for (double u : grid) {
        double sum = 0.0;
        std::int64_t count = 0;
        for (double x : series.losses)
            if (x > u) {
                sum += x - u;
                ++count;
            }
        if (count == 0) {
            curve.warnings.push_back("threshold " + std::to_string(u) +
                                     " above sample maximum; point omitted");
            continue;
        }
        curve.points.emplace_back(u, sum / double(count));
    }
    return curve;
}

ShapeStabilityCurve shape_stability(const LossSeries& series,
                                    const std::vector<double>& thresholds,
                                    const FitOptions& opts) {
    ShapeStabilityCurve curve;
    auto grid = thresholds;
    std::sort(grid.begin(), grid.end());
    const auto n = std::int64_t(series.losses.size());
    for (double u : grid) {
        try {
            auto exc = extract_exceedances(series.losses, u);
            auto fit = fit_gpd_mle(exc, u, n, opts);
            curve.points.push_back({u, fit.n_exceed, fit.params.xi, fit.se_xi});
        } catch (const std::exception& e) {
            curve.warnings.push_back("threshold " + std::to_string(u) + ": " + e.what() +
                                     "; point omitted");
        }
    }
    return curve;
}

std::string diagnostic_to_csv(const DiagnosticCurve& curve) {
    std::ostringstream out;
    out << "# kind=" << diagnostic_kind_name(curve.kind) << "\n";
    for (const auto& w : curve.warnings) out << "# warning: " << w << "\n";
    out << "x,y\n";
    out.precision(10);
    for (const auto& [x, y] : curve.points) out << x << "," << y << "\n";
    return out.str();
}

std::string shape_stability_to_csv(const ShapeStabilityCurve& curve) {
    std::ostringstream out;
    out << "# kind=shape_stability\n";
    for (const auto& w : curve.warnings) out << "# warning: " << w << "\n";
    out << "threshold,n_exceed,xi,se_xi\n";
    out.precision(10);
    for (const auto& p : curve.points)
        out << p.threshold << "," << p.n_exceed << "," << p.xi << "," << p.se_xi << "\n";
    return out.str();
}

} // namespace potrisk
