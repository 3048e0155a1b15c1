#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace potrisk {

// Shape xi is unrestricted in sign; scale beta > 0 (percent units).
struct GpdParams {
    double xi = 0.0;
    double beta = 1.0;
};

// Tolerance below which |xi| is treated as the exponential limit xi = 0.
inline constexpr double kXiZeroTol = 1e-8;

// Slack when checking the upper support endpoint -beta/xi for xi < 0.
inline constexpr double kSupportSlack = 1e-12;

// A fitted tail: GPD parameters conditional on threshold u, plus the sample
// bookkeeping (n observations, n_exceed of them above u) needed by the
// tail quantile formula.
struct GpdFit {
    GpdParams params;
    double u = 0.0;         // threshold, daily % loss
    std::int64_t n = 0;     // total sample size
    std::int64_t n_exceed = 0;
    double se_xi = 0.0;
    double se_beta = 0.0;
    double loglik = 0.0;
    bool converged = true;

    double exceed_prob() const { return double(n_exceed) / double(n); }
};

double gpd_cdf(double x, const GpdParams& p);
double gpd_quantile(double q, const GpdParams& p);

// Excess amounts {x - u : x > u}, in input order. Throws domain_error when no
// observation exceeds u.
std::vector<double> extract_exceedances(std::span<const double> losses, double u);

// GPD log-likelihood of exceedances at (xi, beta). -inf outside the feasible
// region (beta <= 0 or 1 + xi*x/beta <= 0 for some x).
double gpd_loglik(std::span<const double> exceedances, const GpdParams& p);

struct FitOptions {
    std::int64_t min_exceedances = 30;
};

// Maximum-likelihood fit of (xi, beta) by multi-start Nelder-Mead; standard
// errors from the inverse observed information (finite-difference Hessian of
// the log-likelihood at the optimum).
GpdFit fit_gpd_mle(std::span<const double> exceedances, double u, std::int64_t n_total,
                   const FitOptions& opts = {});

std::string gpd_fit_to_json(const GpdFit& fit);
GpdFit gpd_fit_from_json(const std::string& text);
GpdFit load_gpd_fit(const std::string& path);
void save_gpd_fit(const GpdFit& fit, const std::string& path);

} // namespace potrisk
