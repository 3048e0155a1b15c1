#include "potrisk/gpd.hpp"
#include "potrisk/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "json.hpp"

namespace potrisk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double gpd_cdf(double x, const GpdParams& p) {
    if (!(p.beta > 0.0)) throw domain_error("gpd_cdf: beta must be positive");
    if (x < 0.0) throw domain_error("gpd_cdf: x must be nonnegative");
    if (std::abs(p.xi) < kXiZeroTol)
        return 1.0 - std::exp(-x / p.beta);
    if (p.xi < 0.0) {
        double upper = -p.beta / p.xi;
        if (x > upper + kSupportSlack)
            throw domain_error("gpd_cdf: x beyond upper support endpoint -beta/xi");
        x = std::min(x, upper);
    }
    return 1.0 - std::exp(-std::log1p(p.xi * x / p.beta) / p.xi);
}

double gpd_quantile(double q, const GpdParams& p) {
    if (!(p.beta > 0.0)) throw domain_error("gpd_quantile: beta must be positive");
    if (q < 0.0 || q > 1.0) throw domain_error("gpd_quantile: q outside [0,1]");
    if (q == 1.0) {
        if (p.xi >= 0.0) throw domain_error("gpd_quantile: infinite quantile at q=1 with xi >= 0");
        return -p.beta / p.xi;
    }
    if (std::abs(p.xi) < kXiZeroTol)
        return -p.beta * std::log1p(-q);
    // (beta/xi) * ((1-q)^(-xi) - 1)
    return (p.beta / p.xi) * std::expm1(-p.xi * std::log1p(-q));
}

std::vector<double> extract_exceedances(std::span<const double> losses, double u) {
    std::vector<double> out;
    for (double x : losses)
        if (x > u) out.push_back(x - u);
    if (out.empty())
        throw domain_error("no losses exceed threshold " + std::to_string(u));
    return out;
}

double gpd_loglik(std::span<const double> exceedances, const GpdParams& p) {
    if (!(p.beta > 0.0)) return -kInf;
    const double logb = std::log(p.beta);
    double ll = 0.0;
    if (std::abs(p.xi) < kXiZeroTol) {
        for (double x : exceedances) ll += -logb - x / p.beta;
        return ll;
    }
    const double c = 1.0 + 1.0 / p.xi;
    for (double x : exceedances) {
        double t = p.xi * x / p.beta;
        if (t <= -1.0) return -kInf;
        ll += -logb - c * std::log1p(t);
    }
    return ll;
}

namespace {

// Negative log-likelihood over (xi, log beta), with a smooth penalty when the
// support constraint 1 + xi*x/beta > 0 is violated so the simplex can recover.
struct Objective {
    std::span<const double> xs;
    double max_x;

    double operator()(const std::array<double, 2>& v) const {
        GpdParams p{v[0], std::exp(v[1])};
        if (p.xi < 0.0) {
            double viol = p.xi * max_x / p.beta + 1.0;
            if (viol <= 0.0) return 1e10 * (1.0 - viol);
        }
        double ll = gpd_loglik(xs, p);
        if (!std::isfinite(ll)) return 1e12;
        return -ll;
    }
};

// Plain Nelder-Mead in 2-D.
template <class F>
std::pair<std::array<double, 2>, bool> nelder_mead(F&& f, std::array<double, 2> start,
                                                   int max_iter = 2000, double ftol = 1e-12) {
    constexpr int n = 2;
    std::array<std::array<double, 2>, 3> simplex;
    std::array<double, 3> fv;
    simplex[0] = start;
    for (int i = 0; i < n; ++i) {
        simplex[i + 1] = start;
        double step = std::abs(start[i]) > 1e-6 ? 0.1 * std::abs(start[i]) : 0.05;
        simplex[i + 1][i] += step;
    }
    for (int i = 0; i < 3; ++i) fv[i] = f(simplex[i]);

    bool converged = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        int lo = idx[0], hi = idx[2], nh = idx[1];
        if (std::abs(fv[hi] - fv[lo]) <= ftol * (std::abs(fv[lo]) + ftol)) {
            converged = true;
            break;
        }
        std::array<double, 2> centroid{};
        for (int i = 0; i < 3; ++i)
            if (i != hi)
                for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d] / n;

        auto affine = [&](double t) {
            std::array<double, 2> p;
            for (int d = 0; d < n; ++d) p[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
            return p;
        };
        auto refl = affine(-1.0);
        double fr = f(refl);
        if (fr < fv[lo]) {
            auto exp_pt = affine(-2.0);
            double fe = f(exp_pt);
            if (fe < fr) { simplex[hi] = exp_pt; fv[hi] = fe; }
            else { simplex[hi] = refl; fv[hi] = fr; }
        } else if (fr < fv[nh]) {
            simplex[hi] = refl; fv[hi] = fr;
        } else {
            auto con = affine(fr < fv[hi] ? -0.5 : 0.5);
            double fc = f(con);
            if (fc < std::min(fr, fv[hi])) {
                simplex[hi] = con; fv[hi] = fc;
            } else {
                for (int i = 0; i < 3; ++i) {
                    if (i == lo) continue;
                    for (int d = 0; d < n; ++d)
                        simplex[i][d] = simplex[lo][d] + 0.5 * (simplex[i][d] - simplex[lo][d]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    int best = int(std::min_element(fv.begin(), fv.end()) - fv.begin());
    return {simplex[best], converged};
}

// Central finite-difference Hessian of the log-likelihood in (xi, beta).
std::array<std::array<double, 2>, 2> loglik_hessian(std::span<const double> xs,
                                                    const GpdParams& p) {
    auto ll = [&](double xi, double beta) { return gpd_loglik(xs, GpdParams{xi, beta}); };
    double hx = 1e-4 * std::max(0.01, std::abs(p.xi));
    double hb = 1e-4 * std::max(0.01, p.beta);
    // keep feasibility for xi < 0 at the support endpoint
    double f0 = ll(p.xi, p.beta);
    std::array<std::array<double, 2>, 2> H;
    H[0][0] = (ll(p.xi + hx, p.beta) - 2 * f0 + ll(p.xi - hx, p.beta)) / (hx * hx);
    H[1][1] = (ll(p.xi, p.beta + hb) - 2 * f0 + ll(p.xi, p.beta - hb)) / (hb * hb);
    H[0][1] = H[1][0] = (ll(p.xi + hx, p.beta + hb) - ll(p.xi + hx, p.beta - hb) -
                         ll(p.xi - hx, p.beta + hb) + ll(p.xi - hx, p.beta - hb)) /
                        (4 * hx * hb);
    return H;
}

} // namespace

GpdFit fit_gpd_mle(std::span<const double> exceedances, double u, std::int64_t n_total,
                   const FitOptions& opts) {
    const auto m = std::int64_t(exceedances.size());
    if (m < opts.min_exceedances)
        throw domain_error("insufficient tail: " + std::to_string(m) + " exceedances, need >= " +
                           std::to_string(opts.min_exceedances));

    double mean = std::accumulate(exceedances.begin(), exceedances.end(), 0.0) / double(m);
    double var = 0.0;
    for (double x : exceedances) var += (x - mean) * (x - mean);
    var /= double(m > 1 ? m - 1 : 1);
    if (!(var > 1e-20 * mean * mean))
        throw convergence_error("degenerate exceedances: zero sample variance");

    Objective obj{exceedances, *std::max_element(exceedances.begin(), exceedances.end())};

    // Moment starting values: xi = (1 - mean^2/var)/2, beta = mean*(1 - xi).
    double xi_m = 0.5 * (1.0 - mean * mean / var);
    double beta_m = mean * (1.0 - xi_m);
    if (!(beta_m > 0.0)) beta_m = mean;
    std::array<std::array<double, 2>, 2> starts = {{{xi_m, std::log(beta_m)},
                                                    {0.1, std::log(mean)}}};
    std::array<double, 2> best{};
    double best_f = kInf;
    bool any_converged = false;
    for (const auto& s : starts) {
        auto [pt, conv] = nelder_mead(obj, s);
        double fv = obj(pt);
        if (fv < best_f) {
            best_f = fv;
            best = pt;
            any_converged = conv;
        }
    }
    if (!std::isfinite(best_f) || best_f >= 1e10)
        throw convergence_error("GPD fit failed to reach a feasible optimum");

    GpdFit fit;
    fit.params = {best[0], std::exp(best[1])};
    fit.u = u;
    fit.n = n_total;
    fit.n_exceed = m;
    fit.loglik = -best_f;
    fit.converged = any_converged;
    if (!any_converged)
        throw convergence_error("GPD fit did not converge (best loglik " +
                                std::to_string(-best_f) + " at xi=" + std::to_string(best[0]) +
                                ")");

    // Standard errors from the inverse observed information.
    auto H = loglik_hessian(exceedances, fit.params);
    double ixx = -H[0][0], ibb = -H[1][1], ixb = -H[0][1];
    double det = ixx * ibb - ixb * ixb;
    if (det > 0.0 && ixx > 0.0) {
        fit.se_xi = std::sqrt(ibb / det);
        fit.se_beta = std::sqrt(ixx / det);
    } else {
        fit.se_xi = fit.se_beta = std::numeric_limits<double>::quiet_NaN();
    }
    return fit;
}

std::string gpd_fit_to_json(const GpdFit& fit) {
    nlohmann::json j{{"xi", fit.params.xi},     {"beta", fit.params.beta},
                     {"u", fit.u},              {"n", fit.n},
                     {"N_u", fit.n_exceed},     {"prob", fit.exceed_prob()},
                     {"se_xi", fit.se_xi},      {"se_beta", fit.se_beta},
                     {"loglik", fit.loglik}};
    return j.dump(2);
}

GpdFit gpd_fit_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid fit JSON: ") + e.what());
    }
    GpdFit fit;
    try {
        fit.params.xi = j.at("xi").get<double>();
        fit.params.beta = j.at("beta").get<double>();
        fit.u = j.at("u").get<double>();
        fit.n = j.at("n").get<std::int64_t>();
        fit.n_exceed = j.at("N_u").get<std::int64_t>();
        fit.se_xi = j.value("se_xi", 0.0);
        fit.se_beta = j.value("se_beta", 0.0);
        fit.loglik = j.value("loglik", 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("fit JSON missing field: ") + e.what());
    }
    if (!(fit.params.beta > 0.0)) throw input_error("fit JSON: beta must be positive");
    if (fit.n_exceed <= 0 || fit.n_exceed > fit.n)
        throw input_error("fit JSON: require 0 < N_u <= n");
    return fit;
}

GpdFit load_gpd_fit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open fit file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return gpd_fit_from_json(text);
}

void save_gpd_fit(const GpdFit& fit, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write fit file: " + path);
    out << gpd_fit_to_json(fit) << "\n";
}

} // namespace potrisk
