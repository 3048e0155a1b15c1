// Acceptance gate: regenerates the published regression targets from the
// fixture parameters and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "potrisk/bootstrap.hpp"
#include "potrisk/fixtures.hpp"
#include "potrisk/quadrature.hpp"
#include "potrisk/risk_measures.hpp"
#include "potrisk/rng.hpp"

using namespace potrisk;

namespace {

int g_failures = 0;
int g_checks = 0;

void require(bool ok, const char* what, double got, double want) {
    ++g_checks;
    if (!ok) {
        ++g_failures;
        std::printf("    FAIL %s: got %.6g, expected %.6g\n", what, got, want);
    }
}

struct Criterion {
    int failures_before = g_failures;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    bool passed() const { return g_failures == failures_before; }
};

void report(int id, const char* title, const Criterion& c, double budget_s) {
    double dt = c.elapsed_s();
    bool in_budget = dt < budget_s;
    if (!in_budget) {
        ++g_failures;
        std::printf("    FAIL runtime %.1f s exceeds %.0f s budget\n", dt, budget_s);
    }
    bool ok = c.passed() && in_budget;
    std::printf("criterion %d [%s] %s (%.1f s)\n", id, ok ? "PASS" : "FAIL", title, dt);
}

const char* kKeys[5] = {"sp500", "ftse100", "dax", "hangseng", "nikkei225"};

const GpdFit& fit_for(int index, int side) {
    return find_fixture(std::string(kKeys[index]) + (side == 0 ? "-long" : "-short")).fit;
}

constexpr double kAlphas[4] = {0.98, 0.99, 0.995, 0.999};
constexpr double kAversions[3] = {20.0, 100.0, 200.0};

// Table 2: VaR and ES, [side][index][alpha].
const double kVar[2][5][4] = {
    {{2.414, 2.912, 3.476, 5.092},
     {2.489, 3.070, 3.692, 5.315},
     {3.488, 4.326, 5.170, 7.152},
     {4.171, 5.231, 6.392, 9.526},
     {3.243, 3.850, 4.452, 5.833}},
    {{2.436, 3.029, 3.677, 5.428},
     {2.539, 3.063, 3.594, 4.857},
     {3.291, 4.042, 4.819, 6.731},
     {4.190, 5.250, 6.419, 9.611},
     {3.315, 3.957, 4.568, 5.877}}};
const double kEs[2][5][4] = {
    {{3.237, 3.844, 4.532, 6.503},
     {3.388, 4.033, 4.725, 6.527},
     {4.705, 5.551, 6.404, 8.406},
     {5.851, 7.070, 8.404, 12.007},
     {4.112, 4.712, 5.308, 6.677}},
    {{3.375, 4.056, 4.801, 6.813},
     {3.305, 3.840, 4.382, 5.670},
     {4.411, 5.202, 6.020, 8.033},
     {5.884, 7.117, 8.475, 12.188},
     {4.201, 4.801, 5.372, 6.595}}};

// Table 6: SRM, [side][index][R].
const double kSrm[2][5][3] = {
    {{2.2965, 3.5143, 4.156},
     {2.2871, 3.6629, 4.326},
     {3.0894, 5.0365, 5.884},
     {3.8460, 6.3850, 7.651},
     {2.9378, 4.3428, 4.940}},
    {{2.2549, 3.6731, 4.380},
     {2.2973, 3.5165, 4.053},
     {2.9767, 4.7331, 5.533},
     {3.8804, 6.4284, 7.713},
     {2.9355, 4.4180, 5.006}}};

// Table 5: percent errors vs the 20M-slice trapezoid baseline,
// N in {1e3, 1e4, 1e5, 1e6, 1e7}.
const double kTrapErr[5] = {-16.38, -2.48, -0.34, -0.04, 0.00};
const double kSimpErr[5] = {-16.67, -2.51, -0.34, -0.04, 0.00};
const double kQuasiErr1k = -14.27; // identical Niederreiter and Weyl rows

// Table 3: bootstrap SEs of VaR and ES, [side][index][alpha].
const double kVarSe[2][5][4] = {
    {{0.0811, 0.1311, 0.2028, 0.6386},
     {0.0954, 0.1448, 0.2195, 0.5909},
     {0.1438, 0.2030, 0.2916, 0.6629},
     {0.1738, 0.2667, 0.4147, 1.1749},
     {0.1037, 0.1490, 0.2095, 0.4546}},
    {{0.0977, 0.1500, 0.2331, 0.6555},
     {0.0882, 0.1309, 0.1830, 0.4210},
     {0.1278, 0.1842, 0.2724, 0.6552},
     {0.1735, 0.2700, 0.4201, 1.2130},
     {0.1551, 0.1522, 0.2049, 0.4079}}};
const double kEsSe[2][5][4] = {
    {{0.0976, 0.1598, 0.2498, 0.7789},
     {0.1089, 0.1609, 0.2406, 0.6581},
     {0.1462, 0.2112, 0.2921, 0.6795},
     {0.2025, 0.3069, 0.4775, 1.3617},
     {0.1036, 0.1465, 0.2047, 0.4478}},
    {{0.1110, 0.1742, 0.2633, 0.7440},
     {0.0906, 0.1312, 0.1914, 0.4321},
     {0.1335, 0.1999, 0.2811, 0.6875},
     {0.2017, 0.3197, 0.4932, 1.4061},
     {0.1071, 0.1446, 0.1934, 0.3851}}};

// Table 7: bootstrap SEs of SRM, [side][index][R].
const double kSrmSe[2][5][3] = {
    {{0.1575, 0.5273, 0.8862},
     {0.1626, 0.5405, 0.8960},
     {0.2226, 0.7363, 1.1901},
     {0.2809, 0.9724, 1.6352},
     {0.1950, 0.6018, 0.9576}},
    {{0.1662, 0.5636, 0.9247},
     {0.1538, 0.5009, 0.7988},
     {0.2117, 0.7103, 1.1483},
     {0.2866, 0.9934, 1.6845},
     {0.1969, 0.6173, 0.9702}}};

// Table 4: standardised 90% CI bounds, [measure][side][index][alpha][lo/hi].
const double kVarEsCi[2][2][5][4][2] = {
    {{{{0.9476, 1.0560}, {0.9294, 1.0769}, {0.9072, 1.1025}, {0.8243, 1.2253}},
      {{0.9384, 1.0651}, {0.9252, 1.0805}, {0.9082, 1.1015}, {0.8413, 1.2015}},
      {{0.9327, 1.0691}, {0.9245, 1.0797}, {0.9107, 1.0965}, {0.8602, 1.1638}},
      {{0.9346, 1.0731}, {0.9179, 1.0859}, {0.9001, 1.1140}, {0.8250, 1.2214}},
      {{0.9479, 1.0533}, {0.9376, 1.0659}, {0.9258, 1.0810}, {0.8825, 1.1386}}},
     {{{0.9348, 1.0693}, {0.9224, 1.0870}, {0.9002, 1.1120}, {0.8318, 1.2177}},
      {{0.9434, 1.0580}, {0.9310, 1.0724}, {0.9202, 1.0880}, {0.8729, 1.1574}},
      {{0.9351, 1.0646}, {0.9271, 1.0785}, {0.9106, 1.0959}, {0.8557, 1.1731}},
      {{0.9325, 1.0713}, {0.9192, 1.0882}, {0.8959, 1.1137}, {0.8222, 1.2269}},
      {{0.9440, 1.0587}, {0.9385, 1.0647}, {0.9263, 1.0762}, {0.8935, 1.1186}}}},
    {{{{0.9519, 1.0515}, {0.9338, 1.0711}, {0.9141, 1.0985}, {0.8334, 1.2221}},
      {{0.9476, 1.0536}, {0.9377, 1.0671}, {0.9198, 1.0903}, {0.8542, 1.1776}},
      {{0.9499, 1.0517}, {0.9399, 1.0654}, {0.9295, 1.0805}, {0.8821, 1.1413}},
      {{0.9450, 1.0592}, {0.9315, 1.0746}, {0.9111, 1.0978}, {0.8366, 1.2073}},
      {{0.9583, 1.0420}, {0.9509, 1.0527}, {0.9382, 1.0653}, {0.8994, 1.1156}}},
     {{{0.9482, 1.0543}, {0.9312, 1.0731}, {0.9139, 1.0944}, {0.8450, 1.1996}},
      {{0.9559, 1.0469}, {0.9456, 1.0581}, {0.9313, 1.0752}, {0.8878, 1.1366}},
      {{0.9516, 1.0501}, {0.9398, 1.0662}, {0.9278, 1.0831}, {0.8737, 1.1536}},
      {{0.9469, 1.0580}, {0.9297, 1.0777}, {0.9072, 1.1011}, {0.8363, 1.2112}},
      {{0.9587, 1.0426}, {0.9521, 1.0508}, {0.9426, 1.0623}, {0.9107, 1.1018}}}}};

// Table 8: standardised 90% CI bounds of SRM, [side][index][R][lo/hi].
const double kSrmCi[2][5][3][2] = {
    {{{0.8895, 1.1143}, {0.7682, 1.2576}, {0.6769, 1.3806}},
     {{0.8860, 1.1221}, {0.7704, 1.2505}, {0.6822, 1.3594}},
     {{0.8844, 1.1231}, {0.7697, 1.2512}, {0.6834, 1.3597}},
     {{0.8824, 1.1235}, {0.7661, 1.2610}, {0.6742, 1.3758}},
     {{0.8938, 1.1123}, {0.7783, 1.2314}, {0.7004, 1.3378}}},
    {{{0.8825, 1.1257}, {0.7622, 1.2654}, {0.6768, 1.3737}},
     {{0.8931, 1.1126}, {0.7711, 1.2454}, {0.6963, 1.3394}},
     {{0.8854, 1.1167}, {0.7648, 1.2554}, {0.6816, 1.3556}},
     {{0.8818, 1.1258}, {0.7623, 1.2660}, {0.6602, 1.3816}},
     {{0.8924, 1.1117}, {0.7790, 1.2424}, {0.6958, 1.3277}}}};

std::string cell(const char* what, int side, int index, double param) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s %s-%s %.4g", what, kKeys[index],
                  side == 0 ? "long" : "short", param);
    return buf;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("acceptance run (%d OpenMP threads)\n", omp_get_max_threads());
#else
    std::printf("acceptance run (OpenMP disabled)\n");
#endif

    // ---- criterion 1: VaR and ES regression targets, +-0.02 absolute ----
    {
        Criterion c;
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 5; ++i)
                for (int a = 0; a < 4; ++a) {
                    const GpdFit& fit = fit_for(i, side);
                    double v = var_gpd(fit, kAlphas[a]);
                    double e = es_gpd(fit, kAlphas[a]);
                    require(std::abs(v - kVar[side][i][a]) <= 0.02,
                            cell("VaR", side, i, kAlphas[a]).c_str(), v, kVar[side][i][a]);
                    require(std::abs(e - kEs[side][i][a]) <= 0.02,
                            cell("ES", side, i, kAlphas[a]).c_str(), e, kEs[side][i][a]);
                }
        report(1, "VaR/ES table (80 values, +-0.02)", c, 1.0);
    }

    // ---- criterion 2: SRM regression targets, +-0.03 absolute ----
    {
        Criterion c;
        QuadratureConfig quad{Engine::trapezoid, 1'000'000, 0};
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 5; ++i)
                for (int r = 0; r < 3; ++r) {
                    double v = srm_gpd(fit_for(i, side), kAversions[r], quad);
                    require(std::abs(v - kSrm[side][i][r]) <= 0.03,
                            cell("SRM", side, i, kAversions[r]).c_str(), v, kSrm[side][i][r]);
                }
        report(2, "SRM table (30 values, +-0.03)", c, 60.0);
    }

    // ---- criterion 3: quadrature error table vs the 20M baseline ----
    {
        Criterion c;
        const std::vector<std::int64_t> grid{1'000, 10'000, 100'000, 1'000'000, 10'000'000};
        auto table = bench_errors(benchmark_fit(), 100.0,
                                  {Engine::trapezoid, Engine::simpson, Engine::weyl,
                                   Engine::niederreiter},
                                  grid);
        require(std::abs(table.baseline - 4.595) <= 0.005, "baseline SRM", table.baseline,
                4.595);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            double tol = k == 0 ? 1.5 : 0.3;
            require(std::abs(table.percent_error[0][k] - kTrapErr[k]) <= tol,
                    ("trapezoid error N=" + std::to_string(grid[k])).c_str(),
                    table.percent_error[0][k], kTrapErr[k]);
            require(std::abs(table.percent_error[1][k] - kSimpErr[k]) <= tol,
                    ("simpson error N=" + std::to_string(grid[k])).c_str(),
                    table.percent_error[1][k], kSimpErr[k]);
        }
        require(std::abs(table.percent_error[2][0] - kQuasiErr1k) <= 2.0,
                "weyl error N=1000", table.percent_error[2][0], kQuasiErr1k);
        require(std::abs(table.percent_error[3][0] - kQuasiErr1k) <= 2.0,
                "niederreiter error N=1000", table.percent_error[3][0], kQuasiErr1k);
        report(3, "quadrature error table", c, 120.0);
    }

    // ---- criteria 4 and 5: bootstrap SEs and standardised 90% CIs ----
    {
        Criterion c4;
        BootstrapConfig cfg{5000, 42, 0.90};
        QuadratureConfig pq{Engine::trapezoid, 100'000, 0};
        std::vector<RiskMeasureSpec> specs;
        for (double a : kAlphas) specs.push_back(RiskMeasureSpec::var(a));
        for (double a : kAlphas) specs.push_back(RiskMeasureSpec::es(a));
        for (double r : kAversions) specs.push_back(RiskMeasureSpec::srm(r));

        std::vector<std::vector<BootstrapSummary>> all(10);
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 5; ++i)
                all[std::size_t(side * 5 + i)] =
                    boot_risk_many(fit_for(i, side), specs, cfg, pq);

        auto rel_ok = [](double got, double want) {
            return std::abs(got - want) / want <= 0.10;
        };
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 5; ++i) {
                const auto& s = all[std::size_t(side * 5 + i)];
                for (int a = 0; a < 4; ++a) {
                    // The published VaR(0.98) SE for the Nikkei short position
                    // (0.1551) exceeds its own 0.99 entry, which the sampling
                    // distribution cannot do; treated as a misprint and skipped.
                    bool misprint = side == 1 && i == 4 && a == 0;
                    if (!misprint)
                        require(rel_ok(s[std::size_t(a)].se, kVarSe[side][i][a]),
                                cell("se VaR", side, i, kAlphas[a]).c_str(),
                                s[std::size_t(a)].se, kVarSe[side][i][a]);
                    require(rel_ok(s[std::size_t(4 + a)].se, kEsSe[side][i][a]),
                            cell("se ES", side, i, kAlphas[a]).c_str(),
                            s[std::size_t(4 + a)].se, kEsSe[side][i][a]);
                }
                for (int r = 0; r < 3; ++r)
                    require(rel_ok(s[std::size_t(8 + r)].se, kSrmSe[side][i][r]),
                            cell("se SRM", side, i, kAversions[r]).c_str(),
                            s[std::size_t(8 + r)].se, kSrmSe[side][i][r]);
            }
        std::puts("    note: Nikkei-short VaR(0.98) SE skipped as a table misprint"
                  " (published 0.1551 > its own 0.99 entry)");
        report(4, "bootstrap standard errors (+-10% rel)", c4, 300.0);

        Criterion c5;
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 5; ++i) {
                const auto& s = all[std::size_t(side * 5 + i)];
                for (int a = 0; a < 4; ++a) {
                    for (int m = 0; m < 2; ++m) { // 0 = VaR, 1 = ES
                        const auto& b = s[std::size_t(m * 4 + a)];
                        require(std::abs(b.std_ci_lo - kVarEsCi[m][side][i][a][0]) <= 0.02,
                                cell(m == 0 ? "ci-lo VaR" : "ci-lo ES", side, i,
                                     kAlphas[a])
                                    .c_str(),
                                b.std_ci_lo, kVarEsCi[m][side][i][a][0]);
                        require(std::abs(b.std_ci_hi - kVarEsCi[m][side][i][a][1]) <= 0.02,
                                cell(m == 0 ? "ci-hi VaR" : "ci-hi ES", side, i,
                                     kAlphas[a])
                                    .c_str(),
                                b.std_ci_hi, kVarEsCi[m][side][i][a][1]);
                    }
                }
                for (int r = 0; r < 3; ++r) {
                    const auto& b = s[std::size_t(8 + r)];
                    require(std::abs(b.std_ci_lo - kSrmCi[side][i][r][0]) <= 0.02,
                            cell("ci-lo SRM", side, i, kAversions[r]).c_str(), b.std_ci_lo,
                            kSrmCi[side][i][r][0]);
                    require(std::abs(b.std_ci_hi - kSrmCi[side][i][r][1]) <= 0.02,
                            cell("ci-hi SRM", side, i, kAversions[r]).c_str(), b.std_ci_hi,
                            kSrmCi[side][i][r][1]);
                }
                // asymmetry deep in the tail: the upper gap dominates
                for (std::size_t idx : {std::size_t(3), std::size_t(7), std::size_t(10)}) {
                    const auto& b = s[idx];
                    require(b.std_ci_hi - 1.0 > 1.0 - b.std_ci_lo,
                            cell("asymmetry", side, i, specs[idx].param()).c_str(),
                            b.std_ci_hi - 1.0, 1.0 - b.std_ci_lo);
                }
            }
        report(5, "standardised CIs (+-0.02) and tail asymmetry", c5, 300.0);
    }

    // ---- criterion 6: property suite ----
    {
        Criterion c;
        // quantile/CDF round-trip to 1e-9
        for (const GpdParams& p : {GpdParams{0.18, 0.60}, GpdParams{-0.07, 1.04}}) {
            for (int i = 1; i < 100; ++i) {
                double q = double(i) / 100.0;
                double back = gpd_cdf(gpd_quantile(q, p), p);
                require(std::abs(back - q) <= 1e-9, "quantile/CDF round-trip", back, q);
            }
        }
        // spectrum normalisation and monotonicity
        for (double r : {20.0, 100.0, 200.0}) {
            detail::Kahan total;
            for (std::int64_t i = 1; i <= 10000; ++i)
                total.add(spectrum_cell_weight(i, 10000, r));
            require(std::abs(total.sum - 1.0) <= 1e-12, "spectrum normalisation", total.sum,
                    1.0);
            double prev = -1.0;
            bool mono = true;
            for (int i = 0; i <= 100; ++i) {
                double phi = spectrum_exp(double(i) / 100.0, r);
                mono = mono && phi >= prev && phi >= 0.0;
                prev = phi;
            }
            require(mono, "spectrum monotonicity", mono ? 1.0 : 0.0, 1.0);
        }
        // ES > VaR; all three measures increasing in their parameter
        QuadratureConfig quad{Engine::trapezoid, 100'000, 0};
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 5; ++i) {
                const GpdFit& fit = fit_for(i, side);
                double pv = -1e300, pe = -1e300, ps = -1e300;
                for (double a : kAlphas) {
                    double v = var_gpd(fit, a), e = es_gpd(fit, a);
                    require(e > v, "ES > VaR", e, v);
                    require(v > pv && e > pe, "VaR/ES monotone in alpha", v, pv);
                    pv = v;
                    pe = e;
                }
                for (double r : kAversions) {
                    double srm = srm_gpd(fit, r, quad);
                    require(srm > ps, "SRM monotone in R", srm, ps);
                    ps = srm;
                }
            }
        // positive homogeneity under joint scaling of (u, beta)
        {
            GpdFit base = fit_for(0, 0);
            GpdFit scaled = base;
            const double lambda = 2.5;
            scaled.u *= lambda;
            scaled.params.beta *= lambda;
            require(std::abs(var_gpd(scaled, 0.99) - lambda * var_gpd(base, 0.99)) <= 1e-9,
                    "VaR homogeneity", var_gpd(scaled, 0.99), lambda * var_gpd(base, 0.99));
            require(std::abs(es_gpd(scaled, 0.99) - lambda * es_gpd(base, 0.99)) <= 1e-9,
                    "ES homogeneity", es_gpd(scaled, 0.99), lambda * es_gpd(base, 0.99));
            double s1 = srm_gpd(scaled, 100.0, quad), s0 = srm_gpd(base, 100.0, quad);
            require(std::abs(s1 - lambda * s0) <= 1e-9, "SRM homogeneity", s1, lambda * s0);
        }
        // MLE recovery within 3 SEs on 10,000 simulated exceedances
        {
            GpdParams truth{0.18, 0.60};
            auto eng = substream_engine(2026, 0);
            std::vector<double> exc(10000);
            for (auto& x : exc) x = gpd_quantile(uniform01(eng), truth);
            auto fit = fit_gpd_mle(exc, 2.0, 20000);
            require(std::abs(fit.params.xi - truth.xi) < 3.0 * fit.se_xi, "MLE xi recovery",
                    fit.params.xi, truth.xi);
            require(std::abs(fit.params.beta - truth.beta) < 3.0 * fit.se_beta,
                    "MLE beta recovery", fit.params.beta, truth.beta);
        }
        // bootstrap determinism under a fixed seed
        {
            BootstrapConfig cfg{500, 42, 0.90};
            auto a = boot_risk(fit_for(0, 0), RiskMeasureSpec::var(0.99), cfg);
            auto b = boot_risk(fit_for(0, 0), RiskMeasureSpec::var(0.99), cfg);
            require(a.se == b.se && a.ci_lo == b.ci_lo, "bootstrap determinism", a.se, b.se);
        }
        // quadrature independent of the worker count
        {
            const GpdFit fit = benchmark_fit();
            auto f = [&](double p) { return spectrum_exp(p, 100.0) * tail_quantile(fit, p); };
            QuadratureConfig cfg{Engine::trapezoid, 1'000'000, 0};
#ifdef _OPENMP
            int saved = omp_get_max_threads();
            omp_set_num_threads(1);
            double one = integrate(f, cfg);
            omp_set_num_threads(saved > 1 ? saved : 2);
            double many = integrate(f, cfg);
            omp_set_num_threads(saved);
#else
            double one = integrate(f, cfg);
            double many = integrate_serial(f, cfg);
#endif
            require(one == many, "worker-count independence", one, many);
        }
        report(6, "property suite", c, 120.0);
    }

    // ---- criterion 7: excluded targets covered by substitute checks ----
    {
        Criterion c;
        // Raw-data parameter table: unavailable inputs, covered by synthetic
        // recovery on the published sample size and exceedance counts.
        {
            const GpdFit& ref = fit_for(3, 0); // largest exceedance count
            auto eng = substream_engine(77, 0);
            std::vector<double> exc(std::size_t(ref.n_exceed));
            for (auto& x : exc) x = gpd_quantile(uniform01(eng), ref.params);
            auto fit = fit_gpd_mle(exc, ref.u, ref.n);
            require(std::abs(fit.params.xi - ref.params.xi) < 3.0 * fit.se_xi,
                    "synthetic xi recovery", fit.params.xi, ref.params.xi);
            require(std::abs(fit.params.beta - ref.params.beta) < 3.0 * fit.se_beta,
                    "synthetic beta recovery", fit.params.beta, ref.params.beta);
        }
        // Pseudo-MC row: published only as unavailable sample standard
        // deviations; covered by a 3-sigma consistency check of the estimator.
        {
            const GpdFit fit = benchmark_fit();
            double exact =
                srm_gpd(fit, 100.0, {Engine::trapezoid, 2'000'000, 0});
            const int n_seeds = 100;
            std::vector<double> ests(n_seeds);
            for (int s = 0; s < n_seeds; ++s)
                ests[std::size_t(s)] =
                    srm_gpd(fit, 100.0, {Engine::pseudo_mc, 10'000, std::uint64_t(s) + 1});
            double mean = 0, var = 0;
            for (double v : ests) mean += v;
            mean /= n_seeds;
            for (double v : ests) var += (v - mean) * (v - mean);
            var /= (n_seeds - 1);
            double se = std::sqrt(var / n_seeds);
            require(std::abs(mean - exact) < 3.0 * se, "pseudo-MC unbiasedness", mean, exact);
        }
        report(7, "excluded targets covered by substitutes", c, 120.0);
    }

    std::printf("%d checks, %d failures\n", g_checks, g_failures);
    return g_failures == 0 ? 0 : 1;
}
