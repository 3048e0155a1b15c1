// Timing comparison of the OpenMP kernels against their serial reference
// paths: the SRM quadrature reduction and the bootstrap resample loop.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "potrisk/bootstrap.hpp"
#include "potrisk/fixtures.hpp"
#include "potrisk/quadrature.hpp"
#include "potrisk/risk_measures.hpp"

using namespace potrisk;

namespace {

template <class F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled\n");
#endif

    const auto fit = benchmark_fit();
    const double r_aversion = 100.0;
    auto integrand = [&](double p) {
        return spectrum_exp(p, r_aversion) * tail_quantile(fit, p);
    };

    for (std::int64_t n : {std::int64_t(1'000'000), std::int64_t(20'000'000)}) {
        QuadratureConfig cfg{Engine::trapezoid, n, 0};
        double v_serial = 0, v_par = 0;
        double t_serial = time_ms([&] { v_serial = integrate_serial(integrand, cfg); });
        double t_par = time_ms([&] { v_par = integrate(integrand, cfg); });
        std::printf("srm trapezoid N=%-9lld serial %8.1f ms  parallel %8.1f ms  speedup %5.2fx"
                    "  |diff| %.3e\n",
                    (long long)n, t_serial, t_par, t_serial / t_par,
                    std::abs(v_serial - v_par));
    }

    {
        BootstrapConfig cfg{2000, 42, 0.90};
        auto spec = RiskMeasureSpec::srm(r_aversion);
        QuadratureConfig pq{Engine::trapezoid, 100'000, 0};
        BootstrapSummary s_par{};
        double t_par = time_ms([&] { s_par = boot_risk(fit, spec, cfg, pq); }, 2);
#ifdef _OPENMP
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        BootstrapSummary s_serial{};
        double t_serial = time_ms([&] { s_serial = boot_risk(fit, spec, cfg, pq); }, 2);
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
        std::printf("bootstrap srm B=2000       serial %8.1f ms  parallel %8.1f ms  speedup %5.2fx"
                    "  |diff se| %.3e\n",
                    t_serial, t_par, t_serial / t_par, std::abs(s_serial.se - s_par.se));
    }
    return 0;
}
