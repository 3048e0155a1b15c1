#include "potrisk/fixtures.hpp"
#include "potrisk/errors.hpp"

namespace potrisk {

namespace {

constexpr std::int64_t kSampleSize = 3392;

GpdFit make_fit(double u, std::int64_t n_exceed, double xi, double se_xi, double beta,
                double se_beta) {
    GpdFit fit;
    fit.params = {xi, beta};
    fit.u = u;
    fit.n = kSampleSize;
    fit.n_exceed = n_exceed;
    fit.se_xi = se_xi;
    fit.se_beta = se_beta;
    return fit;
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> v;
    auto add = [&](const std::string& name, const std::string& key, Position pos, double u,
                   std::int64_t nu, double xi, double se_xi, double beta, double se_beta) {
        v.push_back({name, key, pos, make_fit(u, nu, xi, se_xi, beta, se_beta)});
    };
    add("S&P500", "sp500-long", Position::long_side, 2.00, 130, 0.18, 0.10, 0.60, 0.08);
    add("S&P500", "sp500-short", Position::short_side, 2.00, 118, 0.13, 0.15, 0.76, 0.13);
    add("FTSE100", "ftse100-long", Position::long_side, 1.50, 250, 0.10, 0.08, 0.71, 0.07);
    add("FTSE100", "ftse100-short", Position::short_side, 1.50, 276, 0.02, 0.07, 0.73, 0.07);
    add("DAX", "dax-long", Position::long_side, 2.00, 235, 0.01, 0.05, 1.19, 0.10);
    add("DAX", "dax-short", Position::short_side, 2.00, 237, 0.05, 0.07, 1.00, 0.10);
    add("Hang Seng", "hangseng-long", Position::long_side, 2.00, 353, 0.13, 0.06, 1.18, 0.10);
    add("Hang Seng", "hangseng-short", Position::short_side, 2.00, 367, 0.14, 0.05, 1.15, 0.09);
    add("Nikkei 225", "nikkei225-long", Position::long_side, 2.00, 277, -0.01, 0.06, 0.89, 0.07);
    add("Nikkei 225", "nikkei225-short", Position::short_side, 2.00, 255, -0.07, 0.05, 1.04, 0.08);
    return v;
}

} // namespace

const std::vector<Fixture>& table1_fixtures() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture& find_fixture(const std::string& key) {
    for (const auto& f : table1_fixtures())
        if (f.key == key) return f;
    throw input_error("unknown fixture '" + key + "' (try e.g. sp500-long, hangseng-short)");
}

GpdFit benchmark_fit() { return make_fit(1.9, 249, 0.082, 0.0, 0.914, 0.0); }

} // namespace potrisk
