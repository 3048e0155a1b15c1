#pragma once

#include <string>
#include <vector>

#include "potrisk/gpd.hpp"
#include "potrisk/market_data.hpp"

namespace potrisk {

// Published GPD parameter estimates for the five index-futures contracts,
// long and short sides; the regression targets are regenerated from these.
struct Fixture {
    std::string contract; // display name, e.g. "S&P500"
    std::string key;      // CLI key, e.g. "sp500-long"
    Position position;
    GpdFit fit;
};

const std::vector<Fixture>& table1_fixtures();

// Lookup by key ("sp500-long", "hangseng-short", ...); throws input_error if
// absent.
const Fixture& find_fixture(const std::string& key);

// Mean long-position parameters (u=1.9, xi=0.082, beta=0.914, N_u=249), the
// benchmark point for the quadrature error table.
GpdFit benchmark_fit();

} // namespace potrisk
