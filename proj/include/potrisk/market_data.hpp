#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace potrisk {

struct PricePoint {
    std::chrono::year_month_day date;
    double price; // end-of-day, currency-index points, > 0
};

struct PriceSeries {
    std::vector<PricePoint> observations; // strictly increasing dates
};

// Daily % log returns, return_t = 100 * ln(P_t / P_{t-1}).
struct ReturnSeries {
    std::vector<double> returns;
};

enum class Position { long_side, short_side };

// Position-signed daily % losses: losses carry a positive sign, profits a
// negative one. Long positions lose when returns are negative.
struct LossSeries {
    std::vector<double> losses;
    Position position = Position::long_side;
};

struct CsvColumnSpec {
    std::string date_column = "date";
    std::string value_column;      // empty: auto-detect "price" or "return"
    int value_column_index = -1;   // used when >= 0 and value_column empty
    bool forward_fill_weekdays = false;
};

// Loaded payload: either a price series (returns derived later) or a
// ready-made return series, auto-detected from the header.
struct LoadedSeries {
    PriceSeries prices;
    ReturnSeries returns;
    bool has_prices = false;
};

std::chrono::year_month_day parse_iso_date(const std::string& text);
std::string format_iso_date(const std::chrono::year_month_day& d);

LoadedSeries load_series(const std::string& path, const CsvColumnSpec& spec = {});
PriceSeries load_prices(const std::string& path, const CsvColumnSpec& spec = {});

ReturnSeries compute_returns(const PriceSeries& prices);
LossSeries to_losses(const ReturnSeries& returns, Position position);

} // namespace potrisk
