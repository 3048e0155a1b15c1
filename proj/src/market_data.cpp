#include "potrisk/market_data.hpp"
#include "potrisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace potrisk {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim whitespace and CR
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_weekday(std::chrono::sys_days d) {
    std::chrono::weekday wd{d};
    return wd != std::chrono::Saturday && wd != std::chrono::Sunday;
}

} // namespace

std::chrono::year_month_day parse_iso_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d", &y, &m, &d) != 3)
        throw input_error("invalid ISO-8601 date: '" + text + "'");
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                    std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) throw input_error("invalid calendar date: '" + text + "'");
    return ymd;
}

std::string format_iso_date(const std::chrono::year_month_day& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(d.year()), unsigned(d.month()),
                  unsigned(d.day()));
    return buf;
}

LoadedSeries load_series(const std::string& path, const CsvColumnSpec& spec) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw input_error("empty file: " + path);
    auto header = split_csv_line(line);

    int date_col = -1, value_col = -1;
    bool value_is_return = false;
    for (std::size_t i = 0; i < header.size(); ++i) {
        auto h = lower(header[i]);
        if (h == lower(spec.date_column)) date_col = int(i);
        if (!spec.value_column.empty()) {
            if (h == lower(spec.value_column)) value_col = int(i);
        } else if (spec.value_column_index < 0) {
            if (h == "price") { value_col = int(i); value_is_return = false; }
            if (h == "return") { value_col = int(i); value_is_return = true; }
        }
    }
    if (spec.value_column.empty() && spec.value_column_index >= 0) {
        value_col = spec.value_column_index;
        if (value_col >= int(header.size()))
            throw input_error("value column index out of range in " + path);
    }
    if (date_col < 0)
        throw input_error("missing column '" + spec.date_column + "' in " + path);
    if (value_col < 0)
        throw input_error("missing price/return column in " + path);

    LoadedSeries out;
    out.has_prices = !value_is_return;

    std::chrono::year_month_day prev_date{};
    bool have_prev = false;
    long row = 1; // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv_line(line);
        if (int(fields.size()) <= std::max(date_col, value_col))
            throw input_error("row " + std::to_string(row) + ": too few columns");
        auto date = parse_iso_date(fields[date_col]);
        double value;
        try {
            value = std::stod(fields[value_col]);
        } catch (const std::exception&) {
            throw input_error("row " + std::to_string(row) + ": non-numeric value '" +
                              fields[value_col] + "'");
        }
        if (have_prev && !(std::chrono::sys_days(date) > std::chrono::sys_days(prev_date)))
            throw input_error("dates not increasing at row " + std::to_string(row));

        if (value_is_return) {
            out.returns.returns.push_back(value);
        } else {
            if (!(value > 0.0))
                throw input_error("non-positive price at row " + std::to_string(row));
            if (spec.forward_fill_weekdays && have_prev) {
                auto d = std::chrono::sys_days(prev_date) + std::chrono::days{1};
                for (; d < std::chrono::sys_days(date); d += std::chrono::days{1}) {
                    if (is_weekday(d))
                        out.prices.observations.push_back(
                            {std::chrono::year_month_day{d}, out.prices.observations.back().price});
                }
            }
            out.prices.observations.push_back({date, value});
        }
        prev_date = date;
        have_prev = true;
    }
    if (!out.has_prices && out.returns.returns.empty())
        throw input_error("no data rows in " + path);
    if (out.has_prices && out.prices.observations.empty())
        throw input_error("no data rows in " + path);
    return out;
}

PriceSeries load_prices(const std::string& path, const CsvColumnSpec& spec) {
    auto loaded = load_series(path, spec);
    if (!loaded.has_prices)
        throw input_error("expected a price column in " + path + ", found returns");
    return std::move(loaded.prices);
}

ReturnSeries compute_returns(const PriceSeries& prices) {
    if (prices.observations.size() < 2)
        throw input_error("need at least 2 prices to compute returns");
    ReturnSeries out;
    out.returns.reserve(prices.observations.size() - 1);
    for (std::size_t i = 1; i < prices.observations.size(); ++i) {
        double p0 = prices.observations[i - 1].price;
        double p1 = prices.observations[i].price;
        out.returns.push_back(100.0 * std::log(p1 / p0));
    }
    return out;
}

LossSeries to_losses(const ReturnSeries& returns, Position position) {
    LossSeries out;
    out.position = position;
    out.losses.reserve(returns.returns.size());
    for (double r : returns.returns)
        out.losses.push_back(position == Position::long_side ? -r : r);
    return out;
}

} // namespace potrisk
