// potrisk: GPD tail fitting and extreme-value risk measures for futures
// margin setting. Subcommands: fit, risk, bootstrap, quad-bench, diag, report.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "potrisk/bootstrap.hpp"
#include "potrisk/diagnostics.hpp"
#include "potrisk/errors.hpp"
#include "potrisk/fixtures.hpp"
#include "potrisk/gpd.hpp"
#include "potrisk/market_data.hpp"
#include "potrisk/quadrature.hpp"
#include "potrisk/risk_measures.hpp"

namespace {

using namespace potrisk;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

// Flat key=value config file; flags override config, config overrides
// defaults.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = value;
    }
    return out;
}

template <class T>
void apply_config(const std::map<std::string, std::string>& cfg, const CLI::Option* opt,
                  const std::string& key, T& target) {
    if (opt->count() > 0) return; // flag wins
    auto it = cfg.find(key);
    if (it == cfg.end()) return;
    std::istringstream ss(it->second);
    ss >> target;
    if (ss.fail()) throw input_error("config value for '" + key + "' is not parseable");
}

LossSeries load_losses(const std::string& path, const CsvColumnSpec& spec, Position position) {
    auto loaded = load_series(path, spec);
    ReturnSeries returns =
        loaded.has_prices ? compute_returns(loaded.prices) : std::move(loaded.returns);
    return to_losses(returns, position);
}

Position parse_position(const std::string& s) {
    if (s == "long") return Position::long_side;
    if (s == "short") return Position::short_side;
    throw input_error("position must be 'long' or 'short'");
}

std::vector<double> parse_threshold_grid(const std::string& text) {
    std::vector<double> grid;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        double lo, hi, step;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0)
            throw input_error("threshold grid must be lo:hi:step or a comma list");
        for (double u = lo; u <= hi + 1e-12; u += step) grid.push_back(u);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) grid.push_back(std::stod(tok));
    }
    if (grid.empty()) throw input_error("empty threshold grid");
    return grid;
}

GpdFit resolve_fit(const std::string& fit_path, const std::string& fixture_key,
                   std::string& fit_id) {
    if (!fit_path.empty() && !fixture_key.empty())
        throw input_error("give either --fit or --fixture, not both");
    if (!fit_path.empty()) {
        fit_id = fit_path;
        return load_gpd_fit(fit_path);
    }
    if (!fixture_key.empty()) {
        fit_id = fixture_key;
        return find_fixture(fixture_key).fit;
    }
    throw input_error("one of --fit or --fixture is required");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write output file: " + path);
    out << text;
}

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// ---------------------------------------------------------------- report ---

struct ReportOptions {
    std::string out_dir = ".";
    std::int64_t resamples = 5000;
    std::uint64_t seed = 42;
    double ci_level = 0.90;
    std::int64_t srm_slices = 1'000'000;
};

const std::vector<double> kAlphas{0.98, 0.99, 0.995, 0.999};
const std::vector<double> kRiskAversions{20.0, 100.0, 200.0};

std::string position_name(Position p) {
    return p == Position::long_side ? "long" : "short";
}

void write_tables_2_and_3_layout(const std::string& path, int decimals,
                                 const std::function<double(const Fixture&, MeasureKind, double)>& cell) {
    std::ostringstream out;
    out << "measure,index";
    for (const char* side : {"long", "short"})
        for (double a : kAlphas) out << "," << side << "_" << a;
    out << "\n";
    for (MeasureKind kind : {MeasureKind::var, MeasureKind::es}) {
        for (const auto& f : table1_fixtures()) {
            if (f.position != Position::long_side) continue;
            const auto& s = find_fixture(f.key.substr(0, f.key.find('-')) + "-short");
            out << measure_name(kind) << "," << f.contract;
            for (double a : kAlphas) out << "," << fmt(cell(f, kind, a), decimals);
            for (double a : kAlphas) out << "," << fmt(cell(s, kind, a), decimals);
            out << "\n";
        }
    }
    write_text(path, out.str());
}

void cmd_report(const ReportOptions& opts) {
    namespace fs = std::filesystem;
    fs::create_directories(opts.out_dir);
    auto path = [&](const std::string& name) { return (fs::path(opts.out_dir) / name).string(); };

    // Table 2: VaR and ES point estimates.
    write_tables_2_and_3_layout(path("tables2.csv"), 3,
                                [](const Fixture& f, MeasureKind kind, double a) {
                                    return kind == MeasureKind::var ? var_gpd(f.fit, a)
                                                                    : es_gpd(f.fit, a);
                                });

    // Table 5: quadrature approximation errors on the benchmark parameters.
    {
        const std::vector<std::int64_t> grid{1000, 10000, 100000, 1000000, 10000000};
        const std::vector<Engine> engines{Engine::trapezoid, Engine::simpson,
                                          Engine::niederreiter, Engine::weyl};
        auto table = bench_errors(benchmark_fit(), 100.0, engines, grid, opts.seed);
        std::ostringstream out;
        out << "# baseline=" << fmt(table.baseline, 4) << " (trapezoid, N=20000000)\n";
        out << "engine";
        for (auto n : grid) out << ",err_" << n;
        out << "\n";
        for (std::size_t e = 0; e < engines.size(); ++e) {
            out << engine_name(engines[e]);
            for (double v : table.percent_error[e]) out << "," << fmt(v, 2);
            out << "\n";
        }
        write_text(path("tables5.csv"), out.str());
    }

    // Table 6: SRM point estimates, trapezoid with the configured slice count.
    {
        QuadratureConfig quad{Engine::trapezoid, opts.srm_slices, 0};
        std::ostringstream out;
        out << "position,index";
        for (double r : kRiskAversions) out << ",R" << fmt(r, 0);
        out << "\n";
        for (Position pos : {Position::long_side, Position::short_side}) {
            for (const auto& f : table1_fixtures()) {
                if (f.position != pos) continue;
                out << position_name(pos) << "," << f.contract;
                for (double r : kRiskAversions) out << "," << fmt(srm_gpd(f.fit, r, quad), 4);
                out << "\n";
            }
        }
        write_text(path("tables6.csv"), out.str());
    }

    // Tables 3/4/7/8: bootstrap per fixture, sharing resamples across specs.
    std::vector<RiskMeasureSpec> specs;
    for (double a : kAlphas) specs.push_back(RiskMeasureSpec::var(a));
    for (double a : kAlphas) specs.push_back(RiskMeasureSpec::es(a));
    for (double r : kRiskAversions) specs.push_back(RiskMeasureSpec::srm(r));

    std::map<std::string, std::vector<BootstrapSummary>> boot;
    BootstrapConfig bcfg{opts.resamples, opts.seed, opts.ci_level};
    for (const auto& f : table1_fixtures())
        boot[f.key] = boot_risk_many(f.fit, specs, bcfg,
                                     QuadratureConfig{Engine::trapezoid, opts.srm_slices, 0});
    auto summary = [&](const Fixture& f, const RiskMeasureSpec& spec) -> const BootstrapSummary& {
        const auto& v = boot.at(f.key);
        for (const auto& s : v)
            if (s.spec.kind == spec.kind && s.spec.param() == spec.param()) return s;
        throw input_error("internal: missing bootstrap spec");
    };

    write_tables_2_and_3_layout(path("tables3.csv"), 4,
                                [&](const Fixture& f, MeasureKind kind, double a) {
                                    RiskMeasureSpec spec{kind, a, 0.0};
                                    return summary(f, spec).se;
                                });

    {
        std::ostringstream out;
        out << "measure,position,index";
        for (double a : kAlphas) out << ",lo_" << a << ",hi_" << a;
        out << "\n";
        for (MeasureKind kind : {MeasureKind::var, MeasureKind::es}) {
            for (Position pos : {Position::long_side, Position::short_side}) {
                for (const auto& f : table1_fixtures()) {
                    if (f.position != pos) continue;
                    out << measure_name(kind) << "," << position_name(pos) << "," << f.contract;
                    for (double a : kAlphas) {
                        const auto& s = summary(f, RiskMeasureSpec{kind, a, 0.0});
                        out << "," << fmt(s.std_ci_lo, 4) << "," << fmt(s.std_ci_hi, 4);
                    }
                    out << "\n";
                }
            }
        }
        write_text(path("tables4.csv"), out.str());
    }

    {
        std::ostringstream out;
        out << "index";
        for (const char* side : {"long", "short"})
            for (double r : kRiskAversions) out << "," << side << "_R" << fmt(r, 0);
        out << "\n";
        for (const auto& f : table1_fixtures()) {
            if (f.position != Position::long_side) continue;
            const auto& s = find_fixture(f.key.substr(0, f.key.find('-')) + "-short");
            out << f.contract;
            for (double r : kRiskAversions)
                out << "," << fmt(summary(f, RiskMeasureSpec::srm(r)).se, 4);
            for (double r : kRiskAversions)
                out << "," << fmt(summary(s, RiskMeasureSpec::srm(r)).se, 4);
            out << "\n";
        }
        write_text(path("tables7.csv"), out.str());
    }

    {
        std::ostringstream out;
        out << "position,index";
        for (double r : kRiskAversions) out << ",lo_R" << fmt(r, 0) << ",hi_R" << fmt(r, 0);
        out << "\n";
        for (Position pos : {Position::long_side, Position::short_side}) {
            for (const auto& f : table1_fixtures()) {
                if (f.position != pos) continue;
                out << position_name(pos) << "," << f.contract;
                for (double r : kRiskAversions) {
                    const auto& s = summary(f, RiskMeasureSpec::srm(r));
                    out << "," << fmt(s.std_ci_lo, 4) << "," << fmt(s.std_ci_hi, 4);
                }
                out << "\n";
            }
        }
        write_text(path("tables8.csv"), out.str());
    }

    // Figure data: risk value against the conditioning parameter.
    for (MeasureKind kind : {MeasureKind::var, MeasureKind::es}) {
        std::ostringstream out;
        out << "alpha";
        for (const auto& f : table1_fixtures()) out << "," << f.key;
        out << "\n";
        for (double a = 0.95; a <= 0.9991; a += 0.0005) {
            out << fmt(a, 4);
            for (const auto& f : table1_fixtures())
                out << ","
                    << fmt(kind == MeasureKind::var ? var_gpd(f.fit, a) : es_gpd(f.fit, a), 4);
            out << "\n";
        }
        write_text(path(kind == MeasureKind::var ? "fig3.csv" : "fig4.csv"), out.str());
    }

    {
        // Convergence of each engine on the benchmark parameters.
        std::ostringstream out;
        out << "N,trapezoid,simpson,niederreiter,weyl\n";
        auto bench = benchmark_fit();
        for (std::int64_t n = 100; n <= 50000; n += 100) {
            out << n;
            for (Engine e : {Engine::trapezoid, Engine::simpson, Engine::niederreiter,
                             Engine::weyl})
                out << "," << fmt(srm_gpd(bench, 100.0, {e, n, 0}), 4);
            out << "\n";
        }
        write_text(path("fig5.csv"), out.str());
    }

    {
        std::ostringstream out;
        out << "R,one_minus_inv_R";
        for (const auto& f : table1_fixtures()) out << "," << f.key;
        out << "\n";
        QuadratureConfig quad{Engine::trapezoid, 100000, 0};
        for (double x = 0.50; x <= 0.9951; x += 0.005) {
            double r = 1.0 / (1.0 - x);
            out << fmt(r, 4) << "," << fmt(x, 3);
            for (const auto& f : table1_fixtures()) out << "," << fmt(srm_gpd(f.fit, r, quad), 4);
            out << "\n";
        }
        write_text(path("fig6.csv"), out.str());
    }

    std::cout << "report written to " << opts.out_dir << "\n";
}

// ------------------------------------------------------------------ main ---

int run(int argc, char** argv) {
    CLI::App app{"GPD tail risk measures for futures positions"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file")->configurable(false);

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "fit a GPD tail to losses from a CSV");
    std::string fit_input, fit_position = "long", fit_out = "gpdfit.json";
    std::string fit_date_col = "date", fit_value_col;
    double fit_threshold = 0.0;
    std::int64_t fit_floor = 30;
    bool fit_ffill = false;
    fit_cmd->add_option("--input", fit_input, "CSV with date,price or date,return")->required();
    fit_cmd->add_option("--position", fit_position, "long|short");
    fit_cmd->add_option("--threshold", fit_threshold, "tail threshold u, daily % loss")->required();
    fit_cmd->add_option("--date-column", fit_date_col, "date column name");
    fit_cmd->add_option("--value-column", fit_value_col, "price/return column name");
    fit_cmd->add_flag("--forward-fill", fit_ffill, "forward-fill missing weekday prices");
    fit_cmd->add_option("--min-exceedances", fit_floor, "minimum exceedance count");
    fit_cmd->add_option("--out", fit_out, "output fit JSON path");

    // risk
    auto* risk_cmd = app.add_subcommand("risk", "evaluate VaR/ES/SRM from a fit");
    std::string risk_fit, risk_fixture, risk_measure = "var", risk_engine = "trapezoid";
    std::string risk_out;
    double risk_alpha = -1.0, risk_r = -1.0;
    std::int64_t risk_slices = 1'000'000;
    std::uint64_t risk_seed = 42;
    risk_cmd->add_option("--fit", risk_fit, "fit JSON path");
    risk_cmd->add_option("--fixture", risk_fixture, "fixture key, e.g. sp500-long");
    risk_cmd->add_option("--measure", risk_measure, "var|es|srm");
    auto* opt_alpha = risk_cmd->add_option("--alpha", risk_alpha, "confidence level");
    auto* opt_r = risk_cmd->add_option("--R", risk_r, "coefficient of absolute risk aversion");
    auto* opt_engine = risk_cmd->add_option("--engine", risk_engine, "quadrature engine (srm)");
    auto* opt_slices = risk_cmd->add_option("--slices", risk_slices, "quadrature slices (srm)");
    auto* opt_rseed = risk_cmd->add_option("--seed", risk_seed, "seed (pseudo-mc engine)");
    risk_cmd->add_option("--out", risk_out, "output JSON path");

    // bootstrap
    auto* boot_cmd = app.add_subcommand("bootstrap", "bootstrap SEs and CIs for a measure");
    std::string boot_fit, boot_fixture, boot_measure = "var", boot_out;
    double boot_alpha = -1.0, boot_r = -1.0, boot_ci = 0.90;
    std::int64_t boot_b = 5000;
    std::uint64_t boot_seed = 42;
    boot_cmd->add_option("--fit", boot_fit, "fit JSON path");
    boot_cmd->add_option("--fixture", boot_fixture, "fixture key");
    boot_cmd->add_option("--measure", boot_measure, "var|es|srm");
    auto* bopt_alpha = boot_cmd->add_option("--alpha", boot_alpha, "confidence level");
    auto* bopt_r = boot_cmd->add_option("--R", boot_r, "risk aversion");
    auto* bopt_b = boot_cmd->add_option("--resamples", boot_b, "bootstrap resamples");
    auto* bopt_seed = boot_cmd->add_option("--seed", boot_seed, "RNG seed");
    auto* bopt_ci = boot_cmd->add_option("--ci", boot_ci, "CI level");
    boot_cmd->add_option("--out", boot_out, "output CSV path");

    // quad-bench
    auto* quad_cmd = app.add_subcommand("quad-bench", "quadrature error benchmark");
    double quad_r = 100.0;
    std::string quad_out = "tables5.csv";
    std::vector<std::string> quad_engines{"trapezoid", "simpson", "niederreiter", "weyl"};
    std::vector<std::int64_t> quad_slices{1000, 10000, 100000, 1000000, 10000000};
    std::uint64_t quad_seed = 42;
    quad_cmd->add_option("--R", quad_r, "risk aversion");
    quad_cmd->add_option("--engines", quad_engines, "engines to benchmark");
    quad_cmd->add_option("--slices", quad_slices, "slice counts");
    auto* qopt_seed = quad_cmd->add_option("--seed", quad_seed, "seed (pseudo-mc)");
    quad_cmd->add_option("--out", quad_out, "output CSV path");

    // diag
    auto* diag_cmd = app.add_subcommand("diag", "threshold-selection diagnostics");
    std::string diag_input, diag_position = "long", diag_kind = "qq", diag_out, diag_grid;
    diag_cmd->add_option("--input", diag_input, "CSV input")->required();
    diag_cmd->add_option("--position", diag_position, "long|short");
    diag_cmd->add_option("--kind", diag_kind, "qq|mean-excess|shape-stability");
    diag_cmd->add_option("--thresholds", diag_grid, "grid: lo:hi:step or comma list");
    diag_cmd->add_option("--out", diag_out, "output CSV path");

    // report
    auto* report_cmd = app.add_subcommand("report", "regenerate the full table set");
    ReportOptions ropts;
    report_cmd->add_option("--out", ropts.out_dir, "output directory");
    auto* ropt_b = report_cmd->add_option("--resamples", ropts.resamples, "bootstrap resamples");
    auto* ropt_seed = report_cmd->add_option("--seed", ropts.seed, "RNG seed");
    auto* ropt_ci = report_cmd->add_option("--ci", ropts.ci_level, "CI level");
    auto* ropt_slices = report_cmd->add_option("--slices", ropts.srm_slices, "SRM slices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    auto cfg = load_config(config_path);
    apply_config(cfg, opt_rseed, "seed", risk_seed);
    apply_config(cfg, opt_engine, "engine", risk_engine);
    apply_config(cfg, opt_slices, "slices", risk_slices);
    apply_config(cfg, bopt_b, "resamples", boot_b);
    apply_config(cfg, bopt_seed, "seed", boot_seed);
    apply_config(cfg, bopt_ci, "ci", boot_ci);
    apply_config(cfg, qopt_seed, "seed", quad_seed);
    apply_config(cfg, ropt_b, "resamples", ropts.resamples);
    apply_config(cfg, ropt_seed, "seed", ropts.seed);
    apply_config(cfg, ropt_ci, "ci", ropts.ci_level);
    apply_config(cfg, ropt_slices, "slices", ropts.srm_slices);

    if (fit_cmd->parsed()) {
        CsvColumnSpec spec;
        spec.date_column = fit_date_col;
        spec.value_column = fit_value_col;
        spec.forward_fill_weekdays = fit_ffill;
        auto losses = load_losses(fit_input, spec, parse_position(fit_position));
        auto exceedances = extract_exceedances(losses.losses, fit_threshold);
        auto fit = fit_gpd_mle(exceedances, fit_threshold, std::int64_t(losses.losses.size()),
                               FitOptions{fit_floor});
        std::cout << "u=" << fmt(fit.u, 2) << " prob=" << fmt(fit.exceed_prob(), 2)
                  << " N_u=" << fit.n_exceed << " xi=" << fmt(fit.params.xi, 2) << " ("
                  << fmt(fit.se_xi, 2) << ")"
                  << " beta=" << fmt(fit.params.beta, 2) << " (" << fmt(fit.se_beta, 2) << ")\n";
        save_gpd_fit(fit, fit_out);
        return kExitOk;
    }

    if (risk_cmd->parsed()) {
        if (opt_alpha->count() > 0 && opt_r->count() > 0)
            throw input_error("give exactly one of --alpha or --R");
        std::string fit_id;
        auto fit = resolve_fit(risk_fit, risk_fixture, fit_id);
        auto kind = measure_from_name(risk_measure);
        RiskMeasureSpec spec;
        if (kind == MeasureKind::srm) {
            if (opt_r->count() == 0) throw input_error("srm requires --R");
            spec = RiskMeasureSpec::srm(risk_r);
        } else {
            if (opt_alpha->count() == 0) throw input_error("var/es require --alpha");
            spec = kind == MeasureKind::var ? RiskMeasureSpec::var(risk_alpha)
                                            : RiskMeasureSpec::es(risk_alpha);
        }
        QuadratureConfig quad{engine_from_name(risk_engine), risk_slices, risk_seed};
        if (kind != MeasureKind::srm && !in_fitted_tail(fit, spec.alpha))
            std::cerr << "warning: alpha <= 1 - N_u/n, estimate extrapolates below the fitted tail\n";
        auto est = evaluate_risk(fit, spec, quad);
        std::cout << fmt(est.value, 4) << "\n";
        if (!risk_out.empty()) write_text(risk_out, risk_estimate_to_json(est, fit_id) + "\n");
        return kExitOk;
    }

    if (boot_cmd->parsed()) {
        if (bopt_alpha->count() > 0 && bopt_r->count() > 0)
            throw input_error("give exactly one of --alpha or --R");
        std::string fit_id;
        auto fit = resolve_fit(boot_fit, boot_fixture, fit_id);
        auto kind = measure_from_name(boot_measure);
        RiskMeasureSpec spec;
        if (kind == MeasureKind::srm) {
            if (bopt_r->count() == 0) throw input_error("srm requires --R");
            spec = RiskMeasureSpec::srm(boot_r);
        } else {
            if (bopt_alpha->count() == 0) throw input_error("var/es require --alpha");
            spec = kind == MeasureKind::var ? RiskMeasureSpec::var(boot_alpha)
                                            : RiskMeasureSpec::es(boot_alpha);
        }
        auto s = boot_risk(fit, spec, BootstrapConfig{boot_b, boot_seed, boot_ci});
        std::ostringstream out;
        out << "fit_id,measure,param,point,se,ci_lo,ci_hi,std_ci_lo,std_ci_hi\n";
        out << fit_id << "," << measure_name(kind) << "," << spec.param() << ","
            << fmt(s.point, 4) << "," << fmt(s.se, 4) << "," << fmt(s.ci_lo, 4) << ","
            << fmt(s.ci_hi, 4) << "," << fmt(s.std_ci_lo, 4) << "," << fmt(s.std_ci_hi, 4)
            << "\n";
        std::cout << out.str();
        if (!boot_out.empty()) write_text(boot_out, out.str());
        return kExitOk;
    }

    if (quad_cmd->parsed()) {
        std::vector<Engine> engines;
        for (const auto& name : quad_engines) engines.push_back(engine_from_name(name));
        auto table = bench_errors(benchmark_fit(), quad_r, engines, quad_slices, quad_seed);
        std::ostringstream out;
        out << "# baseline=" << fmt(table.baseline, 4) << " (trapezoid, N=20000000)\n";
        out << "engine";
        for (auto n : quad_slices) out << ",err_" << n;
        out << "\n";
        for (std::size_t e = 0; e < engines.size(); ++e) {
            out << engine_name(engines[e]);
            for (double v : table.percent_error[e]) out << "," << fmt(v, 2);
            out << "\n";
        }
        std::cout << out.str();
        write_text(quad_out, out.str());
        return kExitOk;
    }

    if (diag_cmd->parsed()) {
        auto losses = load_losses(diag_input, {}, parse_position(diag_position));
        std::string csv;
        if (diag_kind == "qq") {
            csv = diagnostic_to_csv(qq_normal(losses));
        } else if (diag_kind == "mean-excess") {
            if (diag_grid.empty()) throw input_error("mean-excess requires --thresholds");
            csv = diagnostic_to_csv(mean_excess(losses, parse_threshold_grid(diag_grid)));
        } else if (diag_kind == "shape-stability") {
            if (diag_grid.empty()) throw input_error("shape-stability requires --thresholds");
            csv = shape_stability_to_csv(shape_stability(losses, parse_threshold_grid(diag_grid)));
        } else {
            throw input_error("unknown diagnostic kind '" + diag_kind + "'");
        }
        if (diag_out.empty())
            std::cout << csv;
        else
            write_text(diag_out, csv);
        return kExitOk;
    }

    if (report_cmd->parsed()) {
        cmd_report(ropts);
        return kExitOk;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const potrisk::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const potrisk::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const potrisk::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
