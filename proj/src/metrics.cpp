#include "plutus/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus {

namespace {

double mean_of(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_stdev(std::span<const double> xs, double mean) {
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::vector<double> excess_returns(std::span<const double> returns, double rf_annual, int periods_per_year) {
    const double rf = periodic_rate(rf_annual, periods_per_year);
    std::vector<double> excess(returns.begin(), returns.end());
    for (auto& x : excess) x -= rf;
    return excess;
}

void require_length(std::span<const double> xs, std::string_view what) {
    if (xs.size() < 2) {
        throw Error(ErrorKind::SeriesTooShort,
                    std::string(what) + " needs at least 2 returns, got " + std::to_string(xs.size()));
    }
}

template <typename F>
MetricValue capture(F&& compute) {
    try {
        const double v = compute();
        if (!std::isfinite(v)) return {std::nullopt, "NonFinite"};
        return {v, {}};
    } catch (const Error& e) {
        return {std::nullopt, std::string(to_string(e.kind()))};
    }
}

std::string value_text(const MetricValue& m) { return m.value ? format_double(*m.value) : "undefined"; }

}  // namespace

ReturnSeries to_returns(const NavSeries& nav) {
    if (nav.nav.size() != nav.dates.size()) {
        throw Error(ErrorKind::LengthMismatch, "NAV dates and values differ in length");
    }
    if (nav.nav.size() < 2) throw Error(ErrorKind::SeriesTooShort, "NAV needs at least 2 points");
    ReturnSeries r;
    r.dates.assign(nav.dates.begin() + 1, nav.dates.end());
    r.returns.reserve(nav.nav.size() - 1);
    for (std::size_t i = 0; i + 1 < nav.nav.size(); ++i) {
        if (!(nav.nav[i] > 0.0) || !(nav.nav[i + 1] > 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "NAV must be strictly positive");
        }
        r.returns.push_back(nav.nav[i + 1] / nav.nav[i] - 1.0);
    }
    return r;
}

double periodic_rate(double rf_annual, int periods_per_year) {
    if (periods_per_year <= 0) throw Error(ErrorKind::InvalidArgument, "periods_per_year must be > 0");
    return std::pow(1.0 + rf_annual, 1.0 / periods_per_year) - 1.0;
}

double sharpe_ratio(std::span<const double> returns, double rf_annual, int periods_per_year) {
    require_length(returns, "sharpe");
    const auto excess = excess_returns(returns, rf_annual, periods_per_year);
    const double mean = mean_of(excess);
    const double sd = sample_stdev(excess, mean);
    if (sd == 0.0) throw Error(ErrorKind::ZeroVolatility, "excess returns have zero variance");
    return mean / sd * std::sqrt(static_cast<double>(periods_per_year));
}

double sortino_ratio(std::span<const double> returns, double rf_annual, int periods_per_year) {
    require_length(returns, "sortino");
    const auto excess = excess_returns(returns, rf_annual, periods_per_year);
    double downside_ss = 0.0;
    for (double x : excess) {
        if (x < 0.0) downside_ss += x * x;
    }
    if (downside_ss == 0.0) throw Error(ErrorKind::ZeroDownside, "no return below the risk-free rate");
    const double dd = std::sqrt(downside_ss / static_cast<double>(excess.size()));
    return mean_of(excess) / dd * std::sqrt(static_cast<double>(periods_per_year));
}

double information_ratio(std::span<const double> returns, std::span<const double> benchmark,
                         std::optional<int> annualize_periods) {
    if (returns.size() != benchmark.size()) {
        throw Error(ErrorKind::LengthMismatch, "strategy has " + std::to_string(returns.size()) +
                                                   " returns, benchmark " + std::to_string(benchmark.size()));
    }
    require_length(returns, "information ratio");
    std::vector<double> active(returns.size());
    for (std::size_t i = 0; i < returns.size(); ++i) active[i] = returns[i] - benchmark[i];
    const double mean = mean_of(active);
    const double te = sample_stdev(active, mean);
    if (te == 0.0) throw Error(ErrorKind::ZeroTrackingError, "active returns have zero variance");
    double ir = mean / te;
    if (annualize_periods) {
        if (*annualize_periods <= 0) throw Error(ErrorKind::InvalidArgument, "periods_per_year must be > 0");
        ir *= std::sqrt(static_cast<double>(*annualize_periods));
    }
    return ir;
}

double max_drawdown(std::span<const double> nav) {
    if (nav.empty()) throw Error(ErrorKind::InvalidArgument, "max drawdown of an empty series");
    double peak = nav.front();
    double worst = 0.0;
    for (double v : nav) {
        peak = std::max(peak, v);
        worst = std::min(worst, v / peak - 1.0);
    }
    return worst;
}

MetricsReport compute_report(const NavSeries& nav, const BenchmarkSeries* benchmark, const ReportOptions& options) {
    if (nav.nav.empty() || nav.nav.size() != nav.dates.size()) {
        throw Error(ErrorKind::LengthMismatch, "NAV series is empty or misaligned");
    }
    MetricsReport report;
    report.period_start = nav.dates.front();
    report.period_end = nav.dates.back();
    report.periods_per_year = options.periods_per_year;
    report.rf_annual = options.rf_annual;
    report.max_drawdown = max_drawdown(nav.nav);

    std::vector<double> returns;
    if (nav.size() >= 2) returns = to_returns(nav).returns;
    report.sharpe = capture([&] { return sharpe_ratio(returns, options.rf_annual, options.periods_per_year); });
    report.sortino = capture([&] { return sortino_ratio(returns, options.rf_annual, options.periods_per_year); });

    if (benchmark != nullptr) {
        std::vector<double> levels;
        levels.reserve(nav.size());
        for (const auto d : nav.dates) {
            const auto level = benchmark->level_as_of(d);
            if (!level) throw Error(ErrorKind::LengthMismatch, "benchmark has no level on or before " + format_date(d));
            levels.push_back(*level);
        }
        std::vector<double> bench_returns;
        for (std::size_t i = 0; i + 1 < levels.size(); ++i) bench_returns.push_back(levels[i + 1] / levels[i] - 1.0);
        report.information_ratio_annualized = options.annualize_information_ratio;
        report.information_ratio = capture([&] {
            return information_ratio(returns, bench_returns,
                                     options.annualize_information_ratio
                                         ? std::optional<int>(options.periods_per_year)
                                         : std::nullopt);
        });
    }
    return report;
}

std::string to_key_value(const MetricsReport& report) {
    std::string out;
    out += "period_start = " + format_date(report.period_start) + "\n";
    out += "period_end = " + format_date(report.period_end) + "\n";
    out += "periods_per_year = " + std::to_string(report.periods_per_year) + "\n";
    out += "rf_annual = " + format_double(report.rf_annual) + "\n";
    out += "sharpe = " + value_text(report.sharpe) + "\n";
    if (!report.sharpe.defined()) out += "sharpe_reason = " + report.sharpe.undefined_reason + "\n";
    out += "sortino = " + value_text(report.sortino) + "\n";
    if (!report.sortino.defined()) out += "sortino_reason = " + report.sortino.undefined_reason + "\n";
    if (report.information_ratio) {
        out += "information_ratio = " + value_text(*report.information_ratio) + "\n";
        if (!report.information_ratio->defined()) {
            out += "information_ratio_reason = " + report.information_ratio->undefined_reason + "\n";
        }
        out += std::string("information_ratio_annualized = ") +
               (report.information_ratio_annualized ? "true" : "false") + "\n";
    }
    out += "max_drawdown = " + format_double(report.max_drawdown) + "\n";
    return out;
}

std::string metrics_csv_header() {
    return "period_start,period_end,sharpe,sortino,information_ratio,max_drawdown\n";
}

std::string to_csv_row(const MetricsReport& report) {
    return format_date(report.period_start) + "," + format_date(report.period_end) + "," + value_text(report.sharpe) +
           "," + value_text(report.sortino) + "," +
           (report.information_ratio ? value_text(*report.information_ratio) : std::string()) + "," +
           format_double(report.max_drawdown) + "\n";
}

}  // namespace plutus
