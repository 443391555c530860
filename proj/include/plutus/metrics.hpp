#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plutus/market_data.hpp"
#include "plutus/time_util.hpp"

namespace plutus {

struct NavSeries {
    std::vector<Date> dates;
    std::vector<double> nav;

    std::size_t size() const noexcept { return nav.size(); }
    bool operator==(const NavSeries&) const = default;
};

/// returns[i] = nav[i+1]/nav[i] - 1, dated at the end of the period (dates[i] == nav.dates[i+1]).
struct ReturnSeries {
    std::vector<Date> dates;
    std::vector<double> returns;
};

/// Throws SeriesTooShort for fewer than two points and InvalidArgument for non-positive NAV.
ReturnSeries to_returns(const NavSeries& nav);

/// Per-period equivalent of an annual rate under compounding: (1 + rf)^(1/n) - 1.
double periodic_rate(double rf_annual, int periods_per_year);

/// Annualized mean excess return over the sample (n-1) standard deviation of excess returns.
/// Throws SeriesTooShort (< 2 returns) or ZeroVolatility.
double sharpe_ratio(std::span<const double> returns, double rf_annual, int periods_per_year);

/// Annualized mean excess return over the downside deviation sqrt(mean(min(excess, 0)^2)),
/// where the mean runs over every period. Throws SeriesTooShort or ZeroDownside.
double sortino_ratio(std::span<const double> returns, double rf_annual, int periods_per_year);

/// mean(active) / stdev_sample(active), active = r - b. Per-period unless `annualize_periods` is set,
/// in which case the ratio is scaled by sqrt(periods). Throws LengthMismatch, SeriesTooShort,
/// ZeroTrackingError.
double information_ratio(std::span<const double> returns, std::span<const double> benchmark,
                         std::optional<int> annualize_periods = std::nullopt);

/// min_t(nav[t] / max(nav[0..t]) - 1), in [-1, 0]. Throws InvalidArgument on empty input.
double max_drawdown(std::span<const double> nav);

inline double sharpe_ratio(const ReturnSeries& r, double rf_annual, int periods_per_year) {
    return sharpe_ratio(r.returns, rf_annual, periods_per_year);
}
inline double sortino_ratio(const ReturnSeries& r, double rf_annual, int periods_per_year) {
    return sortino_ratio(r.returns, rf_annual, periods_per_year);
}
inline double max_drawdown(const NavSeries& nav) { return max_drawdown(nav.nav); }

/// A metric that is either a finite value or flagged undefined with the reason.
struct MetricValue {
    std::optional<double> value;
    std::string undefined_reason;

    bool defined() const noexcept { return value.has_value(); }
};

struct MetricsReport {
    MetricValue sharpe;
    MetricValue sortino;
    std::optional<MetricValue> information_ratio;  // absent without a benchmark
    double max_drawdown = 0.0;
    Date period_start;
    Date period_end;
    int periods_per_year = 0;
    double rf_annual = 0.0;
    bool information_ratio_annualized = false;
};

struct ReportOptions {
    double rf_annual = 0.06;
    int periods_per_year = 252;
    bool annualize_information_ratio = false;
};

/// Builds the full report. The benchmark is sampled at each NAV date (latest level on or before it);
/// a NAV date earlier than the first benchmark level is a LengthMismatch.
/// Zero-volatility style failures are flagged in the report instead of thrown.
MetricsReport compute_report(const NavSeries& nav, const BenchmarkSeries* benchmark, const ReportOptions& options);

/// Flat `key = value` block; undefined metrics print as `undefined`, an absent IR is omitted.
std::string to_key_value(const MetricsReport& report);
std::string metrics_csv_header();
std::string to_csv_row(const MetricsReport& report);

}  // namespace plutus
