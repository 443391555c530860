#include "plutus/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "plutus/text.hpp"

namespace plutus::synthetic {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

template <typename NextPrice>
TickSeries generate(const TickStreamSpec& spec, NextPrice&& next) {
    TickSeries series{"SYNTH", {}};
    series.ticks.reserve(spec.count);
    const auto spacing = std::chrono::duration_cast<Timestamp::duration>(std::chrono::duration<double>(spec.spacing_seconds));
    Timestamp t = spec.start;
    double x = spec.start_price;
    for (std::size_t i = 0; i < spec.count; ++i) {
        if (i > 0) {
            x = next(i, x);
            if (spec.ticks_per_day > 0 && i % spec.ticks_per_day == 0) {
                t = Timestamp{day_of(t) + std::chrono::days{1}} + (spec.start - Timestamp{day_of(spec.start)});
            } else {
                t += spacing;
            }
        }
        double price = x;
        if (spec.tick_size > 0.0) price = std::round(price / spec.tick_size) * spec.tick_size;
        price = std::max(price, spec.tick_size > 0.0 ? spec.tick_size : 1e-9);
        series.ticks.push_back({t, price});
    }
    return series;
}

}  // namespace

TickSeries random_walk_ticks(const TickStreamSpec& spec, double sigma) {
    Rng rng(spec.seed);
    return generate(spec, [&](std::size_t, double x) { return x + sigma * rng.normal(); });
}

TickSeries mean_reverting_ticks(const TickStreamSpec& spec, double mean, double theta, double sigma) {
    Rng rng(spec.seed);
    return generate(spec, [&](std::size_t, double x) { return x + theta * (mean - x) + sigma * rng.normal(); });
}

TickSeries regime_switch_ticks(const TickStreamSpec& spec, double drift, double sigma) {
    Rng rng(spec.seed);
    const std::size_t half = spec.count / 2;
    return generate(spec, [&](std::size_t i, double x) { return x + (i < half ? drift : -drift) + sigma * rng.normal(); });
}

FundamentalTable synthetic_fundamentals(const FundamentalsSpec& spec) {
    Rng rng(spec.seed);
    std::vector<double> log_price(spec.tickers);
    for (auto& lp : log_price) lp = std::log(10.0 + 90.0 * rng.uniform());

    std::vector<FundamentalRow> rows;
    Date month = spec.first_month;
    for (std::size_t m = 0; m < spec.months; ++m) {
        const bool blackout =
            std::find(spec.blackout_months.begin(), spec.blackout_months.end(), m) != spec.blackout_months.end();
        const double drift = (spec.reversal_month > 0 && m >= spec.reversal_month) ? -spec.monthly_drift : spec.monthly_drift;
        for (std::size_t k = 0; k < spec.tickers; ++k) {
            if (m > 0) log_price[k] += drift + spec.monthly_vol * rng.normal();
            const double pe = -5.0 + 35.0 * rng.uniform();
            const double dy = 0.06 * rng.uniform();
            const double gap = rng.uniform();
            FundamentalRow row;
            row.ticker = "T" + std::string(k < 10 ? "0" : "") + std::to_string(k);
            row.as_of = month;
            row.price = std::exp(log_price[k]);
            row.pe_ratio = blackout ? 50.0 : pe;
            row.dividend_yield = dy;
            if (gap < 0.03) row.pe_ratio.reset();
            rows.push_back(std::move(row));
        }
        const std::chrono::year_month_day ymd{month + std::chrono::days{1}};
        month = Date{ymd.year() / ymd.month() / std::chrono::last};
    }
    return FundamentalTable::from_rows(std::move(rows));
}

BenchmarkSeries synthetic_benchmark(const FundamentalsSpec& spec, double start_level) {
    Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    BenchmarkSeries series;
    Date month = spec.first_month;
    double level = start_level;
    for (std::size_t m = 0; m < spec.months; ++m) {
        const double drift = (spec.reversal_month > 0 && m >= spec.reversal_month) ? -spec.monthly_drift : spec.monthly_drift;
        if (m > 0) level *= std::exp(drift + 0.04 * rng.normal());
        series.dates.push_back(month);
        series.levels.push_back(level);
        const std::chrono::year_month_day ymd{month + std::chrono::days{1}};
        month = Date{ymd.year() / ymd.month() / std::chrono::last};
    }
    return series;
}

void write_sample_dataset(const std::filesystem::path& dir, std::uint64_t seed) {
    std::filesystem::create_directories(dir);
    FundamentalsSpec fspec;
    fspec.seed = seed;
    fspec.tickers = 30;
    fspec.months = 36;
    write_file_atomic(dir / "fundamentals.csv", to_csv(synthetic_fundamentals(fspec)));
    write_file_atomic(dir / "benchmark.csv", to_csv(synthetic_benchmark(fspec)));

    TickStreamSpec tspec;
    tspec.seed = seed;
    tspec.count = 6000;
    tspec.ticks_per_day = 600;
    tspec.start = Timestamp{std::chrono::seconds{1'641'171'600}};  // 2022-01-03T01:00:00Z
    auto ticks = mean_reverting_ticks(tspec, 1000.0, 0.01, 0.8);
    ticks.instrument = "VN30F1M";
    write_file_atomic(dir / "ticks.csv", to_csv(ticks));

    Rng rng(seed + 1);
    std::string nav = "date,nav\n";
    Date d = Date{std::chrono::year{2022} / std::chrono::January / 3};
    double v = 1e9;
    for (int i = 0; i < 250; ++i, d += std::chrono::days{1}) {
        nav += format_date(d) + "," + format_double(v) + "\n";
        v *= 1.0 + 0.0004 + 0.01 * rng.normal();
    }
    write_file_atomic(dir / "nav.csv", nav);

    write_file_atomic(dir / "plutus.cfg",
                      "# Sample run configuration. Paths are relative to this file.\n"
                      "data.fundamentals = fundamentals.csv\n"
                      "data.benchmark = benchmark.csv\n"
                      "data.ticks = ticks.csv\n"
                      "data.nav = nav.csv\n"
                      "optimizer.seed = 2025\n"
                      "optimizer.n_trials = 30\n");
}

}  // namespace plutus::synthetic
