#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "plutus/market_data.hpp"

namespace plutus::synthetic {

/// Seeded stream of uniforms and normals. Uses only the standard-specified engine plus explicit
/// conversions, so the same seed yields the same numbers on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct TickStreamSpec {
    std::uint64_t seed = 1;
    std::size_t count = 10'000;
    double start_price = 1000.0;
    Timestamp start = Timestamp{std::chrono::seconds{1'640'995'200}};  // 2022-01-01T00:00:00Z
    double spacing_seconds = 5.0;
    double tick_size = 0.1;         // prices are rounded to this grid; 0 disables rounding
    std::size_t ticks_per_day = 0;  // > 0 jumps to the next UTC day after this many ticks
};

/// Gaussian random walk with per-tick standard deviation `sigma` points.
TickSeries random_walk_ticks(const TickStreamSpec& spec, double sigma);

/// Discrete Ornstein-Uhlenbeck: x += theta * (mean - x) + sigma * z.
TickSeries mean_reverting_ticks(const TickStreamSpec& spec, double mean, double theta, double sigma);

/// Random walk whose drift switches sign halfway through: +drift first, -drift after.
TickSeries regime_switch_ticks(const TickStreamSpec& spec, double drift, double sigma);

struct FundamentalsSpec {
    std::uint64_t seed = 7;
    std::size_t tickers = 20;
    std::size_t months = 24;
    Date first_month = Date{std::chrono::year{2019} / std::chrono::January / std::chrono::last};
    double monthly_drift = 0.01;      // applied to every ticker's log price
    double monthly_vol = 0.06;
    /// When set, drift flips to -monthly_drift from this month index on.
    std::size_t reversal_month = 0;
    /// Months (by index) in which no stock passes the default screen.
    std::vector<std::size_t> blackout_months;
};

/// Month-end fundamentals: roughly half the universe passes the default value screen each month.
FundamentalTable synthetic_fundamentals(const FundamentalsSpec& spec);

/// Benchmark sampled at the same month-ends, following the same regime as the fundamentals.
BenchmarkSeries synthetic_benchmark(const FundamentalsSpec& spec, double start_level = 1000.0);

/// Writes a small self-consistent dataset into `dir`: fundamentals.csv, benchmark.csv, ticks.csv,
/// nav.csv and a plutus.cfg pointing at them. Creates `dir` if needed.
void write_sample_dataset(const std::filesystem::path& dir, std::uint64_t seed = 1);

}  // namespace plutus::synthetic
