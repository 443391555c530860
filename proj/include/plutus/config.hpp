#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "plutus/market_maker.hpp"
#include "plutus/smart_beta.hpp"

namespace plutus {

struct DataPaths {
    std::filesystem::path ticks;
    std::string instrument = "VN30F1M";
    std::filesystem::path fundamentals;
    std::filesystem::path benchmark;
    std::filesystem::path nav;
};

struct MetricsSettings {
    double rf_annual = 0.06;
    int periods_per_year = 252;
    bool annualize_information_ratio = false;
};

struct OptimizerSettings {
    std::uint64_t seed = 2025;
    std::size_t n_trials = 100;
    unsigned threads = 1;
    /// Diversification constraint: every rebalance must qualify at least this many stocks.
    std::size_t min_qualified = 5;

    // Smart Beta search box.
    double pe_min_lower = -5.0;
    double pe_min_upper = 10.0;
    double pe_max_lower = 10.0;
    double pe_max_upper = 40.0;
    double dy_min_lower = 0.0;
    double dy_min_upper = 0.05;
    double dy_max_lower = 0.05;
    double dy_cap = 1.0;  // finite stand-in for an unbounded dividend-yield ceiling

    // Market Maker search box.
    double step_lower = 0.5;
    double step_upper = 5.0;
};

/// Everything one run needs. Loaded from flat `module.key = value` text; see load_config().
struct RunConfig {
    DataPaths data;

    smart_beta::SmartBetaConfig smart_beta;
    std::optional<Date> smart_beta_start;  // default: first month-end in the data
    std::optional<Date> smart_beta_end;    // default: last month-end in the data
    int smart_beta_periods_per_year = 12;

    market_maker::MarketMakerConfig market_maker;
    int market_maker_periods_per_year = 252;

    MetricsSettings metrics;
    OptimizerSettings optimizer;

    /// `key = value` for every known key except optimizer.threads, in sorted order, with defaults
    /// filled in and numbers in shortest round-trip form. Data paths appear as written in the file.
    std::string canonical_text() const;

private:
    friend RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
    std::map<std::string, std::string> raw_paths_;
};

/// Parses config text. Relative data paths are resolved against `base_dir`.
/// Throws ParseError (malformed or repeated line), UnknownKey, InvalidValue.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads and parses a config file; relative data paths resolve against the file's directory.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace plutus
