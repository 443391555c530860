#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plutus/market_data.hpp"
#include "plutus/metrics.hpp"

namespace plutus::smart_beta {

/// Eligibility window for the month-end value screen. All comparisons are strict:
/// pe_min < P/E < pe_max and dy_min < DY (< dy_max when an upper bound is set).
struct ScreenBounds {
    double pe_min = 0.0;
    double pe_max = 15.0;
    double dy_min = 0.01;
    std::optional<double> dy_max;  // absent = unbounded

    /// Throws InvalidArgument unless pe_min < pe_max, dy_min >= 0 and dy_min < dy_max.
    void validate() const;
    bool admits(const FundamentalRow& row) const;
};

struct SmartBetaConfig {
    ScreenBounds bounds;
    double fee_rate = 0.00035;
    double rf_annual = 0.06;
    double initial_capital = 1'000'000'000.0;
    Date start_date;
    Date end_date;
    /// Mark a held ticker that has no row this month at its last known price instead of failing.
    bool carry_missing_prices = false;

    void validate() const;
};

using PriceMap = std::map<std::string, double>;

/// Long-only book with fractional shares.
struct Portfolio {
    double cash = 0.0;
    std::map<std::string, double> holdings;

    bool operator==(const Portfolio&) const = default;
};

/// Market value of cash plus holdings. Throws MissingPrice if a held ticker is unpriced.
double mark_to_market(const Portfolio& p, const PriceMap& prices);

/// Qualified tickers for `month`, sorted lexicographically. Throws UnknownMonth.
std::vector<std::string> screen_universe(const FundamentalTable& table, Date month, const ScreenBounds& bounds);

/// Sells everything: cash += sum(qty * price * (1 - fee_rate)). Throws MissingPrice.
Portfolio liquidate(const Portfolio& p, const PriceMap& prices, double fee_rate);

/// Splits `cash` equally: each ticker receives gross spend g = cash / (n * (1 + fee_rate)), so
/// g * fee_rate goes to fees and g buys shares. An empty ticker list leaves everything in cash.
Portfolio allocate_equal(double cash, const std::vector<std::string>& tickers, const PriceMap& prices,
                         double fee_rate);

struct RebalanceRecord {
    Date date;
    double nav_before = 0.0;  // marked before trading
    double nav_after = 0.0;   // marked at the same prices after trading
    double fees = 0.0;        // sell fees + buy fees, computed from traded notional
    std::vector<std::string> qualified;
    Portfolio portfolio;      // book after the rebalance
};

struct SmartBetaResult {
    NavSeries nav;
    std::vector<RebalanceRecord> rebalances;
    /// Smallest qualified-set size over the rebalances (0 when there were none).
    std::size_t min_qualified = 0;
};

/// Month-end loop over the configured window. The NAV series starts with initial capital on
/// start_date and has one mark per month-end in the window, taken before that month's trades.
/// The last month-end in the window is marked but not traded.
SmartBetaResult run_smart_beta_detailed(const SmartBetaConfig& cfg, const FundamentalTable& table);

inline NavSeries run_smart_beta(const SmartBetaConfig& cfg, const FundamentalTable& table) {
    return run_smart_beta_detailed(cfg, table).nav;
}

}  // namespace plutus::smart_beta
