#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "plutus/market_data.hpp"
#include "plutus/metrics.hpp"

namespace plutus::market_maker {

struct MarketMakerConfig {
    double step = 1.8;                 // points
    double inventory_coeff = 0.02;     // quote skew per contract of inventory
    double fee_points = 0.2;           // charged per contract, always adverse
    double refresh_interval = 15.0;    // seconds
    double initial_capital = 500'000'000.0;
    double point_value = 100'000.0;    // currency per point per contract
    std::optional<Timestamp> start;
    std::optional<Timestamp> end;

    void validate() const;
};

struct Quote {
    double bid = 0.0;
    double ask = 0.0;

    bool operator==(const Quote&) const = default;
};

/// bid = mid - step * (max(inventory, 0) * coeff + 1)
/// ask = mid - step * (min(inventory, 0) * coeff - 1)
/// Long inventory pushes the bid away, short inventory pushes the ask away.
Quote compute_quotes(double mid, long long inventory, double step, double inventory_coeff = 0.02);

enum class Side { Buy, Sell };
std::string_view to_string(Side side) noexcept;

struct Fill {
    Timestamp timestamp;
    Side side = Side::Buy;
    double price = 0.0;       // quote price, before fees
    double fee_points = 0.0;
    long long inventory_after = 0;

    bool operator==(const Fill&) const = default;
};

struct MMState {
    long long inventory = 0;
    double cash = 0.0;
    Timestamp last_refresh;
    std::optional<Quote> active_quote;

    bool operator==(const MMState&) const = default;
};

struct MatchResult {
    MMState state;
    std::vector<Fill> fills;
};

/// Touch fill model: price <= bid buys one contract at the bid, price >= ask sells one at the ask.
/// A single price cannot touch both sides of a quote with bid < ask, so at most one fill results.
/// A fill clears the active quote. Throws NoActiveQuote.
MatchResult match_tick(const MMState& state, const Tick& tick, double fee_points, double point_value);

struct StateSnapshot {
    Timestamp timestamp;
    long long inventory = 0;
};

struct InventorySeries {
    std::vector<Date> dates;
    std::vector<long long> inventory;

    bool operator==(const InventorySeries&) const = default;
};

/// End-of-day inventory for every UTC day that appears in `history` (which must be time-ordered).
InventorySeries daily_inventory(std::span<const StateSnapshot> history);

struct MarketMakerResult {
    NavSeries nav;
    InventorySeries inventory;
    std::vector<Fill> fills;
    MMState final_state;
    double last_price = 0.0;
};

/// Replays ticks inside [start, end]. Each tick is first matched against the resting quote; a fill
/// re-quotes immediately from that tick's price, otherwise quotes are refreshed once
/// `refresh_interval` has elapsed. NAV (cash + inventory * price * point_value) is marked at the
/// last tick of each UTC day, preceded by an opening point of initial capital dated the day
/// before the first replayed tick. Throws EmptySeries when no tick falls in the window.
MarketMakerResult run_market_maker(const MarketMakerConfig& cfg, const TickSeries& ticks);

}  // namespace plutus::market_maker
