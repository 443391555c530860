#include "plutus/market_maker.hpp"

#include <gtest/gtest.h>

#include <random>

#include "plutus/error.hpp"
#include "plutus/synthetic.hpp"

namespace plutus::market_maker {
namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected plutus::Error";
    return ErrorKind::IoError;
}

Tick tick(const char* ts, double price) { return {*parse_timestamp(ts), price}; }

TEST(Quotes, FlatInventory) {
    const auto q = compute_quotes(1000.0, 0, 1.8);
    EXPECT_DOUBLE_EQ(q.bid, 998.2);
    EXPECT_DOUBLE_EQ(q.ask, 1001.8);
}

TEST(Quotes, SkewedInventory) {
    const auto longq = compute_quotes(1000.0, 10, 1.8);
    EXPECT_NEAR(longq.bid, 997.84, 1e-9);
    EXPECT_NEAR(longq.ask, 1001.8, 1e-9);
    const auto shortq = compute_quotes(1000.0, -10, 1.8);
    EXPECT_NEAR(shortq.bid, 998.2, 1e-9);
    EXPECT_NEAR(shortq.ask, 1002.16, 1e-9);
}

TEST(Quotes, MirrorSymmetryAndMinimumSpread) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mid(100.0, 2000.0), step(0.1, 5.0), coeff(0.0, 0.1);
    for (int round = 0; round < 1000; ++round) {
        const double m = mid(rng), s = step(rng), c = coeff(rng);
        const long long inv = static_cast<long long>(rng() % 61) - 30;
        const auto q = compute_quotes(m, inv, s, c);
        const auto mirrored = compute_quotes(m, -inv, s, c);
        EXPECT_NEAR(m - q.bid, mirrored.ask - m, 1e-9 * m);
        EXPECT_NEAR(q.ask - m, m - mirrored.bid, 1e-9 * m);
        EXPECT_GE(q.ask - q.bid, 2.0 * s - 1e-9);
        EXPECT_LT(q.bid, m);
        EXPECT_GT(q.ask, m);
    }
}

TEST(Quotes, RejectsBadInputs) {
    EXPECT_EQ(kind_of([] { compute_quotes(0.0, 0, 1.8); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { compute_quotes(1000.0, 0, 0.0); }), ErrorKind::InvalidArgument);
}

TEST(MatchTick, TouchModel) {
    MMState s;
    s.active_quote = Quote{998.2, 1001.8};
    const auto none = match_tick(s, tick("2022-01-03T02:00:00Z", 1000.0), 0.2, 1.0);
    EXPECT_TRUE(none.fills.empty());
    EXPECT_EQ(none.state, s);

    const auto buy = match_tick(s, tick("2022-01-03T02:00:00Z", 998.2), 0.2, 1.0);
    ASSERT_EQ(buy.fills.size(), 1u);
    EXPECT_EQ(buy.fills[0].side, Side::Buy);
    EXPECT_DOUBLE_EQ(buy.fills[0].price, 998.2);
    EXPECT_EQ(buy.state.inventory, 1);
    EXPECT_DOUBLE_EQ(buy.state.cash, -(998.2 + 0.2));
    EXPECT_FALSE(buy.state.active_quote);

    const auto sell = match_tick(s, tick("2022-01-03T02:00:00Z", 1005.0), 0.2, 1.0);
    ASSERT_EQ(sell.fills.size(), 1u);
    EXPECT_EQ(sell.fills[0].side, Side::Sell);
    EXPECT_DOUBLE_EQ(sell.fills[0].price, 1001.8);
    EXPECT_EQ(sell.state.inventory, -1);
    EXPECT_DOUBLE_EQ(sell.state.cash, 1001.8 - 0.2);

    EXPECT_EQ(kind_of([] { match_tick(MMState{}, tick("2022-01-03", 1.0), 0.0, 1.0); }), ErrorKind::NoActiveQuote);
}

TEST(MatchTick, FeesAreAdverseOnBothSides) {
    MMState s;
    s.active_quote = Quote{997.84, 1001.8};
    const auto buy = match_tick(s, tick("2022-01-03T02:00:00Z", 997.5), 0.2, 1.0);
    EXPECT_NEAR(-buy.state.cash, 998.04, 1e-9);
    const auto sell = match_tick(s, tick("2022-01-03T02:00:00Z", 1002.0), 0.2, 1.0);
    EXPECT_NEAR(sell.state.cash, 1001.6, 1e-9);
}

TEST(RunMarketMaker, TwoFillRoundTrip) {
    MarketMakerConfig cfg;
    cfg.fee_points = 0.0;
    cfg.initial_capital = 1e6;
    cfg.point_value = 1000.0;
    TickSeries ticks{"X",
                     {tick("2022-01-03T02:00:00Z", 1000.0), tick("2022-01-03T02:00:05Z", 998.0),
                      tick("2022-01-04T02:00:00Z", 1000.0)}};
    const auto res = run_market_maker(cfg, ticks);
    ASSERT_EQ(res.fills.size(), 2u);
    EXPECT_EQ(res.fills[0].side, Side::Buy);
    EXPECT_DOUBLE_EQ(res.fills[0].price, 998.2);
    EXPECT_EQ(res.fills[1].side, Side::Sell);
    EXPECT_NEAR(res.fills[1].price, 999.8, 1e-9);
    EXPECT_EQ(res.final_state.inventory, 0);
    EXPECT_NEAR(res.final_state.cash - cfg.initial_capital, 1.6 * cfg.point_value, 1e-6);

    EXPECT_EQ(res.inventory.inventory, (std::vector<long long>{1, 0}));
    ASSERT_EQ(res.nav.nav.size(), 3u);
    EXPECT_EQ(format_date(res.nav.dates[0]), "2022-01-02");
    EXPECT_DOUBLE_EQ(res.nav.nav[0], 1e6);
    // Day one: long one contract marked at 998.
    EXPECT_NEAR(res.nav.nav[1], 1e6 + (998.0 - 998.2) * 1000.0, 1e-6);
    EXPECT_NEAR(res.nav.nav[2], 1e6 + 1.6 * 1000.0, 1e-6);
}

TEST(RunMarketMaker, ConstantPriceNeverTrades) {
    synthetic::TickStreamSpec spec{.count = 500, .ticks_per_day = 100};
    auto ticks = synthetic::random_walk_ticks(spec, 0.0);
    const auto res = run_market_maker(MarketMakerConfig{}, ticks);
    EXPECT_TRUE(res.fills.empty());
    for (double v : res.nav.nav) EXPECT_EQ(v, MarketMakerConfig{}.initial_capital);
    EXPECT_EQ(res.nav.nav.size(), 6u);
    EXPECT_EQ(res.inventory.dates.size(), 5u);
}

TEST(RunMarketMaker, RefreshIntervalGovernsRequotes) {
    MarketMakerConfig cfg;
    cfg.refresh_interval = 15.0;
    // Price drifts up in small steps; no fill until the stale ask is touched.
    TickSeries ticks{"X",
                     {tick("2022-01-03T02:00:00Z", 1000.0), tick("2022-01-03T02:00:05Z", 1001.0),
                      tick("2022-01-03T02:00:10Z", 1001.7), tick("2022-01-03T02:00:15Z", 1001.7),
                      tick("2022-01-03T02:00:20Z", 1003.0)}};
    const auto res = run_market_maker(cfg, ticks);
    // At 02:00:15 the quote refreshes around 1001.7, so 1003.0 does not reach the new ask (1003.5).
    EXPECT_TRUE(res.fills.empty());

    cfg.refresh_interval = 60.0;
    const auto stale = run_market_maker(cfg, ticks);
    ASSERT_EQ(stale.fills.size(), 1u);
    EXPECT_EQ(stale.fills[0].side, Side::Sell);
    EXPECT_DOUBLE_EQ(stale.fills[0].price, 1001.8);
}

TEST(RunMarketMaker, WindowAndValidation) {
    TickSeries ticks{"X", {tick("2022-01-03T02:00:00Z", 1000.0), tick("2022-01-05T02:00:00Z", 1000.0)}};
    MarketMakerConfig cfg;
    cfg.start = *parse_timestamp("2022-01-04T00:00:00Z");
    const auto res = run_market_maker(cfg, ticks);
    EXPECT_EQ(format_date(res.nav.dates.front()), "2022-01-04");
    cfg.start = *parse_timestamp("2023-01-01");
    EXPECT_EQ(kind_of([&] { run_market_maker(cfg, ticks); }), ErrorKind::EmptySeries);
    MarketMakerConfig bad;
    bad.step = 0.0;
    EXPECT_EQ(kind_of([&] { run_market_maker(bad, ticks); }), ErrorKind::InvalidArgument);
}

TEST(RunMarketMaker, CashAndInventoryReconcileWithFills) {
    synthetic::TickStreamSpec spec{.seed = 4, .count = 5000, .ticks_per_day = 500};
    const auto ticks = synthetic::random_walk_ticks(spec, 0.8);
    MarketMakerConfig cfg;
    const auto res = run_market_maker(cfg, ticks);
    ASSERT_FALSE(res.fills.empty());
    long long inv = 0;
    double cash = cfg.initial_capital;
    for (const auto& f : res.fills) {
        if (f.side == Side::Buy) {
            ++inv;
            cash -= (f.price + f.fee_points) * cfg.point_value;
        } else {
            --inv;
            cash += (f.price - f.fee_points) * cfg.point_value;
        }
        EXPECT_EQ(f.inventory_after, inv);
    }
    EXPECT_EQ(inv, res.final_state.inventory);
    EXPECT_NEAR(cash, res.final_state.cash, 1e-6 * cfg.initial_capital);
    EXPECT_NEAR(res.nav.nav.back(), cash + static_cast<double>(inv) * res.last_price * cfg.point_value, 1e-3);
    EXPECT_EQ(res.inventory.inventory.back(), inv);
    EXPECT_EQ(res.inventory.dates.size() + 1, res.nav.dates.size());
}

TEST(RunMarketMaker, HigherFeesNeverHelp) {
    synthetic::TickStreamSpec spec{.seed = 8, .count = 3000, .ticks_per_day = 300};
    const auto ticks = synthetic::random_walk_ticks(spec, 0.8);
    MarketMakerConfig lo, hi;
    lo.fee_points = 0.0;
    hi.fee_points = 0.5;
    const auto a = run_market_maker(lo, ticks);
    const auto b = run_market_maker(hi, ticks);
    // Fills do not depend on fees, so only the fee drag differs.
    ASSERT_EQ(a.fills.size(), b.fills.size());
    EXPECT_NEAR(a.nav.nav.back() - b.nav.nav.back(), 0.5 * hi.point_value * static_cast<double>(a.fills.size()), 1e-3);
}

TEST(DailyInventory, LastSnapshotPerDay) {
    std::vector<StateSnapshot> h{{*parse_timestamp("2022-01-03T01:00:00Z"), 1},
                                 {*parse_timestamp("2022-01-03T07:00:00Z"), 2},
                                 {*parse_timestamp("2022-01-05T01:00:00Z"), -1}};
    const auto s = daily_inventory(h);
    EXPECT_EQ(s.inventory, (std::vector<long long>{2, -1}));
    EXPECT_EQ(format_date(s.dates.back()), "2022-01-05");
    EXPECT_TRUE(daily_inventory({}).dates.empty());
}

}  // namespace
}  // namespace plutus::market_maker
