#include "plutus/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "plutus/error.hpp"

namespace plutus {
namespace {

// Hand-computed / scripted reference values (Python statistics module, sample stdev).
constexpr double kSharpeOracle = 1.161895003862225;    // [0.02, 0, 0.01, 0.03], rf 0, 1 period/yr
constexpr double kSortinoOracle = 0.8660254037844386;  // [0.04, -0.02, 0.01], rf 0, 1 period/yr
constexpr double kSharpeRfOracle = 0.022255956658907783;   // [0.02,-0.01,0.03,0.005,-0.02], rf 6%, monthly
constexpr double kSortinoRfOracle = 0.03541042416362931;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected plutus::Error";
    return ErrorKind::IoError;
}

NavSeries make_nav(std::vector<double> values) {
    NavSeries nav;
    Date d = *parse_date("2022-01-31");
    for (double v : values) {
        nav.dates.push_back(d);
        nav.nav.push_back(v);
        d += std::chrono::days{1};
    }
    return nav;
}

double brute_force_mdd(const std::vector<double>& nav) {
    double worst = 0.0;
    for (std::size_t i = 0; i < nav.size(); ++i) {
        for (std::size_t j = i; j < nav.size(); ++j) worst = std::min(worst, nav[j] / nav[i] - 1.0);
    }
    return worst;
}

void expect_rel(double actual, double expected, double tol = 1e-9) {
    EXPECT_LE(std::abs(actual - expected), tol * std::max(1.0, std::abs(expected))) << actual << " vs " << expected;
}

TEST(ToReturns, Definition) {
    const auto r = to_returns(make_nav({100, 110}));
    ASSERT_EQ(r.returns.size(), 1u);
    expect_rel(r.returns[0], 0.10);
    EXPECT_EQ(r.dates.front(), make_nav({100, 110}).dates.back());

    const auto flat = to_returns(make_nav({100, 100, 100}));
    EXPECT_EQ(flat.returns, (std::vector<double>{0.0, 0.0}));

    EXPECT_EQ(kind_of([] { to_returns(make_nav({100})); }), ErrorKind::SeriesTooShort);
}

TEST(PeriodicRate, Geometric) {
    expect_rel(periodic_rate(0.06, 12), std::pow(1.06, 1.0 / 12.0) - 1.0);
    EXPECT_EQ(periodic_rate(0.0, 252), 0.0);
    EXPECT_EQ(kind_of([] { periodic_rate(0.06, 0); }), ErrorKind::InvalidArgument);
}

TEST(Sharpe, Examples) {
    EXPECT_EQ(sharpe_ratio(std::vector<double>{0.01, -0.01}, 0.0, 1), 0.0);
    expect_rel(sharpe_ratio(std::vector<double>{0.02, 0.00, 0.01, 0.03}, 0.0, 1), kSharpeOracle);
    EXPECT_EQ(kind_of([] { sharpe_ratio(std::vector<double>{0.01, 0.01}, 0.0, 1); }), ErrorKind::ZeroVolatility);
    EXPECT_EQ(kind_of([] { sharpe_ratio(std::vector<double>{0.01}, 0.0, 1); }), ErrorKind::SeriesTooShort);
}

TEST(Sharpe, RiskFreeAndAnnualization) {
    expect_rel(sharpe_ratio(std::vector<double>{0.02, -0.01, 0.03, 0.005, -0.02}, 0.06, 12), kSharpeRfOracle);
}

TEST(Sortino, Examples) {
    EXPECT_EQ(kind_of([] { sortino_ratio(std::vector<double>{0.01, 0.02}, 0.0, 1); }), ErrorKind::ZeroDownside);
    EXPECT_EQ(sortino_ratio(std::vector<double>{0.01, -0.01}, 0.0, 1), 0.0);
    EXPECT_EQ(sortino_ratio(std::vector<double>{0.02, -0.02}, 0.0, 1), 0.0);
    expect_rel(sortino_ratio(std::vector<double>{0.04, -0.02, 0.01}, 0.0, 1), kSortinoOracle);
    expect_rel(sortino_ratio(std::vector<double>{0.02, -0.01, 0.03, 0.005, -0.02}, 0.06, 12), kSortinoRfOracle);
}

TEST(Sortino, OnlyNegativeExcessEntersDownside) {
    // Adding a big positive return changes the mean and the period count but not the sum of
    // squared negatives: recover that sum from the ratio and compare.
    const std::vector<double> base{0.03, -0.02, 0.01, -0.005};
    auto extended = base;
    extended.push_back(0.5);
    auto downside_ss = [](const std::vector<double>& r) {
        double mean = 0.0;
        for (double x : r) mean += x;
        mean /= static_cast<double>(r.size());
        const double s = sortino_ratio(r, 0.0, 1);
        const double dd = mean / s;
        return dd * dd * static_cast<double>(r.size());
    };
    expect_rel(downside_ss(base), downside_ss(extended), 1e-12);
}

TEST(InformationRatio, Examples) {
    const std::vector<double> b{0.01, 0.02};
    EXPECT_EQ(kind_of([&] { information_ratio(b, b); }), ErrorKind::ZeroTrackingError);
    EXPECT_EQ(information_ratio(std::vector<double>{0.01, -0.01}, std::vector<double>{0.0, 0.0}), 0.0);
    expect_rel(information_ratio(std::vector<double>{0.02, 0.00, 0.01, 0.03}, std::vector<double>{0, 0, 0, 0}),
               kSharpeOracle);
    // Active returns are what matter, not the raw series.
    expect_rel(information_ratio(std::vector<double>{0.03, 0.01, 0.02, 0.04}, std::vector<double>{0.01, 0.01, 0.01, 0.01}),
               kSharpeOracle);
    expect_rel(information_ratio(std::vector<double>{0.02, 0.00, 0.01, 0.03}, std::vector<double>{0, 0, 0, 0}, 12),
               kSharpeOracle * std::sqrt(12.0));
    EXPECT_EQ(kind_of([] { information_ratio(std::vector<double>{0.01, 0.02}, std::vector<double>{0.01}); }),
              ErrorKind::LengthMismatch);
}

TEST(MaxDrawdown, Examples) {
    EXPECT_EQ(max_drawdown(std::vector<double>{100, 110, 120}), 0.0);
    EXPECT_DOUBLE_EQ(max_drawdown(std::vector<double>{100, 120, 90, 110}), -0.25);
    EXPECT_EQ(max_drawdown(std::vector<double>{100}), 0.0);
    EXPECT_EQ(kind_of([] { max_drawdown(std::vector<double>{}); }), ErrorKind::InvalidArgument);
}

TEST(MaxDrawdown, MatchesBruteForceAndIsMonotoneUnderExtension) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> step(-0.2, 0.2);
    for (int round = 0; round < 2000; ++round) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<double> nav{100.0};
        while (nav.size() < n) nav.push_back(nav.back() * (1.0 + step(rng)));
        const double full = max_drawdown(nav);
        EXPECT_EQ(full, brute_force_mdd(nav));
        EXPECT_GE(full, -1.0);
        EXPECT_LE(full, 0.0);
        for (std::size_t k = 1; k <= nav.size(); ++k) {
            EXPECT_GE(max_drawdown(std::span<const double>(nav.data(), k)), full);
        }
    }
}

TEST(Metrics, ScaleInvarianceAndSharpeSign) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> ret(0.001, 0.02);
    for (int round = 0; round < 200; ++round) {
        std::vector<double> nav{1000.0};
        for (int i = 0; i < 30; ++i) nav.push_back(nav.back() * (1.0 + ret(rng)));
        auto scaled = nav;
        for (auto& v : scaled) v *= 37.5;
        const auto r = to_returns(make_nav(nav));
        const auto rs = to_returns(make_nav(scaled));
        expect_rel(sharpe_ratio(r, 0.06, 252), sharpe_ratio(rs, 0.06, 252), 1e-9);
        expect_rel(sortino_ratio(r, 0.06, 252), sortino_ratio(rs, 0.06, 252), 1e-9);
        expect_rel(max_drawdown(nav), max_drawdown(scaled), 1e-12);

        const double rf = periodic_rate(0.06, 252);
        double mean_excess = 0.0;
        for (double x : r.returns) mean_excess += x - rf;
        EXPECT_EQ(sharpe_ratio(r, 0.06, 252) > 0.0, mean_excess > 0.0);
    }
}

TEST(ComputeReport, MarketMakerStyleHasNoInformationRatio) {
    const auto report = compute_report(make_nav({100, 101, 99, 102, 103}), nullptr, {0.06, 252, false});
    EXPECT_TRUE(report.sharpe.defined());
    EXPECT_TRUE(report.sortino.defined());
    EXPECT_FALSE(report.information_ratio.has_value());
    EXPECT_DOUBLE_EQ(report.max_drawdown, 99.0 / 101.0 - 1.0);
    const auto text = to_key_value(report);
    EXPECT_EQ(text.find("information_ratio"), std::string::npos);
    EXPECT_NE(text.find("sharpe = "), std::string::npos);
}

TEST(ComputeReport, FlatNavFlagsUndefined) {
    const auto report = compute_report(make_nav({100, 100, 100}), nullptr, {0.0, 12, false});
    EXPECT_EQ(report.max_drawdown, 0.0);
    EXPECT_FALSE(report.sharpe.defined());
    EXPECT_EQ(report.sharpe.undefined_reason, "ZeroVolatility");
    EXPECT_FALSE(report.sortino.defined());
    EXPECT_EQ(report.sortino.undefined_reason, "ZeroDownside");
    EXPECT_NE(to_key_value(report).find("sharpe = undefined"), std::string::npos);
}

TEST(ComputeReport, SingleNavPointStillReports) {
    const auto report = compute_report(make_nav({100}), nullptr, {0.06, 12, false});
    EXPECT_EQ(report.sharpe.undefined_reason, "SeriesTooShort");
    EXPECT_EQ(report.max_drawdown, 0.0);
}

TEST(ComputeReport, WithBenchmarkAllFourPopulated) {
    const auto nav = make_nav({100, 103, 101, 106, 104, 108});
    BenchmarkSeries bench;
    bench.dates = nav.dates;
    bench.levels = {1000, 1010, 1015, 1030, 1020, 1040};
    const auto report = compute_report(nav, &bench, {0.06, 12, false});
    ASSERT_TRUE(report.information_ratio.has_value());
    EXPECT_TRUE(report.information_ratio->defined());
    EXPECT_TRUE(report.sharpe.defined());
    EXPECT_TRUE(report.sortino.defined());

    std::vector<double> r, b;
    for (std::size_t i = 1; i < nav.nav.size(); ++i) {
        r.push_back(nav.nav[i] / nav.nav[i - 1] - 1.0);
        b.push_back(bench.levels[i] / bench.levels[i - 1] - 1.0);
    }
    EXPECT_DOUBLE_EQ(*report.information_ratio->value, information_ratio(r, b));
    EXPECT_NE(to_csv_row(report).find(','), std::string::npos);
}

TEST(ComputeReport, BenchmarkStartingAfterNavIsMismatch) {
    const auto nav = make_nav({100, 103});
    BenchmarkSeries bench{{nav.dates.back()}, {1000.0}};
    EXPECT_EQ(kind_of([&] { compute_report(nav, &bench, {}); }), ErrorKind::LengthMismatch);
}

}  // namespace
}  // namespace plutus
