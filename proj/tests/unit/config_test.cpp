#include "plutus/config.hpp"

#include <gtest/gtest.h>

#include "plutus/error.hpp"
#include "test_util.hpp"

namespace plutus {
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

TEST(ParseConfig, DefaultsWhenEmpty) {
    const auto c = parse_config("");
    EXPECT_DOUBLE_EQ(c.smart_beta.bounds.pe_max, 15.0);
    EXPECT_DOUBLE_EQ(c.smart_beta.bounds.dy_min, 0.01);
    EXPECT_FALSE(c.smart_beta.bounds.dy_max);
    EXPECT_DOUBLE_EQ(c.smart_beta.fee_rate, 0.00035);
    EXPECT_DOUBLE_EQ(c.market_maker.step, 1.8);
    EXPECT_DOUBLE_EQ(c.market_maker.fee_points, 0.2);
    EXPECT_DOUBLE_EQ(c.market_maker.refresh_interval, 15.0);
    EXPECT_DOUBLE_EQ(c.metrics.rf_annual, 0.06);
    EXPECT_EQ(c.optimizer.seed, 2025u);
    EXPECT_EQ(c.data.instrument, "VN30F1M");
}

TEST(ParseConfig, ValuesCommentsAndPaths) {
    const auto c = parse_config(
        "# a comment\n"
        "smart_beta.pe_max = 20   # trailing\n"
        "smart_beta.dy_max = 0.08\n"
        "smart_beta.start_date = 2020-01-31\n"
        "market_maker.start = 2022-01-03T09:00:00+07:00\n"
        "metrics.annualize_information_ratio = yes\n"
        "optimizer.seed = 18446744073709551615\n"
        "data.ticks = data/ticks.csv\n"
        "data.benchmark = /abs/bench.csv\n",
        "/base");
    EXPECT_DOUBLE_EQ(c.smart_beta.bounds.pe_max, 20.0);
    EXPECT_DOUBLE_EQ(*c.smart_beta.bounds.dy_max, 0.08);
    EXPECT_EQ(format_date(*c.smart_beta_start), "2020-01-31");
    EXPECT_EQ(format_timestamp(*c.market_maker.start), "2022-01-03T02:00:00Z");
    EXPECT_TRUE(c.metrics.annualize_information_ratio);
    EXPECT_EQ(c.optimizer.seed, 18446744073709551615ull);
    EXPECT_EQ(c.data.ticks, std::filesystem::path("/base/data/ticks.csv"));
    EXPECT_EQ(c.data.benchmark, std::filesystem::path("/abs/bench.csv"));
}

TEST(ParseConfig, Errors) {
    EXPECT_EQ(kind_of([] { parse_config("smart_beta.pe_max 20\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_config("= 3\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_config("metrics.rf_annual = 0.05\nmetrics.rf_annual = 0.06\n"); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_config("smart_beta.pe_maximum = 3\n"); }), ErrorKind::UnknownKey);
    EXPECT_EQ(kind_of([] { parse_config("smart_beta.pe_max = abc\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("smart_beta.pe_max = -1\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("smart_beta.fee_rate = 1\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("market_maker.step = 0\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("optimizer.n_trials = 0\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("optimizer.seed = -1\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("smart_beta.start_date = 2020-02-30\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("metrics.annualize_information_ratio = maybe\n"); }), ErrorKind::InvalidValue);
    EXPECT_EQ(kind_of([] { parse_config("optimizer.step_lower = 6\n"); }), ErrorKind::InvalidValue);
}

TEST(ParseConfig, DyMaxUnboundedSpellings) {
    for (const char* v : {"none", "inf", "NONE", ""}) {
        EXPECT_FALSE(parse_config(std::string("smart_beta.dy_max = ") + v + "\n").smart_beta.bounds.dy_max) << v;
    }
}

TEST(CanonicalText, OrderAndThreadsIndependence) {
    const auto a = parse_config("smart_beta.pe_max = 20\noptimizer.threads = 1\ndata.ticks = t.csv\n", "/x");
    const auto b = parse_config("data.ticks = t.csv\noptimizer.threads = 8\nsmart_beta.pe_max = 20.0\n", "/y");
    EXPECT_EQ(a.canonical_text(), b.canonical_text());
    EXPECT_EQ(a.canonical_text().find("threads"), std::string::npos);
    EXPECT_NE(a.canonical_text().find("data.ticks = t.csv\n"), std::string::npos);
    EXPECT_NE(a.canonical_text(), parse_config("smart_beta.pe_max = 21\ndata.ticks = t.csv\n").canonical_text());

    // Sorted keys.
    const auto text = a.canonical_text();
    std::vector<std::string> keys;
    for (std::size_t pos = 0; pos < text.size();) {
        const auto nl = text.find('\n', pos);
        keys.push_back(text.substr(pos, text.find(" = ", pos) - pos));
        pos = nl + 1;
    }
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(LoadConfig, ResolvesAgainstFileDirectory) {
    testing::TempDir dir("cfg");
    const auto p = dir.write("run.cfg", "data.fundamentals = f.csv\r\n");
    EXPECT_EQ(load_config(p).data.fundamentals, dir.path() / "f.csv");
    EXPECT_EQ(kind_of([&] { load_config(dir.path() / "nope.cfg"); }), ErrorKind::FileNotFound);
}

}  // namespace
}  // namespace plutus
