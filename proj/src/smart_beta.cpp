#include "plutus/smart_beta.hpp"

#include <algorithm>
#include <cmath>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus::smart_beta {

namespace {

double price_of(const PriceMap& prices, const std::string& ticker) {
    const auto it = prices.find(ticker);
    if (it == prices.end()) throw Error(ErrorKind::MissingPrice, "no price for " + ticker);
    return it->second;
}

void check_fee(double fee_rate) {
    if (!(fee_rate >= 0.0 && fee_rate < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "fee_rate must be in [0, 1), got " + format_double(fee_rate));
    }
}

}  // namespace

void ScreenBounds::validate() const {
    if (!(pe_min < pe_max)) throw Error(ErrorKind::InvalidArgument, "pe_min must be < pe_max");
    if (!(dy_min >= 0.0)) throw Error(ErrorKind::InvalidArgument, "dy_min must be >= 0");
    if (dy_max && !(dy_min < *dy_max)) throw Error(ErrorKind::InvalidArgument, "dy_min must be < dy_max");
}

bool ScreenBounds::admits(const FundamentalRow& row) const {
    if (!row.pe_ratio || !row.dividend_yield) return false;
    const double pe = *row.pe_ratio;
    const double dy = *row.dividend_yield;
    return pe > pe_min && pe < pe_max && dy > dy_min && (!dy_max || dy < *dy_max);
}

void SmartBetaConfig::validate() const {
    bounds.validate();
    check_fee(fee_rate);
    if (!(initial_capital > 0.0)) throw Error(ErrorKind::InvalidArgument, "initial_capital must be > 0");
    if (!(start_date < end_date)) throw Error(ErrorKind::InvalidArgument, "start_date must precede end_date");
}

double mark_to_market(const Portfolio& p, const PriceMap& prices) {
    double value = p.cash;
    for (const auto& [ticker, qty] : p.holdings) value += qty * price_of(prices, ticker);
    return value;
}

std::vector<std::string> screen_universe(const FundamentalTable& table, Date month, const ScreenBounds& bounds) {
    std::vector<std::string> out;
    if (table.rows().empty()) return out;
    for (const auto& row : table.rows_for(month)) {
        if (bounds.admits(row)) out.push_back(row.ticker);
    }
    // rows_for() is already ticker-ordered; keep the contract explicit.
    std::sort(out.begin(), out.end());
    return out;
}

Portfolio liquidate(const Portfolio& p, const PriceMap& prices, double fee_rate) {
    check_fee(fee_rate);
    Portfolio out{p.cash, {}};
    for (const auto& [ticker, qty] : p.holdings) out.cash += qty * price_of(prices, ticker) * (1.0 - fee_rate);
    return out;
}

Portfolio allocate_equal(double cash, const std::vector<std::string>& tickers, const PriceMap& prices,
                         double fee_rate) {
    check_fee(fee_rate);
    if (cash < 0.0) throw Error(ErrorKind::InvalidArgument, "cash must be >= 0");
    Portfolio out{cash, {}};
    if (tickers.empty()) return out;
    const double n = static_cast<double>(tickers.size());
    const double gross = cash / (n * (1.0 + fee_rate));
    for (const auto& ticker : tickers) {
        const double price = price_of(prices, ticker);
        if (!(price > 0.0)) throw Error(ErrorKind::InvalidArgument, "non-positive price for " + ticker);
        out.holdings[ticker] += gross / price;
    }
    out.cash = std::max(0.0, cash - n * gross * (1.0 + fee_rate));
    return out;
}

SmartBetaResult run_smart_beta_detailed(const SmartBetaConfig& cfg, const FundamentalTable& table) {
    cfg.validate();
    std::vector<Date> window;
    for (const auto m : table.months()) {
        if (m >= cfg.start_date && m <= cfg.end_date) window.push_back(m);
    }
    if (window.empty()) {
        throw Error(ErrorKind::EmptySeries, "no month-end between " + format_date(cfg.start_date) + " and " +
                                                format_date(cfg.end_date));
    }

    SmartBetaResult result;
    result.nav.dates.push_back(cfg.start_date);
    result.nav.nav.push_back(cfg.initial_capital);

    Portfolio book{cfg.initial_capital, {}};
    PriceMap last_known;
    bool first_rebalance = true;

    for (std::size_t k = 0; k < window.size(); ++k) {
        const Date month = window[k];
        PriceMap prices;
        for (const auto& row : table.rows_for(month)) prices[row.ticker] = row.price;
        if (cfg.carry_missing_prices) {
            for (const auto& [ticker, qty] : book.holdings) {
                if (!prices.contains(ticker)) {
                    const auto it = last_known.find(ticker);
                    if (it != last_known.end()) prices[ticker] = it->second;
                }
            }
        }
        for (const auto& [ticker, price] : prices) last_known[ticker] = price;

        const double nav_before = mark_to_market(book, prices);
        if (month != cfg.start_date) {
            result.nav.dates.push_back(month);
            result.nav.nav.push_back(nav_before);
        }
        if (k + 1 == window.size()) break;

        double sell_notional = 0.0;
        for (const auto& [ticker, qty] : book.holdings) sell_notional += qty * prices.at(ticker);
        const Portfolio flat = liquidate(book, prices, cfg.fee_rate);
        auto qualified = screen_universe(table, month, cfg.bounds);
        book = allocate_equal(flat.cash, qualified, prices, cfg.fee_rate);

        double buy_notional = 0.0;
        for (const auto& [ticker, qty] : book.holdings) buy_notional += qty * prices.at(ticker);

        RebalanceRecord record;
        record.date = month;
        record.nav_before = nav_before;
        record.nav_after = mark_to_market(book, prices);
        record.fees = (sell_notional + buy_notional) * cfg.fee_rate;
        record.portfolio = book;
        result.min_qualified = first_rebalance ? qualified.size() : std::min(result.min_qualified, qualified.size());
        first_rebalance = false;
        record.qualified = std::move(qualified);
        result.rebalances.push_back(std::move(record));
    }
    return result;
}

}  // namespace plutus::smart_beta
