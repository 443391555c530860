#include "plutus/market_maker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "plutus/error.hpp"

namespace plutus::market_maker {

void MarketMakerConfig::validate() const {
    if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be > 0");
    if (!(inventory_coeff >= 0.0)) throw Error(ErrorKind::InvalidArgument, "inventory_coeff must be >= 0");
    if (!(fee_points >= 0.0)) throw Error(ErrorKind::InvalidArgument, "fee_points must be >= 0");
    if (!(refresh_interval > 0.0)) throw Error(ErrorKind::InvalidArgument, "refresh_interval must be > 0");
    if (!(point_value > 0.0)) throw Error(ErrorKind::InvalidArgument, "point_value must be > 0");
    if (!(initial_capital > 0.0)) throw Error(ErrorKind::InvalidArgument, "initial_capital must be > 0");
    if (start && end && !(*start < *end)) throw Error(ErrorKind::InvalidArgument, "start must precede end");
}

Quote compute_quotes(double mid, long long inventory, double step, double inventory_coeff) {
    if (!(mid > 0.0) || !(step > 0.0) || !(inventory_coeff >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "quotes need mid > 0, step > 0 and inventory_coeff >= 0");
    }
    const auto q = static_cast<double>(inventory);
    return {mid - step * (std::max(q, 0.0) * inventory_coeff + 1.0),
            mid - step * (std::min(q, 0.0) * inventory_coeff - 1.0)};
}

std::string_view to_string(Side side) noexcept { return side == Side::Buy ? "buy" : "sell"; }

MatchResult match_tick(const MMState& state, const Tick& tick, double fee_points, double point_value) {
    if (!state.active_quote) throw Error(ErrorKind::NoActiveQuote, "tick arrived with no resting quote");
    MatchResult out{state, {}};
    const Quote quote = *state.active_quote;
    if (tick.price <= quote.bid) {
        out.state.inventory += 1;
        out.state.cash -= (quote.bid + fee_points) * point_value;
        out.fills.push_back({tick.timestamp, Side::Buy, quote.bid, fee_points, out.state.inventory});
    } else if (tick.price >= quote.ask) {
        out.state.inventory -= 1;
        out.state.cash += (quote.ask - fee_points) * point_value;
        out.fills.push_back({tick.timestamp, Side::Sell, quote.ask, fee_points, out.state.inventory});
    }
    if (!out.fills.empty()) out.state.active_quote.reset();
    return out;
}

InventorySeries daily_inventory(std::span<const StateSnapshot> history) {
    InventorySeries out;
    for (const auto& snap : history) {
        const Date day = day_of(snap.timestamp);
        if (!out.dates.empty() && out.dates.back() == day) {
            out.inventory.back() = snap.inventory;
        } else {
            out.dates.push_back(day);
            out.inventory.push_back(snap.inventory);
        }
    }
    return out;
}

MarketMakerResult run_market_maker(const MarketMakerConfig& cfg, const TickSeries& ticks) {
    cfg.validate();
    const auto first = std::find_if(ticks.ticks.begin(), ticks.ticks.end(),
                                    [&](const Tick& t) { return !cfg.start || t.timestamp >= *cfg.start; });
    const auto last = std::find_if(first, ticks.ticks.end(),
                                   [&](const Tick& t) { return cfg.end && t.timestamp > *cfg.end; });
    if (first == last) throw Error(ErrorKind::EmptySeries, "no ticks inside the replay window");

    const auto refresh = std::chrono::duration_cast<Timestamp::duration>(
        std::chrono::duration<double>(cfg.refresh_interval));

    MarketMakerResult result;
    MMState state;
    state.cash = cfg.initial_capital;
    std::vector<StateSnapshot> history;
    history.reserve(static_cast<std::size_t>(last - first));

    result.nav.dates.push_back(day_of(first->timestamp) - std::chrono::days{1});
    result.nav.nav.push_back(cfg.initial_capital);

    auto requote = [&](const Tick& tick) {
        state.active_quote = compute_quotes(tick.price, state.inventory, cfg.step, cfg.inventory_coeff);
        state.last_refresh = tick.timestamp;
    };

    for (auto it = first; it != last; ++it) {
        const Tick& tick = *it;
        if (!state.active_quote) {
            requote(tick);
        } else {
            auto matched = match_tick(state, tick, cfg.fee_points, cfg.point_value);
            state = matched.state;
            if (!matched.fills.empty()) {
                result.fills.insert(result.fills.end(), matched.fills.begin(), matched.fills.end());
                requote(tick);
            } else if (tick.timestamp - state.last_refresh >= refresh) {
                requote(tick);
            }
        }
        history.push_back({tick.timestamp, state.inventory});

        const bool day_closes = std::next(it) == last || day_of(std::next(it)->timestamp) != day_of(tick.timestamp);
        if (day_closes) {
            result.nav.dates.push_back(day_of(tick.timestamp));
            result.nav.nav.push_back(state.cash + static_cast<double>(state.inventory) * tick.price * cfg.point_value);
        }
    }
    result.inventory = daily_inventory(history);
    result.final_state = state;
    result.last_price = std::prev(last)->price;
    return result;
}

}  // namespace plutus::market_maker
