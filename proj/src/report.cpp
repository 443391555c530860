#include "plutus/report.hpp"

#include <algorithm>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus {

DrawdownSeries drawdown_series(const NavSeries& nav) {
    DrawdownSeries out;
    out.dates = nav.dates;
    out.drawdown.reserve(nav.nav.size());
    double peak = nav.nav.empty() ? 0.0 : nav.nav.front();
    for (double v : nav.nav) {
        peak = std::max(peak, v);
        out.drawdown.push_back(std::min(0.0, v / peak - 1.0));
    }
    return out;
}

std::string nav_csv(const NavSeries& nav) {
    std::string out = "date,nav\n";
    for (std::size_t i = 0; i < nav.nav.size(); ++i) {
        out += format_date(nav.dates[i]) + "," + format_double(nav.nav[i]) + "\n";
    }
    return out;
}

std::string drawdown_csv(const DrawdownSeries& dd) {
    std::string out = "date,drawdown\n";
    for (std::size_t i = 0; i < dd.drawdown.size(); ++i) {
        out += format_date(dd.dates[i]) + "," + format_double(dd.drawdown[i]) + "\n";
    }
    return out;
}

std::string inventory_csv(const market_maker::InventorySeries& inv) {
    std::string out = "date,inventory\n";
    for (std::size_t i = 0; i < inv.inventory.size(); ++i) {
        out += format_date(inv.dates[i]) + "," + std::to_string(inv.inventory[i]) + "\n";
    }
    return out;
}

std::string fills_csv(std::span<const market_maker::Fill> fills) {
    std::string out = "timestamp,side,price,fee_points,inventory_after\n";
    for (const auto& f : fills) {
        out += format_timestamp(f.timestamp) + "," + std::string(market_maker::to_string(f.side)) + "," +
               format_double(f.price) + "," + format_double(f.fee_points) + "," + std::to_string(f.inventory_after) +
               "\n";
    }
    return out;
}

std::string rebalances_csv(std::span<const smart_beta::RebalanceRecord> rebalances) {
    std::string out = "date,nav_before,nav_after,fees,qualified\n";
    for (const auto& r : rebalances) {
        out += format_date(r.date) + "," + format_double(r.nav_before) + "," + format_double(r.nav_after) + "," +
               format_double(r.fees) + "," + std::to_string(r.qualified.size()) + "\n";
    }
    return out;
}

NavSeries load_nav_series(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || to_lower(trim(lines.front())) != "date,nav") {
        throw Error(ErrorKind::SchemaError, path.string() + ": expected header 'date,nav'");
    }
    NavSeries nav;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split(lines[i], ',');
        const auto where = path.string() + ":" + std::to_string(i + 1);
        if (fields.size() != 2) throw Error(ErrorKind::SchemaError, where + ": expected 2 fields");
        const auto d = parse_date(trim(fields[0]));
        const auto v = parse_double(fields[1]);
        if (!d) throw Error(ErrorKind::SchemaError, where + ": bad date");
        if (!v || !(*v > 0.0)) throw Error(ErrorKind::SchemaError, where + ": nav must be a positive number");
        if (!nav.dates.empty() && !(nav.dates.back() < *d)) {
            throw Error(ErrorKind::SchemaError, where + ": dates must be strictly increasing");
        }
        nav.dates.push_back(*d);
        nav.nav.push_back(*v);
    }
    if (nav.nav.empty()) throw Error(ErrorKind::EmptySeries, path.string() + ": no NAV rows");
    return nav;
}

}  // namespace plutus
