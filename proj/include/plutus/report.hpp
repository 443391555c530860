#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "plutus/market_maker.hpp"
#include "plutus/metrics.hpp"
#include "plutus/smart_beta.hpp"

namespace plutus {

struct DrawdownSeries {
    std::vector<Date> dates;
    std::vector<double> drawdown;  // nav[t] / running_max[t] - 1, in [-1, 0]
};

/// Pointwise drawdown. Uses the same recurrence as max_drawdown(), so its minimum equals that
/// value bit for bit.
DrawdownSeries drawdown_series(const NavSeries& nav);

std::string nav_csv(const NavSeries& nav);                 // date,nav
std::string drawdown_csv(const DrawdownSeries& dd);        // date,drawdown
std::string inventory_csv(const market_maker::InventorySeries& inv);  // date,inventory
std::string fills_csv(std::span<const market_maker::Fill> fills);     // timestamp,side,price,fee_points,inventory_after
std::string rebalances_csv(std::span<const smart_beta::RebalanceRecord> rebalances);

/// Reads a `date,nav` file. Throws FileNotFound, SchemaError, EmptySeries.
NavSeries load_nav_series(const std::filesystem::path& path);

}  // namespace plutus
