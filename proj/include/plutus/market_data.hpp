#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plutus/time_util.hpp"

namespace plutus {

struct Tick {
    Timestamp timestamp;
    double price = 0.0;

    bool operator==(const Tick&) const = default;
};

/// Strictly increasing timestamps, non-empty, every price > 0.
struct TickSeries {
    std::string instrument;
    std::vector<Tick> ticks;

    bool operator==(const TickSeries&) const = default;
};

struct FundamentalRow {
    std::string ticker;
    Date as_of;  // always a month-end
    std::optional<double> pe_ratio;
    std::optional<double> dividend_yield;
    double price = 0.0;

    bool operator==(const FundamentalRow&) const = default;
};

/// Monthly cross-section of fundamentals. Rows are kept ordered by (month, ticker)
/// so per-month lookups are contiguous.
class FundamentalTable {
public:
    FundamentalTable() = default;

    /// Validates and indexes rows. Throws DuplicateRow for two rows on one (ticker, month),
    /// SchemaError if a row is not month-end aligned or has a non-positive price.
    static FundamentalTable from_rows(std::vector<FundamentalRow> rows);

    const std::vector<FundamentalRow>& rows() const noexcept { return rows_; }
    const std::vector<Date>& months() const noexcept { return months_; }
    bool has_month(Date month) const;

    /// Rows for one month ordered by ticker. Throws UnknownMonth.
    std::span<const FundamentalRow> rows_for(Date month) const;
    const FundamentalRow* find(const std::string& ticker, Date month) const;

    bool operator==(const FundamentalTable& other) const { return rows_ == other.rows_; }

private:
    std::vector<FundamentalRow> rows_;
    std::vector<Date> months_;
    std::vector<std::size_t> month_offsets_;  // months_.size() + 1 entries
};

struct BenchmarkSeries {
    std::vector<Date> dates;
    std::vector<double> levels;

    /// Latest level dated on or before `d`, if any.
    std::optional<double> level_as_of(Date d) const;

    bool operator==(const BenchmarkSeries&) const = default;
};

// Loaders. All throw plutus::Error with FileNotFound / SchemaError / EmptySeries / DuplicateRow.
TickSeries load_tick_series(const std::filesystem::path& path, const std::string& instrument);
FundamentalTable load_fundamentals(const std::filesystem::path& path);
BenchmarkSeries load_benchmark(const std::filesystem::path& path);

// Canonical CSV text for each shape (header included). Loading the output reproduces the input.
std::string to_csv(const TickSeries& series);
std::string to_csv(const FundamentalTable& table);
std::string to_csv(const BenchmarkSeries& series);

}  // namespace plutus
