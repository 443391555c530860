#include "plutus/market_data.hpp"

#include <algorithm>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus {

namespace {

std::string where(const std::filesystem::path& path, std::size_t line_no) {
    return path.string() + ":" + std::to_string(line_no);
}

/// Reads the file, checks the header and returns the data lines (blank lines skipped)
/// paired with their 1-based line numbers, already split into exactly `header.size()` fields.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> read_table(
    const std::vector<std::string>& lines, const std::filesystem::path& path,
    const std::vector<std::string_view>& header) {
    if (lines.empty()) throw Error(ErrorKind::SchemaError, path.string() + ": missing header");
    const auto got = split(lines.front(), ',');
    bool header_ok = got.size() == header.size();
    for (std::size_t i = 0; header_ok && i < got.size(); ++i) {
        header_ok = to_lower(trim(got[i])) == header[i];
    }
    if (!header_ok) {
        std::string expected;
        for (const auto& h : header) expected += (expected.empty() ? "" : ",") + std::string(h);
        throw Error(ErrorKind::SchemaError, path.string() + ": expected header '" + expected + "', got '" +
                                                lines.front() + "'");
    }
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto fields = split(lines[i], ',');
        if (fields.size() != header.size()) {
            throw Error(ErrorKind::SchemaError, where(path, i + 1) + ": expected " +
                                                    std::to_string(header.size()) + " fields, got " +
                                                    std::to_string(fields.size()));
        }
        for (auto& f : fields) f = trim(f);
        out.emplace_back(i + 1, std::move(fields));
    }
    return out;
}

std::optional<double> parse_optional_number(std::string_view field, const std::filesystem::path& path,
                                            std::size_t line_no, std::string_view column) {
    if (field.empty()) return std::nullopt;
    auto value = parse_double(field);
    if (!value) {
        throw Error(ErrorKind::SchemaError,
                    where(path, line_no) + ": bad " + std::string(column) + " '" + std::string(field) + "'");
    }
    return value;
}

double require_positive(std::optional<double> value, const std::filesystem::path& path, std::size_t line_no,
                        std::string_view column) {
    if (*value <= 0.0) {
        throw Error(ErrorKind::SchemaError, where(path, line_no) + ": " + std::string(column) + " must be > 0");
    }
    return *value;
}

/// Sort by key (stable, so file order decides among equal keys), collapse duplicates to the
/// last row, forward-fill missing values and drop leading rows with nothing to fill from.
template <typename Key>
std::vector<std::pair<Key, double>> clean_series(std::vector<std::pair<Key, std::optional<double>>> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Key, std::optional<double>>> unique;
    unique.reserve(rows.size());
    for (auto& row : rows) {
        if (!unique.empty() && unique.back().first == row.first) {
            unique.back() = std::move(row);
        } else {
            unique.push_back(std::move(row));
        }
    }
    std::vector<std::pair<Key, double>> out;
    out.reserve(unique.size());
    std::optional<double> last;
    for (const auto& [key, value] : unique) {
        if (value) last = value;
        if (last) out.emplace_back(key, *last);
    }
    return out;
}

}  // namespace

FundamentalTable FundamentalTable::from_rows(std::vector<FundamentalRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const FundamentalRow& a, const FundamentalRow& b) {
        return a.as_of != b.as_of ? a.as_of < b.as_of : a.ticker < b.ticker;
    });
    FundamentalTable table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!is_month_end(row.as_of)) {
            throw Error(ErrorKind::SchemaError, row.ticker + " " + format_date(row.as_of) + " is not a month-end");
        }
        if (!(row.price > 0.0)) {
            throw Error(ErrorKind::SchemaError, row.ticker + " " + format_date(row.as_of) + ": price must be > 0");
        }
        if (i > 0 && rows[i - 1].as_of == row.as_of && rows[i - 1].ticker == row.ticker) {
            throw Error(ErrorKind::DuplicateRow, row.ticker + " " + format_date(row.as_of));
        }
        if (table.months_.empty() || table.months_.back() != row.as_of) {
            table.months_.push_back(row.as_of);
            table.month_offsets_.push_back(i);
        }
    }
    table.month_offsets_.push_back(rows.size());
    table.rows_ = std::move(rows);
    return table;
}

bool FundamentalTable::has_month(Date month) const {
    return std::binary_search(months_.begin(), months_.end(), month);
}

std::span<const FundamentalRow> FundamentalTable::rows_for(Date month) const {
    const auto it = std::lower_bound(months_.begin(), months_.end(), month);
    if (it == months_.end() || *it != month) {
        throw Error(ErrorKind::UnknownMonth, format_date(month));
    }
    const auto idx = static_cast<std::size_t>(it - months_.begin());
    return std::span<const FundamentalRow>(rows_).subspan(month_offsets_[idx],
                                                          month_offsets_[idx + 1] - month_offsets_[idx]);
}

const FundamentalRow* FundamentalTable::find(const std::string& ticker, Date month) const {
    if (!has_month(month)) return nullptr;
    const auto rows = rows_for(month);
    const auto it = std::lower_bound(rows.begin(), rows.end(), ticker,
                                     [](const FundamentalRow& r, const std::string& t) { return r.ticker < t; });
    if (it == rows.end() || it->ticker != ticker) return nullptr;
    return &*it;
}

std::optional<double> BenchmarkSeries::level_as_of(Date d) const {
    const auto it = std::upper_bound(dates.begin(), dates.end(), d);
    if (it == dates.begin()) return std::nullopt;
    return levels[static_cast<std::size_t>(it - dates.begin()) - 1];
}

TickSeries load_tick_series(const std::filesystem::path& path, const std::string& instrument) {
    const auto lines = read_lines(path);
    const auto table = read_table(lines, path, {"timestamp", "price"});
    std::vector<std::pair<Timestamp, std::optional<double>>> raw;
    raw.reserve(table.size());
    for (const auto& [line_no, fields] : table) {
        const auto ts = parse_timestamp(fields[0]);
        if (!ts) {
            throw Error(ErrorKind::SchemaError, where(path, line_no) + ": bad timestamp '" + std::string(fields[0]) + "'");
        }
        auto price = parse_optional_number(fields[1], path, line_no, "price");
        if (price) require_positive(price, path, line_no, "price");
        raw.emplace_back(*ts, price);
    }
    TickSeries series{instrument, {}};
    for (const auto& [ts, price] : clean_series(std::move(raw))) series.ticks.push_back({ts, price});
    if (series.ticks.empty()) throw Error(ErrorKind::EmptySeries, path.string() + ": no valid ticks");
    return series;
}

FundamentalTable load_fundamentals(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    const auto table = read_table(lines, path, {"ticker", "date", "pe_ratio", "dividend_yield", "price"});
    std::vector<FundamentalRow> rows;
    rows.reserve(table.size());
    for (const auto& [line_no, fields] : table) {
        if (fields[0].empty()) throw Error(ErrorKind::SchemaError, where(path, line_no) + ": empty ticker");
        const auto date = parse_date(fields[1]);
        if (!date) {
            throw Error(ErrorKind::SchemaError, where(path, line_no) + ": bad date '" + std::string(fields[1]) + "'");
        }
        const auto pe = parse_optional_number(fields[2], path, line_no, "pe_ratio");
        const auto dy = parse_optional_number(fields[3], path, line_no, "dividend_yield");
        if (dy && *dy < 0.0) {
            throw Error(ErrorKind::SchemaError, where(path, line_no) + ": dividend_yield must be >= 0");
        }
        const auto price = parse_optional_number(fields[4], path, line_no, "price");
        if (!price) continue;
        require_positive(price, path, line_no, "price");
        rows.push_back({std::string(fields[0]), month_end(*date), pe, dy, *price});
    }
    return FundamentalTable::from_rows(std::move(rows));
}

BenchmarkSeries load_benchmark(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    const auto table = read_table(lines, path, {"date", "level"});
    std::vector<std::pair<Date, std::optional<double>>> raw;
    raw.reserve(table.size());
    for (const auto& [line_no, fields] : table) {
        const auto date = parse_date(fields[0]);
        if (!date) {
            throw Error(ErrorKind::SchemaError, where(path, line_no) + ": bad date '" + std::string(fields[0]) + "'");
        }
        auto level = parse_optional_number(fields[1], path, line_no, "level");
        if (level) require_positive(level, path, line_no, "level");
        raw.emplace_back(*date, level);
    }
    BenchmarkSeries series;
    for (const auto& [d, level] : clean_series(std::move(raw))) {
        series.dates.push_back(d);
        series.levels.push_back(level);
    }
    if (series.dates.empty()) throw Error(ErrorKind::EmptySeries, path.string() + ": no valid levels");
    return series;
}

std::string to_csv(const TickSeries& series) {
    std::string out = "timestamp,price\n";
    for (const auto& tick : series.ticks) {
        out += format_timestamp(tick.timestamp) + "," + format_double(tick.price) + "\n";
    }
    return out;
}

std::string to_csv(const FundamentalTable& table) {
    std::string out = "ticker,date,pe_ratio,dividend_yield,price\n";
    for (const auto& row : table.rows()) {
        out += row.ticker + "," + format_date(row.as_of) + "," + (row.pe_ratio ? format_double(*row.pe_ratio) : "") +
               "," + (row.dividend_yield ? format_double(*row.dividend_yield) : "") + "," + format_double(row.price) +
               "\n";
    }
    return out;
}

std::string to_csv(const BenchmarkSeries& series) {
    std::string out = "date,level\n";
    for (std::size_t i = 0; i < series.dates.size(); ++i) {
        out += format_date(series.dates[i]) + "," + format_double(series.levels[i]) + "\n";
    }
    return out;
}

}  // namespace plutus
