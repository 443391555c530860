#include "plutus/config.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <vector>

#include "plutus/error.hpp"
#include "plutus/text.hpp"

namespace plutus {

namespace {

[[noreturn]] void invalid(std::string_view key, const std::string& reason) {
    throw Error(ErrorKind::InvalidValue, std::string(key) + ": " + reason);
}

double number(std::string_view key, std::string_view value) {
    const auto v = parse_double(value);
    if (!v) invalid(key, "expected a number, got '" + std::string(value) + "'");
    return *v;
}

double positive(std::string_view key, std::string_view value) {
    const double v = number(key, value);
    if (!(v > 0.0)) invalid(key, "must be > 0");
    return v;
}

double non_negative(std::string_view key, std::string_view value) {
    const double v = number(key, value);
    if (!(v >= 0.0)) invalid(key, "must be >= 0");
    return v;
}

long long integer(std::string_view key, std::string_view value, long long min) {
    const auto v = parse_int(value);
    if (!v) invalid(key, "expected an integer, got '" + std::string(value) + "'");
    if (*v < min) invalid(key, "must be >= " + std::to_string(min));
    return *v;
}

std::uint64_t unsigned64(std::string_view key, std::string_view value) {
    const auto text = trim(value);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        invalid(key, "expected a non-negative integer, got '" + std::string(value) + "'");
    }
    return v;
}

bool boolean(std::string_view key, std::string_view value) {
    const auto v = to_lower(value);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    invalid(key, "expected true or false");
}

Date date(std::string_view key, std::string_view value) {
    const auto d = parse_date(value);
    if (!d) invalid(key, "expected YYYY-MM-DD, got '" + std::string(value) + "'");
    return *d;
}

Timestamp timestamp(std::string_view key, std::string_view value) {
    const auto t = parse_timestamp(value);
    if (!t) invalid(key, "expected an ISO-8601 timestamp, got '" + std::string(value) + "'");
    return *t;
}

std::string opt_text(const std::optional<Date>& d) { return d ? format_date(*d) : ""; }
std::string opt_text(const std::optional<Timestamp>& t) { return t ? format_timestamp(*t) : ""; }
std::string bool_text(bool b) { return b ? "true" : "false"; }

struct KeySpec {
    std::string_view name;
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define PLUTUS_NUM(KEY, FIELD, PARSE)                                                         \
    KeySpec {                                                                                 \
        KEY, [](RunConfig& c, std::string_view v) { c.FIELD = PARSE(KEY, v); },               \
            [](const RunConfig& c) { return format_double(static_cast<double>(c.FIELD)); } \
    }

const std::vector<KeySpec>& registry() {
    static const std::vector<KeySpec> keys = {
        // data paths are handled separately (they need the base directory)
        {"data.instrument", [](RunConfig& c, std::string_view v) {
             if (v.empty()) invalid("data.instrument", "must not be empty");
             c.data.instrument = std::string(v);
         },
         [](const RunConfig& c) { return c.data.instrument; }},

        PLUTUS_NUM("smart_beta.pe_min", smart_beta.bounds.pe_min, number),
        PLUTUS_NUM("smart_beta.pe_max", smart_beta.bounds.pe_max, number),
        PLUTUS_NUM("smart_beta.dy_min", smart_beta.bounds.dy_min, non_negative),
        {"smart_beta.dy_max",
         [](RunConfig& c, std::string_view v) {
             const auto lower = to_lower(v);
             if (lower.empty() || lower == "none" || lower == "inf" || lower == "+inf") {
                 c.smart_beta.bounds.dy_max.reset();
             } else {
                 c.smart_beta.bounds.dy_max = non_negative("smart_beta.dy_max", v);
             }
         },
         [](const RunConfig& c) {
             return c.smart_beta.bounds.dy_max ? format_double(*c.smart_beta.bounds.dy_max) : std::string("none");
         }},
        {"smart_beta.fee_rate",
         [](RunConfig& c, std::string_view v) {
             const double f = non_negative("smart_beta.fee_rate", v);
             if (!(f < 1.0)) invalid("smart_beta.fee_rate", "must be < 1");
             c.smart_beta.fee_rate = f;
         },
         [](const RunConfig& c) { return format_double(c.smart_beta.fee_rate); }},
        PLUTUS_NUM("smart_beta.rf_annual", smart_beta.rf_annual, number),
        PLUTUS_NUM("smart_beta.initial_capital", smart_beta.initial_capital, positive),
        {"smart_beta.start_date", [](RunConfig& c, std::string_view v) { c.smart_beta_start = date("smart_beta.start_date", v); },
         [](const RunConfig& c) { return opt_text(c.smart_beta_start); }},
        {"smart_beta.end_date", [](RunConfig& c, std::string_view v) { c.smart_beta_end = date("smart_beta.end_date", v); },
         [](const RunConfig& c) { return opt_text(c.smart_beta_end); }},
        {"smart_beta.carry_missing_prices",
         [](RunConfig& c, std::string_view v) { c.smart_beta.carry_missing_prices = boolean("smart_beta.carry_missing_prices", v); },
         [](const RunConfig& c) { return bool_text(c.smart_beta.carry_missing_prices); }},
        {"smart_beta.periods_per_year",
         [](RunConfig& c, std::string_view v) {
             c.smart_beta_periods_per_year = static_cast<int>(integer("smart_beta.periods_per_year", v, 1));
         },
         [](const RunConfig& c) { return std::to_string(c.smart_beta_periods_per_year); }},

        PLUTUS_NUM("market_maker.step", market_maker.step, positive),
        PLUTUS_NUM("market_maker.inventory_coeff", market_maker.inventory_coeff, non_negative),
        PLUTUS_NUM("market_maker.fee_points", market_maker.fee_points, non_negative),
        PLUTUS_NUM("market_maker.refresh_interval", market_maker.refresh_interval, positive),
        PLUTUS_NUM("market_maker.initial_capital", market_maker.initial_capital, positive),
        PLUTUS_NUM("market_maker.point_value", market_maker.point_value, positive),
        {"market_maker.start", [](RunConfig& c, std::string_view v) { c.market_maker.start = timestamp("market_maker.start", v); },
         [](const RunConfig& c) { return opt_text(c.market_maker.start); }},
        {"market_maker.end", [](RunConfig& c, std::string_view v) { c.market_maker.end = timestamp("market_maker.end", v); },
         [](const RunConfig& c) { return opt_text(c.market_maker.end); }},
        {"market_maker.periods_per_year",
         [](RunConfig& c, std::string_view v) {
             c.market_maker_periods_per_year = static_cast<int>(integer("market_maker.periods_per_year", v, 1));
         },
         [](const RunConfig& c) { return std::to_string(c.market_maker_periods_per_year); }},

        PLUTUS_NUM("metrics.rf_annual", metrics.rf_annual, number),
        {"metrics.periods_per_year",
         [](RunConfig& c, std::string_view v) { c.metrics.periods_per_year = static_cast<int>(integer("metrics.periods_per_year", v, 1)); },
         [](const RunConfig& c) { return std::to_string(c.metrics.periods_per_year); }},
        {"metrics.annualize_information_ratio",
         [](RunConfig& c, std::string_view v) {
             c.metrics.annualize_information_ratio = boolean("metrics.annualize_information_ratio", v);
         },
         [](const RunConfig& c) { return bool_text(c.metrics.annualize_information_ratio); }},

        {"optimizer.seed", [](RunConfig& c, std::string_view v) { c.optimizer.seed = unsigned64("optimizer.seed", v); },
         [](const RunConfig& c) { return std::to_string(c.optimizer.seed); }},
        {"optimizer.n_trials",
         [](RunConfig& c, std::string_view v) { c.optimizer.n_trials = static_cast<std::size_t>(integer("optimizer.n_trials", v, 1)); },
         [](const RunConfig& c) { return std::to_string(c.optimizer.n_trials); }},
        {"optimizer.threads",
         [](RunConfig& c, std::string_view v) { c.optimizer.threads = static_cast<unsigned>(integer("optimizer.threads", v, 1)); },
         [](const RunConfig& c) { return std::to_string(c.optimizer.threads); }},
        {"optimizer.min_qualified",
         [](RunConfig& c, std::string_view v) {
             c.optimizer.min_qualified = static_cast<std::size_t>(integer("optimizer.min_qualified", v, 0));
         },
         [](const RunConfig& c) { return std::to_string(c.optimizer.min_qualified); }},
        PLUTUS_NUM("optimizer.pe_min_lower", optimizer.pe_min_lower, number),
        PLUTUS_NUM("optimizer.pe_min_upper", optimizer.pe_min_upper, number),
        PLUTUS_NUM("optimizer.pe_max_lower", optimizer.pe_max_lower, number),
        PLUTUS_NUM("optimizer.pe_max_upper", optimizer.pe_max_upper, number),
        PLUTUS_NUM("optimizer.dy_min_lower", optimizer.dy_min_lower, non_negative),
        PLUTUS_NUM("optimizer.dy_min_upper", optimizer.dy_min_upper, non_negative),
        PLUTUS_NUM("optimizer.dy_max_lower", optimizer.dy_max_lower, non_negative),
        PLUTUS_NUM("optimizer.dy_cap", optimizer.dy_cap, positive),
        PLUTUS_NUM("optimizer.step_lower", optimizer.step_lower, positive),
        PLUTUS_NUM("optimizer.step_upper", optimizer.step_upper, positive),
    };
    return keys;
}

#undef PLUTUS_NUM

constexpr std::string_view kPathKeys[] = {"data.benchmark", "data.fundamentals", "data.nav", "data.ticks"};

std::filesystem::path* path_field(RunConfig& c, std::string_view key) {
    if (key == "data.ticks") return &c.data.ticks;
    if (key == "data.fundamentals") return &c.data.fundamentals;
    if (key == "data.benchmark") return &c.data.benchmark;
    if (key == "data.nav") return &c.data.nav;
    return nullptr;
}

void check_ranges(const RunConfig& c) {
    const auto& b = c.smart_beta.bounds;
    if (!(b.pe_min < b.pe_max)) invalid("smart_beta.pe_min", "must be < smart_beta.pe_max");
    if (b.dy_max && !(b.dy_min < *b.dy_max)) invalid("smart_beta.dy_max", "must be > smart_beta.dy_min");
    if (c.smart_beta_start && c.smart_beta_end && !(*c.smart_beta_start < *c.smart_beta_end)) {
        invalid("smart_beta.start_date", "must precede smart_beta.end_date");
    }
    if (c.market_maker.start && c.market_maker.end && !(*c.market_maker.start < *c.market_maker.end)) {
        invalid("market_maker.start", "must precede market_maker.end");
    }
    const auto& o = c.optimizer;
    const std::pair<const char*, std::pair<double, double>> boxes[] = {
        {"optimizer.pe_min", {o.pe_min_lower, o.pe_min_upper}},
        {"optimizer.pe_max", {o.pe_max_lower, o.pe_max_upper}},
        {"optimizer.dy_min", {o.dy_min_lower, o.dy_min_upper}},
        {"optimizer.dy_max", {o.dy_max_lower, o.dy_cap}},
        {"optimizer.step", {o.step_lower, o.step_upper}},
    };
    for (const auto& [name, box] : boxes) {
        if (!(box.first < box.second)) invalid(name, "search lower bound must be < upper bound");
    }
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    RunConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": empty key");
        if (!seen.insert(std::string(key)).second) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": key '" + std::string(key) + "' repeated");
        }
        if (auto* field = path_field(config, key)) {
            config.raw_paths_[std::string(key)] = std::string(value);
            if (value.empty()) {
                field->clear();
            } else {
                const std::filesystem::path p{std::string(value)};
                *field = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
            }
            continue;
        }
        const auto& keys = registry();
        const auto spec = std::find_if(keys.begin(), keys.end(), [&](const KeySpec& k) { return k.name == key; });
        if (spec == keys.end()) throw Error(ErrorKind::UnknownKey, std::string(key));
        spec->set(config, value);
    }
    check_ranges(config);
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::string text;
    for (const auto& line : read_lines(path)) text += line + "\n";
    return parse_config(text, path.parent_path());
}

std::string RunConfig::canonical_text() const {
    std::map<std::string, std::string> entries;
    for (const auto& spec : registry()) {
        // Worker count never changes results, so it stays out of the hash.
        if (spec.name == "optimizer.threads") continue;
        entries[std::string(spec.name)] = spec.get(*this);
    }
    for (const auto key : kPathKeys) {
        const auto it = raw_paths_.find(std::string(key));
        entries[std::string(key)] = it == raw_paths_.end() ? "" : it->second;
    }
    std::string out;
    for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
    return out;
}

}  // namespace plutus
