#include "plutus/time_util.hpp"

#include <cstdio>

namespace plutus {

namespace {

bool read_digits(std::string_view text, std::size_t pos, std::size_t count, int& out) {
    if (pos + count > text.size()) return false;
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const char c = text[pos + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

std::optional<Date> parse_date_prefix(std::string_view text) {
    int y = 0, m = 0, d = 0;
    if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    if (!read_digits(text, 0, 4, y) || !read_digits(text, 5, 2, m) || !read_digits(text, 8, 2, d)) {
        return std::nullopt;
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10) return std::nullopt;
    return parse_date_prefix(text);
}

std::optional<Timestamp> parse_timestamp(std::string_view text) {
    using namespace std::chrono;
    const auto date = parse_date_prefix(text);
    if (!date) return std::nullopt;
    Timestamp result = time_point_cast<microseconds>(sys_time<seconds>{*date});
    std::size_t pos = 10;
    if (pos == text.size()) return result;

    if (text[pos] != 'T' && text[pos] != ' ') return std::nullopt;
    ++pos;
    int hh = 0, mm = 0, ss = 0;
    if (!read_digits(text, pos, 2, hh) || pos + 2 >= text.size() || text[pos + 2] != ':' ||
        !read_digits(text, pos + 3, 2, mm)) {
        return std::nullopt;
    }
    pos += 5;
    if (pos < text.size() && text[pos] == ':') {
        if (!read_digits(text, pos + 1, 2, ss)) return std::nullopt;
        pos += 3;
    }
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    long long micros = 0;
    if (pos < text.size() && (text[pos] == '.' || text[pos] == ',')) {
        ++pos;
        int digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (digits < 6) {
                micros = micros * 10 + (text[pos] - '0');
            }
            ++digits;
            ++pos;
        }
        if (digits == 0) return std::nullopt;
        for (int i = digits; i < 6; ++i) micros *= 10;
    }
    result += hours{hh} + minutes{mm} + seconds{ss} + microseconds{micros};

    if (pos == text.size()) return result;
    if (text[pos] == 'Z' && pos + 1 == text.size()) return result;
    if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
    const int sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    int oh = 0, om = 0;
    if (!read_digits(text, pos, 2, oh)) return std::nullopt;
    pos += 2;
    if (pos < text.size()) {
        if (text[pos] == ':') ++pos;
        if (!read_digits(text, pos, 2, om)) return std::nullopt;
        pos += 2;
    }
    if (pos != text.size() || oh > 23 || om > 59) return std::nullopt;
    // Local time = UTC + offset.
    result -= sign * (hours{oh} + minutes{om});
    return result;
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::string format_timestamp(Timestamp t) {
    using namespace std::chrono;
    const auto day = floor<days>(t);
    const hh_mm_ss<microseconds> tod{t - day};
    char buf[48];
    const auto micros = tod.subseconds().count();
    if (micros == 0) {
        std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02dZ", format_date(day).c_str(),
                      static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                      static_cast<int>(tod.seconds().count()));
    } else {
        std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02d.%06lldZ", format_date(day).c_str(),
                      static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                      static_cast<int>(tod.seconds().count()), static_cast<long long>(micros));
    }
    return buf;
}

Date month_end(Date d) {
    const std::chrono::year_month_day ymd{d};
    return Date{std::chrono::year_month_day_last{ymd.year(), std::chrono::month_day_last{ymd.month()}}};
}

bool is_month_end(Date d) { return month_end(d) == d; }

}  // namespace plutus
