#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace plutus {

using Date = std::chrono::sys_days;
using Timestamp = std::chrono::sys_time<std::chrono::microseconds>;

/// Parses `YYYY-MM-DD`. Rejects impossible calendar dates.
std::optional<Date> parse_date(std::string_view text);

/// Parses an ISO-8601 instant and normalizes it to UTC.
/// Accepts `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS[.ffffff]]` with `T` or a space as separator,
/// and an optional `Z`, `+HH:MM`, `+HHMM` or `+HH` offset. No offset means UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

std::string format_date(Date d);

/// `YYYY-MM-DDTHH:MM:SSZ`, with six fractional digits only when the instant has sub-second part.
std::string format_timestamp(Timestamp t);

Date month_end(Date d);
bool is_month_end(Date d);

inline Date day_of(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }

}  // namespace plutus
