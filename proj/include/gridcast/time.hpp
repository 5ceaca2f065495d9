#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace gridcast {

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;
using Date = std::chrono::sys_days;

inline constexpr std::int64_t kSecondsPerHour = 3600;
inline constexpr std::int64_t kSecondsPerDay = 86400;

/// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM[:SS][Z]" and the same with a space
/// separator. Throws Error(NonNumericValue) on anything else.
Timestamp parse_timestamp(std::string_view text);
Date parse_date(std::string_view text);

std::string format_timestamp(Timestamp ts);  // 2012-01-01T00:00:00Z
std::string format_date(Date date);          // 2012-01-01

Date date_of(Timestamp ts);
Timestamp to_timestamp(Date date);
/// 1-based day of year (1..366).
int day_of_year(Timestamp ts);

}  // namespace gridcast
