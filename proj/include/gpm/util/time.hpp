#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gpm {

// Civil <-> epoch conversions on the proleptic Gregorian calendar, UTC only.
std::int64_t days_from_civil(int y, int m, int d);
void civil_from_days(std::int64_t z, int& y, int& m, int& d);

// Accepts "YYYY-MM-DDTHH:MM:SS" with optional trailing 'Z' and either 'T' or
// ' ' as the date/time separator. Fractional seconds are truncated.
std::optional<std::int64_t> parse_iso8601_utc(std::string_view s);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601_utc(std::int64_t t);

// Hour of day [0,24) after applying a whole-hour UTC offset.
int local_hour(std::int64_t t_utc, int utc_offset_hours);

}  // namespace gpm
