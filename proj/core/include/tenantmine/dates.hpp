#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tenantmine {

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  auto operator<=>(const CivilDate&) const = default;
};

// Proleptic Gregorian conversions (Howard Hinnant's civil algorithms).
// All timestamps in the pipeline are UTC seconds.
std::int64_t days_from_civil(CivilDate d);
CivilDate civil_from_days(std::int64_t days);

std::int64_t utc_from_civil(CivilDate d);       // midnight UTC
CivilDate civil_from_utc(std::int64_t seconds); // floor to the UTC day

// Parses "YYYY-MM-DD". Throws ConfigError on malformed input.
CivilDate parse_date(std::string_view text);

std::string format_date(CivilDate d);

}  // namespace tenantmine
