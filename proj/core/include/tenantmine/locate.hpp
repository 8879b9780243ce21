#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tenantmine {

enum class LocationKind { us_state, non_us, unresolved };

struct LocationTag {
  std::string raw_span;
  LocationKind kind = LocationKind::unresolved;
  // USPS code for us_state, region name for non_us, empty for unresolved.
  std::string value;
};

// Alias table mapping state names/abbreviations, city aliases and non-US
// region names to their resolution. Lookups are case-insensitive; duplicate
// aliases are rejected at load.
class Gazetteer {
 public:
  static Gazetteer load(const std::filesystem::path& path);

  bool is_state_code(std::string_view code) const;
  // Canonical state name for a USPS code, empty if unknown.
  const std::string& state_name(std::string_view code) const;
  // Code for a canonical state name (case-insensitive), empty if unknown.
  std::string code_for_state_name(std::string_view name) const;

  struct Resolution {
    LocationKind kind = LocationKind::unresolved;
    std::string value;
  };

  // Full-name/city/region alias lookup on a normalized (lowercase,
  // whitespace-collapsed) string.
  std::optional<Resolution> lookup_alias(std::string_view normalized) const;

  // Aliases ordered longest-first for scanning.
  const std::vector<std::string>& aliases_by_length() const {
    return aliases_by_length_;
  }

  std::size_t state_count() const { return code_to_name_.size(); }
  std::vector<std::string> state_codes() const;

 private:
  std::unordered_map<std::string, std::string> code_to_name_;
  std::unordered_map<std::string, Resolution> alias_map_;
  std::vector<std::string> aliases_by_length_;
};

// Scans title then body: bracketed tags ("[US - XX]", "[XX]", "[City, XX]")
// first, then "US, XX" patterns and gazetteer aliases; the first match wins.
// Two-letter state abbreviations only count inside bracket or "US," context
// and must be uppercase; full names and city aliases match case-insensitively.
std::optional<LocationTag> extract_location(std::string_view title,
                                            std::string_view body,
                                            const Gazetteer& gazetteer);

struct CoverageStats {
  std::size_t total = 0;
  std::size_t us_count = 0;
  std::size_t non_us_count = 0;
  double us_fraction = 0.0;
  double non_us_fraction = 0.0;
};

CoverageStats coverage_stats(
    const std::vector<std::optional<LocationTag>>& tags);

}  // namespace tenantmine
