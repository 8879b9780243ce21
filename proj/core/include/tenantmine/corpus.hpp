#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tenantmine/dates.hpp"

namespace tenantmine {

// One forum submission, the atomic analysis unit.
struct RawPost {
  std::string id;
  std::int64_t created_utc = 0;
  std::string title;
  std::string body;
  std::string author;
  int num_comments = 0;
  // Posts outside the configured date window are kept but flagged.
  bool in_window = true;
};

// A post whose body survived tombstone/blank filtering.
struct CleanPost : RawPost {};

struct Reject {
  std::size_t line_no = 0;  // 1-based
  std::string reason;
};

struct IngestResult {
  std::vector<RawPost> posts;
  std::vector<Reject> rejects;
};

// Inclusive UTC window; timestamps outside it only set RawPost::in_window.
struct DateWindow {
  std::int64_t begin_utc = 0;
  std::int64_t end_utc = 0;

  static DateWindow from_dates(CivilDate first, CivilDate last);
  bool contains(std::int64_t ts) const { return ts >= begin_utc && ts <= end_utc; }
};

// 2015-08-06 .. 2023-04-30, the default observation window.
DateWindow default_window();

struct FilterOptions {
  bool case_sensitive_tombstones = true;
  // A post with an empty body but a non-empty title is dropped by default.
  bool keep_title_only = false;
};

struct FilterResult {
  std::vector<CleanPost> posts;
  std::size_t dropped_removed = 0;
  std::size_t dropped_deleted = 0;
  std::size_t dropped_empty = 0;

  std::size_t dropped_total() const {
    return dropped_removed + dropped_deleted + dropped_empty;
  }
};

struct CorpusStats {
  std::size_t raw_count = 0;
  std::size_t clean_count = 0;
  double avg_comments = 0.0;
  double posts_per_user = 0.0;
  bool degenerate = false;  // empty clean corpus
};

// Reads UTF-8 line-delimited JSON records. Each well-formed line yields one
// RawPost in input order; malformed lines are collected as rejects, never
// silently dropped. Throws DataError if the file cannot be opened.
IngestResult ingest(const std::filesystem::path& path,
                    const DateWindow& window = default_window());

FilterResult filter_posts(const std::vector<RawPost>& posts,
                          const FilterOptions& options = {});

CorpusStats corpus_stats(const std::vector<RawPost>& raw,
                         const std::vector<CleanPost>& clean);

// Distinct-author count where each deleted/blank author sentinel counts as
// its own user.
std::size_t distinct_authors(const std::vector<CleanPost>& posts);

void write_rejects_report(const std::filesystem::path& path,
                          const std::vector<Reject>& rejects);

// Round-trippable persistence for stage artifacts.
void write_posts_jsonl(const std::filesystem::path& path,
                       const std::vector<CleanPost>& posts);
std::vector<CleanPost> read_posts_jsonl(const std::filesystem::path& path);

}  // namespace tenantmine
