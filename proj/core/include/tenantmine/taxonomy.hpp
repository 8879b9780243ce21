#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tenantmine {

struct TaxonomyTopic {
  std::string id;       // stable snake_case id
  std::string display;  // name as it appears in the classification prompt
};

// The fixed 14-category tenant-concern taxonomy driving the classification
// prompt. Order matters: it is the order the categories are listed in the
// prompt and the tie-break order for fuzzy matching.
class Taxonomy {
 public:
  static const Taxonomy& tenant_concerns();

  const std::vector<TaxonomyTopic>& topics() const { return topics_; }
  int size() const { return static_cast<int>(topics_.size()); }
  const TaxonomyTopic& at(int index) const { return topics_[index]; }

  const TaxonomyTopic* find_id(std::string_view id) const;

  // Maps a raw response name to a topic index: normalization (lowercase,
  // punctuation stripped, trailing "issue(s)" dropped), then exact match,
  // then plural stripping, then edit distance <= 2, then an exact match on
  // the trailing words. Deterministic; returns nullopt beyond the threshold.
  std::optional<int> match_name(std::string_view raw) const;

 private:
  explicit Taxonomy(std::vector<TaxonomyTopic> topics);

  std::vector<TaxonomyTopic> topics_;
};

// Total map from taxonomy ids to display topics used in reports.
class MergeMap {
 public:
  static MergeMap identity(const Taxonomy& taxonomy);
  // Default reporting merge: pest and mold fold into "health hazards".
  static MergeMap standard(const Taxonomy& taxonomy);
  // Identity plus explicit overrides (taxonomy id -> display topic).
  static MergeMap with_merges(const Taxonomy& taxonomy,
                              const std::map<std::string, std::string>& merges);

  const std::string& display_of(std::string_view taxonomy_id) const;
  // Distinct display topics, sorted.
  std::vector<std::string> display_topics() const;
  const std::map<std::string, std::string>& mapping() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
};

int levenshtein(std::string_view a, std::string_view b);

}  // namespace tenantmine
