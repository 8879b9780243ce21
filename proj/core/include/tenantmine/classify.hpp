#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tenantmine/backend.hpp"
#include "tenantmine/corpus.hpp"
#include "tenantmine/taxonomy.hpp"

namespace tenantmine {

// Prompt templates are versioned snapshots; editing them is a deliberate,
// reviewed change covered by tests.
inline constexpr int kPromptVersion = 1;

std::string build_classification_prompt(std::string_view text);
std::string build_summary_prompt(std::string_view text);

struct WeightedTopic {
  std::string topic_id;
  double weight = 0.0;
};

struct ClassificationResult {
  std::string post_id;
  // 1..3 entries, weights positive, non-increasing, summing to 1.
  std::vector<WeightedTopic> entries;
  std::string raw_response;
  std::string model;
  double temperature = 1.0;
  int attempts = 1;
};

struct ParseDiagnostics {
  std::vector<std::string> warnings;
  std::string error;
};

// Parses "topic: weight; topic: weight" responses. Case, an "issues" suffix,
// braces and light surrounding prose are tolerated; names fuzzy-match the
// taxonomy; entries sort by weight (stable on ties) and weights renormalize
// to sum to 1. Returns nullopt when nothing parseable survives.
std::optional<std::vector<WeightedTopic>> parse_classification(
    std::string_view raw, const Taxonomy& taxonomy,
    ParseDiagnostics* diagnostics = nullptr);

// Canonical "display: weight; ..." form; parse(format(x)) == x.
std::string format_classification(std::span<const WeightedTopic> entries,
                                  const Taxonomy& taxonomy);

enum class ClassifyMode { direct, with_summary };

// Prompt build -> complete -> parse, re-querying up to 2 extra times on a
// parse failure before giving up with DataError.
ClassificationResult classify_post(const CleanPost& post,
                                   CompletionBackend& backend,
                                   const Taxonomy& taxonomy, ClassifyMode mode,
                                   int run_index = 0);

// Classifies posts with a bounded worker pool; results keep corpus order.
std::vector<ClassificationResult> classify_corpus(
    const std::vector<CleanPost>& posts, CompletionBackend& backend,
    const Taxonomy& taxonomy, ClassifyMode mode, int run_index,
    int concurrency);

// Rank-1 taxonomy topic mapped to its display topic.
const std::string& main_topic(const ClassificationResult& result,
                              const MergeMap& merge);

void write_classifications_jsonl(const std::filesystem::path& path,
                                 const std::vector<ClassificationResult>& rows);
std::vector<ClassificationResult> read_classifications_jsonl(
    const std::filesystem::path& path);

}  // namespace tenantmine
