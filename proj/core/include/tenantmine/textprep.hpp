#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tenantmine {

struct TokenizedDoc {
  std::string post_id;
  std::vector<std::string> tokens;
};

class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::vector<std::string> terms);

  // One lowercase term per line, '#' comments and blank lines ignored.
  static Stoplist load(const std::filesystem::path& path);

  bool contains(std::string_view token) const;
  std::size_t size() const { return terms_.size(); }

 private:
  std::unordered_set<std::string> terms_;
};

// Lowercases, strips punctuation/digits (any non-letter separates tokens)
// and drops 1-character tokens. Non-ASCII codepoints act as separators.
std::vector<std::string> normalize_tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const Stoplist& stoplist);

// Deterministic suffix reduction: plural -s/-es/-ies plus -ing/-ed with
// doubled-consonant handling. Never returns an empty string.
std::string lemmatize(std::string_view token);

// tokenize -> stopword removal -> lemmatization over title + body.
TokenizedDoc prepare_doc(std::string post_id, std::string_view title,
                         std::string_view body, const Stoplist& stoplist);

class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> terms, std::vector<int> doc_freq);

  int size() const { return static_cast<int>(terms_.size()); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(int index) const { return terms_[index]; }
  int doc_freq(int index) const { return doc_freq_[index]; }
  // -1 when the term is out of vocabulary.
  int index_of(std::string_view term) const;

  std::uint64_t content_hash() const;

  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

 private:
  std::vector<std::string> terms_;  // lexicographic, index == position
  std::vector<int> doc_freq_;
  std::unordered_map<std::string, int> index_;
};

// Terms present in fewer than min_df documents or in more than
// max_df_fraction of documents are dropped; indices are assigned in
// lexicographic order. Throws ConfigError when nothing survives.
Vocabulary build_vocabulary(const std::vector<TokenizedDoc>& docs, int min_df,
                            double max_df_fraction);

struct BagOfWords {
  std::string post_id;
  // (term index, count), indices strictly increasing, counts >= 1.
  std::vector<std::pair<int, int>> counts;

  int total_tokens() const;
};

BagOfWords to_bow(const TokenizedDoc& doc, const Vocabulary& vocab);

void write_tokenized_jsonl(const std::filesystem::path& path,
                           const std::vector<TokenizedDoc>& docs);
std::vector<TokenizedDoc> read_tokenized_jsonl(const std::filesystem::path& path);

}  // namespace tenantmine
