#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tenantmine/rng.hpp"
#include "tenantmine/textprep.hpp"

namespace tenantmine {

struct LdaConfig {
  int k = 11;
  double alpha = 0.0;  // <= 0 selects the 50/k default
  double beta = 0.01;
  int iterations = 500;
  int burn_in = 250;
  std::uint64_t seed = 0;

  double effective_alpha() const { return alpha > 0.0 ? alpha : 50.0 / k; }
};

struct LdaModel {
  LdaConfig config;
  int vocab_size = 0;
  std::vector<std::string> doc_ids;
  std::vector<std::vector<int>> doc_tokens;  // expanded term ids
  std::vector<std::vector<int>> z;           // topic assignment per token
  std::vector<std::vector<int>> n_kw;        // K x V topic-term counts
  std::vector<int> n_k;                      // K topic totals
  std::vector<std::vector<int>> n_dk;        // D x K doc-topic counts
  std::vector<std::vector<double>> phi;      // K x V, rows sum to 1
  std::vector<std::vector<double>> theta;    // D x K, rows sum to 1

  int doc_count() const { return static_cast<int>(doc_ids.size()); }
  bool counts_consistent() const;
};

/// Collapsed Gibbs sampler. Each document owns an RNG stream derived from
/// (seed, post_id) and documents are swept in post_id order, so a fit is
/// invariant under permutation of the input corpus and exactly reproducible
/// from the seed.
class LdaSampler {
 public:
  LdaSampler(const std::vector<BagOfWords>& corpus, int vocab_size,
             const LdaConfig& config);

  void run_sweep();
  void run(int sweeps);

  int sweeps_done() const { return sweeps_done_; }
  int doc_count() const { return static_cast<int>(doc_ids_.size()); }
  int topic_of(int doc, int pos) const { return z_[doc][pos]; }
  const std::vector<int>& topic_totals() const { return n_k_; }
  int skipped_empty_docs() const { return skipped_empty_; }

  bool counts_consistent() const;

  // Snapshot of the current state with phi/theta from smoothed counts.
  LdaModel estimate() const;

 private:
  void sample_doc(int doc);

  LdaConfig config_;
  double alpha_ = 0.0;
  int vocab_size_ = 0;
  int total_tokens_ = 0;
  int skipped_empty_ = 0;
  int sweeps_done_ = 0;
  std::vector<std::string> doc_ids_;
  std::vector<std::vector<int>> tokens_;  // term id per position
  std::vector<std::vector<int>> z_;
  std::vector<std::vector<int>> n_kw_;
  std::vector<int> n_k_;
  std::vector<std::vector<int>> n_dk_;
  std::vector<int> scan_order_;  // doc indices sorted by post_id
  std::vector<Xoshiro256> streams_;
  std::vector<double> cumulative_;  // scratch
};

// Runs config.iterations sweeps and reports the final sample's estimate.
LdaModel fit_lda(const std::vector<BagOfWords>& corpus, int vocab_size,
                 const LdaConfig& config);

// Document-frequency and co-document-frequency lookups over a bag corpus.
class DocFreqIndex {
 public:
  DocFreqIndex(const std::vector<BagOfWords>& corpus, int vocab_size);

  int doc_freq(int term) const;
  int co_doc_freq(int a, int b) const;
  int doc_count() const { return doc_count_; }

 private:
  int doc_count_ = 0;
  std::vector<std::vector<int>> docs_per_term_;  // sorted doc indices
};

/// Intrinsic coherence of one ranked term list:
///   sum over pairs i < j of log((codoc(w_i, w_j) + 1) / docfreq(w_j)).
/// Terms with zero document frequency are skipped.
double umass_topic_coherence(const std::vector<int>& ranked_terms,
                             const DocFreqIndex& index);

struct CoherenceResult {
  std::vector<double> per_topic;
  double mean = 0.0;
};

CoherenceResult umass_coherence(const LdaModel& model,
                                const std::vector<BagOfWords>& corpus,
                                int top_n);

struct CoherencePoint {
  int k = 0;
  double mean_coherence = 0.0;
};

struct CoherenceCurve {
  std::vector<CoherencePoint> points;  // k strictly increasing
};

struct SelectKOptions {
  int window = 3;
  // Plateau threshold as a fraction of the curve's total range.
  double epsilon_fraction = 0.01;
  int top_n = 10;
  bool parallel = true;
};

struct SelectKResult {
  int k = 0;
  CoherenceCurve curve;
  bool fallback = false;  // plateau rule never fired; argmax used
};

/// Fits one model per K in [k_lo, k_hi] and picks the smallest K whose mean
/// forward coherence gain over the next `window` points drops to epsilon.
SelectKResult select_k(const std::vector<BagOfWords>& corpus, int vocab_size,
                       int k_lo, int k_hi, const LdaConfig& base_config,
                       const SelectKOptions& options = {});

void write_coherence_csv(const std::filesystem::path& path,
                         const CoherenceCurve& curve);

struct TopicSummary {
  int topic = 0;
  std::vector<std::pair<std::string, double>> terms;  // probability descending
  std::string label;
};

// Top-n terms by phi, ties broken lexicographically; n is clamped to V.
TopicSummary top_terms(const LdaModel& model, const Vocabulary& vocab, int k,
                       int n);

// Versioned persistence. Counts and estimates are rebuilt from the stored
// assignments, so a reload reproduces phi/theta exactly.
void save_lda_model(const std::filesystem::path& path, const LdaModel& model,
                    std::uint64_t vocab_hash);

struct LoadedLdaModel {
  LdaModel model;
  std::uint64_t vocab_hash = 0;
};

LoadedLdaModel load_lda_model(const std::filesystem::path& path);

}  // namespace tenantmine
