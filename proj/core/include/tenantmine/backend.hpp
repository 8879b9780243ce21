#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tenantmine/taxonomy.hpp"

namespace tenantmine {

enum class BackendKind { http_chat, mock };

struct BackendConfig {
  BackendKind kind = BackendKind::mock;
  std::string endpoint;  // e.g. http://127.0.0.1:8080/v1/chat/completions
  std::string model = "gpt-4";
  double temperature = 1.0;  // alternate low-randomness setting: 0.2
  int max_retries = 3;
  int timeout_ms = 30000;
  int backoff_initial_ms = 250;
  int concurrency = 4;
  std::filesystem::path cache_dir;  // empty disables caching
  std::filesystem::path keyword_table;  // mock scoring table
  std::string token_env = "TENANTMINE_API_TOKEN";
};

struct CompletionRequest {
  std::string prompt;
  int run_index = 0;
  // Retry salt bumped by the caller when a response fails to parse, so a
  // fresh completion is fetched instead of the cached one.
  int attempt = 0;
};

struct CompletionResponse {
  std::string text;
  int attempts = 1;  // HTTP attempts including retries; 1 for mock/cache
  bool from_cache = false;
};

class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual CompletionResponse complete(const CompletionRequest& request) = 0;
  virtual std::string model_id() const = 0;
  virtual double temperature() const = 0;
};

// Deterministic offline stand-in: scores every taxonomy topic by keyword
// occurrence counts over the prompt text and formats the top three as
// "{topic: weight; ...}". Identical across run indices by design.
class MockBackend : public CompletionBackend {
 public:
  MockBackend(const BackendConfig& config, const Taxonomy& taxonomy);

  CompletionResponse complete(const CompletionRequest& request) override;
  std::string model_id() const override { return "mock"; }
  double temperature() const override { return temperature_; }

  // Test hook: intercepts the canned response (fault injection).
  using ResponseHook =
      std::function<std::string(const CompletionRequest&, const std::string&)>;
  void set_response_hook(ResponseHook hook) { hook_ = std::move(hook); }

  std::size_t calls() const { return calls_; }

 private:
  const Taxonomy& taxonomy_;
  double temperature_ = 1.0;
  std::vector<std::vector<std::string>> keywords_;  // per topic index
  ResponseHook hook_;
  std::size_t calls_ = 0;
};

// Chat-completion client: posts {model, temperature, messages:[{role:"user",
// content}]} and returns the first choice's message content. Responses are
// cached on disk keyed by hash(model, temperature, run index, attempt,
// prompt); 429/5xx and transport failures are retried with exponential
// backoff (Retry-After honored).
class HttpChatBackend : public CompletionBackend {
 public:
  explicit HttpChatBackend(const BackendConfig& config);

  CompletionResponse complete(const CompletionRequest& request) override;
  std::string model_id() const override { return config_.model; }
  double temperature() const override { return config_.temperature; }

 private:
  std::filesystem::path cache_path(const CompletionRequest& request) const;

  BackendConfig config_;
  std::string base_url_;
  std::string path_;
};

std::unique_ptr<CompletionBackend> make_backend(const BackendConfig& config,
                                                const Taxonomy& taxonomy);

}  // namespace tenantmine
