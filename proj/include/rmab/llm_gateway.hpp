#pragma once

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace rmab::llm {

struct CompletionRequest {
  std::string prompt_text;
  double temperature = 1.0;
  int max_output_tokens = 1024;
  // Free-form routing tag, e.g. "generation:<run>:g1:c2" or
  // "reflection:<run>:g1". The scripted provider matches on it.
  std::string request_tag;
};

struct CompletionResult {
  std::string text;
  std::string provider_id;
  std::chrono::milliseconds latency{0};
  int attempt_count = 1;
};

class CompletionProvider {
 public:
  virtual ~CompletionProvider() = default;
  virtual CompletionResult complete(const CompletionRequest& request) = 0;
  virtual std::string id() const = 0;
};

// Deterministic provider for tests and offline runs. Entries are consumed in
// file order; each call takes the first unconsumed entry whose tag pattern
// (ECMAScript regex, searched) matches the request tag.
class ScriptedProvider : public CompletionProvider {
 public:
  struct Entry {
    std::string tag_pattern;
    std::string response_text;
  };

  explicit ScriptedProvider(std::vector<Entry> entries);
  explicit ScriptedProvider(const std::filesystem::path& script_file);
  static std::vector<Entry> entries_from_json(const nlohmann::json& doc);
  static std::vector<Entry> load_script(const std::filesystem::path& path);

  CompletionResult complete(const CompletionRequest& request) override;
  std::string id() const override { return "scripted"; }
  std::size_t remaining() const;

 private:
  struct Slot {
    Entry entry;
    bool consumed = false;
  };
  std::vector<Slot> slots_;
  mutable std::mutex mutex_;
};

struct HttpProviderConfig {
  std::string endpoint;  // e.g. http://127.0.0.1:8080/v1/complete
  std::string model;
  std::string credential;  // sent as a bearer token when non-empty
  int max_attempts = 4;
  int backoff_ms = 250;  // doubled per retry
};

// Minimal JSON-over-HTTP completion client. POSTs
//   {"model", "prompt", "temperature", "max_output_tokens"}
// and expects {"text": "..."} back. Connection failures and 5xx/429 are
// retried with exponential backoff.
class HttpProvider : public CompletionProvider {
 public:
  explicit HttpProvider(HttpProviderConfig config);
  CompletionResult complete(const CompletionRequest& request) override;
  std::string id() const override;

 private:
  HttpProviderConfig config_;
  std::string host_;
  int port_ = 80;
  std::string path_;
};

// JSON-lines sink for everything a run did: every prompt/response pair plus
// search events. The credential is never written here.
class Transcript {
 public:
  Transcript() = default;  // in-memory only
  explicit Transcript(const std::filesystem::path& path);
  void append(const nlohmann::json& line);
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::optional<std::ofstream> file_;
  std::vector<std::string> lines_;
  std::mutex mutex_;
};

struct GatewayConfig {
  int min_interval_ms = 0;  // rate limit between outbound requests
  int concurrency = 1;      // outbound requests in flight at once
};

// Uniform completion surface over a provider: serializes requests up to the
// concurrency cap, enforces the rate limit and logs each call to the
// transcript.
class Gateway {
 public:
  Gateway(std::shared_ptr<CompletionProvider> provider, GatewayConfig config,
          Transcript* transcript);

  CompletionResult complete(const CompletionRequest& request);

 private:
  std::shared_ptr<CompletionProvider> provider_;
  GatewayConfig config_;
  Transcript* transcript_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point next_allowed_;
  int in_flight_ = 0;
  std::condition_variable slot_free_;
};

}  // namespace rmab::llm
