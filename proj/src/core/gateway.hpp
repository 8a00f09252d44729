#pragma once

#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/prompts.hpp"

namespace zefav {

struct GenerationRequest {
  std::string prompt;
  int max_tokens = 2048;
  double temperature = 0.0;
  std::vector<std::string> stop;
  std::string model_id;
  Stage stage_tag = Stage::Verdict;
};

enum class BackendKind { Http, Replay };
const char* backend_kind_name(BackendKind kind);

struct GenerationResponse {
  std::string text;
  BackendKind backend = BackendKind::Http;
  bool cached = false;
  long latency_ms = 0;
  std::string request_digest;
};

// Stable SHA-256 over a canonical length-prefixed serialization of
// (prompt, model_id, max_tokens, temperature, stop). The stage tag does not
// participate, so identical prompts are shared across pipeline stages.
std::string request_digest(const GenerationRequest& request);

enum class ApiStyle { Chat, Completions };

struct BackendConfig {
  BackendKind mode = BackendKind::Http;
  std::string base_url;
  std::string model_id;
  ApiStyle api_style = ApiStyle::Chat;
  std::string api_key_env = "ZEFAV_API_KEY";
  int timeout_ms = 60000;
  int retries = 3;
  int retry_backoff_ms = 200;
  int parallelism = 4;
  std::string cache_dir;       // empty disables the response cache
  std::string replay_path;     // required when mode == Replay
  int max_tokens = 2048;
  double temperature = 0.0;
  std::vector<std::string> stop;
  std::string generation_log;  // JSONL of {"digest","text"}; empty disables
};

// Closed-world map from request digest to canned generation text.
class ReplayStore {
 public:
  ReplayStore() = default;
  // JSON Lines, one {"digest": hex, "text": string} object per line.
  static ReplayStore load(const std::string& path);

  // Throws Error{DuplicateDigest} when the digest is present with different text.
  void insert(const std::string& digest, const std::string& text);
  std::optional<std::string> lookup(const std::string& digest) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::string>& entries() const { return entries_; }

  // Deterministic (digest-sorted) JSONL; idempotent for identical inputs.
  void write(const std::string& path) const;

 private:
  std::map<std::string, std::string> entries_;
};

// Reads a run log of (digest, text) pairs and writes a deduplicated replay
// store. Throws Error{DuplicateDigest} when one digest maps to two texts.
ReplayStore record_replay(const std::string& run_log, const std::string& out_path);

// Uniform access to generation backends with a content-addressed response
// cache and a bounded-parallelism gate on outbound HTTP requests. Safe for
// concurrent callers.
class LlmGateway {
 public:
  explicit LlmGateway(BackendConfig config);

  GenerationResponse generate(const GenerationRequest& request);

  const BackendConfig& config() const { return config_; }

  // Fills model/max_tokens/temperature/stop from the backend config.
  GenerationRequest make_request(std::string prompt, Stage stage) const;

 private:
  std::string call_http(const GenerationRequest& request);
  std::optional<std::string> cache_lookup(const std::string& digest) const;
  void cache_store(const std::string& digest, const GenerationRequest& request,
                   const std::string& text);
  void log_generation(const std::string& digest, const std::string& text);

  BackendConfig config_;
  std::optional<ReplayStore> replay_;

  std::mutex gate_mutex_;
  std::condition_variable gate_cv_;
  int in_flight_ = 0;

  std::mutex log_mutex_;
  std::ofstream log_;
};

}  // namespace zefav
