#include "core/gateway.hpp"

#include <chrono>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "core/error.hpp"
#include "core/hash.hpp"

namespace zefav {

namespace fs = std::filesystem;
using nlohmann::json;

const char* backend_kind_name(BackendKind kind) {
  return kind == BackendKind::Http ? "http" : "replay";
}

namespace {

void append_u32(std::string& buf, std::uint32_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    buf.push_back(static_cast<char>((value >> shift) & 0xff));
  }
}

void append_lp(std::string& buf, std::string_view bytes) {
  append_u32(buf, static_cast<std::uint32_t>(bytes.size()));
  buf.append(bytes.data(), bytes.size());
}

}  // namespace

std::string request_digest(const GenerationRequest& request) {
  std::string buf;
  buf.reserve(request.prompt.size() + 64);
  buf += "zefav.request.v1";
  append_lp(buf, request.prompt);
  append_lp(buf, request.model_id);
  append_u32(buf, static_cast<std::uint32_t>(request.max_tokens));
  std::uint64_t temperature_bits = 0;
  static_assert(sizeof(temperature_bits) == sizeof(request.temperature));
  std::memcpy(&temperature_bits, &request.temperature, sizeof(temperature_bits));
  for (int shift = 56; shift >= 0; shift -= 8) {
    buf.push_back(static_cast<char>((temperature_bits >> shift) & 0xff));
  }
  append_u32(buf, static_cast<std::uint32_t>(request.stop.size()));
  for (const auto& stop : request.stop) append_lp(buf, stop);
  return sha256_hex(buf);
}

ReplayStore ReplayStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::Io, "cannot open replay store: " + path);
  ReplayStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json entry;
    try {
      entry = json::parse(line);
    } catch (const json::exception& e) {
      raise(ErrorCode::Schema,
            path + ":" + std::to_string(line_no) + ": invalid JSON line: " + e.what());
    }
    if (!entry.is_object() || !entry.contains("digest") || !entry.contains("text") ||
        !entry["digest"].is_string() || !entry["text"].is_string()) {
      raise(ErrorCode::Schema, path + ":" + std::to_string(line_no) +
                                   ": expected {\"digest\": hex, \"text\": string}");
    }
    std::string digest = entry["digest"].get<std::string>();
    if (!is_hex_digest(digest)) {
      raise(ErrorCode::Schema,
            path + ":" + std::to_string(line_no) + ": not a 64-char lowercase hex digest");
    }
    store.insert(digest, entry["text"].get<std::string>());
  }
  return store;
}

void ReplayStore::insert(const std::string& digest, const std::string& text) {
  auto [it, inserted] = entries_.emplace(digest, text);
  if (!inserted && it->second != text) {
    raise(ErrorCode::DuplicateDigest,
          "digest " + digest + " maps to two different generation texts");
  }
}

std::optional<std::string> ReplayStore::lookup(const std::string& digest) const {
  auto it = entries_.find(digest);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ReplayStore::write(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) raise(ErrorCode::Io, "cannot write replay store: " + path);
  for (const auto& [digest, text] : entries_) {
    json entry = {{"digest", digest}, {"text", text}};
    out << entry.dump() << "\n";
  }
  if (!out) raise(ErrorCode::Io, "failed writing replay store: " + path);
}

ReplayStore record_replay(const std::string& run_log, const std::string& out_path) {
  ReplayStore store = ReplayStore::load(run_log);
  store.write(out_path);
  return store;
}

LlmGateway::LlmGateway(BackendConfig config) : config_(std::move(config)) {
  if (config_.parallelism < 1) raise(ErrorCode::Config, "parallelism must be >= 1");
  if (config_.mode == BackendKind::Replay) {
    if (config_.replay_path.empty()) {
      raise(ErrorCode::Config, "replay mode requires backend.replay_path");
    }
    replay_ = ReplayStore::load(config_.replay_path);
  }
  if (!config_.cache_dir.empty()) fs::create_directories(config_.cache_dir);
  if (!config_.generation_log.empty()) {
    fs::path log_path(config_.generation_log);
    if (log_path.has_parent_path()) fs::create_directories(log_path.parent_path());
    log_.open(config_.generation_log, std::ios::app);
    if (!log_) raise(ErrorCode::Io, "cannot open generation log: " + config_.generation_log);
  }
}

GenerationRequest LlmGateway::make_request(std::string prompt, Stage stage) const {
  GenerationRequest request;
  request.prompt = std::move(prompt);
  request.max_tokens = config_.max_tokens;
  request.temperature = config_.temperature;
  request.stop = config_.stop;
  request.model_id = config_.model_id;
  request.stage_tag = stage;
  return request;
}

GenerationResponse LlmGateway::generate(const GenerationRequest& request) {
  if (request.prompt.empty()) raise(ErrorCode::Invalid, "generation request has an empty prompt");
  if (request.max_tokens < 1) raise(ErrorCode::Invalid, "max_tokens must be >= 1");
  if (request.temperature < 0) raise(ErrorCode::Invalid, "temperature must be >= 0");

  GenerationResponse response;
  response.request_digest = request_digest(request);
  response.backend = config_.mode;

  if (auto cached = cache_lookup(response.request_digest)) {
    response.text = *cached;
    response.cached = true;
    log_generation(response.request_digest, response.text);
    return response;
  }

  if (config_.mode == BackendKind::Replay) {
    auto canned = replay_->lookup(response.request_digest);
    if (!canned) {
      raise(ErrorCode::ReplayMiss,
            "replay store has no entry for digest " + response.request_digest);
    }
    response.text = *canned;
  } else {
    auto start = std::chrono::steady_clock::now();
    response.text = call_http(request);
    auto elapsed = std::chrono::steady_clock::now() - start;
    response.latency_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }

  cache_store(response.request_digest, request, response.text);
  log_generation(response.request_digest, response.text);
  return response;
}

std::string LlmGateway::call_http(const GenerationRequest& request) {
  if (config_.base_url.empty()) raise(ErrorCode::Config, "backend.base_url is not set");

  json body;
  body["model"] = request.model_id;
  body["max_tokens"] = request.max_tokens;
  body["temperature"] = request.temperature;
  if (!request.stop.empty()) body["stop"] = request.stop;
  const char* path = nullptr;
  if (config_.api_style == ApiStyle::Chat) {
    body["messages"] = json::array({{{"role", "user"}, {"content", request.prompt}}});
    path = "/v1/chat/completions";
  } else {
    body["prompt"] = request.prompt;
    path = "/v1/completions";
  }
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  // Bounded-parallelism gate: at most `parallelism` requests in flight.
  {
    std::unique_lock lock(gate_mutex_);
    gate_cv_.wait(lock, [&] { return in_flight_ < config_.parallelism; });
    ++in_flight_;
  }
  struct GateRelease {
    LlmGateway* self;
    ~GateRelease() {
      {
        std::lock_guard lock(self->gate_mutex_);
        --self->in_flight_;
      }
      self->gate_cv_.notify_one();
    }
  } release{this};

  std::string last_failure = "no attempt made";
  const int attempts = config_.retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      auto delay = std::chrono::milliseconds(config_.retry_backoff_ms) * (1L << (attempt - 1));
      std::this_thread::sleep_for(delay);
    }
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(std::chrono::milliseconds(config_.timeout_ms));
    client.set_read_timeout(std::chrono::milliseconds(config_.timeout_ms));
    client.set_write_timeout(std::chrono::milliseconds(config_.timeout_ms));

    auto result = client.Post(path, headers, payload, "application/json");
    if (!result) {
      last_failure = "transport error: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status == 429 || result->status >= 500) {
      last_failure = "http status " + std::to_string(result->status);
      continue;
    }
    if (result->status != 200) {
      raise(ErrorCode::Backend, "backend returned http status " + std::to_string(result->status) +
                                    " for " + config_.base_url + path);
    }

    json parsed;
    try {
      parsed = json::parse(result->body);
    } catch (const json::exception& e) {
      raise(ErrorCode::ResponseMalformed, "backend response is not JSON: " + std::string(e.what()));
    }
    try {
      const json& choice = parsed.at("choices").at(0);
      if (config_.api_style == ApiStyle::Chat) {
        return choice.at("message").at("content").get<std::string>();
      }
      return choice.at("text").get<std::string>();
    } catch (const json::exception&) {
      raise(ErrorCode::ResponseMalformed,
            "backend response lacks generated text (choices[0])");
    }
  }
  raise(ErrorCode::Backend, "backend unreachable after " + std::to_string(attempts) +
                                " attempts: " + last_failure);
}

std::optional<std::string> LlmGateway::cache_lookup(const std::string& digest) const {
  if (config_.cache_dir.empty()) return std::nullopt;
  fs::path path = fs::path(config_.cache_dir) / (digest + ".txt");
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void LlmGateway::cache_store(const std::string& digest, const GenerationRequest& request,
                             const std::string& text) {
  if (config_.cache_dir.empty()) return;
  fs::path final_path = fs::path(config_.cache_dir) / (digest + ".txt");
  // Entries are immutable once written; concurrent writers of the same digest
  // write identical bytes, so rename-over is harmless.
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  fs::path tmp_path = final_path;
  tmp_path += suffix.str();
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::Io, "cannot write cache entry: " + tmp_path.string());
    out << text;
  }
  fs::rename(tmp_path, final_path);

  json meta;
  meta["model_id"] = request.model_id;
  meta["max_tokens"] = request.max_tokens;
  meta["temperature"] = request.temperature;
  meta["stop"] = request.stop;
  meta["stage"] = stage_name(request.stage_tag);
  meta["prompt"] = request.prompt;
  fs::path meta_path = fs::path(config_.cache_dir) / (digest + ".json");
  fs::path meta_tmp = meta_path;
  meta_tmp += suffix.str();
  {
    std::ofstream out(meta_tmp, std::ios::binary | std::ios::trunc);
    if (out) out << meta.dump(2) << "\n";
  }
  fs::rename(meta_tmp, meta_path);
}

void LlmGateway::log_generation(const std::string& digest, const std::string& text) {
  if (!log_.is_open()) return;
  json entry = {{"digest", digest}, {"text", text}};
  std::lock_guard lock(log_mutex_);
  log_ << entry.dump() << "\n";
  log_.flush();
}

}  // namespace zefav
