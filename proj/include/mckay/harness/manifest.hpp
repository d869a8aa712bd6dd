#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace mckay {

using Json = nlohmann::json;

std::string sha256_hex(std::string_view data);

// SHA-256 of the canonical dump of a result document, ignoring every
// "runtime_ms" field.
std::string result_digest(const Json& result);

std::string utc_timestamp();

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  int cache_version = 0;
  std::string tool_version;
  std::string started_at, finished_at;
  std::string result_digest;

  Json to_json() const;
  static RunManifest from_json(const Json& j);
  // Equal up to timestamps and digest.
  bool same_run(const RunManifest& other) const;
};

}  // namespace mckay
