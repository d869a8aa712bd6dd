#include "mckay/harness/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>

#include "mckay/errors.hpp"

namespace mckay {

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InvariantError("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

namespace {

Json without_timings(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items())
      if (k != "runtime_ms") out[k] = without_timings(v);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(without_timings(v));
    return out;
  }
  return j;
}

}  // namespace

std::string result_digest(const Json& result) { return sha256_hex(without_timings(result).dump()); }

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json RunManifest::to_json() const {
  return {{"command", command},
          {"parameters", parameters},
          {"seed", std::to_string(seed)},
          {"cache_version", cache_version},
          {"tool_version", tool_version},
          {"started_at", started_at},
          {"finished_at", finished_at},
          {"result_digest", result_digest}};
}

RunManifest RunManifest::from_json(const Json& j) {
  try {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.seed = std::stoull(j.at("seed").get<std::string>());
    m.cache_version = j.at("cache_version").get<int>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.started_at = j.value("started_at", "");
    m.finished_at = j.value("finished_at", "");
    m.result_digest = j.value("result_digest", "");
    return m;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed manifest: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ValidationError(std::string("malformed manifest seed: ") + e.what());
  }
}

bool RunManifest::same_run(const RunManifest& o) const {
  return command == o.command && parameters == o.parameters && seed == o.seed && cache_version == o.cache_version &&
         tool_version == o.tool_version;
}

}  // namespace mckay
