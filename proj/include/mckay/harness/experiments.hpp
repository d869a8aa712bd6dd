#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mckay/harness/cache.hpp"
#include "mckay/harness/manifest.hpp"

namespace mckay {

// Bumped when a result schema changes.
inline constexpr int kResultSchemaVersion = 1;

struct RunOptions {
  int workers = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool paranoid = false;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_string() const;
};

struct ExperimentResult {
  RunManifest manifest;
  // Stable, timestamp-free document; its digest is manifest.result_digest.
  // Always has "schema", "command", "pass", "counterexamples" and "runtime_ms".
  Json result;
  bool pass = false;
  std::string summary;
  CsvTable csv;
  std::vector<CacheEvent> cache_events;

  // {"manifest": ..., "result": ...}
  Json document() const;
};

const std::vector<std::string>& experiment_commands();

// Fills defaults and checks ranges; throws ValidationError on unknown keys
// or bad values.
Json normalize_parameters(const std::string& command, const Json& params);

// Worker count and cache location never enter the manifest or the result.
ExperimentResult run_experiment(const std::string& command, const Json& params, std::uint64_t seed,
                                const RunOptions& options = {});

struct ReplayOutcome {
  ExperimentResult rerun;
  std::string recorded_digest;
  bool digest_matches = false;
  // Re-evaluation of stored counterexample matrices, when the command has any.
  Json recheck = Json::array();
};

// Accepts a run document or a counterexample artifact, re-runs its manifest
// and compares digests.
ReplayOutcome replay(const Json& artifact, const RunOptions& options = {});

}  // namespace mckay
