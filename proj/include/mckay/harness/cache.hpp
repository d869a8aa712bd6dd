#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mckay/an_characters.hpp"
#include "mckay/sn_characters.hpp"

namespace mckay {

inline constexpr const char* kCacheDirEnv = "MCKAY_CACHE_DIR";

struct CacheEvent {
  enum class Kind { hit, stored, rebuilt };
  Kind kind = Kind::hit;
  std::string path;
  std::string detail;
};

// Directory of sn_<n>.table.json and an_<n>.table.json files. Without a
// directory every request builds in memory. Unreadable, corrupt or outdated
// files are rebuilt and overwritten; failures to write raise IoError.
class TableCache {
 public:
  explicit TableCache(std::optional<std::filesystem::path> dir = std::nullopt, bool paranoid = false);

  // The flag value if nonempty, else $MCKAY_CACHE_DIR if set.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag);

  SnTable sn(int n, const TableOptions& options = {});
  AnTable an(int n, const TableOptions& options = {});

  const std::optional<std::filesystem::path>& dir() const { return dir_; }
  const std::vector<CacheEvent>& events() const { return events_; }

 private:
  std::optional<std::filesystem::path> dir_;
  bool paranoid_ = false;
  std::vector<CacheEvent> events_;
};

}  // namespace mckay
