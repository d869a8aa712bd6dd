#include "mckay/harness/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/harness/table_io.hpp"

namespace mckay {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  if (ec) throw IoError("cannot create cache directory " + p.parent_path().string() + ": " + ec.message());
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, p, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
}

// Load, falling back to build-and-store on any problem with the file.
template <typename Table, typename Build, typename Decode, typename Encode, typename Validate>
Table load_or_build(const std::optional<fs::path>& dir, const std::string& name, bool paranoid,
                    std::vector<CacheEvent>& events, Build build, Decode decode, Encode encode, Validate validate) {
  if (!dir) return build();
  const fs::path path = *dir / name;
  std::string problem;
  if (const auto text = read_file(path)) {
    try {
      Table t = decode(Json::parse(*text));
      if (paranoid) validate(t);
      events.push_back({CacheEvent::Kind::hit, path.string(), paranoid ? "validated" : ""});
      return t;
    } catch (const Json::exception& e) {
      problem = std::string("unparseable: ") + e.what();
    } catch (const IoError& e) {
      problem = e.what();
    } catch (const InvariantError& e) {
      problem = std::string("failed validation: ") + e.what();
    }
  }
  Table t = build();
  write_file(path, canonical_dump(encode(t)));
  if (problem.empty()) events.push_back({CacheEvent::Kind::stored, path.string(), ""});
  else events.push_back({CacheEvent::Kind::rebuilt, path.string(), problem});
  return t;
}

}  // namespace

TableCache::TableCache(std::optional<fs::path> dir, bool paranoid) : dir_(std::move(dir)), paranoid_(paranoid) {}

std::optional<fs::path> TableCache::resolve_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

SnTable TableCache::sn(int n, const TableOptions& options) {
  return load_or_build<SnTable>(
      dir_, "sn_" + std::to_string(n) + ".table.json", paranoid_, events_, [&] { return build_sn_table(n, options); },
      [&](const Json& j) {
        SnTable t = sn_table_from_json(j);
        if (t.n != n) throw IoError("cache file holds a table for n = " + std::to_string(t.n));
        return t;
      },
      sn_table_to_json, validate_sn_table);
}

AnTable TableCache::an(int n, const TableOptions& options) {
  return load_or_build<AnTable>(
      dir_, "an_" + std::to_string(n) + ".table.json", paranoid_, events_,
      [&] {
        AnTable t = build_an_table(sn(n, options));
        validate_an_table(t);
        return t;
      },
      [&](const Json& j) {
        AnTable t = an_table_from_json(j);
        if (t.n != n) throw IoError("cache file holds a table for n = " + std::to_string(t.n));
        return t;
      },
      an_table_to_json, validate_an_table);
}

}  // namespace mckay
