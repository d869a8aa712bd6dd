#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/harness/experiments.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

const std::map<std::string, std::string> kDescriptions = {
    {"sn-table", "Build and validate the S_n character table"},
    {"an-table", "Build and validate the A_n character table"},
    {"mckay", "McKay graph diameters; finite exactly for faithful characters"},
    {"covering", "Covering exponents; finite only for faithful characters"},
    {"theorem2-sweep", "Two-phase diameter-ratio sweep over A_n"},
    {"prop54", "Products of l non-linear characters cover Irr(G)"},
    {"staircase", "dim(staircase(m))^11 >= (n!)^5"},
    {"st1", "Staircase step inequality for a range of m"},
    {"mu-check", "Branch partitions are never self-conjugate after adding a node"},
    {"kst-check", "Split A_n characters satisfy degree^4 >= 2^(n-5)"},
    {"sp-exhaustive", "Exhaustive Weil-character checks on Sp_2n(q), q even"},
    {"omega-identities", "Weil restriction identities and ratio bounds on sampled orthogonal groups"},
    {"ratio-check", "Character ratio bounds on sampled classical groups"},
    {"sigma-bounds", "Certified Sigma_1, Sigma_2 enclosures against 1/2"},
    {"sest-check", "Centralizer-exponent brute force"},
    {"constants", "Numeric constants ledger"},
};

std::string flag_name(const std::string& key) {
  std::string s = key;
  for (char& ch : s)
    if (ch == '_') ch = '-';
  return "--" + s;
}

std::string default_text(const mckay::Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ",") + e.dump();
    return out;
  }
  return v.dump();
}

// "3..40" into {3, 40}
std::pair<std::string, std::string> split_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw mckay::ValidationError("range must look like LO..HI");
  return {text.substr(0, pos), text.substr(pos + 2)};
}

void write_text(const fs::path& path, const std::string& text) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw mckay::IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw mckay::IoError("cannot write " + path.string());
  out << text;
  if (!out) throw mckay::IoError("write failed for " + path.string());
}

struct Globals {
  std::uint64_t seed = 1;
  std::string cache_dir;
  int workers = 1;
  std::string format = "json";
  std::string out_dir;
  bool paranoid = false;
  std::string replay_file;
};

void emit(const mckay::ExperimentResult& r, const Globals& g) {
  if (g.format == "json") std::cout << r.document().dump(2) << "\n";
  else if (g.format == "csv") std::cout << r.csv.to_string();
  else std::cout << r.summary;
  for (const auto& e : r.cache_events)
    if (e.kind == mckay::CacheEvent::Kind::rebuilt) std::cerr << "cache: rebuilt " << e.path << " (" << e.detail << ")\n";
}

// Reports always go to an explicit output directory; counterexamples also to
// the default one.
void write_artifacts(const mckay::ExperimentResult& r, const Globals& g) {
  const bool explicit_dir = !g.out_dir.empty();
  if (!explicit_dir && r.pass) return;
  const fs::path dir = fs::path(explicit_dir ? g.out_dir : "mckay-out") / r.manifest.command;
  if (explicit_dir) {
    write_text(dir / "result.json", r.document().dump(2) + "\n");
    write_text(dir / "summary.txt", r.summary);
    if (!r.csv.header.empty()) write_text(dir / "table.csv", r.csv.to_string());
  }
  if (!r.pass) {
    const mckay::Json artifact = {{"manifest", r.manifest.to_json()},
                                  {"counterexamples", r.result.at("counterexamples")}};
    write_text(dir / "counterexamples.json", artifact.dump(2) + "\n");
    std::cerr << "counterexamples written to " << (dir / "counterexamples.json").string() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character-table, McKay-graph and classical-group verifiers", "mckay"};
  app.require_subcommand(0, 1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every sampled verifier")->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Table cache directory")->envname(mckay::kCacheDirEnv);
  app.add_option("--workers", g.workers, "Worker threads; results do not depend on it")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}))->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Directory for reports and counterexample artifacts");
  app.add_flag("--paranoid", g.paranoid, "Re-validate cached tables on load");
  app.add_option("--replay", g.replay_file, "Re-run a saved run document or counterexample artifact");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> ranges;
  for (const auto& command : mckay::experiment_commands()) {
    CLI::App* sub = app.add_subcommand(command, kDescriptions.at(command));
    const mckay::Json defaults = mckay::normalize_parameters(command, mckay::Json::object());
    for (const auto& [key, v] : defaults.items()) {
      sub->add_option(flag_name(key), values[command][key], key)->default_str(default_text(v));
    }
    if (defaults.contains("n_min") || defaults.contains("m_min"))
      sub->add_option("--range", ranges[command], "Shorthand for the LO..HI bounds");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  mckay::RunOptions options;
  options.workers = g.workers;
  options.cache_dir = mckay::TableCache::resolve_dir(g.cache_dir);
  options.paranoid = g.paranoid;

  try {
    if (!g.replay_file.empty()) {
      std::ifstream in(g.replay_file);
      if (!in) throw mckay::IoError("cannot read " + g.replay_file);
      mckay::Json artifact;
      try {
        artifact = mckay::Json::parse(in);
      } catch (const mckay::Json::exception& e) {
        throw mckay::ValidationError(std::string("replay file is not JSON: ") + e.what());
      }
      const mckay::ReplayOutcome o = mckay::replay(artifact, options);
      emit(o.rerun, g);
      std::cerr << "replay: digest " << (o.digest_matches ? "matches" : "DIFFERS") << " (recorded "
                << o.recorded_digest << ", now " << o.rerun.manifest.result_digest << ")\n";
      if (!o.recheck.empty()) std::cerr << "replay: stored elements re-checked: " << o.recheck.dump() << "\n";
      return o.digest_matches && o.rerun.pass ? kExitPass : kExitFail;
    }

    const auto subs = app.get_subcommands();
    if (subs.empty()) {
      std::cout << app.help();
      return kExitInvalid;
    }
    const std::string command = subs.front()->get_name();
    mckay::Json params = mckay::Json::object();
    for (const auto& [key, text] : values[command]) {
      if (text.empty()) continue;
      const mckay::Json defaults = mckay::normalize_parameters(command, mckay::Json::object());
      if (defaults.at(key).is_array()) {
        mckay::Json list = mckay::Json::array();
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
        params[key] = list;
      } else {
        params[key] = text;
      }
    }
    if (const std::string& r = ranges[command]; !r.empty()) {
      const auto [lo, hi] = split_range(r);
      const bool m_keys = mckay::normalize_parameters(command, mckay::Json::object()).contains("m_min");
      params[m_keys ? "m_min" : "n_min"] = lo;
      params[m_keys ? "m_max" : "n_max"] = hi;
    }
    const mckay::ExperimentResult r = mckay::run_experiment(command, params, g.seed, options);
    emit(r, g);
    write_artifacts(r, g);
    return r.pass ? kExitPass : kExitFail;
  } catch (const mckay::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const mckay::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const mckay::InvariantError& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    const fs::path dir = fs::path(g.out_dir.empty() ? "mckay-out" : g.out_dir);
    try {
      write_text(dir / "invariant_failure.json",
                 mckay::Json{{"argv", std::vector<std::string>(argv, argv + argc)}, {"error", e.what()}}.dump(2) + "\n");
    } catch (const mckay::IoError&) {
    }
    return kExitFail;
  }
}
