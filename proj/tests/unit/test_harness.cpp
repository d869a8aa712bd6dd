#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "mckay/errors.hpp"
#include "mckay/harness/cache.hpp"
#include "mckay/harness/experiments.hpp"
#include "mckay/harness/table_io.hpp"

using namespace mckay;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mckay_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("digests ignore timing fields only") {
  const Json a = {{"x", 1}, {"runtime_ms", 5}, {"inner", {{"runtime_ms", 9}, {"y", "2"}}}};
  const Json b = {{"x", 1}, {"runtime_ms", 6}, {"inner", {{"runtime_ms", 1}, {"y", "2"}}}};
  const Json c = {{"x", 2}, {"runtime_ms", 5}, {"inner", {{"runtime_ms", 9}, {"y", "2"}}}};
  CHECK(result_digest(a) == result_digest(b));
  CHECK(result_digest(a) != result_digest(c));
}

TEST_CASE("table documents round-trip") {
  const SnTable sn = build_sn_table(7);
  const Json doc = sn_table_to_json(sn);
  const SnTable back = sn_table_from_json(Json::parse(canonical_dump(doc)));
  CHECK(back.classes == sn.classes);
  CHECK(back.chars == sn.chars);
  CHECK(back.values == sn.values);
  CHECK(canonical_dump(sn_table_to_json(back)) == canonical_dump(doc));

  const AnTable an = build_an_table(sn);
  const Json adoc = an_table_to_json(an);
  const AnTable aback = an_table_from_json(Json::parse(canonical_dump(adoc)));
  CHECK(aback.classes == an.classes);
  CHECK(aback.chars == an.chars);
  CHECK(aback.values == an.values);
  CHECK(canonical_dump(an_table_to_json(aback)) == canonical_dump(adoc));

  // every integer is a decimal string
  CHECK(doc.at("values")[0][0].is_string());
  CHECK(adoc.at("values")[0][0].at("a_num").is_string());
}

TEST_CASE("tampered documents are rejected") {
  Json doc = sn_table_to_json(build_sn_table(5));
  SUBCASE("value changed") {
    doc["values"][1][1] = "7";
    CHECK_THROWS_AS(sn_table_from_json(doc), IoError);
  }
  SUBCASE("version changed") {
    doc["version"] = kTableFormatVersion + 1;
    CHECK_THROWS_AS(sn_table_from_json(doc), IoError);
  }
  SUBCASE("wrong format") { CHECK_THROWS_AS(an_table_from_json(doc), IoError); }
  SUBCASE("class size changed with a fresh hash") {
    doc["class_sizes"][0] = "2";
    doc.erase("content_hash");
    doc["content_hash"] = sha256_hex(canonical_dump(doc));
    CHECK_THROWS_AS(sn_table_from_json(doc), IoError);
  }
}

TEST_CASE("cache stores, hits and round-trips byte-identically") {
  TempDir tmp;
  {
    TableCache cache(tmp.path);
    const AnTable t = cache.an(6);
    CHECK(t.n == 6);
    REQUIRE(cache.events().size() == 2);  // S_6 then A_6 stored
    CHECK(cache.events()[0].kind == CacheEvent::Kind::stored);
    CHECK(cache.events()[1].kind == CacheEvent::Kind::stored);
  }
  const std::string sn_bytes = slurp(tmp.path / "sn_6.table.json");
  const std::string an_bytes = slurp(tmp.path / "an_6.table.json");
  TableCache cache(tmp.path, true);
  const AnTable t = cache.an(6);
  REQUIRE(cache.events().size() == 1);
  CHECK(cache.events()[0].kind == CacheEvent::Kind::hit);
  CHECK(cache.events()[0].detail == "validated");
  CHECK(canonical_dump(an_table_to_json(t)) == an_bytes);
  CHECK(canonical_dump(sn_table_to_json(cache.sn(6))) == sn_bytes);
}

TEST_CASE("corrupt and outdated cache files are rebuilt") {
  TempDir tmp;
  TableCache(tmp.path).sn(6);
  const fs::path file = tmp.path / "sn_6.table.json";
  const std::string good = slurp(file);

  SUBCASE("truncated") {
    spit(file, good.substr(0, good.size() / 2));
    TableCache cache(tmp.path);
    cache.sn(6);
    REQUIRE(cache.events().size() == 1);
    CHECK(cache.events()[0].kind == CacheEvent::Kind::rebuilt);
  }
  SUBCASE("older version") {
    Json doc = Json::parse(good);
    doc["version"] = kTableFormatVersion - 1;
    spit(file, canonical_dump(doc));
    TableCache cache(tmp.path);
    cache.sn(6);
    REQUIRE(cache.events().size() == 1);
    CHECK(cache.events()[0].kind == CacheEvent::Kind::rebuilt);
    CHECK(cache.events()[0].detail.find("version") != std::string::npos);
  }
  SUBCASE("orthogonality broken, caught only in paranoid mode") {
    // Swap two rows of values with a fresh hash: the document stays
    // well-formed but the table is wrong.
    Json doc = Json::parse(good);
    std::swap(doc["values"][0], doc["values"][1]);
    doc.erase("content_hash");
    doc["content_hash"] = sha256_hex(canonical_dump(doc));
    spit(file, canonical_dump(doc));
    TableCache lax(tmp.path);
    lax.sn(6);
    CHECK(lax.events()[0].kind == CacheEvent::Kind::hit);
    TableCache strict(tmp.path, true);
    strict.sn(6);
    CHECK(strict.events()[0].kind == CacheEvent::Kind::rebuilt);
  }
  CHECK(slurp(file) == good);
}

TEST_CASE("cache write failures are I/O errors") {
  TempDir tmp;
  const fs::path blocker = tmp.path / "file";
  spit(blocker, "x");
  TableCache cache(blocker / "sub");
  CHECK_THROWS_AS(cache.sn(5), IoError);
}

TEST_CASE("parameters are normalized and validated") {
  const Json p = normalize_parameters("st1", Json::object());
  CHECK(p == Json{{"m_min", 3}, {"m_max", 40}});
  CHECK(normalize_parameters("st1", {{"m_min", "5"}}).at("m_min") == 5);
  CHECK(normalize_parameters("sigma-bounds", {{"qs", {"9", 2, 2}}}).at("qs") == Json{2, 9});
  CHECK_THROWS_AS(normalize_parameters("st1", {{"bogus", 1}}), ValidationError);
  CHECK_THROWS_AS(normalize_parameters("st1", {{"m_min", 50}, {"m_max", 40}}), ValidationError);
  CHECK_THROWS_AS(normalize_parameters("sp-exhaustive", {{"n", 9}}), ValidationError);
  CHECK_THROWS_AS(normalize_parameters("nope", Json::object()), ValidationError);
  CHECK(experiment_commands().size() == 16);
}

TEST_CASE("same manifest gives the same digest at any worker count") {
  const Json params = {{"samples", 60}};
  const auto a = run_experiment("omega-identities", params, 11, {1, std::nullopt, false});
  const auto b = run_experiment("omega-identities", params, 11, {4, std::nullopt, false});
  CHECK(a.pass);
  CHECK(a.manifest.same_run(b.manifest));
  CHECK(a.manifest.result_digest == b.manifest.result_digest);
  const auto c = run_experiment("omega-identities", params, 12, {1, std::nullopt, false});
  CHECK(c.manifest.result_digest != a.manifest.result_digest);

  const RunManifest m = RunManifest::from_json(Json::parse(a.manifest.to_json().dump()));
  CHECK(m.same_run(a.manifest));
  CHECK(m.result_digest == a.manifest.result_digest);
}

TEST_CASE("failing runs carry counterexamples and replay") {
  const auto r = run_experiment("sest-check", {{"n_min", 4}, {"n_max", 6}}, 1);
  CHECK_FALSE(r.pass);
  CHECK(r.result.at("counterexamples").size() == 2);
  const Json artifact = {{"manifest", r.manifest.to_json()}, {"counterexamples", r.result.at("counterexamples")}};
  const ReplayOutcome o = replay(artifact);
  CHECK(o.digest_matches);

  Json tampered = artifact;
  tampered["manifest"]["result_digest"] = std::string(64, '0');
  CHECK_FALSE(replay(tampered).digest_matches);
  CHECK_THROWS_AS(replay(Json::object()), ValidationError);
}

TEST_CASE("csv quoting") {
  CsvTable t{{"a", "b"}, {{"(3,1)", "x"}, {"plain", "q\"uote"}}};
  CHECK(t.to_string() == "a,b\n\"(3,1)\",x\nplain,\"q\"\"uote\"\n");
}
