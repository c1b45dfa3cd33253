#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "loccoh/analysis.hpp"
#include "loccoh/cache.hpp"
#include "loccoh/io.hpp"
#include "loccoh/report.hpp"

using namespace loccoh;
namespace fs = std::filesystem;

namespace {

SquareFreeIdeal fixture(const std::string& name) {
  return load_ideal(std::string(LOCCOH_FIXTURE_DIR) + "/" + name);
}

class TempDir {
public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("loccoh-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

private:
  fs::path path_;
};

} // namespace

TEST(Parse, GeneratorsAndPrimes) {
  const auto I = parse_ideal_text(R"({"variables":["x","y","z"],"ideal":{"generators":[["x","y"],["z"],["y","z"]]}})");
  EXPECT_EQ(I.generators(), (std::vector<VarSet>{VarSet::of({0, 1}), VarSet::of({2})}));
  const auto J = parse_ideal_text(R"({"variables":["x","y","z"],"ideal":{"intersection_of_primes":[["x"],["y","z"]]}})");
  EXPECT_EQ(J.generators(), (std::vector<VarSet>{VarSet::of({0, 1}), VarSet::of({0, 2})}));
  EXPECT_TRUE(parse_ideal_text(R"({"variables":["x"],"ideal":{"generators":[]}})").is_zero());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_ideal_text("not json"), InputError);
  EXPECT_THROW(parse_ideal_text(R"({"variables":["x"]})"), InputError);
  EXPECT_THROW(parse_ideal_text(R"({"variables":["x"],"ideal":{"generators":[["w"]]}})"), InputError);
  EXPECT_THROW(parse_ideal_text(R"({"variables":["x","x"],"ideal":{"generators":[]}})"), InputError);
  EXPECT_THROW(parse_ideal_text(R"({"variables":["x"],"ideal":{"generators":[[1]]}})"), InputError);
  EXPECT_THROW(parse_ideal_text(R"({"variables":["x"],"ideal":{"generators":[],"intersection_of_primes":[]}})"),
               InputError);
  EXPECT_THROW(parse_ideal_text(R"({"variables":["x"],"ideal":{"intersection_of_primes":[[]]}})"), InputError);
  EXPECT_THROW(load_ideal("/nonexistent/ideal.json"), InputError);
}

TEST(Parse, VariableCapOverride) {
  std::string vars;
  for (int i = 0; i < 18; ++i) vars += (i ? ",\"v" : "\"v") + std::to_string(i) + "\"";
  const std::string doc = R"({"variables":[)" + vars + R"(],"ideal":{"generators":[["v0"]]}})";
  EXPECT_THROW(parse_ideal_text(doc), CapExceeded);
  EXPECT_EQ(parse_ideal_text(doc, Limits{18}).n(), 18);
}

TEST(Parse, Monomials) {
  const VariableContext ctx({"x", "y", "z"});
  EXPECT_EQ(parse_monomial(ctx, "x*z").support, VarSet::of({0, 2}));
  EXPECT_EQ(parse_monomial(ctx, "y,x").support, VarSet::of({0, 1}));
  EXPECT_EQ(parse_monomial(ctx, "z y").support, VarSet::of({1, 2}));
  EXPECT_THROW(parse_monomial(ctx, "x*x"), InputError);
  EXPECT_THROW(parse_monomial(ctx, "w"), InputError);
}

TEST(Parse, Fields) {
  EXPECT_TRUE(parse_field("QQ").is_rational());
  EXPECT_EQ(parse_field("7").characteristic(), 7u);
  EXPECT_EQ(parse_field("GF(101)").characteristic(), 101u);
  EXPECT_THROW(parse_field("9"), InputError);
  EXPECT_THROW(parse_field("banana"), InputError);
}

TEST(RoundTrip, IdealEchoReparses) {
  for (const char* name : {"ex43.json", "ex45_n3.json", "ex46.json", "ex47.json", "ex313.json", "two_planes.json"}) {
    const auto I = load_ideal(std::string(LOCCOH_FIXTURE_DIR) + "/" + name, Limits{16, 20});
    EXPECT_EQ(parse_ideal(ideal_to_json(I)), I) << name;
  }
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto I = random_ideal(VariableContext::standard(2 + trial % 7), 6, rng);
    EXPECT_EQ(parse_ideal(json::parse(ideal_to_json(I).dump())), I);
  }
}

TEST(RoundTrip, TableJson) {
  const auto t = local_cohomology_table(fixture("two_planes.json"));
  const auto doc = table_to_json(t);
  EXPECT_EQ(doc["entries"].size(), 3u);
  EXPECT_EQ(doc["entries"][0]["pattern"], json({"x1", "x2"}));
  EXPECT_EQ(table_from_json(json::parse(doc.dump())), t);
}

TEST(Cache, KeyCanonicalization) {
  auto ctx = VariableContext::standard(4);
  const SquareFreeIdeal a(ctx, {VarSet::of({0, 1}), VarSet::of({2, 3})});
  const SquareFreeIdeal b(ctx, {VarSet::of({2, 3}), VarSet::of({0, 1}), VarSet::of({0, 1, 2})});
  EXPECT_EQ(canonical_key(a, {}), canonical_key(b, {}));
  EXPECT_NE(canonical_key(a, {}), canonical_key(a, FieldSpec::prime_field(2)));
  EXPECT_EQ(cache_file_name(a, {}).size(), 21u);
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Cache, HitMissAndField) {
  TempDir dir;
  RunOptions opts;
  opts.cache_dir = dir.path();
  const auto I = fixture("two_planes.json");
  const auto first = obtain_table(I, opts);
  EXPECT_EQ(first.cache_status, "miss");
  const auto second = obtain_table(I, opts);
  EXPECT_EQ(second.cache_status, "hit");
  EXPECT_EQ(second.table, first.table);

  RunOptions modp = opts;
  modp.table.field = FieldSpec::prime_field(3);
  EXPECT_EQ(obtain_table(I, modp).cache_status, "miss");

  // Same ideal with generators listed in another order.
  const auto permuted = parse_ideal_text(
      R"({"variables":["x1","x2","x3","x4"],"ideal":{"generators":[["x2","x4"],["x1","x3"],["x2","x3"],["x1","x4"]]}})");
  EXPECT_EQ(obtain_table(permuted, opts).cache_status, "hit");

  EXPECT_EQ(TableCache(dir.path()).stats().entries, 2u);
  EXPECT_EQ(TableCache(dir.path()).clear(), 2u);
  EXPECT_EQ(TableCache(dir.path()).stats().entries, 0u);
}

TEST(Cache, CorruptEntryIsEvicted) {
  TempDir dir;
  const auto I = fixture("two_planes.json");
  TableCache cache(dir.path());
  cache.store(local_cohomology_table(I));
  const auto path = dir.path() / cache_file_name(I, {});
  ASSERT_TRUE(fs::exists(path));
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"engine_version\": \"loccoh-1.0.0\", \"key\": tru";
  }
  EXPECT_FALSE(cache.lookup(I, {}).has_value());
  EXPECT_FALSE(fs::exists(path));

  // Well-formed JSON whose table disagrees with the key.
  cache.store(local_cohomology_table(I));
  auto doc = json::parse(std::ifstream(path));
  doc["table"]["ideal"]["ideal"]["generators"] = json::array({json::array({"x1"})});
  std::ofstream(path, std::ios::trunc) << doc.dump();
  EXPECT_FALSE(cache.lookup(I, {}).has_value());
  EXPECT_FALSE(fs::exists(path));
}

TEST(Cache, VersionMismatchIsMiss) {
  TempDir dir;
  const auto I = fixture("two_planes.json");
  TableCache(dir.path(), "older-engine").store(local_cohomology_table(I));
  EXPECT_FALSE(TableCache(dir.path()).lookup(I, {}).has_value());
  EXPECT_TRUE(TableCache(dir.path(), "older-engine").lookup(I, {}).has_value());
}

TEST(Report, DeterministicAndCacheTransparent) {
  TempDir dir;
  const auto I = fixture("ex43.json");
  RunOptions cold;
  const auto a = analyze_document(I, cold);
  const auto b = analyze_document(I, cold);
  EXPECT_EQ(a["table"].dump(), b["table"].dump());

  RunOptions cached;
  cached.cache_dir = dir.path();
  const auto miss = analyze_document(I, cached);
  const auto hit = analyze_document(I, cached);
  EXPECT_EQ(miss["cache"], "miss");
  EXPECT_EQ(hit["cache"], "hit");
  EXPECT_EQ(hit["table"].dump(), a["table"].dump());
  EXPECT_EQ(hit["verdicts"], a["verdicts"]);
  EXPECT_TRUE(hit["verdicts"]["vanishing_top_minus_one"].get<bool>());
  EXPECT_EQ(parse_ideal(hit["ideal"]), I);
}

TEST(Report, TextView) {
  const auto doc = json::parse(R"({"a":{"b":1,"c":[1,2]},"d":[{"e":true}]})");
  EXPECT_EQ(to_text(doc), "a.b: 1\na.c: [1,2]\nd[0].e: true\n");
}
