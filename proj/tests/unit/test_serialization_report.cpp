#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "tvlab/error.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/mr_shelling.hpp"
#include "tvlab/report.hpp"
#include "tvlab/serialization.hpp"

using namespace tvlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("tvlab-unit-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadParameter;
}

}  // namespace

TEST_CASE("complex round trip") {
  for (const SimplicialComplex& s : {build_mr(3).complex, deleted_join(build_mr(2).complex, 2), chessboard(2, 3), points(3)}) {
    const SimplicialComplex back = complex_from_json(parse_json(dump(complex_to_json(s))));
    CHECK(back.facets() == s.facets());
    REQUIRE(back.vertex_count() == s.vertex_count());
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      CHECK(back.vertices()[v].label == s.vertices()[v].label);
      CHECK(back.vertices()[v].row == s.vertices()[v].row);
      CHECK(back.vertices()[v].block == s.vertices()[v].block);
    }
  }
}

TEST_CASE("shelling round trip") {
  const BlockJoinShelling s = shelling_mr2(3);
  const ShellingOrder back = shelling_from_json(parse_json(dump(shelling_to_json(s.shelling))));
  CHECK(back.order == s.shelling.order);
  CHECK(back.witnesses == s.shelling.witnesses);
}

TEST_CASE("malformed input") {
  try {
    parse_json("{\"vertices\": [1, 2,");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK(code_of([] { complex_from_json(parse_json(R"({"vertices":[{"label":"a"}],"facets":[[0,1]]})")); }) ==
        ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { complex_from_json(parse_json(R"({"vertices":[{"label":"a"}]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { complex_from_json(parse_json(R"({"vertices":[{"label":3}],"facets":[]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { complex_from_json(parse_json(R"({"vertices":[{"label":"a"},{"label":"b"}],"facets":[[0,1],[0]]})")); }) ==
        ErrorCode::NotAntichain);
  CHECK(code_of([] { read_json_file("/nonexistent/tvlab.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("betti serialization") {
  BettiVector b;
  b.values = {0, 2, 1};
  CHECK(betti_to_json(b) == Json::array({0, 2, 1}));
  CHECK(betti_from_json(betti_to_json(b)) == b);
  b.minus_one = 1;
  CHECK(betti_from_json(betti_to_json(b)) == b);
}

TEST_CASE("result cache") {
  const fs::path dir = scratch_dir("cache");
  const ResultCache cache(dir.string());
  CHECK_FALSE(cache.get("betti", "abc"));
  cache.put("betti", "abc", Json::array({1, 2}));
  CHECK(cache.get("betti", "abc") == Json::array({1, 2}));
  CHECK_FALSE(cache.get("betti", "abd"));
  CHECK_FALSE(cache.get("shelling", "abc"));
  CHECK(ResultCache::content_hash("") == "cbf29ce484222325");
  CHECK_FALSE(ResultCache().enabled());
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  ::unsetenv("TVLAB_CACHE");
  CHECK(resolve_cache_dir(std::string("a")) == std::optional<std::string>("a"));
  CHECK_FALSE(resolve_cache_dir(std::nullopt));
  ::setenv("TVLAB_CACHE", "b", 1);
  CHECK(resolve_cache_dir(std::string("a")) == std::optional<std::string>("b"));
  ::unsetenv("TVLAB_CACHE");
}

TEST_CASE("registry ids") {
  const std::vector<std::string> ids = registry_ids(3);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(std::find(ids.begin(), ids.end(), "mrjoin.betti.r3") != ids.end());
  CHECK(registry_ids(2).size() < ids.size());
  CHECK(registry_ids(4).size() > ids.size());
  CHECK_THROWS_AS(registry_ids(5), Error);
}

TEST_CASE("cold and warm runs give the same report") {
  const fs::path dir = scratch_dir("verify");
  VerifyOptions o;
  o.rmax = 2;
  o.cache_dir = dir.string();
  o.jobs = 1;
  const VerificationReport cold = verify_paper(o);
  const VerificationReport warm = verify_paper(o);
  CHECK(cold.all_passed());
  CHECK(dump(cold.to_json(false)) == dump(warm.to_json(false)));
  CHECK(cold.to_json(true).contains("timing"));
  CHECK_FALSE(cold.to_json(false).contains("timing"));
  CHECK(cold.claims.size() == registry_ids(2).size());
  fs::remove_all(dir);
}
