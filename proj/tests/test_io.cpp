#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "autl/constructions.hpp"
#include "autl/group_io.hpp"
#include "autl/report.hpp"
#include "autl/theorems.hpp"
#include "oracles.hpp"

using namespace autl;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "autl-io-tests";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const char* name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream out(p);
  out << body;
  return p;
}

}  // namespace

TEST_CASE("permutation group files") {
  const auto dir = scratch_dir();
  const auto path = write_file(dir, "q8.json", R"({
    "name": "Q8-file",
    "kind": "permutation",
    "degree": 8,
    "generators": [[2,3,1,0,6,7,5,4],[4,5,7,6,1,0,2,3]]
  })");
  Group g = load_group_file(path);
  CHECK(g.label() == "Q8-file");
  CHECK(g.order() == 8);
  CHECK(oracle::order_census(g)[2] == 1);  // unique involution
}

TEST_CASE("cayley group files re-index the identity to 0") {
  const auto dir = scratch_dir();
  // C3 written with the identity at position 1 (row/col 1 is neutral)
  const auto path = write_file(dir, "c3.json", R"({
    "kind": "cayley",
    "order": 3,
    "table": [[2,0,1],[0,1,2],[1,2,0]]
  })");
  Group g = load_group_file(path);
  CHECK(g.label() == "c3");  // name defaults to the file stem
  CHECK(g.order() == 3);
  CHECK(g.mul(0, 1) == 1);
  CHECK(is_cyclic(g));
}

TEST_CASE("malformed group files are diagnosed") {
  const auto dir = scratch_dir();
  SUBCASE("not json") {
    const auto p = write_file(dir, "junk.json", "not json at all {");
    CHECK_THROWS_AS(load_group_file(p), InvalidGroupTable);
  }
  SUBCASE("unknown kind") {
    const auto p = write_file(dir, "kind.json", R"({"kind": "magic", "order": 1})");
    CHECK_THROWS_AS(load_group_file(p), InvalidGroupTable);
  }
  SUBCASE("no identity") {
    const auto p = write_file(dir, "noid.json",
                              R"({"kind": "cayley", "order": 2, "table": [[1,0],[1,0]]})");
    CHECK_THROWS_WITH_AS(load_group_file(p),
                         doctest::Contains("identity"), InvalidGroupTable);
  }
  SUBCASE("broken associativity") {
    // a latin square with identity and two-sided inverses that is not a
    // group (all elements self-inverse, but 5 is not a power of 2)
    const auto p = write_file(dir, "assoc.json", R"({
      "kind": "cayley",
      "order": 5,
      "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]
    })");
    try {
      load_group_file(p);
      FAIL("expected a diagnostic");
    } catch (const InvalidGroupTable& e) {
      CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
  }
  SUBCASE("bad permutation") {
    const auto p = write_file(dir, "perm.json",
                              R"({"kind": "permutation", "degree": 3, "generators": [[0,0,1]]})");
    CHECK_THROWS_AS(load_group_file(p), InvalidPermutation);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_group_file(dir / "nope.json"), Error);
  }
}

TEST_CASE("cayley hash is stable and table-sensitive") {
  Group q8a = generalized_quaternion(8);
  Group q8b = generalized_quaternion(8);
  CHECK(cayley_hash(q8a) == cayley_hash(q8b));
  CHECK(cayley_hash(q8a) != cayley_hash(dihedral(8)));
  CHECK(cayley_hash(cyclic(4)) != cayley_hash(*builtin_group("C2xC2")));
  CHECK(cayley_hash_hex(q8a).size() == 16);
}

TEST_CASE("automorphism disk cache") {
  const auto dir = scratch_dir() / "cache";
  int warnings = 0;
  DiskAutCache cache(dir, [&](const std::string&) { ++warnings; });

  Group q8 = generalized_quaternion(8);
  CHECK(!cache.load(q8).has_value());  // cold

  AutomorphismSet aut = automorphism_group(q8);
  cache.store(q8, aut);
  auto hit = cache.load(q8);
  REQUIRE(hit.has_value());
  CHECK(hit->equal_sets(aut));
  CHECK(warnings == 0);

  // an unrelated group misses
  CHECK(!cache.load(dihedral(8)).has_value());

  SUBCASE("corrupt entries are discarded with a warning") {
    // clobber the stored file
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::ofstream out(entry.path(), std::ios::trunc);
      out << "{\"version\": 1, \"order\": 8, \"garbage\": true}";
    }
    CHECK(!cache.load(q8).has_value());
    CHECK(warnings == 1);
  }
  SUBCASE("tampered maps fail revalidation") {
    for (const auto& entry : fs::directory_iterator(dir)) {
      auto doc = nlohmann::json::parse(std::ifstream(entry.path()));
      doc["images"][0][1] = 3;  // corrupt one image entry
      doc["images"][0][3] = 1;
      std::ofstream out(entry.path(), std::ios::trunc);
      out << doc.dump();
    }
    CHECK(!cache.load(q8).has_value());
    CHECK(warnings == 1);
  }
}

TEST_CASE("cached census runs are bit-identical to cold runs") {
  const auto dir = scratch_dir() / "census-cache";
  DiskAutCache cache(dir, nullptr);

  std::vector<Group> corpus = builtin_corpus(16);
  CensusOptions cold;
  const auto baseline = census(corpus, cold);

  CensusOptions cached;
  cached.analysis.aut_store = &cache;
  const auto first = census(corpus, cached);   // fills the cache
  const auto second = census(corpus, cached);  // warm

  const auto render = [](const CensusResult& c) {
    return render_census(c, ReportFormat::json) + render_census(c, ReportFormat::csv);
  };
  CHECK(render(first) == render(baseline));
  CHECK(render(second) == render(baseline));
}
