#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "posetope/enumeration.hpp"
#include "posetope/error.hpp"

using namespace posetope;

TEST_CASE("unlabeled counts up to six") {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63, 318};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_posets(n).unlabeled_count() == expected[n - 1]);
}

TEST_CASE("backends agree and labeled counts are right") {
  // Labeled posets: 1, 3, 19, 219, 4231.
  const std::vector<std::uint64_t> labeled{1, 3, 19, 219, 4231};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = enumerate_posets(n, EnumerationBackend::UpperTriangular);
    const auto b = enumerate_posets(n, EnumerationBackend::FullRelation, 2);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t k = 0; k < a.classes.size(); ++k) CHECK(a.classes[k].key == b.classes[k].key);
    CHECK(b.labeled_count == labeled[n - 1]);
  }
}

TEST_CASE("small censuses against the relation-scanning oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<bool>> seen;
    for (const auto& p : oracle::all_labeled_posets(n)) seen.insert(oracle::canonical_bits(p));
    CHECK(enumerate_posets(n).unlabeled_count() == seen.size());
  }
}

TEST_CASE("class posets realize their keys") {
  for (const auto& c : enumerate_posets(5).classes) CHECK(canonical_form(c.poset) == c.key);
}

TEST_CASE("threaded enumeration matches serial") {
  const auto a = enumerate_posets(6, EnumerationBackend::UpperTriangular, 1);
  const auto b = enumerate_posets(6, EnumerationBackend::UpperTriangular, 4);
  CHECK(a.labeled_count == b.labeled_count);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t k = 0; k < a.classes.size(); ++k) CHECK(a.classes[k].key == b.classes[k].key);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS((void)enumerate_posets(0), Error);
  CHECK_THROWS_AS((void)enumerate_posets(8), Error);
  CHECK_THROWS_AS((void)enumerate_posets(6, EnumerationBackend::FullRelation), Error);
}

TEST_CASE("census export round trip") {
  const auto census = enumerate_posets(4);
  std::stringstream buffer;
  write_census(buffer, census);
  const auto back = read_census(buffer);
  CHECK(back.n == 4);
  CHECK(back.labeled_count == census.labeled_count);
  REQUIRE(back.classes.size() == census.classes.size());
  for (std::size_t k = 0; k < back.classes.size(); ++k) CHECK(back.classes[k].key == census.classes[k].key);
}

TEST_CASE("census import rejects bad lines") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      (void)read_census(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("# header\n3 zz\n") == 2);
  CHECK(line_of("3 0000\n3\n") == 2);
  CHECK(line_of("2 00\n3 0000\n") == 2);
  // A chain labeled bottom-up is a valid poset but not the canonical matrix.
  CHECK(line_of("2 40\n") == 1);
  CHECK(line_of("2 20\n") == 0);
}

TEST_CASE("census statistics split by X") {
  const auto summary = census_statistics(enumerate_posets(5));
  CHECK(summary.rows.size() == 63);
  // Only the X poset itself contains X on five elements.
  CHECK(summary.x_containing == 1);
  CHECK(summary.x_free == 62);
}
