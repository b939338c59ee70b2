#include <doctest.h>

#include "oracles.hpp"
#include "posetope/error.hpp"
#include "posetope/poset_io.hpp"

using namespace posetope;

namespace {

std::pair<std::size_t, std::size_t> where(std::string_view text) {
  try {
    (void)parse_poset(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("fixtures parse") {
  const auto p = read_poset_file(std::string(POSETOPE_FIXTURES) + "/fig2.poset");
  CHECK(p == oracle::fig2());
  const auto x = read_poset_file(std::string(POSETOPE_FIXTURES) + "/x5.poset");
  CHECK(x == oracle::x_poset());
  CHECK(read_poset_file(std::string(POSETOPE_FIXTURES) + "/antichain3.poset").covers().empty());
  CHECK_THROWS_AS((void)read_poset_file("/nonexistent/file.poset"), Error);
}

TEST_CASE("first appearance order and implied relations") {
  const auto p = parse_poset("# comment\nb < a\na < c\nb < c  # implied\n");
  CHECK(p.names() == std::vector<std::string>{"b", "a", "c"});
  CHECK(p.covers().size() == 2);
}

TEST_CASE("format round trip") {
  for (const auto& p : {oracle::x_poset(), oracle::fig2(), oracle::antichain(3), oracle::chain(5)}) {
    CHECK(parse_poset(format_poset(p)) == p);
  }
}

TEST_CASE("errors carry line and column") {
  CHECK(where("a < b\nb < c d\n") == std::pair<std::size_t, std::size_t>{2, 7});
  CHECK(where("elements: a b\na < q\n") == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(where("elements: a b a\n") == std::pair<std::size_t, std::size_t>{1, 15});
  CHECK(where("a<b\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(where("a < a\n") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(where("elements: a\nelements: b\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(where("# nothing\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(where("a > b\n") == std::pair<std::size_t, std::size_t>{1, 3});
}

TEST_CASE("cycles surface as cycle errors") {
  try {
    (void)parse_poset("a < b\nb < a\n");
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CycleDetected);
  }
}
