#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posetope/error.hpp"
#include "posetope/polytope.hpp"

using namespace posetope;

namespace {

std::vector<std::uint64_t> fv(const HPolytope& h, const VertexSet& v) { return f_vector(h, v).f; }

}  // namespace

TEST_CASE("antichain gives the cube for both polytopes") {
  const auto p = oracle::antichain(3);
  CHECK(fv(order_hrep(p), order_vertices(p)) == std::vector<std::uint64_t>{8, 12, 6});
  CHECK(fv(chain_hrep(p), chain_vertices(p)) == std::vector<std::uint64_t>{8, 12, 6});
  CHECK(volume(p) == 1);
}

TEST_CASE("chain gives a simplex") {
  const auto p = oracle::chain(4);
  CHECK(fv(order_hrep(p), order_vertices(p)) == std::vector<std::uint64_t>{5, 10, 10, 5});
  CHECK(fv(chain_hrep(p), chain_vertices(p)) == std::vector<std::uint64_t>{5, 10, 10, 5});
  CHECK(volume(p) == Rational(1, 24));
  CHECK(facet_counts(p) == FacetCounts{5, 5});
}

TEST_CASE("X poset face numbers match facet-subset intersection") {
  const auto p = oracle::x_poset();
  const auto fo = fv(order_hrep(p), order_vertices(p));
  const auto fc = fv(chain_hrep(p), chain_vertices(p));
  CHECK(fo == oracle::f_vector(order_hrep(p), order_vertices(p)));
  CHECK(fc == oracle::f_vector(chain_hrep(p), chain_vertices(p)));
  CHECK(fo == std::vector<std::uint64_t>{8, 24, 34, 24, 8});
  CHECK(fc == std::vector<std::uint64_t>{8, 24, 35, 26, 9});
  CHECK(linear_extension_count(p) == 4);
  CHECK(volume(p) == Rational(1, 30));
}

TEST_CASE("face numbers agree with the oracle on random small posets") {
  std::mt19937_64 rng(23);
  std::bernoulli_distribution coin(0.35);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + round % 4;
    std::vector<Mask> rows(n, 0);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (coin(rng)) rows[i] |= bit(j);
    const auto p = Poset::from_relation(rows);
    const auto oh = order_hrep(p);
    const auto ch = chain_hrep(p);
    if (oh.inequalities.size() > 16 || ch.inequalities.size() > 16) continue;
    const auto fo = f_vector(oh, order_vertices(p));
    const auto fc = f_vector(ch, chain_vertices(p));
    CHECK(fo.f == oracle::f_vector(oh, order_vertices(p)));
    CHECK(fc.f == oracle::f_vector(ch, chain_vertices(p)));
    CHECK(fo.euler_holds());
    CHECK(fc.euler_holds());
  }
}

TEST_CASE("H-representation shape") {
  const auto p = oracle::fig2();
  const auto oh = order_hrep(p);
  const auto ch = chain_hrep(p);
  CHECK(oh.inequalities.size() == 17);
  CHECK(ch.inequalities.size() == 17);
  CHECK(facet_counts(p) == FacetCounts{17, 17});
  for (const auto& v : order_vertices(p).points) CHECK(oh.contains(v));
  for (const auto& v : chain_vertices(p).points) CHECK(ch.contains(v));
  CHECK(order_vertices(p).points.size() == oracle::ideals(p).size());
  CHECK(chain_vertices(p).points.size() == oracle::antichains(p).size());
  CHECK(std::holds_alternative<MinUpper>(oh.inequalities.front().tag));
  CHECK(describe_tag(ch.inequalities.back().tag, p) == "Chain(x5<x8<x10)");
}

TEST_CASE("irredundancy detects redundant and duplicate rows") {
  const auto p = oracle::chain(3);
  auto h = order_hrep(p);
  const auto v = order_vertices(p);
  CHECK(verify_facets_irredundant(h, v));
  auto with_dup = h;
  auto doubled = h.inequalities.front();
  for (auto& c : doubled.coeffs) c *= 2;
  doubled.rhs *= 2;
  with_dup.inequalities.push_back(doubled);
  CHECK_FALSE(verify_facets_irredundant(with_dup, v));
  auto with_implied = h;
  // a_1 - a_3 >= 0 follows from the two covers.
  with_implied.inequalities.push_back({{-1, 0, 1}, 0, CoverTag{0, 2}});
  CHECK_FALSE(verify_facets_irredundant(with_implied, v));
}

TEST_CASE("normalization and half-space comparison") {
  LinearInequality a{{2, -4, 0}, 6, NonNeg{0}};
  const auto n = a.normalized();
  CHECK(n.coeffs == IntVector{1, -2, 0});
  CHECK(n.rhs == 3);
  CHECK(a.same_halfspace(LinearInequality{{1, -2, 0}, 3, NonNeg{1}}));
  CHECK_FALSE(a.same_halfspace(LinearInequality{{-1, 2, 0}, -3, NonNeg{1}}));
}

TEST_CASE("incidence errors") {
  const auto p = oracle::chain(2);
  VertexSet bad{2, {{2, 0}}};
  try {
    (void)incidence(order_hrep(p), bad);
    FAIL("outside point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexOutsidePolytope);
  }
  VertexSet flat{2, {{0, 0}, {1, 1}}};
  try {
    (void)f_vector(order_hrep(p), flat);
    FAIL("flat set accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullDimensional);
  }
}

TEST_CASE("Ehrhart counts") {
  const auto p = oracle::chain(2);
  // Order polytope of a 2-chain is a triangle with (t+1)(t+2)/2 points.
  for (std::uint64_t t = 0; t <= 3; ++t) CHECK(ehrhart_count(order_hrep(p), t) == (t + 1) * (t + 2) / 2);
  CHECK(ehrhart_leading_coefficient(order_hrep(p)) == Rational(1, 2));
  CHECK(ehrhart_leading_coefficient(chain_hrep(oracle::x_poset())) == Rational(1, 30));
  CHECK_THROWS_AS((void)ehrhart_count(order_hrep(oracle::chain(7)), 1), Error);
}
