#pragma once

// Brute-force reference computations. None of these call into the library's
// algorithms beyond Poset accessors and the H/V data they are compared on.

#include <cstdint>
#include <set>
#include <vector>

#include "posetope/polytope.hpp"
#include "posetope/poset.hpp"

namespace oracle {

using posetope::Index;
using posetope::Mask;
using posetope::Poset;

std::vector<Mask> ideals(const Poset& p);
std::vector<Mask> antichains(const Poset& p);
std::uint64_t linear_extensions(const Poset& p);
std::uint64_t maximal_chain_count(const Poset& p);

/// Row-major relation bits of the lexicographically least relabeling.
std::vector<bool> canonical_bits(const Poset& p);

/// Whether the X poset appears as an induced subposet (5-subset search).
bool contains_x(const Poset& p);

/// Rank over the rationals by plain Gaussian elimination.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

/// Face numbers from intersecting every subset of facets.
std::vector<std::uint64_t> f_vector(const posetope::HPolytope& h, const posetope::VertexSet& v);

/// Leibniz expansion; only for small matrices.
std::int64_t determinant(const std::vector<std::vector<std::int64_t>>& a);

/// Every labeled poset on n elements (all strict orders), n <= 4.
std::vector<Poset> all_labeled_posets(std::size_t n);

/// Named examples.
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
Poset x_poset();
Poset fig2();

}  // namespace oracle
