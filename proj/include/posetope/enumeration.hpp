#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "posetope/poset.hpp"

namespace posetope {

struct CensusClass {
  CanonicalForm key;
  Poset poset;  // relabeled so that its relation matrix is `key`
};

struct PosetCensus {
  std::size_t n = 0;
  std::vector<CensusClass> classes;  // sorted by key
  // Labeled posets visited: naturally labeled ones for the upper-triangular
  // backend, all labeled posets for the full-relation backend.
  std::uint64_t labeled_count = 0;

  std::size_t unlabeled_count() const noexcept { return classes.size(); }
};

enum class EnumerationBackend {
  // Strict orders contained in i < j, canonicalized by partition refinement.
  UpperTriangular,
  // Every irreflexive antisymmetric transitive relation, canonicalized by
  // scanning all relabelings. Limited to n <= 5.
  FullRelation,
};

inline constexpr std::size_t kMaxEnumerationSize = 7;
inline constexpr std::size_t kMaxFullRelationSize = 5;

/// All posets on n elements up to isomorphism. Throws TooLarge.
PosetCensus enumerate_posets(std::size_t n,
                             EnumerationBackend backend = EnumerationBackend::UpperTriangular,
                             unsigned jobs = 1);

struct CensusRow {
  std::string canonical_id;
  PosetStats stats;
  bool x_free = true;
};

struct CensusSummary {
  std::size_t n = 0;
  std::vector<CensusRow> rows;
  std::size_t x_free = 0;
  std::size_t x_containing = 0;
};

CensusSummary census_statistics(const PosetCensus& census);

/// Line-delimited export: a "#" header, then "<n> <hex>" per class.
void write_census(std::ostream& out, const PosetCensus& census);

/// Reads an exported census; every line must be a canonical form of size n.
/// Throws ParseError.
PosetCensus read_census(std::istream& in);

/// Runs f(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace posetope
