#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "posetope/enumeration.hpp"
#include "posetope/polytope.hpp"
#include "posetope/poset.hpp"

namespace posetope {

/// Bumped whenever a check changes meaning; cached results from another
/// version are ignored.
inline constexpr int kCheckerVersion = 1;

struct HarnessOptions {
  std::size_t n_max = 6;
  unsigned jobs = 1;
  /// Largest size for which f-vectors (and irredundancy) are computed.
  std::size_t fvector_limit = 6;
  /// Census and per-class results are cached here when set.
  std::optional<std::filesystem::path> cache_dir;
};

struct TheoremRecord {
  std::string canonical_id;
  std::size_t n = 0;
  FacetCounts facet_counts;
  bool x_free = true;
  bool facet_formula_ok = false;  // formula counts = H-rep lengths (+ irredundant when checked)
  bool corollary12_ok = false;    // facets(O) <= facets(C)
  bool theorem13_ok = false;      // equality iff X-free
  bool theorem21_ok = false;      // X-free iff the transfer map certifies equivalence
  bool deletion_ok = false;       // recursion identities for every admissible element
  bool f_vectors_checked = false;
  bool f_vectors_ok = false;      // Euler, f_0 and f_{d-1} counts, equal iff X-free
  std::string detail;             // first failing check, empty when all pass

  bool all_ok() const {
    return facet_formula_ok && corollary12_ok && theorem13_ok && theorem21_ok && deletion_ok && f_vectors_ok;
  }
};

struct TheoremFailure {
  std::string canonical_id;
  std::string check;
  std::string detail;
};

struct TheoremReport {
  std::size_t n_max = 0;
  std::vector<TheoremRecord> per_class;  // by size, then canonical id
  std::vector<TheoremFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Every check for a single poset.
TheoremRecord check_theorems(const Poset& p, const std::string& canonical_id, bool with_fvectors);

TheoremReport verify_paper_theorems(const HarnessOptions& options);

struct PartAViolation {
  std::string canonical_id;
  std::size_t index = 0;
  std::uint64_t f_order = 0;
  std::uint64_t f_chain = 0;
};

struct PartBObservation {
  std::string canonical_id;
  std::vector<std::size_t> equal_indices;  // 1 <= i <= d-1
  bool x_free = true;
  FVector order;
  FVector chain;
};

struct ConjectureReport {
  std::size_t n_max = 0;
  std::size_t classes_scanned = 0;
  std::size_t f0_equal = 0;  // i = 0 always agrees (ideals vs antichains)
  std::vector<PartAViolation> part_a_violations;
  std::vector<PartBObservation> part_b_observations;
  std::size_t part_b_counterexamples = 0;  // equality somewhere but X present
};

/// Compares f-vectors of O(P) and C(P) over every class with 2 <= d <= n_max.
/// Findings are data; nothing here is asserted.
ConjectureReport conjecture_scan(const HarnessOptions& options);

/// Census for size n, read from and written to the cache directory if set.
PosetCensus load_or_enumerate(std::size_t n, const HarnessOptions& options);

}  // namespace posetope
